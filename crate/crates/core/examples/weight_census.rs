//! Low-weight census of a length-80 code, its weight enumerator parameters,
//! and the census against full enumeration on a small code.
//!
//! cargo run --release --example weight_census

use sdcodes::alphabet::parse_vector;
use sdcodes::bincode::{census_cost, distance_bound, extract_params, full_weight_distribution, BinaryCode, BinaryMatrix, CensusOptions};
use sdcodes::constructions::{generator_matrix, ConstructionId};
use sdcodes::Alphabet;

fn main() -> sdcodes::Result<()> {
    let v = parse_vector("13111130203000233223", Alphabet::F4)?;
    let code = BinaryCode::from_ring_generator(&generator_matrix(ConstructionId::Omega20_1, &v)?)?;
    let ty = code.code_type().expect("self-dual");
    println!("[{}, {}] {ty}, bound {}", code.length(), code.dimension(), distance_bound(code.length(), ty));
    for w in [12, 14, 16, 18] {
        println!("  census to {w}: {} messages", census_cost(code.dimension(), w / 2));
    }
    let census = code.census(16, CensusOptions::default())?;
    for (w, c) in census.nonzero() {
        println!("  A_{w} = {c}");
    }
    println!("  {}", extract_params(&census, code.length(), ty)?);

    // extended Hamming code
    let e8 = BinaryCode::new(&BinaryMatrix::from_strings(&["11110000", "00111100", "00001111", "01010101"])?)?;
    println!("e8 full: {:?}", full_weight_distribution(&e8));
    println!("e8 census to 8: {:?}", e8.census(8, CensusOptions::default())?.counts);
    Ok(())
}
