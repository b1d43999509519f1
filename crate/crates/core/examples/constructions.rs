//! Builds Omega(v) for each of the seven constructions, checks the block
//! conditions and compares them with the full product.
//!
//! cargo run --release --example constructions

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sdcodes::alphabet::parse_vector;
use sdcodes::constructions::{build_omega, check_conditions, generator_matrix, ConstructionId};
use sdcodes::tables::TABLES;
use sdcodes::RingElement;

fn main() -> sdcodes::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for id in ConstructionId::ALL {
        let (g, h) = id.groups();
        println!("{id}: G = {g}, H = {h}, n = {}, blocks of {}", id.half_length(), id.block_size());
        for t in TABLES.iter().filter(|t| t.construction == id) {
            let v = parse_vector(t.rows[0].v, t.alphabet)?;
            let omega = build_omega(id, &v)?;
            let gen = generator_matrix(id, &v)?;
            println!(
                "  table {} row {} over {}: conditions {}, Omega Omega^T = I {}, generator {}x{}",
                t.number,
                t.rows[0].index,
                t.alphabet,
                check_conditions(id, &v)?,
                omega.mul_transpose(&omega)?.is_identity(),
                gen.rows(),
                gen.cols()
            );
        }
        let a = id.usual_alphabets()[0];
        let hits = (0..2000)
            .filter(|_| {
                let v: Vec<RingElement> = (0..id.half_length())
                    .map(|_| RingElement::new(a, rng.gen_range(0..a.order())).unwrap())
                    .collect();
                check_conditions(id, &v).unwrap()
            })
            .count();
        println!("  {hits} of 2000 random vectors over {a} pass");
    }
    Ok(())
}
