//! Rebuilds a few tabulated codes from their vectors and prints what the
//! analysis finds.
//!
//! cargo run --release --example verify_code

use std::time::Instant;

use sdcodes::bincode::CensusOptions;
use sdcodes::constructions::ConstructionId;
use sdcodes::search::verify_record;
use sdcodes::Alphabet;

fn main() -> sdcodes::Result<()> {
    let rows = [
        ("31223333300320201200", ConstructionId::Omega20_1, Alphabet::F4),
        ("110001110100101111010000011100010000011111", ConstructionId::Omega42_1, Alphabet::F2),
        ("320210300223213323022021", ConstructionId::Omega24_1, Alphabet::F2U),
        ("021111013112231302031321", ConstructionId::Omega24_1, Alphabet::F2U),
    ];
    for (v, id, alphabet) in rows {
        let start = Instant::now();
        let d = verify_record(v, id, alphabet, None, CensusOptions::default())?;
        println!("{id} {alphabet}: {}  ({:.1?})", d.summary(), start.elapsed());
        let low: Vec<String> = d.census.nonzero().iter().map(|(w, c)| format!("A_{w}={c}")).collect();
        println!("    {}", low.join(" "));
    }
    Ok(())
}
