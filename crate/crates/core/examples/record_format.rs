//! Writes one code in the plain-text record format, reads it back and checks
//! it against a fresh derivation.
//!
//! cargo run --release --example record_format

use sdcodes::bincode::{CensusOptions, Record};
use sdcodes::constructions::ConstructionId;
use sdcodes::search::{check_record, verify_record};
use sdcodes::Alphabet;

fn main() -> sdcodes::Result<()> {
    let d = verify_record("31211223330300232332", ConstructionId::Omega20_2, Alphabet::F4, None, CensusOptions::default())?;
    let text = d.to_record().to_text();
    for line in text.lines().take(12) {
        println!("{line}");
    }
    println!("... {} lines", text.lines().count());

    let rec = Record::parse(&text)?;
    let again = check_record(&rec, CensusOptions::default())?;
    println!("re-derived: {}", again.summary());

    let mut tampered = rec.clone();
    tampered.weights[1].1 += 1;
    match check_record(&tampered, CensusOptions::default()) {
        Ok(_) => println!("tampered record accepted"),
        Err(e) => println!("tampered record rejected: {e}"),
    }
    Ok(())
}
