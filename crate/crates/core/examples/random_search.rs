//! A seeded search at length 40 over F2, writing records into a temporary
//! directory.
//!
//! cargo run --release --example random_search [seed]

use sdcodes::constructions::ConstructionId;
use sdcodes::search::{run_search, SearchConfig};
use sdcodes::Alphabet;

fn main() -> sdcodes::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(42);
    let out = std::env::temp_dir().join(format!("sdcodes-search-{seed}"));
    let mut cfg = SearchConfig::new(ConstructionId::Omega20_2, Alphabet::F2, 8, seed);
    cfg.max_trials = 50_000;
    cfg.workers = 4;
    cfg.out_dir = Some(out.clone());
    let report = run_search(&cfg)?;
    for d in &report.discoveries {
        println!("trial {:>5}  v={}  {}", d.trial.unwrap_or(0), d.v, d.summary());
        println!("             {:?}", d.census.nonzero());
    }
    println!("{:?}", report.stats);
    println!("records in {}", out.display());
    Ok(())
}
