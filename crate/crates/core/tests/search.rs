use std::collections::BTreeMap;
use std::fs;

use sdcodes::bincode::{CensusOptions, Record};
use sdcodes::constructions::ConstructionId;
use sdcodes::search::{check_record, run_search, verify_record, SearchConfig, INDEX_HEADER};
use sdcodes::Alphabet;

fn config(seed: u64, trials: u64) -> SearchConfig {
    let mut cfg = SearchConfig::new(ConstructionId::Omega20_1, Alphabet::F2, 8, seed);
    cfg.max_trials = trials;
    cfg
}

#[test]
fn same_seed_same_records() {
    let a = run_search(&config(11, 20_000)).unwrap();
    let b = run_search(&config(11, 20_000)).unwrap();
    let text = |r: &sdcodes::search::SearchReport| -> Vec<String> {
        r.discoveries.iter().map(|d| d.to_record().to_text()).collect()
    };
    assert_eq!(text(&a), text(&b));
    assert_eq!(a.stats, b.stats);
    let c = run_search(&config(12, 20_000)).unwrap();
    assert_ne!(a.stats, c.stats);
}

#[test]
fn no_false_positives_and_rejections_come_first() {
    for construction in [ConstructionId::Omega20_1, ConstructionId::Omega20_2] {
        let mut cfg = config(5, 10_000);
        cfg.construction = construction;
        cfg.workers = 4;
        let r = run_search(&cfg).unwrap();
        let s = r.stats;
        assert_eq!(s.trials, 10_000);
        assert_eq!(s.condition_rejects + s.lifted, s.trials);
        assert_eq!(s.distance_rejects + s.discoveries + s.duplicates, s.lifted);
        assert!(s.condition_rejects > s.lifted, "{s:?}");
        for d in &r.discoveries {
            assert!(d.code.is_self_dual());
            assert!(d.distance >= 8);
            let again = verify_record(&d.v, d.construction, d.alphabet, None, CensusOptions::default()).unwrap();
            assert_eq!(again.distance, d.distance);
            assert_eq!(again.code, d.code);
        }
    }
}

#[test]
fn persisted_records_verify() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = config(3, 30_000);
    cfg.workers = 2;
    cfg.out_dir = Some(dir.path().to_path_buf());
    let report = run_search(&cfg).unwrap();
    assert!(!report.discoveries.is_empty());

    let mut files = BTreeMap::new();
    for entry in fs::read_dir(dir.path()).unwrap() {
        let path = entry.unwrap().path();
        files.insert(path.file_name().unwrap().to_string_lossy().into_owned(), path);
    }
    let index = fs::read_to_string(&files["index.tsv"]).unwrap();
    let mut lines = index.lines();
    assert_eq!(lines.next(), Some(INDEX_HEADER));
    assert_eq!(lines.count(), report.discoveries.len());

    for d in &report.discoveries {
        let rec = Record::parse(&fs::read_to_string(&files[&d.file_name()]).unwrap()).unwrap();
        assert_eq!(rec, d.to_record());
        let again = check_record(&rec, CensusOptions::default()).unwrap();
        assert_eq!(again.to_record(), rec);
    }
}

#[test]
fn tampered_record_is_rejected() {
    let d = verify_record("31223333300320201200", ConstructionId::Omega20_1, Alphabet::F4, None, CensusOptions::default())
        .unwrap();
    let mut rec = d.to_record();
    rec.distance = Some(16);
    assert!(check_record(&rec, CensusOptions::default()).is_err());
    let mut rec = d.to_record();
    rec.weights.push((14, 2101));
    assert!(check_record(&rec, CensusOptions::default()).is_err());
    let mut rec = d.to_record();
    rec.v = Some("13111130203000233223".into());
    assert!(check_record(&rec, CensusOptions::default()).is_err());
}

#[test]
fn injected_table_row_is_found() {
    let mut cfg = SearchConfig::new(ConstructionId::Omega20_2, Alphabet::F4, 14, 0);
    cfg.census_depth = 16;
    cfg.max_trials = 3;
    cfg.injected = vec!["31211223330300232332".into()];
    let r = run_search(&cfg).unwrap();
    assert_eq!(r.discoveries.len(), 1, "{:?}", r.stats);
    assert_eq!(r.discoveries[0].trial, Some(0));
    assert_eq!(r.discoveries[0].distance, 14);
}
