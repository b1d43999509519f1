//! Seeded random search over `v` for one construction and alphabet, and the
//! single-record verification it is built on.
//!
//! Trial `i` draws its vector from a ChaCha stream keyed by `(seed, i)`, so a
//! run is reproducible at any worker count. Results are gathered in trial
//! order and de-duplicated sequentially.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::alphabet::{format_vector, parse_vector, Alphabet, RingElement};
use crate::bincode::{
    distance_bound, extract_params, BinaryCode, Census, CensusOptions, CodeType, EnumeratorParams, Family, Record,
};
use crate::constructions::{check_conditions, generator_matrix, ConstructionId};
use crate::error::{Error, Result};

/// One analysed code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discovery {
    pub v: String,
    pub construction: ConstructionId,
    pub alphabet: Alphabet,
    pub length: usize,
    pub dimension: usize,
    pub distance: usize,
    pub code_type: CodeType,
    /// `None` when no known family exists for the length or none fits.
    pub params: Option<EnumeratorParams>,
    pub census: Census,
    pub seed: Option<u64>,
    pub trial: Option<u64>,
    pub code: BinaryCode,
}

/// Key under which two discoveries count as the same code.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub length: usize,
    pub code_type: CodeType,
    pub params: Option<EnumeratorParams>,
    pub counts: Vec<u64>,
}

pub fn fingerprint(d: &Discovery) -> Fingerprint {
    Fingerprint {
        length: d.length,
        code_type: d.code_type,
        params: d.params,
        counts: d.census.counts.clone(),
    }
}

impl Discovery {
    /// `[N,k,d] Type X` followed by the family parameters when known.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "self-dual [{},{},{}] {}",
            self.length, self.dimension, self.distance, self.code_type
        );
        if let Some(p) = self.params {
            s.push_str(&format!(", {p}"));
        }
        s
    }

    pub fn to_record(&self) -> Record {
        let mut r = Record::new(self.code.generator().clone());
        r.construction = Some(self.construction);
        r.alphabet = Some(self.alphabet);
        r.v = Some(self.v.clone());
        r.distance = Some(self.distance);
        r.code_type = Some(self.code_type);
        r.params = self.params;
        r.seed = self.seed;
        r.trial = self.trial;
        r.weights = self.census.nonzero();
        r
    }

    /// File name used when persisting, unique per construction, alphabet and trial.
    pub fn file_name(&self) -> String {
        format!(
            "{}-{}-{:06}.txt",
            self.construction.name().replace('.', "_"),
            self.alphabet.name(),
            self.trial.unwrap_or(0)
        )
    }

    fn index_line(&self) -> String {
        let opt = |x: Option<i64>| x.map_or_else(|| "-".to_string(), |x| x.to_string());
        let p = self.params;
        [
            self.construction.name().to_string(),
            self.alphabet.name().to_string(),
            self.v.clone(),
            self.length.to_string(),
            self.dimension.to_string(),
            self.distance.to_string(),
            p.map_or_else(|| "-".to_string(), |p| p.family.to_string()),
            opt(p.map(|p| p.alpha)),
            opt(p.and_then(|p| p.beta)),
            opt(p.and_then(|p| p.gamma)),
            self.seed.map_or_else(|| "-".to_string(), |s| s.to_string()),
            self.trial.map_or_else(|| "-".to_string(), |t| t.to_string()),
        ]
        .join("\t")
    }
}

pub const INDEX_HEADER: &str = "construction\talphabet\tv\tN\tk\td\tfamily\talpha\tbeta\tgamma\tseed\ttrial";

/// Census depth used when none is requested: what the family needs, or enough
/// to certify the distance at other lengths.
pub fn default_depth(length: usize, ty: CodeType) -> usize {
    Family::candidates(length, ty)
        .iter()
        .map(|f| f.required_depth())
        .max()
        .unwrap_or_else(|| distance_bound(length, ty))
}

/// Census to at least `depth`, extended until a nonzero weight shows up.
fn certify(code: &BinaryCode, ty: CodeType, depth: usize, opts: CensusOptions) -> Result<(Census, usize)> {
    let bound = distance_bound(code.length(), ty);
    let mut depth = depth;
    loop {
        let census = code.census(depth, opts)?;
        if let Some(d) = census.min_nonzero_weight() {
            return Ok((census, d));
        }
        if depth > bound {
            return Err(Error::CoverageInsufficient {
                claimed: bound,
                radius: census.radius(),
            });
        }
        depth += 2;
    }
}

fn params_for(census: &Census, length: usize, ty: CodeType) -> Result<Option<EnumeratorParams>> {
    match extract_params(census, length, ty) {
        Ok(p) => Ok(Some(p)),
        Err(Error::NoFamilyFits(_) | Error::CensusTooShallow { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Builds the lifted binary code of `v` after checking the block conditions.
pub fn lift(construction: ConstructionId, v: &[RingElement]) -> Result<BinaryCode> {
    if !check_conditions(construction, v)? {
        return Err(Error::ConditionsFail(construction.name()));
    }
    let code = BinaryCode::from_ring_generator(&generator_matrix(construction, v)?)?;
    if !code.is_self_dual() {
        return Err(Error::NotSelfDual);
    }
    Ok(code)
}

/// Re-derives everything about one vector: conditions, lift, self-duality,
/// type, certified distance, census to `depth` (or the default for the
/// length) and enumerator parameters.
pub fn verify_record(
    v: &str,
    construction: ConstructionId,
    alphabet: Alphabet,
    depth: Option<usize>,
    opts: CensusOptions,
) -> Result<Discovery> {
    let elems = parse_vector(v, alphabet)?;
    if elems.len() != construction.half_length() {
        return Err(Error::WrongLength {
            construction: construction.name(),
            expected: construction.half_length(),
            got: elems.len(),
        });
    }
    analyse(construction, alphabet, &elems, depth, opts)
}

fn analyse(
    construction: ConstructionId,
    alphabet: Alphabet,
    elems: &[RingElement],
    depth: Option<usize>,
    opts: CensusOptions,
) -> Result<Discovery> {
    let code = lift(construction, elems)?;
    let ty = code.code_type().ok_or(Error::NotSelfDual)?;
    let depth = depth.unwrap_or_else(|| default_depth(code.length(), ty));
    let (census, distance) = certify(&code, ty, depth, opts)?;
    let params = params_for(&census, code.length(), ty)?;
    Ok(Discovery {
        v: format_vector(elems),
        construction,
        alphabet,
        length: code.length(),
        dimension: code.dimension(),
        distance,
        code_type: ty,
        params,
        census,
        seed: None,
        trial: None,
        code,
    })
}

/// Checks a stored record against a fresh derivation from its `v`.
pub fn check_record(rec: &Record, opts: CensusOptions) -> Result<Discovery> {
    let missing = |what: &str| Error::RecordMismatch(format!("record has no {what}"));
    let construction = rec.construction.ok_or_else(|| missing("construction"))?;
    let alphabet = rec.alphabet.ok_or_else(|| missing("alphabet"))?;
    let v = rec.v.as_deref().ok_or_else(|| missing("v"))?;
    let depth = rec.weights.iter().map(|&(w, _)| w).max();
    let mut d = verify_record(v, construction, alphabet, None, opts)?;
    if let Some(depth) = depth {
        if depth > d.census.max_weight() {
            d = verify_record(v, construction, alphabet, Some(depth), opts)?;
        }
    }
    d.seed = rec.seed;
    d.trial = rec.trial;
    let fresh = d.to_record();
    let mismatch = |field: &str| Err(Error::RecordMismatch(format!("{field} differs for v={v}")));
    if fresh.generator != rec.generator {
        return mismatch("generator");
    }
    if rec.distance.is_some() && fresh.distance != rec.distance {
        return mismatch("distance");
    }
    if rec.code_type.is_some() && fresh.code_type != rec.code_type {
        return mismatch("type");
    }
    if rec.params.is_some() && fresh.params != rec.params {
        return mismatch("enumerator parameters");
    }
    for &(w, c) in &rec.weights {
        if d.census.count(w) != Some(c) {
            return mismatch(&format!("A_{w}"));
        }
    }
    Ok(d)
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub construction: ConstructionId,
    pub alphabet: Alphabet,
    pub target_d: usize,
    pub max_trials: u64,
    pub seed: u64,
    pub census_depth: usize,
    pub workers: usize,
    pub out_dir: Option<PathBuf>,
    pub census: CensusOptions,
    /// Vectors used for the first trials instead of random draws.
    pub injected: Vec<String>,
}

impl SearchConfig {
    pub fn new(construction: ConstructionId, alphabet: Alphabet, target_d: usize, seed: u64) -> Self {
        SearchConfig {
            construction,
            alphabet,
            target_d,
            max_trials: 1000,
            seed,
            census_depth: target_d,
            workers: 1,
            out_dir: None,
            census: CensusOptions::default(),
            injected: Vec::new(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.target_d % 2 != 0 {
            return Err(Error::Shape(format!("target distance {} must be even", self.target_d)));
        }
        if self.census_depth < self.target_d {
            return Err(Error::CensusTooShallow {
                have: self.census_depth,
                need: self.target_d,
            });
        }
        if self.workers == 0 {
            return Err(Error::Shape("at least one worker is needed".into()));
        }
        Ok(())
    }

    /// The vector tried at `trial`.
    pub fn trial_vector(&self, trial: u64) -> Result<Vec<RingElement>> {
        if let Some(s) = self.injected.get(trial as usize) {
            return parse_vector(s, self.alphabet);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(trial);
        let q = self.alphabet.order();
        (0..self.construction.half_length())
            .map(|_| RingElement::new(self.alphabet, rng.gen_range(0..q)))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub trials: u64,
    pub condition_rejects: u64,
    pub lifted: u64,
    pub distance_rejects: u64,
    pub discoveries: u64,
    pub duplicates: u64,
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub discoveries: Vec<Discovery>,
    pub stats: SearchStats,
}

enum Outcome {
    ConditionReject,
    DistanceReject,
    Found(Box<Discovery>),
}

fn run_trial(cfg: &SearchConfig, trial: u64) -> Result<Outcome> {
    let v = cfg.trial_vector(trial)?;
    if !check_conditions(cfg.construction, &v)? {
        return Ok(Outcome::ConditionReject);
    }
    let code = BinaryCode::from_ring_generator(&generator_matrix(cfg.construction, &v)?)?;
    let Some(ty) = code.code_type() else {
        return Err(Error::NotSelfDual);
    };
    if code.screen_below(cfg.target_d)? {
        return Ok(Outcome::DistanceReject);
    }
    let (census, distance) = certify(&code, ty, cfg.census_depth, cfg.census)?;
    if distance < cfg.target_d {
        return Ok(Outcome::DistanceReject);
    }
    let params = params_for(&census, code.length(), ty)?;
    Ok(Outcome::Found(Box::new(Discovery {
        v: format_vector(&v),
        construction: cfg.construction,
        alphabet: cfg.alphabet,
        length: code.length(),
        dimension: code.dimension(),
        distance,
        code_type: ty,
        params,
        census,
        seed: Some(cfg.seed),
        trial: Some(trial),
        code,
    })))
}

/// Runs `cfg.max_trials` trials and returns the distinct codes found, in
/// trial order. Files are written when `cfg.out_dir` is set.
pub fn run_search(cfg: &SearchConfig) -> Result<SearchReport> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::Shape(format!("thread pool: {e}")))?;
    let outcomes: Vec<Result<Outcome>> =
        pool.install(|| (0..cfg.max_trials).into_par_iter().map(|t| run_trial(cfg, t)).collect());

    let mut stats = SearchStats {
        trials: cfg.max_trials,
        ..SearchStats::default()
    };
    let mut seen = std::collections::HashSet::new();
    let mut discoveries = Vec::new();
    for outcome in outcomes {
        match outcome? {
            Outcome::ConditionReject => stats.condition_rejects += 1,
            Outcome::DistanceReject => {
                stats.lifted += 1;
                stats.distance_rejects += 1;
            }
            Outcome::Found(d) => {
                stats.lifted += 1;
                if seen.insert(fingerprint(&d)) {
                    stats.discoveries += 1;
                    discoveries.push(*d);
                } else {
                    stats.duplicates += 1;
                }
            }
        }
    }
    if let Some(dir) = &cfg.out_dir {
        persist(dir, &discoveries)?;
    }
    Ok(SearchReport { discoveries, stats })
}

/// Writes one record file per discovery and an `index.tsv` listing them.
pub fn persist(dir: &Path, discoveries: &[Discovery]) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mut index = fs::File::create(dir.join("index.tsv"))?;
    writeln!(index, "{INDEX_HEADER}")?;
    for d in discoveries {
        fs::write(dir.join(d.file_name()), d.to_record().to_text())?;
        writeln!(index, "{}", d.index_line())?;
    }
    Ok(())
}
