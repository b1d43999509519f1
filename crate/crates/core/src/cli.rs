//! Command-line interface: `verify`, `search`, `census`, `params`, `tables`.
//!
//! Exit status is 0 on success, 1 when a code fails verification and 2 for
//! usage errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::alphabet::{parse_vector, Alphabet};
use crate::bincode::{extract_params, BinaryCode, CensusOptions, CodeType, Family, Record};
use crate::constructions::ConstructionId;
use crate::error::Error;
use crate::search::{default_depth, lift, run_search, verify_record, SearchConfig};
use crate::tables::{check_table, TABLES};

/// Deepest census weight allowed without `--deep`.
pub const SHALLOW_LIMIT: usize = 18;

#[derive(Debug, Parser)]
#[command(name = "sdcodes", version, about = "Self-dual codes from composite group-ring matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rebuild one code from its vector and report its parameters.
    Verify {
        #[command(flatten)]
        code: CodeArgs,
        /// Census depth (default: what the weight enumerator family needs).
        #[arg(long)]
        depth: Option<usize>,
        /// Write the code in record format to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        deep: DeepArg,
    },
    /// Random search for codes with a given minimum distance.
    Search {
        #[arg(long, value_parser = parse_construction)]
        construction: ConstructionId,
        #[arg(long, value_parser = parse_alphabet)]
        alphabet: Alphabet,
        #[arg(long)]
        target_d: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Census depth for survivors (default: the target distance or the
        /// family's needs, whichever is larger).
        #[arg(long)]
        census_depth: Option<usize>,
        #[arg(long, env = "SDCODES_OUT_DIR")]
        out_dir: Option<PathBuf>,
        #[command(flatten)]
        deep: DeepArg,
    },
    /// Exact counts of codewords of weight up to `--max-weight`.
    Census {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        max_weight: usize,
        #[command(flatten)]
        deep: DeepArg,
    },
    /// Weight enumerator family and parameters.
    Params {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        depth: Option<usize>,
        #[command(flatten)]
        deep: DeepArg,
    },
    /// Rebuild the bundled table rows and compare.
    Tables {
        /// Table number (2 to 14); all tables when omitted.
        #[arg(long)]
        table: Option<u32>,
        #[command(flatten)]
        deep: DeepArg,
    },
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    #[arg(long, value_parser = parse_construction)]
    pub construction: ConstructionId,
    #[arg(long, value_parser = parse_alphabet)]
    pub alphabet: Alphabet,
    /// Symbol string, e.g. 31223333300320201200.
    #[arg(long)]
    pub v: String,
}

#[derive(Debug, Args)]
pub struct SourceArgs {
    #[arg(long, value_parser = parse_construction, requires_all = ["alphabet", "v"], conflicts_with = "file")]
    pub construction: Option<ConstructionId>,
    #[arg(long, value_parser = parse_alphabet)]
    pub alphabet: Option<Alphabet>,
    #[arg(long)]
    pub v: Option<String>,
    /// A code in record format instead of a vector.
    #[arg(long, required_unless_present = "construction")]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DeepArg {
    /// Allow censuses beyond weight 18 (can take hours).
    #[arg(long)]
    pub deep: bool,
}

impl DeepArg {
    fn options(&self) -> CensusOptions {
        if self.deep {
            CensusOptions::unlimited()
        } else {
            CensusOptions::default()
        }
    }

    fn allow(&self, depth: usize) -> Result<(), Failure> {
        if depth > SHALLOW_LIMIT && !self.deep {
            return Err(Failure::Usage(format!(
                "census to weight {depth} needs --deep (limit without it is {SHALLOW_LIMIT})"
            )));
        }
        Ok(())
    }
}

fn parse_construction(s: &str) -> Result<ConstructionId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_alphabet(s: &str) -> Result<Alphabet, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::WrongLength { .. }
            | Error::IllegalCharacter { .. }
            | Error::SymbolOutOfRange { .. }
            | Error::UnknownConstruction(_)
            | Error::UnknownAlphabet(_)
            | Error::BudgetExceeded { .. }
            | Error::CensusTooShallow { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Verify(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Verify(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command, writing the
/// report to `out`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Verify(msg)) => {
            let _ = writeln!(out, "FAIL: {msg}");
            1
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<u8, Failure> {
    match command {
        Command::Verify {
            code,
            depth,
            out: file,
            deep,
        } => {
            let depth = verify_depth(&code, depth, &deep)?;
            let d = verify_record(&code.v, code.construction, code.alphabet, depth, deep.options())?;
            writeln!(out, "{}", d.summary())?;
            if let Some(path) = file {
                std::fs::write(&path, d.to_record().to_text())?;
                writeln!(out, "wrote {}", path.display())?;
            }
            Ok(0)
        }
        Command::Search {
            construction,
            alphabet,
            target_d,
            trials,
            seed,
            workers,
            census_depth,
            out_dir,
            deep,
        } => {
            if !construction.usual_alphabets().contains(&alphabet) {
                eprintln!("warning: {construction} is not usually applied over {alphabet}");
            }
            let n = lifted_length(construction, alphabet);
            let depth = census_depth.unwrap_or_else(|| {
                let family = [CodeType::TypeI, CodeType::TypeII]
                    .iter()
                    .flat_map(|&ty| Family::candidates(n, ty))
                    .map(|f| f.required_depth())
                    .max()
                    .unwrap_or(0);
                target_d.max(family)
            });
            deep.allow(depth)?;
            let mut cfg = SearchConfig::new(construction, alphabet, target_d, seed);
            cfg.max_trials = trials;
            cfg.workers = workers;
            cfg.census_depth = depth;
            cfg.out_dir = out_dir;
            cfg.census = deep.options();
            let report = run_search(&cfg).map_err(|e| match e {
                Error::Shape(m) => Failure::Usage(m),
                e => e.into(),
            })?;
            for d in &report.discoveries {
                writeln!(out, "trial {} v={} {}", d.trial.unwrap_or(0), d.v, d.summary())?;
            }
            let s = report.stats;
            writeln!(
                out,
                "{} trials, {} failed conditions, {} lifted, {} below distance, {} duplicates",
                s.trials, s.condition_rejects, s.lifted, s.distance_rejects, s.duplicates
            )?;
            writeln!(out, "{} discoveries", s.discoveries)?;
            Ok(0)
        }
        Command::Census {
            source,
            max_weight,
            deep,
        } => {
            deep.allow(max_weight)?;
            let code = load_code(&source)?;
            let census = code.census(max_weight, deep.options())?;
            writeln!(out, "[{},{}] census to weight {max_weight}", code.length(), code.dimension())?;
            for (w, c) in census.nonzero() {
                writeln!(out, "A_{w} {c}")?;
            }
            Ok(0)
        }
        Command::Params { source, depth, deep } => {
            let code = load_code(&source)?;
            let ty = code.code_type().ok_or(Error::NotSelfDual)?;
            let depth = depth.unwrap_or_else(|| default_depth(code.length(), ty));
            deep.allow(depth)?;
            let census = code.census(depth, deep.options())?;
            let p = extract_params(&census, code.length(), ty)?;
            writeln!(out, "[{},{}] {ty}, {p}", code.length(), code.dimension())?;
            Ok(0)
        }
        Command::Tables { table, deep } => {
            let selected: Vec<_> = match table {
                Some(n) => vec![crate::tables::table(n).ok_or_else(|| {
                    Failure::Usage(format!("no table {n}; tables are numbered 2 to 14"))
                })?],
                None => TABLES.iter().collect(),
            };
            let depth = deep.deep.then_some(20);
            let mut failed = 0;
            for t in selected {
                writeln!(out, "{}", t.title())?;
                let reports = check_table(t, depth.filter(|_| t.family == Family::W96I2), deep.options());
                let mut pass = 0;
                for r in &reports {
                    match (&r.outcome, r.passed()) {
                        (Ok(d), true) => {
                            pass += 1;
                            writeln!(out, "  row {:>3} PASS {}", r.row.index, d.summary())?;
                        }
                        (Ok(_), false) => writeln!(out, "  row {:>3} FAIL {}", r.row.index, r.mismatches.join("; "))?,
                        (Err(e), _) => writeln!(out, "  row {:>3} FAIL {e}", r.row.index)?,
                    }
                }
                failed += reports.len() - pass;
                write!(out, "  {pass}/{} rows pass", reports.len())?;
                if t.external > 0 {
                    write!(out, ", {} marked external", t.external)?;
                }
                writeln!(out)?;
            }
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

fn verify_depth(code: &CodeArgs, depth: Option<usize>, deep: &DeepArg) -> Result<Option<usize>, Failure> {
    if let Some(d) = depth {
        deep.allow(d)?;
        return Ok(Some(d));
    }
    // With --deep, length 96 Type I codes get the census needed for gamma.
    let n = lifted_length(code.construction, code.alphabet);
    Ok((deep.deep && n == 96).then_some(20))
}

fn lifted_length(c: ConstructionId, a: Alphabet) -> usize {
    2 * c.half_length() * if a.has_gray_map() { 2 } else { 1 }
}

fn load_code(source: &SourceArgs) -> Result<BinaryCode, Failure> {
    if let Some(path) = &source.file {
        let rec = Record::parse(&std::fs::read_to_string(path)?)?;
        return Ok(BinaryCode::new(&rec.generator)?);
    }
    let (Some(c), Some(a), Some(v)) = (source.construction, source.alphabet, &source.v) else {
        return Err(Failure::Usage("give --construction, --alphabet and --v, or --file".into()));
    };
    let elems = parse_vector(v, a)?;
    if elems.len() != c.half_length() {
        return Err(Error::WrongLength {
            construction: c.name(),
            expected: c.half_length(),
            got: elems.len(),
        }
        .into());
    }
    Ok(lift(c, &elems)?)
}
