//! Plain-text record of one code: `#` comment lines with the construction and
//! parameters, the generator matrix one row per line, then the partial weight
//! enumerator as trailing comments.
//!
//! ```text
//! # construction 20.1
//! # alphabet f4
//! # v 31223333300320201200
//! # length 80
//! # dimension 40
//! # distance 14
//! # type I
//! # family W80
//! # alpha -275
//! # beta 0
//! 1000...
//! ...
//! # A_0 1
//! # A_14 2100
//! ```

use std::fmt::Write as _;

use super::code::CodeType;
use super::enumerator::{EnumeratorParams, Family};
use super::matrix::BinaryMatrix;
use crate::alphabet::Alphabet;
use crate::constructions::ConstructionId;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub construction: Option<ConstructionId>,
    pub alphabet: Option<Alphabet>,
    pub v: Option<String>,
    pub distance: Option<usize>,
    pub code_type: Option<CodeType>,
    pub params: Option<EnumeratorParams>,
    pub seed: Option<u64>,
    pub trial: Option<u64>,
    pub generator: BinaryMatrix,
    /// Nonzero `(w, A_w)` pairs.
    pub weights: Vec<(usize, u64)>,
}

impl Record {
    pub fn new(generator: BinaryMatrix) -> Self {
        Record {
            construction: None,
            alphabet: None,
            v: None,
            distance: None,
            code_type: None,
            params: None,
            seed: None,
            trial: None,
            generator,
            weights: Vec::new(),
        }
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let mut line = |k: &str, v: &dyn std::fmt::Display| {
            let _ = writeln!(s, "# {k} {v}");
        };
        if let Some(c) = self.construction {
            line("construction", &c);
        }
        if let Some(a) = self.alphabet {
            line("alphabet", &a.name());
        }
        if let Some(v) = &self.v {
            line("v", v);
        }
        line("length", &self.length());
        line("dimension", &self.dimension());
        if let Some(d) = self.distance {
            line("distance", &d);
        }
        if let Some(t) = self.code_type {
            line("type", &if t == CodeType::TypeI { "I" } else { "II" });
        }
        if let Some(p) = self.params {
            line("family", &p.family);
            line("alpha", &p.alpha);
            if let Some(b) = p.beta {
                line("beta", &b);
            }
            if let Some(g) = p.gamma {
                line("gamma", &g);
            }
        }
        if let Some(seed) = self.seed {
            line("seed", &seed);
        }
        if let Some(trial) = self.trial {
            line("trial", &trial);
        }
        for i in 0..self.generator.rows() {
            s.push_str(&self.generator.row_string(i));
            s.push('\n');
        }
        for (w, c) in &self.weights {
            let _ = writeln!(s, "# A_{w} {c}");
        }
        s
    }

    pub fn parse(text: &str) -> Result<Record> {
        let mut header: Vec<(String, String)> = Vec::new();
        let mut rows: Vec<&str> = Vec::new();
        let mut weights = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let bad = |what: &str| Error::Format(format!("line {}: {what}", no + 1));
            if let Some(rest) = line.strip_prefix('#') {
                let rest = rest.trim();
                let (key, value) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                if rows.is_empty() {
                    header.push((key.to_string(), value.trim().to_string()));
                } else {
                    let w = key
                        .strip_prefix("A_")
                        .and_then(|w| w.parse::<usize>().ok())
                        .ok_or_else(|| bad("expected `A_w count` after the matrix"))?;
                    let c = value.trim().parse::<u64>().map_err(|_| bad("bad weight count"))?;
                    weights.push((w, c));
                }
            } else {
                if !weights.is_empty() {
                    return Err(bad("matrix row after the weight enumerator"));
                }
                rows.push(line);
            }
        }
        if rows.is_empty() {
            return Err(Error::Format("no generator rows".into()));
        }
        let mut rec = Record::new(BinaryMatrix::from_strings(&rows)?);
        rec.weights = weights;

        let get = |k: &str| header.iter().find(|(key, _)| key == k).map(|(_, v)| v.as_str());
        let num = |k: &str| -> Result<Option<i64>> {
            get(k)
                .map(|v| v.parse::<i64>().map_err(|_| Error::Format(format!("bad {k}: {v:?}"))))
                .transpose()
        };
        let unsigned = |k: &str| -> Result<Option<u64>> {
            get(k)
                .map(|v| v.parse::<u64>().map_err(|_| Error::Format(format!("bad {k}: {v:?}"))))
                .transpose()
        };
        rec.construction = get("construction").map(str::parse).transpose()?;
        rec.alphabet = get("alphabet").map(str::parse).transpose()?;
        rec.v = get("v").map(str::to_string);
        rec.distance = unsigned("distance")?.map(|d| d as usize);
        rec.code_type = get("type").map(str::parse).transpose()?;
        rec.seed = unsigned("seed")?;
        rec.trial = unsigned("trial")?;
        if let Some(family) = get("family") {
            let family: Family = family.parse()?;
            rec.params = Some(EnumeratorParams {
                family,
                alpha: num("alpha")?.ok_or_else(|| Error::Format("family without alpha".into()))?,
                beta: num("beta")?,
                gamma: num("gamma")?,
            });
        }
        for (key, expected) in [("length", rec.length()), ("dimension", rec.dimension())] {
            if let Some(v) = unsigned(key)? {
                if v as usize != expected {
                    return Err(Error::Format(format!("{key} {v} but matrix gives {expected}")));
                }
            }
        }
        Ok(rec)
    }
}
