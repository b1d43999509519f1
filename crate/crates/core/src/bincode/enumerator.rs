//! Known low-weight weight-enumerator families at lengths 80, 84 and 96, and
//! recovery of their integer parameters from a census.

use std::fmt;
use std::str::FromStr;

use super::census::Census;
use super::code::CodeType;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    W80,
    W84_1,
    W84_2,
    W84_3,
    W96I1,
    W96I2,
    W96II,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::W80,
        Family::W84_1,
        Family::W84_2,
        Family::W84_3,
        Family::W96I1,
        Family::W96I2,
        Family::W96II,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::W80 => "W80",
            Family::W84_1 => "W84_1",
            Family::W84_2 => "W84_2",
            Family::W84_3 => "W84_3",
            Family::W96I1 => "W96_I_1",
            Family::W96I2 => "W96_I_2",
            Family::W96II => "W96_II",
        }
    }

    pub fn length(self) -> usize {
        match self {
            Family::W80 => 80,
            Family::W84_1 | Family::W84_2 | Family::W84_3 => 84,
            _ => 96,
        }
    }

    pub fn code_type(self) -> CodeType {
        match self {
            Family::W96II => CodeType::TypeII,
            _ => CodeType::TypeI,
        }
    }

    /// Smallest nonzero weight the family allows.
    pub fn min_weight(self) -> usize {
        match self.length() {
            96 => 16,
            _ => 14,
        }
    }

    /// Largest weight the family's formula describes.
    pub fn top_weight(self) -> usize {
        match self {
            Family::W80 => 16,
            Family::W84_1 | Family::W84_2 | Family::W84_3 => 18,
            Family::W96I1 | Family::W96I2 => 22,
            Family::W96II => 20,
        }
    }

    /// Census depth needed to determine the parameters.
    pub fn required_depth(self) -> usize {
        match self {
            Family::W80 | Family::W96II => 16,
            _ => 18,
        }
    }

    /// Families for a length and type, in the order they are tried.
    pub fn candidates(length: usize, ty: CodeType) -> &'static [Family] {
        match (length, ty) {
            (80, CodeType::TypeI) => &[Family::W80],
            (84, CodeType::TypeI) => &[Family::W84_1, Family::W84_2, Family::W84_3],
            (96, CodeType::TypeI) => &[Family::W96I1, Family::W96I2],
            (96, CodeType::TypeII) => &[Family::W96II],
            _ => &[],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s.trim())
            .ok_or_else(|| Error::Format(format!("unknown family {s:?}")))
    }
}

/// A family with its parameters. `gamma` is `None` for the W96 Type I
/// families when the census is too shallow to fix it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EnumeratorParams {
    pub family: Family,
    pub alpha: i64,
    pub beta: Option<i64>,
    pub gamma: Option<i64>,
}

impl EnumeratorParams {
    /// `A_w` according to the family formula, when the formula covers `w` and
    /// every parameter it involves is known.
    pub fn predicted(&self, w: usize) -> Option<i64> {
        let a = self.alpha;
        if w == 0 {
            return Some(1);
        }
        if w < self.family.min_weight() {
            return Some(0);
        }
        let b = self.beta;
        let g = self.gamma;
        match (self.family, w) {
            (Family::W80, 14) => Some(3200 + 4 * a),
            (Family::W80, 16) => Some(47645 - 8 * a + 256 * b?),
            (Family::W84_1 | Family::W84_2 | Family::W84_3, 14) => Some(4080 - a),
            (Family::W84_1, 16) => Some(39524),
            (Family::W84_1, 18) => Some(247264 + 14 * a),
            (Family::W84_2 | Family::W84_3, 16) => Some(28644 + 64 * b?),
            (Family::W84_2, 18) => Some(390368 + 14 * a - 384 * b?),
            (Family::W84_3, 18) => Some(394464 + 14 * a - 384 * b?),
            (Family::W96I1 | Family::W96I2, 16) => Some(a - 5814),
            (Family::W96I1 | Family::W96I2, 18) => Some(97280 + 64 * b?),
            (Family::W96I1, 20) => Some(1784320 - 16 * a - 384 * b?),
            (Family::W96I1, 22) => Some(17626112 + 192 * b?),
            (Family::W96I2, 20) => Some(1694208 - 16 * a - 384 * b? + 4096 * g?),
            (Family::W96I2, 22) => Some(18969600 + 192 * b? - 49152 * g?),
            (Family::W96II, 16) => Some(a),
            (Family::W96II, 20) => Some(3217056 - 16 * a),
            // Type II weights are multiples of 4
            (Family::W96II, w) if w % 4 != 0 => Some(0),
            _ => None,
        }
    }

    /// Whether every measured count the formula covers agrees with it.
    pub fn consistent_with(&self, census: &Census) -> bool {
        (0..=census.max_weight().min(self.family.top_weight())).all(|w| match self.predicted(w) {
            Some(p) => p == census.counts[w] as i64,
            None => true,
        })
    }
}

impl fmt::Display for EnumeratorParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} \u{3b1}={}", self.family, self.alpha)?;
        if let Some(b) = self.beta {
            write!(f, " \u{3b2}={b}")?;
        }
        match (self.family, self.gamma) {
            (_, Some(g)) => write!(f, " \u{3b3}={g}"),
            (Family::W96I1 | Family::W96I2, None) => write!(f, " \u{3b3}=?"),
            _ => Ok(()),
        }
    }
}

fn exact_div(num: i64, den: i64) -> Option<i64> {
    (num % den == 0).then_some(num / den)
}

/// Solves the family's equations for its parameters from the census and
/// returns them if every covered count agrees.
pub fn fit_family(family: Family, census: &Census) -> Result<Option<EnumeratorParams>> {
    let need = family.required_depth();
    if census.max_weight() < need {
        return Err(Error::CensusTooShallow {
            have: census.max_weight(),
            need,
        });
    }
    let a = |w: usize| census.counts[w] as i64;
    let params = match family {
        Family::W80 => {
            let Some(alpha) = exact_div(a(14) - 3200, 4) else {
                return Ok(None);
            };
            let Some(beta) = exact_div(a(16) - 47645 + 8 * alpha, 256) else {
                return Ok(None);
            };
            EnumeratorParams {
                family,
                alpha,
                beta: Some(beta),
                gamma: None,
            }
        }
        Family::W84_1 => EnumeratorParams {
            family,
            alpha: 4080 - a(14),
            beta: None,
            gamma: None,
        },
        Family::W84_2 | Family::W84_3 => {
            let Some(beta) = exact_div(a(16) - 28644, 64) else {
                return Ok(None);
            };
            EnumeratorParams {
                family,
                alpha: 4080 - a(14),
                beta: Some(beta),
                gamma: None,
            }
        }
        Family::W96I1 | Family::W96I2 => {
            let alpha = a(16) + 5814;
            let Some(beta) = exact_div(a(18) - 97280, 64) else {
                return Ok(None);
            };
            let gamma = match family {
                Family::W96I2 if census.max_weight() >= 20 => {
                    match exact_div(a(20) - 1694208 + 16 * alpha + 384 * beta, 4096) {
                        Some(g) => Some(g),
                        None => return Ok(None),
                    }
                }
                _ => None,
            };
            EnumeratorParams {
                family,
                alpha,
                beta: Some(beta),
                gamma,
            }
        }
        Family::W96II => EnumeratorParams {
            family,
            alpha: a(16),
            beta: None,
            gamma: None,
        },
    };
    Ok(params.consistent_with(census).then_some(params))
}

/// Identifies the family of a self-dual code of the given length and type and
/// recovers its parameters.
///
/// For length 96 Type I, the first family is only reported when `A_22` is in
/// the census: its `A_{<=20}` values coincide with the second family at
/// `gamma = 22`, so without `A_22` the second family is reported.
pub fn extract_params(census: &Census, length: usize, ty: CodeType) -> Result<EnumeratorParams> {
    let candidates = Family::candidates(length, ty);
    if candidates.is_empty() {
        return Err(Error::NoFamilyFits(format!("no known family for length {length} {ty}")));
    }
    let mut fits = Vec::new();
    for &f in candidates {
        if f == Family::W96I1 && census.max_weight() < 22 {
            continue;
        }
        if let Some(p) = fit_family(f, census)? {
            fits.push(p);
        }
    }
    match fits.as_slice() {
        [p] => Ok(*p),
        [] => Err(Error::NoFamilyFits(format!(
            "length {length} {ty}, counts {:?}",
            census.nonzero()
        ))),
        many => Err(Error::NoFamilyFits(format!(
            "ambiguous between {}",
            many.iter().map(|p| p.family.name()).collect::<Vec<_>>().join(", ")
        ))),
    }
}
