use std::fmt;
use std::str::FromStr;

use super::matrix::{gray_lift, half_grouped_order, BinaryMatrix};
use crate::error::{Error, Result};
use crate::ringmat::RingMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CodeType {
    /// Singly-even: some codeword weight is 2 mod 4.
    TypeI,
    /// Doubly-even: every codeword weight is 0 mod 4.
    TypeII,
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeType::TypeI => "Type I",
            CodeType::TypeII => "Type II",
        })
    }
}

impl FromStr for CodeType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Type I" | "I" => Ok(CodeType::TypeI),
            "Type II" | "II" => Ok(CodeType::TypeII),
            other => Err(Error::Format(format!("unknown code type {other:?}"))),
        }
    }
}

/// Upper bound on the minimum distance of a binary self-dual code of length `n`.
pub fn distance_bound(n: usize, ty: CodeType) -> usize {
    let base = 4 * (n / 24);
    match ty {
        CodeType::TypeII => base + 4,
        CodeType::TypeI if n % 24 == 0 => base + 2,
        CodeType::TypeI if n % 24 != 22 => base + 4,
        CodeType::TypeI => base + 6,
    }
}

/// A binary linear code held in systematic form, with a second systematic
/// form on the complementary coordinates when they are an information set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    generator: BinaryMatrix,
    info_a: Vec<usize>,
    /// Systematic generator on the complement of `info_a`.
    second: Option<(BinaryMatrix, Vec<usize>)>,
}

impl BinaryCode {
    /// Builds the code spanned by the rows of `spanning` (any number of rows).
    pub fn new(spanning: &BinaryMatrix) -> Result<Self> {
        let first = spanning.rref(&[]);
        if first.rank == 0 {
            return Err(Error::Empty("code has dimension 0"));
        }
        let mut in_a = vec![false; spanning.cols()];
        for &p in &first.pivots {
            in_a[p] = true;
        }
        let complement: Vec<usize> = (0..spanning.cols()).filter(|&c| !in_a[c]).collect();
        let second = first.matrix.rref(&complement);
        let ok = second.rank == first.rank && second.pivots.iter().all(|&p| !in_a[p]);
        Ok(BinaryCode {
            info_a: first.pivots,
            generator: first.matrix,
            second: ok.then_some((second.matrix, second.pivots)),
        })
    }

    /// The binary image of a ring code with generator `g`, coordinates ordered
    /// so the images of the left half of the ring coordinates come first.
    pub fn from_ring_generator(g: &RingMatrix) -> Result<Self> {
        let lifted = gray_lift(g);
        let order = half_grouped_order(g.alphabet(), g.cols());
        Self::new(&lifted.select_columns(&order)?)
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    /// Reduced generator, systematic on [`BinaryCode::information_set`].
    pub fn generator(&self) -> &BinaryMatrix {
        &self.generator
    }

    pub fn information_set(&self) -> &[usize] {
        &self.info_a
    }

    /// Systematic generator and pivots on the complementary information set.
    pub fn second_form(&self) -> Option<(&BinaryMatrix, &[usize])> {
        self.second.as_ref().map(|(m, p)| (m, p.as_slice()))
    }

    pub fn is_self_dual(&self) -> bool {
        self.length() == 2 * self.dimension() && self.generator.is_self_orthogonal()
    }

    /// `None` unless the code is self-dual.
    pub fn code_type(&self) -> Option<CodeType> {
        if !self.is_self_dual() {
            return None;
        }
        // Self-orthogonal with doubly-even generators spans a doubly-even code.
        let doubly = (0..self.dimension()).all(|i| self.generator.row_weight(i) % 4 == 0);
        Some(if doubly { CodeType::TypeII } else { CodeType::TypeI })
    }
}
