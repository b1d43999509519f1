//! The three characteristic-2 alphabets F2, F2+uF2 and F4.
//!
//! Every element is a 2-bit symbol `sym = c0 + 2*c1` read as the polynomial
//! `c0 + c1*x`, where `x` is `u` (with `u^2 = 0`) or `w` (with `w^2 = w + 1`).
//! This gives the quaternary notation used by the published tables:
//!
//! | sym | F2+uF2 | F4    |
//! |-----|--------|-------|
//! | 0   | 0      | 0     |
//! | 1   | 1      | 1     |
//! | 2   | u      | w     |
//! | 3   | 1+u    | 1+w   |
//!
//! F2 uses the same encoding restricted to `{0, 1}`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One of the three supported alphabets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    F2,
    /// F2 + uF2 with u^2 = 0.
    F2U,
    /// F4 = F2[w]/(w^2 + w + 1).
    F4,
}

// Multiplication tables from the defining relation x^2 = x2_lo + x2_hi*x.
const fn product_table(x2_lo: u8, x2_hi: u8) -> [[u8; 4]; 4] {
    let mut t = [[0u8; 4]; 4];
    let mut a = 0;
    while a < 4 {
        let mut b = 0;
        while b < 4 {
            let (a0, a1) = ((a & 1) as u8, (a >> 1) as u8);
            let (b0, b1) = ((b & 1) as u8, (b >> 1) as u8);
            let c0 = a0 & b0;
            let c1 = (a0 & b1) ^ (a1 & b0);
            let c2 = a1 & b1;
            let lo = c0 ^ (c2 & x2_lo);
            let hi = c1 ^ (c2 & x2_hi);
            t[a][b] = lo | (hi << 1);
            b += 1;
        }
        a += 1;
    }
    t
}

const MUL_F2U: [[u8; 4]; 4] = product_table(0, 0);
const MUL_F4: [[u8; 4]; 4] = product_table(1, 1);

impl Alphabet {
    pub const ALL: [Alphabet; 3] = [Alphabet::F2, Alphabet::F2U, Alphabet::F4];

    pub fn order(self) -> u8 {
        match self {
            Alphabet::F2 => 2,
            Alphabet::F2U | Alphabet::F4 => 4,
        }
    }

    /// Short lowercase name used on the command line and in record files.
    pub fn name(self) -> &'static str {
        match self {
            Alphabet::F2 => "f2",
            Alphabet::F2U => "f2u",
            Alphabet::F4 => "f4",
        }
    }

    /// Whether a Gray map to bit pairs exists (the 4-element alphabets).
    pub fn has_gray_map(self) -> bool {
        self != Alphabet::F2
    }

    /// The element used alongside 1 to span the alphabet over F2: u or w.
    pub fn delta(self) -> Option<RingElement> {
        self.has_gray_map().then_some(RingElement {
            alphabet: self,
            sym: 2,
        })
    }

    #[inline]
    pub(crate) fn mul_sym(self, a: u8, b: u8) -> u8 {
        match self {
            // F2 symbols are 0/1 so the F2U table restricted to them is F2.
            Alphabet::F2 | Alphabet::F2U => MUL_F2U[a as usize][b as usize],
            Alphabet::F4 => MUL_F4[a as usize][b as usize],
        }
    }

    /// Gray image of a symbol as (first bit, second bit).
    #[inline]
    pub(crate) fn gray_sym(self, sym: u8) -> (u8, u8) {
        let c0 = sym & 1;
        let c1 = sym >> 1;
        match self {
            // a + bu -> (b, a + b)
            Alphabet::F2U => (c1, c0 ^ c1),
            // a*w + b*(1+w) = b + (a+b)w, so c0 = b and c1 = a + b -> (a, b)
            Alphabet::F4 => (c0 ^ c1, c0),
            Alphabet::F2 => (sym, 0),
        }
    }

    pub(crate) fn check_sym(self, sym: u8) -> Result<u8> {
        if sym < self.order() {
            Ok(sym)
        } else {
            Err(Error::SymbolOutOfRange {
                alphabet: self,
                sym,
            })
        }
    }

    pub(crate) fn ensure_same(self, other: Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self,
                right: other,
            })
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Alphabet::F2 => "F2",
            Alphabet::F2U => "F2+uF2",
            Alphabet::F4 => "F4",
        })
    }
}

impl FromStr for Alphabet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f2" => Ok(Alphabet::F2),
            "f2u" | "f2+uf2" => Ok(Alphabet::F2U),
            "f4" => Ok(Alphabet::F4),
            _ => Err(Error::UnknownAlphabet(s.to_string())),
        }
    }
}

/// A single symbol of an [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingElement {
    alphabet: Alphabet,
    sym: u8,
}

impl RingElement {
    pub fn new(alphabet: Alphabet, sym: u8) -> Result<Self> {
        alphabet.check_sym(sym)?;
        Ok(RingElement { alphabet, sym })
    }

    pub fn zero(alphabet: Alphabet) -> Self {
        RingElement { alphabet, sym: 0 }
    }

    pub fn one(alphabet: Alphabet) -> Self {
        RingElement { alphabet, sym: 1 }
    }

    /// All elements of the alphabet in symbol order.
    pub fn all(alphabet: Alphabet) -> impl Iterator<Item = RingElement> {
        (0..alphabet.order()).map(move |sym| RingElement { alphabet, sym })
    }

    pub fn alphabet(self) -> Alphabet {
        self.alphabet
    }

    pub fn sym(self) -> u8 {
        self.sym
    }

    pub fn is_zero(self) -> bool {
        self.sym == 0
    }

    pub fn add(self, other: RingElement) -> Result<RingElement> {
        self.alphabet.ensure_same(other.alphabet)?;
        Ok(RingElement {
            alphabet: self.alphabet,
            sym: self.sym ^ other.sym,
        })
    }

    pub fn mul(self, other: RingElement) -> Result<RingElement> {
        self.alphabet.ensure_same(other.alphabet)?;
        Ok(RingElement {
            alphabet: self.alphabet,
            sym: self.alphabet.mul_sym(self.sym, other.sym),
        })
    }

    /// Gray image: `a + bu -> (b, a+b)` over F2+uF2, `a*w + b*(1+w) -> (a, b)` over F4.
    pub fn gray(self) -> Result<(u8, u8)> {
        if !self.alphabet.has_gray_map() {
            return Err(Error::NoGrayMap(self.alphabet));
        }
        Ok(self.alphabet.gray_sym(self.sym))
    }

    /// Hamming weight of the Gray image.
    pub fn lee_weight(self) -> Result<u8> {
        let (a, b) = self.gray()?;
        Ok(a + b)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sym)
    }
}

/// Decodes a symbol string such as `"(31223333300320201200)"`.
///
/// Parentheses and whitespace are ignored; every other character must be a
/// symbol of the alphabet.
pub fn parse_vector(s: &str, alphabet: Alphabet) -> Result<Vec<RingElement>> {
    let mut out = Vec::with_capacity(s.len());
    for (pos, ch) in s.chars().enumerate() {
        if ch.is_whitespace() || ch == '(' || ch == ')' {
            continue;
        }
        let sym = match ch {
            '0'..='3' => ch as u8 - b'0',
            _ => return Err(Error::IllegalCharacter { ch, pos }),
        };
        out.push(RingElement::new(alphabet, sym)?);
    }
    Ok(out)
}

pub fn format_vector(v: &[RingElement]) -> String {
    v.iter().map(|e| char::from(b'0' + e.sym)).collect()
}

/// Euclidean inner product of two equal-length vectors.
pub fn inner_product(x: &[RingElement], y: &[RingElement]) -> Result<RingElement> {
    if x.len() != y.len() {
        return Err(Error::Shape(format!(
            "inner product of lengths {} and {}",
            x.len(),
            y.len()
        )));
    }
    let alphabet = x.first().map_or(Alphabet::F2, |e| e.alphabet);
    x.iter()
        .zip(y)
        .try_fold(RingElement::zero(alphabet), |acc, (a, b)| acc.add(a.mul(*b)?))
}
