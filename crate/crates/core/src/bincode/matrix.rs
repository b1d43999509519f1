use std::fmt;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::ringmat::RingMatrix;

/// Dense binary matrix, one bit per entry, rows packed into `u64` words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

/// Result of a reduction to row-echelon form.
#[derive(Debug, Clone)]
pub struct Rref {
    /// Reduced matrix with the `rank` nonzero rows only.
    pub matrix: BinaryMatrix,
    pub rank: usize,
    /// Pivot column of each row, in row order.
    pub pivots: Vec<usize>,
}

impl BinaryMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        BinaryMatrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Rows given as slices of 0/1 values.
    pub fn from_bits(rows: &[Vec<u8>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            for (j, &b) in r.iter().enumerate() {
                match b {
                    0 => {}
                    1 => m.set(i, j, true),
                    _ => return Err(Error::Shape(format!("entry {b} is not a bit"))),
                }
            }
        }
        Ok(m)
    }

    /// Rows given as strings over `{0, 1}`.
    pub fn from_strings<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let bits = rows
            .iter()
            .map(|r| {
                r.as_ref()
                    .chars()
                    .enumerate()
                    .map(|(pos, ch)| match ch {
                        '0' => Ok(0),
                        '1' => Ok(1),
                        _ => Err(Error::IllegalCharacter { ch, pos }),
                    })
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_bits(&bits)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, bit: bool) {
        let w = &mut self.data[i * self.words + j / 64];
        if bit {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    pub fn row_bits(&self, i: usize) -> Vec<u8> {
        (0..self.cols).map(|j| self.get(i, j) as u8).collect()
    }

    pub fn row_string(&self, i: usize) -> String {
        (0..self.cols).map(|j| if self.get(i, j) { '1' } else { '0' }).collect()
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row_words(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    fn xor_row(&mut self, dst: usize, src: usize) {
        let w = self.words;
        let (d, s) = (dst * w, src * w);
        for k in 0..w {
            let v = self.data[s + k];
            self.data[d + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for k in 0..self.words {
                self.data.swap(a * self.words + k, b * self.words + k);
            }
        }
    }

    /// Parity of the intersection of rows `a` and `b`.
    pub fn rows_dot(&self, a: usize, b: usize) -> bool {
        let ones: u32 = self
            .row_words(a)
            .iter()
            .zip(self.row_words(b))
            .map(|(x, y)| (x & y).count_ones())
            .sum();
        ones % 2 == 1
    }

    /// Every pair of rows, each row with itself included, meets evenly.
    pub fn is_self_orthogonal(&self) -> bool {
        (0..self.rows).all(|a| (a..self.rows).all(|b| !self.rows_dot(a, b)))
    }

    /// Reduced row-echelon form. Columns in `pivot_pref` are tried as pivots
    /// first, in the order given; the remaining columns follow in natural order.
    pub fn rref(&self, pivot_pref: &[usize]) -> Rref {
        let mut m = self.clone();
        let mut seen = vec![false; self.cols];
        let mut order = Vec::with_capacity(self.cols);
        for &c in pivot_pref {
            if c < self.cols && !seen[c] {
                seen[c] = true;
                order.push(c);
            }
        }
        order.extend((0..self.cols).filter(|&c| !seen[c]));

        let mut rank = 0;
        let mut pivots = Vec::new();
        for &c in &order {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&r| m.get(r, c)) else {
                continue;
            };
            m.swap_rows(rank, p);
            for r in 0..m.rows {
                if r != rank && m.get(r, c) {
                    m.xor_row(r, rank);
                }
            }
            pivots.push(c);
            rank += 1;
        }
        m.rows = rank;
        m.data.truncate(rank * m.words);
        Rref {
            matrix: m,
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref(&[]).rank
    }

    /// New matrix whose column `j` is column `cols[j]` of `self`.
    pub fn select_columns(&self, cols: &[usize]) -> Result<BinaryMatrix> {
        if let Some(&c) = cols.iter().find(|&&c| c >= self.cols) {
            return Err(Error::Shape(format!("column {c} out of range {}", self.cols)));
        }
        let mut out = BinaryMatrix::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                if self.get(i, c) {
                    out.set(i, j, true);
                }
            }
        }
        Ok(out)
    }

    /// Restriction of row `i` to `cols`, packed little-endian into `W` words.
    pub(crate) fn pack_row<const W: usize>(&self, i: usize, cols: &[usize]) -> [u64; W] {
        let mut out = [0u64; W];
        for (j, &c) in cols.iter().enumerate() {
            if self.get(i, c) {
                out[j / 64] |= 1 << (j % 64);
            }
        }
        out
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {}", self.row_string(i))?;
        }
        Ok(())
    }
}

/// Binary image of a ring generator matrix: for every row `r` the images of
/// `r` and `delta * r`, stacked. A codeword `x` maps to the concatenation of
/// the first Gray coordinates of all entries followed by the second ones.
/// Over F2 the matrix is returned as is.
pub fn gray_lift(g: &RingMatrix) -> BinaryMatrix {
    let alphabet = g.alphabet();
    let m = g.cols();
    let Some(delta) = alphabet.delta() else {
        let mut out = BinaryMatrix::zeros(g.rows(), m);
        for i in 0..g.rows() {
            for (j, &s) in g.row_syms(i).iter().enumerate() {
                out.set(i, j, s == 1);
            }
        }
        return out;
    };
    let mut out = BinaryMatrix::zeros(2 * g.rows(), 2 * m);
    for i in 0..g.rows() {
        for (j, &s) in g.row_syms(i).iter().enumerate() {
            for (k, sym) in [s, alphabet.mul_sym(delta.sym(), s)].into_iter().enumerate() {
                let (x, y) = alphabet.gray_sym(sym);
                out.set(2 * i + k, j, x == 1);
                out.set(2 * i + k, m + j, y == 1);
            }
        }
    }
    out
}

/// Column order of a lifted matrix that puts the images of the left half of
/// the ring coordinates first. Identity over F2.
pub fn half_grouped_order(alphabet: Alphabet, ring_cols: usize) -> Vec<usize> {
    if !alphabet.has_gray_map() {
        return (0..ring_cols).collect();
    }
    let m = ring_cols;
    let h = m / 2;
    (0..h)
        .chain(m..m + h)
        .chain(h..m)
        .chain(m + h..2 * m)
        .collect()
}
