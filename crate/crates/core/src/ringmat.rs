//! Dense matrices over one [`Alphabet`], with the circulant family of
//! constructors and the column-rotation ("star") transform.

use std::fmt;

use crate::alphabet::{Alphabet, RingElement};
use crate::error::{Error, Result};

/// Dense row-major matrix whose entries are symbols of a single alphabet.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingMatrix {
    alphabet: Alphabet,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl RingMatrix {
    pub fn zeros(alphabet: Alphabet, rows: usize, cols: usize) -> Self {
        RingMatrix {
            alphabet,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(alphabet: Alphabet, n: usize) -> Self {
        let mut m = Self::zeros(alphabet, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from raw symbols, validating each against the alphabet.
    pub fn from_symbols(alphabet: Alphabet, rows: usize, cols: usize, data: Vec<u8>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} symbols for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        for &s in &data {
            alphabet.check_sym(s)?;
        }
        Ok(RingMatrix {
            alphabet,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(rows: &[Vec<RingElement>]) -> Result<Self> {
        let first = rows.first().ok_or(Error::Empty("matrix rows"))?;
        let alphabet = first.first().ok_or(Error::Empty("matrix row"))?.alphabet();
        let cols = first.len();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::Shape("ragged rows".into()));
            }
            for e in row {
                alphabet.ensure_same(e.alphabet())?;
                data.push(e.sym());
            }
        }
        Ok(RingMatrix {
            alphabet,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn sym(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    pub fn get(&self, i: usize, j: usize) -> RingElement {
        RingElement::new(self.alphabet, self.sym(i, j)).expect("entries are validated")
    }

    pub fn set(&mut self, i: usize, j: usize, e: RingElement) -> Result<()> {
        self.alphabet.ensure_same(e.alphabet())?;
        self.data[i * self.cols + j] = e.sym();
        Ok(())
    }

    pub(crate) fn set_sym(&mut self, i: usize, j: usize, s: u8) {
        self.data[i * self.cols + j] = s;
    }

    pub fn row(&self, i: usize) -> Vec<RingElement> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    pub(crate) fn row_syms(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn check_same_shape(&self, other: &RingMatrix) -> Result<()> {
        self.alphabet.ensure_same(other.alphabet)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a ^ b).collect();
        Ok(RingMatrix {
            alphabet: self.alphabet,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn matmul(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.alphabet.ensure_same(other.alphabet)?;
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let a = self.alphabet;
        let mut out = RingMatrix::zeros(a, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let x = self.sym(i, l);
                if x == 0 {
                    continue;
                }
                let orow = other.row_syms(l);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &y) in dst.iter_mut().zip(orow) {
                    *d ^= a.mul_sym(x, y);
                }
            }
        }
        Ok(out)
    }

    /// `self * other^T` without materialising the transpose.
    pub fn mul_transpose(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.alphabet.ensure_same(other.alphabet)?;
        if self.cols != other.cols {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by transpose of {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let a = self.alphabet;
        let mut out = RingMatrix::zeros(a, self.rows, other.rows);
        for i in 0..self.rows {
            let x = self.row_syms(i);
            for j in 0..other.rows {
                let y = other.row_syms(j);
                out.data[i * other.rows + j] =
                    x.iter().zip(y).fold(0, |acc, (&p, &q)| acc ^ a.mul_sym(p, q));
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> RingMatrix {
        let mut out = RingMatrix::zeros(self.alphabet, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.sym(i, j);
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.sym(i, j) == u8::from(i == j)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&s| s == 0)
    }

    /// Columns cyclically shifted right by one position.
    pub fn star(&self) -> Result<RingMatrix> {
        if !self.is_square() || self.rows < 2 {
            return Err(Error::Shape(format!(
                "star needs a square matrix of size >= 2, got {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.cols;
        let mut out = RingMatrix::zeros(self.alphabet, n, n);
        for i in 0..n {
            for j in 0..n {
                out.data[i * n + (j + 1) % n] = self.sym(i, j);
            }
        }
        Ok(out)
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &RingMatrix) -> Result<RingMatrix> {
        self.alphabet.ensure_same(other.alphabet)?;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = RingMatrix::zeros(self.alphabet, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.sym(i, j);
                if x == 0 {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        out.data[(i * other.rows + p) * c + j * other.cols + q] =
                            self.alphabet.mul_sym(x, other.sym(p, q));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Copy of the `height x width` submatrix whose top-left entry is `(row, col)`.
    pub fn submatrix(&self, row: usize, col: usize, height: usize, width: usize) -> Result<RingMatrix> {
        if row + height > self.rows || col + width > self.cols {
            return Err(Error::Shape("submatrix out of range".into()));
        }
        let mut out = RingMatrix::zeros(self.alphabet, height, width);
        for i in 0..height {
            out.data[i * width..(i + 1) * width]
                .copy_from_slice(&self.data[(row + i) * self.cols + col..(row + i) * self.cols + col + width]);
        }
        Ok(out)
    }

    /// Assembles a block matrix from a grid of blocks. Blocks in one grid row
    /// share a height, blocks in one grid column share a width.
    pub fn from_blocks(grid: &[Vec<&RingMatrix>]) -> Result<RingMatrix> {
        let first = grid
            .first()
            .and_then(|r| r.first())
            .ok_or(Error::Empty("block grid"))?;
        let alphabet = first.alphabet;
        let widths: Vec<usize> = grid[0].iter().map(|b| b.cols).collect();
        let heights: Vec<usize> = grid.iter().map(|r| r[0].rows).collect();
        let total_cols: usize = widths.iter().sum();
        let total_rows: usize = heights.iter().sum();
        let mut out = RingMatrix::zeros(alphabet, total_rows, total_cols);
        let mut r0 = 0;
        for (bi, brow) in grid.iter().enumerate() {
            if brow.len() != widths.len() {
                return Err(Error::Shape("ragged block grid".into()));
            }
            let mut c0 = 0;
            for (bj, b) in brow.iter().enumerate() {
                alphabet.ensure_same(b.alphabet)?;
                if b.rows != heights[bi] || b.cols != widths[bj] {
                    return Err(Error::Shape(format!("block ({bi},{bj}) has the wrong shape")));
                }
                for i in 0..b.rows {
                    out.data[(r0 + i) * total_cols + c0..(r0 + i) * total_cols + c0 + b.cols]
                        .copy_from_slice(b.row_syms(i));
                }
                c0 += b.cols;
            }
            r0 += heights[bi];
        }
        Ok(out)
    }
}

impl fmt::Debug for RingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RingMatrix<{}> {}x{}", self.alphabet, self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: String = self.row_syms(i).iter().map(|&s| char::from(b'0' + s)).collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// `cir(a_0, ..., a_{n-1})`: row `i + 1` is row `i` shifted right by one.
pub fn circulant(first_row: &[RingElement]) -> Result<RingMatrix> {
    let first = first_row.first().ok_or(Error::Empty("circulant row"))?;
    let alphabet = first.alphabet();
    let n = first_row.len();
    let mut syms = Vec::with_capacity(n);
    for e in first_row {
        alphabet.ensure_same(e.alphabet())?;
        syms.push(e.sym());
    }
    let mut m = RingMatrix::zeros(alphabet, n, n);
    for i in 0..n {
        for j in 0..n {
            m.data[i * n + j] = syms[(j + n - i) % n];
        }
    }
    Ok(m)
}

/// `CIR(A_0, ..., A_{k-1})`: block row `i + 1` is block row `i` shifted right by one block.
pub fn block_circulant(blocks: &[RingMatrix]) -> Result<RingMatrix> {
    let k = blocks.len();
    if k == 0 {
        return Err(Error::Empty("block circulant"));
    }
    let grid: Vec<Vec<&RingMatrix>> = (0..k)
        .map(|y| (0..k).map(|z| &blocks[(z + k - y) % k]).collect())
        .collect();
    RingMatrix::from_blocks(&grid)
}

/// The cyclic shift permutation `P = [[0, I_{n-1}], [1, 0]]`, so that `A * P` is
/// `A` with its columns rotated right by one.
pub fn shift_perm(alphabet: Alphabet, n: usize) -> Result<RingMatrix> {
    if n < 2 {
        return Err(Error::Shape(format!("shift permutation needs n >= 2, got {n}")));
    }
    let mut p = RingMatrix::zeros(alphabet, n, n);
    for i in 0..n {
        p.set_sym(i, (i + 1) % n, 1);
    }
    Ok(p)
}

/// The `n x n` exchange matrix (anti-diagonal identity).
pub fn exchange(alphabet: Alphabet, n: usize) -> RingMatrix {
    let mut j = RingMatrix::zeros(alphabet, n, n);
    for i in 0..n {
        j.set_sym(i, n - 1 - i, 1);
    }
    j
}
