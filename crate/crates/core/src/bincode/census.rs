//! Exact low-weight codeword counts for codes of rate 1/2 with two disjoint
//! information sets.
//!
//! A codeword of weight at most `2t + 1` has weight at most `t` on one of the
//! two information sets, so enumerating all messages of weight at most `t` in
//! both systematic forms reaches it. Words reached from both sides are counted
//! only on the first side.

use rayon::prelude::*;

use super::code::BinaryCode;
use crate::error::{Error, Result};

/// Enumeration limits for [`BinaryCode::census`].
#[derive(Debug, Clone, Copy)]
pub struct CensusOptions {
    /// Maximum number of message combinations, summed over both halves.
    pub budget: u128,
}

impl CensusOptions {
    pub const DEFAULT_BUDGET: u128 = 10_000_000_000;

    pub fn unlimited() -> Self {
        CensusOptions { budget: u128::MAX }
    }
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            budget: Self::DEFAULT_BUDGET,
        }
    }
}

/// Exact counts `A_w` for `w <= max_weight`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Census {
    pub counts: Vec<u64>,
    /// Message weight enumerated on each side.
    pub t: usize,
}

impl Census {
    pub fn max_weight(&self) -> usize {
        self.counts.len() - 1
    }

    /// Largest weight with exact coverage, `2t + 1`.
    pub fn radius(&self) -> usize {
        2 * self.t + 1
    }

    pub fn count(&self, w: usize) -> Option<u64> {
        self.counts.get(w).copied()
    }

    pub fn min_nonzero_weight(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&w| self.counts[w] > 0)
    }

    /// `(w, A_w)` for every nonzero count.
    pub fn nonzero(&self) -> Vec<(usize, u64)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c > 0)
            .map(|(w, &c)| (w, c))
            .collect()
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Message combinations enumerated by a census with parameter `t` on a code
/// of dimension `k`.
pub fn census_cost(k: usize, t: usize) -> u128 {
    2 * (0..=t).map(|i| binomial(k, i)).sum::<u128>()
}

/// Histogram `hist[s * (k + 1) + p]` of subsets of size `s <= t` whose XOR of
/// packed rows has popcount `p`.
fn histogram<const W: usize>(rows: &[[u64; W]], t: usize) -> Vec<u64> {
    let k = rows.len();
    let stride = k + 1;
    let mut hist = if t == 0 || k == 0 {
        vec![0u64; (t + 1) * stride]
    } else {
        (0..k)
            .into_par_iter()
            .map(|i| {
                let mut h = vec![0u64; (t + 1) * stride];
                h[stride + popcount(&rows[i])] += 1;
                dfs(rows, i + 1, 1, rows[i], t, stride, &mut h);
                h
            })
            .reduce(
                || vec![0u64; (t + 1) * stride],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
    };
    hist[0] += 1;
    hist
}

#[inline(always)]
fn popcount<const W: usize>(x: &[u64; W]) -> usize {
    x.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline(always)]
fn xor<const W: usize>(a: &[u64; W], b: &[u64; W]) -> [u64; W] {
    let mut out = [0u64; W];
    for i in 0..W {
        out[i] = a[i] ^ b[i];
    }
    out
}

fn dfs<const W: usize>(
    rows: &[[u64; W]],
    start: usize,
    s: usize,
    acc: [u64; W],
    t: usize,
    stride: usize,
    hist: &mut [u64],
) {
    if s == t {
        return;
    }
    let base = (s + 1) * stride;
    if s + 1 == t {
        let h = &mut hist[base..base + stride];
        for r in &rows[start..] {
            h[popcount(&xor(&acc, r))] += 1;
        }
        return;
    }
    for j in start..rows.len() {
        let a = xor(&acc, &rows[j]);
        hist[base + popcount(&a)] += 1;
        dfs(rows, j + 1, s + 1, a, t, stride, hist);
    }
}

/// Whether some subset of size `1..=t` has `s + popcount < bound`, stopping at
/// the first one.
fn any_below<const W: usize>(rows: &[[u64; W]], start: usize, s: usize, acc: [u64; W], t: usize, bound: usize) -> bool {
    if s == t {
        return false;
    }
    for j in start..rows.len() {
        let a = xor(&acc, &rows[j]);
        if s + 1 + popcount(&a) < bound || any_below(rows, j + 1, s + 1, a, t, bound) {
            return true;
        }
    }
    false
}

/// The two sides of the census: for each, the systematic rows restricted to
/// the opposite coordinates.
struct Halves {
    k: usize,
    a: Vec<usize>,
    b: Vec<usize>,
}

impl BinaryCode {
    fn halves(&self) -> Result<Halves> {
        let k = self.dimension();
        if self.length() != 2 * k {
            return Err(Error::Shape(format!(
                "census needs length 2k, got [{}, {k}]",
                self.length()
            )));
        }
        let (_, b) = self
            .second_form()
            .ok_or(Error::NotInformationSet("complementary to the first pivots"))?;
        Ok(Halves {
            k,
            a: self.information_set().to_vec(),
            b: b.to_vec(),
        })
    }

    fn packed<const W: usize>(&self, side_b: bool, h: &Halves) -> Vec<[u64; W]> {
        if side_b {
            let (m, _) = self.second_form().expect("checked by halves()");
            (0..h.k).map(|i| m.pack_row::<W>(i, &h.a)).collect()
        } else {
            (0..h.k).map(|i| self.generator().pack_row::<W>(i, &h.b)).collect()
        }
    }

    fn census_w<const W: usize>(&self, h: &Halves, t: usize, w_max: usize) -> Census {
        let stride = h.k + 1;
        let mut counts = vec![0u64; w_max + 1];
        for side_b in [false, true] {
            let hist = histogram(&self.packed::<W>(side_b, h), t);
            for s in 0..=t {
                for p in 0..stride {
                    let w = s + p;
                    // words with at most t ones on side A were counted there
                    if w <= w_max && (!side_b || p > t) {
                        counts[w] += hist[s * stride + p];
                    }
                }
            }
        }
        Census { counts, t }
    }

    /// Exact `A_w` for all `w <= w_max`, enumerating messages of weight at
    /// most `floor(w_max / 2)` in both systematic forms.
    pub fn census(&self, w_max: usize, opts: CensusOptions) -> Result<Census> {
        let h = self.halves()?;
        let t = w_max / 2;
        let needed = census_cost(h.k, t);
        if needed > opts.budget {
            return Err(Error::BudgetExceeded {
                max_weight: w_max,
                needed,
                budget: opts.budget,
            });
        }
        match h.k.div_ceil(64) {
            0 | 1 => Ok(self.census_w::<1>(&h, t, w_max)),
            2 => Ok(self.census_w::<2>(&h, t, w_max)),
            3 => Ok(self.census_w::<3>(&h, t, w_max)),
            4 => Ok(self.census_w::<4>(&h, t, w_max)),
            _ => Err(Error::Shape(format!("census supports dimension up to 256, got {}", h.k))),
        }
    }

    /// The minimum distance, certified by a census of radius at least
    /// `claimed_d`. Fails when no nonzero codeword lies within that radius.
    pub fn min_distance(&self, claimed_d: usize, opts: CensusOptions) -> Result<usize> {
        let census = self.census(claimed_d, opts)?;
        census.min_nonzero_weight().ok_or(Error::CoverageInsufficient {
            claimed: claimed_d,
            radius: census.radius(),
        })
    }

    /// Cheap one-sided screen: whether a nonzero codeword of weight below
    /// `bound` has at most `floor(bound / 2)` ones on the first information
    /// set. A `false` answer does not certify the distance.
    pub fn screen_below(&self, bound: usize) -> Result<bool> {
        let h = self.halves()?;
        let t = (bound / 2).min(h.k);
        Ok(match h.k.div_ceil(64) {
            0 | 1 => any_below::<1>(&self.packed(false, &h), 0, 0, [0; 1], t, bound),
            2 => any_below::<2>(&self.packed(false, &h), 0, 0, [0; 2], t, bound),
            3 => any_below::<3>(&self.packed(false, &h), 0, 0, [0; 3], t, bound),
            4 => any_below::<4>(&self.packed(false, &h), 0, 0, [0; 4], t, bound),
            _ => return Err(Error::Shape(format!("screen supports dimension up to 256, got {}", h.k))),
        })
    }
}

/// Weight distribution of every codeword, by walking all `2^k` messages in
/// Gray-code order. Only sensible for small `k`.
pub fn full_weight_distribution(code: &BinaryCode) -> Vec<u64> {
    let g = code.generator();
    let n = code.length();
    let k = code.dimension();
    let words = n.div_ceil(64).max(1);
    let mut acc = vec![0u64; words];
    let mut dist = vec![0u64; n + 1];
    dist[0] = 1;
    for i in 1u64..(1u64 << k) {
        let row = i.trailing_zeros() as usize;
        for (a, r) in acc.iter_mut().zip(g.row_words(row)) {
            *a ^= r;
        }
        dist[acc.iter().map(|w| w.count_ones() as usize).sum::<usize>()] += 1;
    }
    dist
}
