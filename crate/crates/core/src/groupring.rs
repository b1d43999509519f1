//! Finite groups with fixed element listings, group-ring elements, the
//! `sigma` matrix and composite matrices built from a group and a family of
//! subgroup-sized index patterns.
//!
//! Group elements are identified with their position in the listing (0-based
//! internally). Every family precomputes a full product table, so the index of
//! `g_i^{-1} g_j` is a table lookup.

use std::fmt;
use std::sync::Arc;

use crate::alphabet::{Alphabet, RingElement};
use crate::error::{Error, Result};
use crate::ringmat::RingMatrix;

/// How a group is presented and how its elements are listed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupFamily {
    /// `C_n = <c>`, listing `g_{i+1} = c^i`.
    Cyclic(usize),
    /// `D_m = <a, b | a^m = b^2 = 1, bab = a^{-1}>` of order `2m`,
    /// listing `g_{mj+i+1} = a^i b^j`.
    Dihedral(usize),
    /// `C_m x C_k = <a, b>`, listing `g_{mj+i+1} = a^i b^j`.
    DirectProductCyclic(usize, usize),
    /// `C_{s*k} = <c>` with the interleaved listing `h_{kj+i+1} = c^{s*i+j}`
    /// for `i < k`, `j < s`.
    CyclicInterleaved(usize, usize),
}

impl GroupFamily {
    pub fn order(self) -> usize {
        match self {
            GroupFamily::Cyclic(n) => n,
            GroupFamily::Dihedral(m) => 2 * m,
            GroupFamily::DirectProductCyclic(m, k) | GroupFamily::CyclicInterleaved(m, k) => m * k,
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupFamily::Cyclic(n) => write!(f, "C{n}"),
            GroupFamily::Dihedral(m) => write!(f, "D{m}"),
            GroupFamily::DirectProductCyclic(m, k) => write!(f, "C{m}xC{k}"),
            GroupFamily::CyclicInterleaved(s, k) => write!(f, "C({s}*{k})"),
        }
    }
}

/// A finite group with a fixed listing, stored as its product table.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupSpec {
    family: Option<GroupFamily>,
    order: usize,
    product: Vec<u16>,
    inverse: Vec<u16>,
}

impl fmt::Debug for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Some(fam) => write!(f, "GroupSpec({fam})"),
            None => write!(f, "GroupSpec(table, order {})", self.order),
        }
    }
}

impl GroupSpec {
    pub fn new(family: GroupFamily) -> Result<Self> {
        let n = family.order();
        if n == 0 {
            return Err(Error::InvalidGroup(format!("{family} has order 0")));
        }
        if n > u16::MAX as usize {
            return Err(Error::InvalidGroup(format!("{family} is too large")));
        }
        let mul = |x: usize, y: usize| -> usize {
            match family {
                GroupFamily::Cyclic(n) => (x + y) % n,
                GroupFamily::Dihedral(m) => {
                    let (i1, j1) = (x % m, x / m);
                    let (i2, j2) = (y % m, y / m);
                    // a^i1 b^j1 a^i2 b^j2 = a^(i1 +- i2) b^(j1+j2)
                    let i = if j1 == 0 { (i1 + i2) % m } else { (i1 + m - i2) % m };
                    m * ((j1 + j2) % 2) + i
                }
                GroupFamily::DirectProductCyclic(m, k) => {
                    let i = (x % m + y % m) % m;
                    let j = (x / m + y / m) % k;
                    m * j + i
                }
                GroupFamily::CyclicInterleaved(s, k) => {
                    let exp = |idx: usize| s * (idx % k) + idx / k;
                    let e = (exp(x) + exp(y)) % (s * k);
                    k * (e % s) + e / s
                }
            }
        };
        let mut product = vec![0u16; n * n];
        for x in 0..n {
            for y in 0..n {
                product[x * n + y] = mul(x, y) as u16;
            }
        }
        let mut g = Self::from_table(n, product)?;
        g.family = Some(family);
        Ok(g)
    }

    /// A group given by an explicit product table over listing indices
    /// `0..order`. The table must satisfy the group axioms with index 0 as
    /// the identity; anything else is rejected.
    pub fn from_table(order: usize, product: Vec<u16>) -> Result<Self> {
        if product.len() != order * order || order == 0 {
            return Err(Error::InvalidGroup("product table has the wrong size".into()));
        }
        let at = |x: usize, y: usize| product[x * order + y] as usize;
        if product.iter().any(|&p| p as usize >= order) {
            return Err(Error::InvalidGroup("product out of range".into()));
        }
        for x in 0..order {
            if at(0, x) != x || at(x, 0) != x {
                return Err(Error::InvalidGroup("listing index 1 is not the identity".into()));
            }
        }
        let mut inverse = vec![0u16; order];
        for x in 0..order {
            let inv = (0..order)
                .find(|&y| at(x, y) == 0)
                .ok_or_else(|| Error::InvalidGroup(format!("element {} has no inverse", x + 1)))?;
            if at(inv, x) != 0 {
                return Err(Error::InvalidGroup("left and right inverses differ".into()));
            }
            inverse[x] = inv as u16;
        }
        for x in 0..order {
            for y in 0..order {
                for z in 0..order {
                    if at(at(x, y), z) != at(x, at(y, z)) {
                        return Err(Error::InvalidGroup("product is not associative".into()));
                    }
                }
            }
        }
        Ok(GroupSpec {
            family: None,
            order,
            product,
            inverse,
        })
    }

    pub fn family(&self) -> Option<GroupFamily> {
        self.family
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Index of `g_x g_y` (0-based).
    #[inline]
    pub fn product(&self, x: usize, y: usize) -> usize {
        self.product[x * self.order + y] as usize
    }

    #[inline]
    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x] as usize
    }

    /// Index of `g_x^{-1} g_y` (0-based).
    #[inline]
    pub fn left_quotient(&self, x: usize, y: usize) -> usize {
        self.product(self.inverse(x), y)
    }

    /// The table `M_H` of listing indices `l` with `h_l = h_i^{-1} h_j`,
    /// 1-based as printed in the literature.
    pub fn mh_table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.left_quotient(i, j) + 1).collect())
            .collect()
    }
}

/// `v = sum alpha_{g_i} g_i` in the group ring `R G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingVector {
    group: Arc<GroupSpec>,
    coeffs: Vec<RingElement>,
}

impl GroupRingVector {
    pub fn new(group: Arc<GroupSpec>, coeffs: Vec<RingElement>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return Err(Error::Shape(format!(
                "{} coefficients for a group of order {}",
                coeffs.len(),
                group.order()
            )));
        }
        if let Some(first) = coeffs.first() {
            for c in &coeffs {
                first.alphabet().ensure_same(c.alphabet())?;
            }
        }
        Ok(GroupRingVector { group, coeffs })
    }

    /// The identity of the group ring: coefficient 1 on `g_1`.
    pub fn one(group: Arc<GroupSpec>, alphabet: Alphabet) -> Self {
        let mut coeffs = vec![RingElement::zero(alphabet); group.order()];
        coeffs[0] = RingElement::one(alphabet);
        GroupRingVector { group, coeffs }
    }

    pub fn group(&self) -> &Arc<GroupSpec> {
        &self.group
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn alphabet(&self) -> Alphabet {
        self.coeffs[0].alphabet()
    }

    fn check_group(&self, other: &GroupRingVector) -> Result<()> {
        if self.group != other.group {
            return Err(Error::InvalidGroup("group ring elements over different groups".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupRingVector) -> Result<GroupRingVector> {
        self.check_group(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(*b))
            .collect::<Result<_>>()?;
        Ok(GroupRingVector {
            group: self.group.clone(),
            coeffs,
        })
    }

    /// Convolution product: the coefficient of `g_k` is the sum of
    /// `alpha_{g_i} beta_{g_j}` over `g_i g_j = g_k`.
    pub fn mul(&self, other: &GroupRingVector) -> Result<GroupRingVector> {
        self.check_group(other)?;
        let alphabet = self.alphabet();
        alphabet.ensure_same(other.alphabet())?;
        let n = self.group.order();
        let mut out = vec![0u8; n];
        for i in 0..n {
            let a = self.coeffs[i].sym();
            if a == 0 {
                continue;
            }
            for j in 0..n {
                out[self.group.product(i, j)] ^= alphabet.mul_sym(a, other.coeffs[j].sym());
            }
        }
        let coeffs = out
            .into_iter()
            .map(|s| RingElement::new(alphabet, s))
            .collect::<Result<_>>()?;
        Ok(GroupRingVector {
            group: self.group.clone(),
            coeffs,
        })
    }
}

/// `sigma(v)`: entry `(i, j)` is `alpha_{g_i^{-1} g_j}`.
pub fn sigma(v: &GroupRingVector) -> RingMatrix {
    let g = v.group();
    let n = g.order();
    let mut m = RingMatrix::zeros(v.alphabet(), n, n);
    for i in 0..n {
        for j in 0..n {
            m.set_sym(i, j, v.coeffs[g.left_quotient(i, j)].sym());
        }
    }
    m
}

/// The data `(G, H_1..H_eta, H', P')` that determines a composite matrix.
#[derive(Debug, Clone)]
pub struct CompositeSpec {
    g: Arc<GroupSpec>,
    r: usize,
    hs: Vec<GroupSpec>,
    /// `m x m`, 1-based indices into `hs`.
    h_prime: Vec<usize>,
    /// `m x m` selector: false picks the G-block, true the H-patterned block.
    p_prime: Vec<bool>,
}

impl CompositeSpec {
    pub fn new(
        g: Arc<GroupSpec>,
        r: usize,
        hs: Vec<GroupSpec>,
        h_prime: Vec<usize>,
        p_prime: Vec<bool>,
    ) -> Result<Self> {
        let n = g.order();
        if r <= 1 || r >= n || n % r != 0 {
            return Err(Error::InvalidComposite(format!(
                "block size {r} must be a proper divisor of {n} greater than 1"
            )));
        }
        let m = n / r;
        if hs.is_empty() {
            return Err(Error::InvalidComposite("no H groups".into()));
        }
        if let Some(h) = hs.iter().find(|h| h.order() != r) {
            return Err(Error::InvalidComposite(format!(
                "H group of order {} in a spec with block size {r}",
                h.order()
            )));
        }
        if h_prime.len() != m * m || p_prime.len() != m * m {
            return Err(Error::InvalidComposite(format!("H' and P' must be {m}x{m}")));
        }
        if let Some(&t) = h_prime.iter().find(|&&t| t == 0 || t > hs.len()) {
            return Err(Error::InvalidComposite(format!(
                "H' entry {t} outside 1..={}",
                hs.len()
            )));
        }
        Ok(CompositeSpec {
            g,
            r,
            hs,
            h_prime,
            p_prime,
        })
    }

    /// The common case `H' = 1`, `P' = 1` with a single `H`.
    pub fn all_ones(g: Arc<GroupSpec>, h: GroupSpec) -> Result<Self> {
        let r = h.order();
        let m = g.order() / r.max(1);
        Self::new(g, r, vec![h], vec![1; m * m], vec![true; m * m])
    }

    pub fn group(&self) -> &Arc<GroupSpec> {
        &self.g
    }

    pub fn block_size(&self) -> usize {
        self.r
    }

    pub fn blocks_per_side(&self) -> usize {
        self.g.order() / self.r
    }

    pub fn h_groups(&self) -> &[GroupSpec] {
        &self.hs
    }

    /// Same spec with `P'` set to zero, so the composite matrix is `sigma(v)`.
    pub fn with_zero_selector(&self) -> CompositeSpec {
        CompositeSpec {
            p_prime: vec![false; self.p_prime.len()],
            ..self.clone()
        }
    }
}

/// The composite matrix `Omega(v)`.
///
/// Block `(y, z)` is `Z_{y,z}` (entries `alpha_{g_{r y + i}^{-1} g_{r z + j}}`)
/// when `P'_{y,z} = 0`, and otherwise `Z'_{t:y,z}` with entries
/// `alpha_{g_{r y}^{-1} g_{r z + M_{H_t}(i,j)}}` where `t = H'_{y,z}`.
pub fn composite_omega(v: &GroupRingVector, spec: &CompositeSpec) -> Result<RingMatrix> {
    if **v.group() != *spec.g {
        return Err(Error::InvalidComposite(
            "vector and spec are over different groups".into(),
        ));
    }
    let g = &spec.g;
    let n = g.order();
    let r = spec.r;
    let m = n / r;
    let mh: Vec<Vec<usize>> = spec
        .hs
        .iter()
        .map(|h| {
            (0..r * r)
                .map(|idx| h.left_quotient(idx / r, idx % r))
                .collect()
        })
        .collect();
    let mut out = RingMatrix::zeros(v.alphabet(), n, n);
    for y in 0..m {
        for z in 0..m {
            let sel = y * m + z;
            for i in 0..r {
                for j in 0..r {
                    let k = if spec.p_prime[sel] {
                        let t = spec.h_prime[sel] - 1;
                        g.left_quotient(r * y, r * z + mh[t][i * r + j])
                    } else {
                        g.left_quotient(r * y + i, r * z + j)
                    };
                    out.set_sym(r * y + i, r * z + j, v.coeffs[k].sym());
                }
            }
        }
    }
    Ok(out)
}
