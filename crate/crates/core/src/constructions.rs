//! The seven named constructions: their block displays of `Omega(v)`, the
//! equivalent block-equation systems, and the generator matrix `(I | Omega)`.
//!
//! Vector slices follow the 1-based convention `v_{i:j}`, read backwards when
//! `i > j`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::alphabet::{Alphabet, RingElement};
use crate::error::{Error, Result};
use crate::groupring::{CompositeSpec, GroupFamily, GroupRingVector, GroupSpec};
use crate::ringmat::{block_circulant, circulant, RingMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstructionId {
    Omega20_1,
    Omega20_2,
    Omega42_1,
    Omega42_2,
    Omega24_1,
    Omega24_2,
    Omega24_3,
}

impl ConstructionId {
    pub const ALL: [ConstructionId; 7] = [
        ConstructionId::Omega20_1,
        ConstructionId::Omega20_2,
        ConstructionId::Omega42_1,
        ConstructionId::Omega42_2,
        ConstructionId::Omega24_1,
        ConstructionId::Omega24_2,
        ConstructionId::Omega24_3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstructionId::Omega20_1 => "20.1",
            ConstructionId::Omega20_2 => "20.2",
            ConstructionId::Omega42_1 => "42.1",
            ConstructionId::Omega42_2 => "42.2",
            ConstructionId::Omega24_1 => "24.1",
            ConstructionId::Omega24_2 => "24.2",
            ConstructionId::Omega24_3 => "24.3",
        }
    }

    /// Length of `v`, which is also the side of `Omega(v)`.
    pub fn half_length(self) -> usize {
        match self {
            ConstructionId::Omega20_1 | ConstructionId::Omega20_2 => 20,
            ConstructionId::Omega42_1 | ConstructionId::Omega42_2 => 42,
            _ => 24,
        }
    }

    /// Side of the square blocks the condition system works with.
    pub fn block_size(self) -> usize {
        match self {
            ConstructionId::Omega20_1 | ConstructionId::Omega20_2 => 5,
            ConstructionId::Omega42_1 | ConstructionId::Omega42_2 => 7,
            ConstructionId::Omega24_1 => 3,
            _ => 6,
        }
    }

    /// Alphabets the construction is tabulated over.
    pub fn usual_alphabets(self) -> &'static [Alphabet] {
        match self {
            ConstructionId::Omega42_1 | ConstructionId::Omega42_2 => &[Alphabet::F2],
            _ => &[Alphabet::F2U, Alphabet::F4],
        }
    }

    /// The pair `(G, H)` realizing this construction as a composite matrix.
    pub fn groups(self) -> (GroupFamily, GroupFamily) {
        use GroupFamily::*;
        match self {
            ConstructionId::Omega20_1 => (Dihedral(10), Dihedral(5)),
            ConstructionId::Omega20_2 => (DirectProductCyclic(5, 4), Dihedral(5)),
            ConstructionId::Omega42_1 => (Dihedral(21), DirectProductCyclic(7, 3)),
            ConstructionId::Omega42_2 => (Dihedral(21), CyclicInterleaved(3, 7)),
            ConstructionId::Omega24_1 => (DirectProductCyclic(12, 2), Dihedral(3)),
            ConstructionId::Omega24_2 => (Dihedral(12), CyclicInterleaved(2, 6)),
            ConstructionId::Omega24_3 => (Dihedral(12), Dihedral(6)),
        }
    }

    /// Composite spec with `H' = 1` and `P' = 1`.
    pub fn composite_spec(self) -> CompositeSpec {
        let (g, h) = self.groups();
        let g = Arc::new(GroupSpec::new(g).expect("shipped group"));
        let h = GroupSpec::new(h).expect("shipped group");
        CompositeSpec::all_ones(g, h).expect("shipped spec")
    }

    fn check_len(self, v: &[RingElement]) -> Result<Alphabet> {
        if v.len() != self.half_length() {
            return Err(Error::WrongLength {
                construction: self.name(),
                expected: self.half_length(),
                got: v.len(),
            });
        }
        let alphabet = v[0].alphabet();
        for e in v {
            alphabet.ensure_same(e.alphabet())?;
        }
        Ok(alphabet)
    }
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConstructionId::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::UnknownConstruction(s.to_string()))
    }
}

/// `v_{i:j}`, 1-based and inclusive, reversed when `i > j`.
fn seg(v: &[RingElement], i: usize, j: usize) -> Vec<RingElement> {
    if i <= j {
        v[i - 1..j].to_vec()
    } else {
        (j..=i).rev().map(|k| v[k - 1]).collect()
    }
}

fn cir(v: &[RingElement], i: usize, j: usize) -> RingMatrix {
    circulant(&seg(v, i, j)).expect("nonempty slice")
}

/// `cir(v_lead, v_{i:j})`.
fn cir_lead(v: &[RingElement], lead: usize, i: usize, j: usize) -> RingMatrix {
    let mut row = vec![v[lead - 1]];
    row.extend(seg(v, i, j));
    circulant(&row).expect("nonempty slice")
}

fn grid(rows: &[Vec<&RingMatrix>]) -> RingMatrix {
    RingMatrix::from_blocks(rows).expect("blocks conform")
}

fn t(a: &RingMatrix) -> RingMatrix {
    a.transpose()
}

fn st(a: &RingMatrix) -> RingMatrix {
    a.star().expect("square block of side >= 2")
}

/// `sum x_i y_i^T`.
fn sum_abt(terms: &[(&RingMatrix, &RingMatrix)]) -> RingMatrix {
    let mut acc = terms[0].0.mul_transpose(terms[0].1).expect("conformant");
    for (x, y) in &terms[1..] {
        acc = acc.add(&x.mul_transpose(y).expect("conformant")).expect("conformant");
    }
    acc
}

/// Pairs `(x_i, y_{i+s})` for `i = 0, 1, 2`.
fn shifted<'a>(x: &'a [RingMatrix; 3], y: &'a [RingMatrix; 3], s: usize) -> Vec<(&'a RingMatrix, &'a RingMatrix)> {
    (0..3).map(|i| (&x[i], &y[(i + s) % 3])).collect()
}

/// `sum x_i y_i`.
fn sum_ab(terms: &[(&RingMatrix, &RingMatrix)]) -> RingMatrix {
    let mut acc = terms[0].0.matmul(terms[0].1).expect("conformant");
    for (x, y) in &terms[1..] {
        acc = acc.add(&x.matmul(y).expect("conformant")).expect("conformant");
    }
    acc
}

struct Blocks20_1 {
    a1: RingMatrix,
    b1: RingMatrix,
    c1: RingMatrix,
    d1: RingMatrix,
    a2: RingMatrix,
    b2: RingMatrix,
    c2: RingMatrix,
    d2: RingMatrix,
}

fn blocks20_1(v: &[RingElement]) -> Blocks20_1 {
    Blocks20_1 {
        a1: cir(v, 1, 5),
        b1: cir(v, 6, 10),
        c1: cir(v, 11, 15),
        d1: cir(v, 16, 20),
        a2: cir_lead(v, 1, 10, 7),
        b2: cir(v, 6, 2),
        c2: cir_lead(v, 11, 20, 17),
        d2: cir(v, 16, 12),
    }
}

/// `[A, B, C, D]` with consecutive 5-slices.
fn blocks20_2(v: &[RingElement]) -> [RingMatrix; 4] {
    [cir(v, 1, 5), cir(v, 6, 10), cir(v, 11, 15), cir(v, 16, 20)]
}

/// `(A, B, C, D)`, each a triple of 7x7 circulants.
type Triples = [[RingMatrix; 3]; 4];

fn blocks42(v: &[RingElement]) -> Triples {
    [
        [cir(v, 1, 7), cir(v, 8, 14), cir(v, 15, 21)],
        [cir(v, 22, 28), cir(v, 29, 35), cir(v, 36, 42)],
        [cir_lead(v, 22, 42, 37), cir(v, 36, 30), cir(v, 29, 23)],
        [cir_lead(v, 1, 21, 16), cir(v, 15, 9), cir(v, 8, 2)],
    ]
}

/// `[A1, A2, B1, B2, C1, C2, D1, D2]`, 3x3 circulants on consecutive slices.
fn blocks24_1(v: &[RingElement]) -> Vec<RingMatrix> {
    (0..8).map(|i| cir(v, 3 * i + 1, 3 * i + 3)).collect()
}

/// `[A1, A2, B1, B2, C1, C2, D1, D2]` shared by 24.2 and 24.3.
fn blocks24_23(v: &[RingElement]) -> Vec<RingMatrix> {
    vec![
        cir(v, 1, 6),
        cir(v, 7, 12),
        cir(v, 13, 18),
        cir(v, 19, 24),
        cir_lead(v, 13, 24, 20),
        cir(v, 19, 14),
        cir_lead(v, 1, 12, 8),
        cir(v, 7, 2),
    ]
}

/// `[[X1, X2, X3], [X3*, X1, X2], [X2*, X3*, X1]]`.
fn skew3(x: &[RingMatrix; 3]) -> RingMatrix {
    let s2 = st(&x[1]);
    let s3 = st(&x[2]);
    grid(&[
        vec![&x[0], &x[1], &x[2]],
        vec![&s3, &x[0], &x[1]],
        vec![&s2, &s3, &x[0]],
    ])
}

/// `[[X1, X2], [X2^T, X1^T]]`.
fn pair_block(x1: &RingMatrix, x2: &RingMatrix) -> RingMatrix {
    grid(&[vec![x1, x2], vec![&t(x2), &t(x1)]])
}

/// `Omega(v)` from the construction's block display.
pub fn build_omega(id: ConstructionId, v: &[RingElement]) -> Result<RingMatrix> {
    id.check_len(v)?;
    let omega = match id {
        ConstructionId::Omega20_1 => {
            let b = blocks20_1(v);
            grid(&[
                vec![&b.a1, &b.b1, &b.c1, &b.d1],
                vec![&t(&b.b1), &t(&b.a1), &t(&b.d1), &t(&b.c1)],
                vec![&b.c2, &b.d2, &b.a2, &b.b2],
                vec![&t(&b.d2), &t(&b.c2), &t(&b.b2), &t(&b.a2)],
            ])
        }
        ConstructionId::Omega20_2 => {
            let [a, b, c, d] = blocks20_2(v);
            grid(&[
                vec![&a, &b, &c, &d],
                vec![&t(&b), &t(&a), &t(&d), &t(&c)],
                vec![&c, &d, &a, &b],
                vec![&t(&d), &t(&c), &t(&b), &t(&a)],
            ])
        }
        ConstructionId::Omega42_1 => {
            let [a, b, c, d] = blocks42(v);
            let bc = |x: [RingMatrix; 3]| block_circulant(&x).expect("conformant");
            grid(&[vec![&bc(a), &bc(b)], vec![&bc(c), &bc(d)]])
        }
        ConstructionId::Omega42_2 => {
            let [a, b, c, d] = blocks42(v);
            grid(&[
                vec![&skew3(&a), &skew3(&b)],
                vec![&skew3(&c), &skew3(&d)],
            ])
        }
        ConstructionId::Omega24_1 => {
            let p = blocks24_1(v);
            let at = pair_block(&p[0], &p[1]);
            let bt = pair_block(&p[2], &p[3]);
            let ct = pair_block(&p[4], &p[5]);
            let dt = pair_block(&p[6], &p[7]);
            // I_2 (x) CIRC(A~, B~) + J_2 (x) CIRC(C~, D~)
            let x = block_circulant(&[at, bt]).expect("conformant");
            let y = block_circulant(&[ct, dt]).expect("conformant");
            grid(&[vec![&x, &y], vec![&y, &x]])
        }
        ConstructionId::Omega24_2 => {
            let p = blocks24_23(v);
            let [a1, a2, b1, b2, c1, c2, d1, d2] = [&p[0], &p[1], &p[2], &p[3], &p[4], &p[5], &p[6], &p[7]];
            grid(&[
                vec![a1, a2, b1, b2],
                vec![&st(a2), a1, &st(b2), b1],
                vec![c1, c2, d1, d2],
                vec![&st(c2), c1, &st(d2), d1],
            ])
        }
        ConstructionId::Omega24_3 => {
            let p = blocks24_23(v);
            let [a1, a2, b1, b2, c1, c2, d1, d2] = [&p[0], &p[1], &p[2], &p[3], &p[4], &p[5], &p[6], &p[7]];
            grid(&[
                vec![a1, a2, b1, b2],
                vec![&t(a2), &t(a1), &t(b2), &t(b1)],
                vec![c1, c2, d1, d2],
                vec![&t(c2), &t(c1), &t(d2), &t(d1)],
            ])
        }
    };
    Ok(omega)
}

/// Evaluates equations lazily and stops at the first failure.
struct Conditions {
    ok: bool,
}

impl Conditions {
    fn new() -> Self {
        Conditions { ok: true }
    }

    fn identity(mut self, f: impl FnOnce() -> RingMatrix) -> Self {
        if self.ok {
            self.ok = f().is_identity();
        }
        self
    }

    fn zero(mut self, f: impl FnOnce() -> RingMatrix) -> Self {
        if self.ok {
            self.ok = f().is_zero();
        }
        self
    }
}

/// Whether the construction's block equations hold, which is equivalent to
/// `Omega(v) Omega(v)^T = I`. Only `r x r` products are formed.
pub fn check_conditions(id: ConstructionId, v: &[RingElement]) -> Result<bool> {
    id.check_len(v)?;
    let c = Conditions::new();
    let ok = match id {
        ConstructionId::Omega20_1 => {
            let b = blocks20_1(v);
            c.identity(|| sum_abt(&[(&b.a1, &b.a1), (&b.b1, &b.b1), (&b.c1, &b.c1), (&b.d1, &b.d1)]))
                .identity(|| sum_abt(&[(&b.a2, &b.a2), (&b.b2, &b.b2), (&b.c2, &b.c2), (&b.d2, &b.d2)]))
                .zero(|| sum_abt(&[(&b.a1, &b.c2), (&b.b1, &b.d2), (&b.c1, &b.a2), (&b.d1, &b.b2)]))
                .zero(|| sum_ab(&[(&b.a1, &b.d2), (&b.b1, &b.c2), (&b.c1, &b.b2), (&b.d1, &b.a2)]))
                .ok
        }
        ConstructionId::Omega20_2 => {
            let [a, b, cc, d] = blocks20_2(v);
            c.identity(|| sum_abt(&[(&a, &a), (&b, &b), (&cc, &cc), (&d, &d)]))
                .zero(|| sum_abt(&[(&a, &cc), (&b, &d), (&cc, &a), (&d, &b)]))
                .ok
        }
        ConstructionId::Omega42_1 => {
            let [a, b, cc, d] = blocks42(v);
            let pair = |x, y, u, w, s| {
                let mut terms = shifted(x, y, s);
                terms.extend(shifted(u, w, s));
                sum_abt(&terms)
            };
            c.identity(|| pair(&a, &a, &b, &b, 0))
                .identity(|| pair(&cc, &cc, &d, &d, 0))
                .zero(|| pair(&a, &a, &b, &b, 2))
                .zero(|| pair(&a, &cc, &b, &d, 0))
                .zero(|| pair(&a, &cc, &b, &d, 2))
                .zero(|| pair(&a, &cc, &b, &d, 1))
                .zero(|| pair(&cc, &cc, &d, &d, 2))
                .ok
        }
        ConstructionId::Omega42_2 => {
            let [a, b, cc, d] = blocks42(v);
            let sum2 = |x, y, u, w| {
                let mut terms = shifted(x, y, 0);
                terms.extend(shifted(u, w, 0));
                sum_abt(&terms)
            };
            c.identity(|| sum2(&a, &a, &b, &b))
                .identity(|| sum2(&cc, &cc, &d, &d))
                .zero(|| {
                    // X2 X1^T + X3 X2^T + X1 (X3*)^T for X = A, B
                    let (a3s, b3s) = (st(&a[2]), st(&b[2]));
                    sum_abt(&[
                        (&a[1], &a[0]),
                        (&a[2], &a[1]),
                        (&a[0], &a3s),
                        (&b[1], &b[0]),
                        (&b[2], &b[1]),
                        (&b[0], &b3s),
                    ])
                })
                .zero(|| sum2(&a, &cc, &b, &d))
                .zero(|| {
                    let (c3s, d3s) = (st(&cc[2]), st(&d[2]));
                    sum_abt(&[
                        (&a[1], &cc[0]),
                        (&a[2], &cc[1]),
                        (&a[0], &c3s),
                        (&b[1], &d[0]),
                        (&b[2], &d[1]),
                        (&b[0], &d3s),
                    ])
                })
                .zero(|| {
                    let (c2s, c3s) = (st(&cc[1]), st(&cc[2]));
                    let (d2s, d3s) = (st(&d[1]), st(&d[2]));
                    sum_abt(&[
                        (&a[2], &cc[0]),
                        (&a[0], &c2s),
                        (&a[1], &c3s),
                        (&b[2], &d[0]),
                        (&b[0], &d2s),
                        (&b[1], &d3s),
                    ])
                })
                .zero(|| {
                    let (c3s, d3s) = (st(&cc[2]), st(&d[2]));
                    sum_abt(&[
                        (&cc[1], &cc[0]),
                        (&cc[2], &cc[1]),
                        (&cc[0], &c3s),
                        (&d[1], &d[0]),
                        (&d[2], &d[1]),
                        (&d[0], &d3s),
                    ])
                })
                .ok
        }
        ConstructionId::Omega24_1 => {
            let p = blocks24_1(v);
            let [a1, a2, b1, b2, c1, c2, d1, d2] = [&p[0], &p[1], &p[2], &p[3], &p[4], &p[5], &p[6], &p[7]];
            c.identity(|| sum_abt(&p.iter().map(|x| (x, x)).collect::<Vec<_>>()))
                .zero(|| {
                    sum_abt(&[
                        (a1, b1),
                        (a2, b2),
                        (b1, a1),
                        (b2, a2),
                        (c1, d1),
                        (c2, d2),
                        (d1, c1),
                        (d2, c2),
                    ])
                })
                .zero(|| {
                    sum_abt(&[
                        (a1, c1),
                        (a2, c2),
                        (b1, d1),
                        (b2, d2),
                        (c1, a1),
                        (c2, a2),
                        (d1, b1),
                        (d2, b2),
                    ])
                })
                .zero(|| {
                    sum_abt(&[
                        (a1, d1),
                        (a2, d2),
                        (b1, c1),
                        (b2, c2),
                        (c1, b1),
                        (c2, b2),
                        (d1, a1),
                        (d2, a2),
                    ])
                })
                .ok
        }
        ConstructionId::Omega24_2 => {
            let p = blocks24_23(v);
            let [a1, a2, b1, b2, c1, c2, d1, d2] = [&p[0], &p[1], &p[2], &p[3], &p[4], &p[5], &p[6], &p[7]];
            c.identity(|| sum_abt(&[(a1, a1), (a2, a2), (b1, b1), (b2, b2)]))
                .identity(|| sum_abt(&[(c1, c1), (c2, c2), (d1, d1), (d2, d2)]))
                .zero(|| sum_abt(&[(a1, &st(a2)), (a2, a1), (b1, &st(b2)), (b2, b1)]))
                .zero(|| sum_abt(&[(a1, c1), (a2, c2), (b1, d1), (b2, d2)]))
                .zero(|| sum_abt(&[(a1, &st(c2)), (a2, c1), (b1, &st(d2)), (b2, d1)]))
                .zero(|| sum_abt(&[(c1, &st(c2)), (c2, c1), (d1, &st(d2)), (d2, d1)]))
                .ok
        }
        ConstructionId::Omega24_3 => {
            let p = blocks24_23(v);
            let [a1, a2, b1, b2, c1, c2, d1, d2] = [&p[0], &p[1], &p[2], &p[3], &p[4], &p[5], &p[6], &p[7]];
            c.identity(|| sum_abt(&[(a1, a1), (a2, a2), (b1, b1), (b2, b2)]))
                .identity(|| sum_abt(&[(c1, c1), (c2, c2), (d1, d1), (d2, d2)]))
                .zero(|| sum_abt(&[(a1, c1), (a2, c2), (b1, d1), (b2, d2)]))
                .zero(|| sum_ab(&[(a1, c2), (a2, c1), (b1, d2), (b2, d1)]))
                .ok
        }
    };
    Ok(ok)
}

/// `(I_n | Omega(v))`.
pub fn generator_matrix(id: ConstructionId, v: &[RingElement]) -> Result<RingMatrix> {
    let omega = build_omega(id, v)?;
    let id_n = RingMatrix::identity(omega.alphabet(), omega.rows());
    RingMatrix::from_blocks(&[vec![&id_n, &omega]])
}

/// `Omega(v)` through the general composite-matrix machinery.
pub fn composite_omega_for(id: ConstructionId, v: &[RingElement]) -> Result<RingMatrix> {
    id.check_len(v)?;
    let spec = id.composite_spec();
    let gv = GroupRingVector::new(spec.group().clone(), v.to_vec())?;
    crate::groupring::composite_omega(&gv, &spec)
}
