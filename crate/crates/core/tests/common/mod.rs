//! Independent oracles shared by the integration tests. Nothing here calls
//! the library's own matrix products or enumerators.

#![allow(dead_code)]

use std::sync::Arc;

use rand::Rng;
use sdcodes::bincode::{BinaryCode, BinaryMatrix};
use sdcodes::groupring::{composite_omega, sigma, CompositeSpec, GroupFamily, GroupRingVector, GroupSpec};
use sdcodes::ringmat::RingMatrix;
use sdcodes::{Alphabet, RingElement};

pub fn random_vec(rng: &mut impl Rng, a: Alphabet, n: usize) -> Vec<RingElement> {
    (0..n)
        .map(|_| RingElement::new(a, rng.gen_range(0..a.order())).unwrap())
        .collect()
}

/// Entry-by-entry check that `m m^T` is the identity, using only element
/// arithmetic.
pub fn gram_is_identity(m: &RingMatrix) -> bool {
    let a = m.alphabet();
    let n = m.rows();
    for i in 0..n {
        for j in 0..n {
            let mut acc = RingElement::zero(a);
            for k in 0..m.cols() {
                acc = acc.add(m.get(i, k).mul(m.get(j, k)).unwrap()).unwrap();
            }
            if acc != if i == j { RingElement::one(a) } else { RingElement::zero(a) } {
                return false;
            }
        }
    }
    true
}

/// Binary image of one ring vector: first Gray coordinates of all entries,
/// then the second ones. Over F2 the vector is returned as bits.
pub fn gray_image(v: &[RingElement]) -> Vec<u8> {
    if !v.first().is_some_and(|e| e.alphabet().has_gray_map()) {
        return v.iter().map(|e| e.sym()).collect();
    }
    let pairs: Vec<(u8, u8)> = v.iter().map(|e| e.gray().unwrap()).collect();
    pairs.iter().map(|p| p.0).chain(pairs.iter().map(|p| p.1)).collect()
}

/// Weight distribution by walking all `2^k` messages directly.
pub fn brute_force_weights(g: &BinaryMatrix) -> Vec<u64> {
    let k = g.rows();
    let n = g.cols();
    let rows: Vec<Vec<u8>> = (0..k).map(|i| g.row_bits(i)).collect();
    let mut dist = vec![0u64; n + 1];
    for m in 0u64..(1 << k) {
        let mut word = vec![0u8; n];
        for (i, r) in rows.iter().enumerate() {
            if m >> i & 1 == 1 {
                for (w, b) in word.iter_mut().zip(r) {
                    *w ^= b;
                }
            }
        }
        dist[word.iter().filter(|&&b| b == 1).count()] += 1;
    }
    dist
}

pub fn group(f: GroupFamily) -> Arc<GroupSpec> {
    Arc::new(GroupSpec::new(f).unwrap())
}

/// The composite layout of the worked example: D4 with blocks patterned on
/// C2 x C2 and C4 (interleaved listing).
pub fn example_spec() -> CompositeSpec {
    CompositeSpec::new(
        group(GroupFamily::Dihedral(4)),
        4,
        vec![
            GroupSpec::new(GroupFamily::DirectProductCyclic(2, 2)).unwrap(),
            GroupSpec::new(GroupFamily::CyclicInterleaved(2, 2)).unwrap(),
        ],
        vec![1, 2, 2, 1],
        vec![true; 4],
    )
    .unwrap()
}

/// `(I | omega)` as a ring matrix.
pub fn bordered(omega: &RingMatrix) -> RingMatrix {
    let id = RingMatrix::identity(omega.alphabet(), omega.rows());
    RingMatrix::from_blocks(&[vec![&id, omega]]).unwrap()
}

/// Small orthogonal ring matrices from group rings of order 8 (and 10 over
/// F2), drawn by rejection. Returns `Omega` with `Omega Omega^T = I`.
pub fn random_orthogonal(rng: &mut impl Rng, a: Alphabet) -> RingMatrix {
    loop {
        let pick = rng.gen_range(0..4);
        let family = match pick {
            0 => GroupFamily::Dihedral(4),
            1 => GroupFamily::Cyclic(8),
            2 => GroupFamily::DirectProductCyclic(4, 2),
            _ if a == Alphabet::F2 => GroupFamily::Dihedral(5),
            _ => GroupFamily::Dihedral(4),
        };
        let g = group(family);
        let v = GroupRingVector::new(g.clone(), random_vec(rng, a, g.order())).unwrap();
        let omega = if pick == 0 {
            composite_omega(&v, &example_spec()).unwrap()
        } else {
            sigma(&v)
        };
        if gram_is_identity(&omega) {
            return omega;
        }
    }
}

/// A random binary self-dual code of dimension at most 16.
pub fn random_small_self_dual(rng: &mut impl Rng) -> BinaryCode {
    let a = Alphabet::ALL[rng.gen_range(0..3)];
    let omega = random_orthogonal(rng, a);
    BinaryCode::from_ring_generator(&bordered(&omega)).unwrap()
}
