//! The composite matrix of D4 with blocks patterned on C2 x C2 and C4, shown
//! as a map from positions to group elements, plus the M_H tables.
//!
//! cargo run --example composite_matrix

use std::sync::Arc;

use sdcodes::groupring::{composite_omega, sigma, CompositeSpec, GroupFamily, GroupRingVector, GroupSpec};
use sdcodes::{Alphabet, RingElement};

fn print_table(name: &str, t: &[Vec<usize>]) {
    println!("{name}");
    for row in t {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
        println!("  {}", cells.join(" "));
    }
}

/// Which coefficient lands where: entry (i, j) is k when alpha_{g_k} sits there.
fn layout(n: usize, build: impl Fn(&GroupRingVector) -> sdcodes::ringmat::RingMatrix, g: &Arc<GroupSpec>) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0; n]; n];
    for k in 0..n {
        let mut coeffs = vec![RingElement::zero(Alphabet::F2); n];
        coeffs[k] = RingElement::one(Alphabet::F2);
        let m = build(&GroupRingVector::new(g.clone(), coeffs).unwrap());
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                if m.sym(i, j) == 1 {
                    *cell = k + 1;
                }
            }
        }
    }
    out
}

fn main() -> sdcodes::Result<()> {
    let g = Arc::new(GroupSpec::new(GroupFamily::Dihedral(4))?);
    let h1 = GroupSpec::new(GroupFamily::DirectProductCyclic(2, 2))?;
    let h2 = GroupSpec::new(GroupFamily::CyclicInterleaved(2, 2))?;
    print_table("M_H1", &h1.mh_table());
    print_table("M_H2", &h2.mh_table());

    let spec = CompositeSpec::new(g.clone(), 4, vec![h1, h2], vec![1, 2, 2, 1], vec![true; 4])?;
    print_table("sigma(v) for D4", &layout(8, sigma, &g));
    print_table("Omega(v)", &layout(8, |v| composite_omega(v, &spec).unwrap(), &g));
    Ok(())
}
