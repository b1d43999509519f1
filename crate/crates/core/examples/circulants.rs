//! Circulant and block-circulant matrices and the star (column rotation)
//! transform.
//!
//! cargo run --example circulants

use sdcodes::alphabet::parse_vector;
use sdcodes::ringmat::{block_circulant, circulant, exchange, shift_perm};
use sdcodes::Alphabet;

fn main() -> sdcodes::Result<()> {
    let a = Alphabet::F2U;
    let x = circulant(&parse_vector("1203", a)?)?;
    let y = circulant(&parse_vector("0112", a)?)?;
    println!("cir(1203) =\n{x:?}");
    println!("cir(1203) cir(0112) =\n{:?}", x.matmul(&y)?);
    println!("commutes: {}", x.matmul(&y)? == y.matmul(&x)?);

    let p = shift_perm(a, 4)?;
    println!("star(cir(1203)) =\n{:?}", x.star()?);
    println!("equals cir(1203) P: {}", x.star()? == x.matmul(&p)?);
    println!("J_4 =\n{:?}", exchange(a, 4));

    let blocks = [circulant(&parse_vector("10", a)?)?, circulant(&parse_vector("21", a)?)?, circulant(&parse_vector("03", a)?)?];
    println!("CIR(A_0, A_1, A_2) =\n{:?}", block_circulant(&blocks)?);
    Ok(())
}
