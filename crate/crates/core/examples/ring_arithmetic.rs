//! Multiplication tables, Gray images and Lee weights of the three alphabets.
//!
//! cargo run --example ring_arithmetic

use sdcodes::alphabet::{format_vector, inner_product, parse_vector};
use sdcodes::{Alphabet, RingElement};

fn main() -> sdcodes::Result<()> {
    for a in Alphabet::ALL {
        println!("{a}");
        let elems: Vec<RingElement> = RingElement::all(a).collect();
        for x in &elems {
            let row: Vec<String> = elems.iter().map(|y| x.mul(*y).map(|p| p.to_string())).collect::<Result<_, _>>()?;
            println!("  {x} * [{}] = [{}]", format_vector(&elems), row.join(""));
        }
        if a.has_gray_map() {
            for x in &elems {
                let (g0, g1) = x.gray()?;
                println!("  gray({x}) = {g0}{g1}, Lee weight {}", x.lee_weight()?);
            }
        }
    }

    let v = parse_vector("31223333300320201200", Alphabet::F4)?;
    let lee: u32 = v.iter().map(|e| e.lee_weight().map(u32::from)).sum::<Result<_, _>>()?;
    println!("v = {} has Lee weight {lee}", format_vector(&v));
    println!("<v, v> = {}", inner_product(&v, &v)?);
    Ok(())
}
