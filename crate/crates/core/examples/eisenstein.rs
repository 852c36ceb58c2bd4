//! Arithmetic in Q(ω), ω² + ω + 1 = 0.

use jacobsthal3::arith::rat_normalize;
use jacobsthal3::EisensteinRational as E;

fn main() -> jacobsthal3::Result<()> {
    let w1 = E::omega1();
    let w2 = E::omega2();
    println!("ω1 = {w1}, ω2 = {w2}");
    println!("ω1·ω2 = {}, ω1 + ω2 = {}", &w1 * &w2, &w1 + &w2);
    println!("ω1^3 = {}, 1/ω1 = {}", w1.pow(3), w1.inv().expect("ω1 is a unit"));
    let z = E::new(rat_normalize(5, 21)?, rat_normalize(4, 21)?);
    println!("z = {z}, conj = {}, norm = {}", z.conj(), z.norm());
    println!("z + conj(z) is rational: {}", (&z + &z.conj()).rational_part()?);
    Ok(())
}
