//! Expand the rational generating function and compare with the recurrence.

use jacobsthal3::arith::render;
use jacobsthal3::sequences::range;
use jacobsthal3::series::{gf_coefficients, gf_denominator, gf_numerator};
use jacobsthal3::SequenceParams;

fn main() -> jacobsthal3::Result<()> {
    let p = SequenceParams::from_ints(1, 2, 3);
    let show = |c: &[jacobsthal3::Rational]| c.iter().map(render).collect::<Vec<_>>().join(" ");
    println!("numerator   {}", show(gf_numerator(&p).coeffs()));
    println!("denominator {}", show(gf_denominator().coeffs()));
    let coeffs = gf_coefficients(&p, 20)?;
    println!("series      {}", show(&coeffs));
    println!("matches recurrence: {}", coeffs == range(&p, 0, 19)?);
    Ok(())
}
