//! Print the first terms of a few seeded sequences.
//!
//! `cargo run --example terms -- 1/2 -3 4` picks custom seeds.

use jacobsthal3::arith::{parse_rational, render};
use jacobsthal3::sequences::range;
use jacobsthal3::SequenceParams;

fn main() -> jacobsthal3::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut sets = vec![SequenceParams::jacobsthal(), SequenceParams::jacobsthal_lucas()];
    if let [a, b, c] = args.as_slice() {
        sets.push(SequenceParams::new(parse_rational(a)?, parse_rational(b)?, parse_rational(c)?));
    }
    for p in sets {
        let terms: Vec<String> = range(&p, 0, 15)?.iter().map(render).collect();
        println!("{p}: {}", terms.join(", "));
        println!("  a+b+c = {}, quartic = {}", render(p.rho()), render(p.quartic()));
    }
    Ok(())
}
