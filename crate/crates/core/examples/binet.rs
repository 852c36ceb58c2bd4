//! Closed forms: Binet coefficients in Q(ω) and the period-3 decomposition.

use jacobsthal3::arith::render;
use jacobsthal3::closed_forms::{binet_coefficients, binet_term, decomposed_term};
use jacobsthal3::sequences::{companions, term};
use jacobsthal3::SequenceParams;

fn main() -> jacobsthal3::Result<()> {
    for p in [SequenceParams::jacobsthal(), SequenceParams::jacobsthal_lucas(), SequenceParams::from_ints(5, -1, 2)] {
        let coeffs = binet_coefficients(&p);
        let comp = companions(&p);
        println!("{p}");
        println!("  A = {}   B = {}   C = {}", render(&coeffs.a), coeffs.b, coeffs.c);
        println!("  Vgen = {}   Wgen = {}", comp.v_gen, comp.w_gen);
        for n in [0u64, 1, 2, 10, 40] {
            println!(
                "  n={n:>2}  recurrence {}  binet {}  decomposed {}",
                render(&term(&p, n)),
                render(&binet_term(&p, n)?),
                render(&decomposed_term(&p, n))
            );
        }
    }
    Ok(())
}
