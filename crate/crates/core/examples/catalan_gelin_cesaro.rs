//! Catalan and Gelin-Cesàro right-hand sides next to the brute-force values.

use jacobsthal3::arith::render;
use jacobsthal3::identities::{catalan_rhs, gelin_cesaro_rhs, GelinCesaroMode};
use jacobsthal3::sequences::term;
use jacobsthal3::SequenceParams;

fn main() -> jacobsthal3::Result<()> {
    let p = SequenceParams::from_ints(2, 1, 5);
    let t = |k: i64| term(&p, k as u64);

    println!("Catalan, {p}");
    for (n, r) in [(4, 2), (7, 3), (12, 12)] {
        let lhs = t(n).pow(2) - t(n - r) * t(n + r);
        println!("  n={n:>2} r={r:>2}  lhs {}  rhs {}", render(&lhs), render(&catalan_rhs(&p, n, r)?));
    }

    println!("Gelin-Cesaro, {p}");
    for n in 2..=8 {
        let lhs = t(n).pow(4) - t(n - 2) * t(n - 1) * t(n + 1) * t(n + 2);
        let general = gelin_cesaro_rhs(&p, n, GelinCesaroMode::General)?;
        let cases = gelin_cesaro_rhs(&p, n, GelinCesaroMode::Cases)?;
        println!("  n={n}  lhs {}  general {}  cases {}", render(&lhs), render(&general), render(&cases));
    }
    Ok(())
}
