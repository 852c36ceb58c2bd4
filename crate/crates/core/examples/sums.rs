//! Prefix, weighted and strided sums against direct summation.

use jacobsthal3::arith::{int, rat_normalize, render};
use jacobsthal3::sums::{
    prefix_sum_closed, strided_sum_closed, strided_sum_oracle, sum_oracle, weighted_sum_closed,
    weighted_sum_oracle, StridedSumContext,
};
use jacobsthal3::{Error, SequenceParams};

fn main() -> jacobsthal3::Result<()> {
    let j = SequenceParams::jacobsthal();
    let idx: Vec<i64> = (0..=10).collect();
    println!("prefix n=10: closed {} direct {}", render(&prefix_sum_closed(10)), render(&sum_oracle(&j, &idx, None)?));

    for x in [int(-1), rat_normalize(1, 2)?, int(3)] {
        println!(
            "weighted x={:<4} n=12: closed {} direct {}",
            render(&x),
            render(&weighted_sum_closed(&j, &x, 12)?),
            render(&weighted_sum_oracle(&j, &x, 12)?)
        );
    }

    for m in 1..=6u64 {
        let ctx = StridedSumContext::new(m, m)?;
        match strided_sum_closed(&j, m, m, 8) {
            Ok(v) => println!(
                "strided m={m} r={m} n=8: sigma {} mu {} closed {} direct {}",
                render(&ctx.sigma),
                render(&ctx.mu),
                render(&v),
                render(&strided_sum_oracle(&j, m, m, 8)?)
            ),
            Err(e @ Error::DegenerateStride(_)) => println!("strided m={m}: {e}"),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
