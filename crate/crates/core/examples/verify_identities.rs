//! Sweep every identity in the catalog and print a one-line summary each.

use jacobsthal3::identities::verify_range;
use jacobsthal3::{IdentityId, SequenceParams};

fn main() -> jacobsthal3::Result<()> {
    let general = SequenceParams::from_ints(1, 2, 3);
    for id in IdentityId::ALL {
        let params = if id.fixed_params() { SequenceParams::jacobsthal() } else { general.clone() };
        let report = verify_range(id, &params, 40, None)?;
        println!(
            "{:<20} {:>4}/{:<4} {}",
            id.name(),
            report.passed,
            report.total,
            id.description()
        );
    }
    Ok(())
}
