//! The exact Delsarte program with and without the regularity constraint.

use itertools::Itertools;
use rif::scheme::{lp_max_regular_intersecting, LpStatus};

pub fn run() -> rif::Result<()> {
    for (n, k) in [(7, 3), (8, 3), (9, 4), (13, 4), (11, 5)] {
        for regular in [false, true] {
            let lp = lp_max_regular_intersecting(n, k, regular)?;
            let label = if regular { "regular" } else { "any" };
            match lp.status {
                LpStatus::Optimal => println!(
                    "({n},{k}) {label:>7}: optimum {} at a = ({})",
                    lp.optimum,
                    lp.distribution().iter().join(", ")
                ),
                LpStatus::Infeasible => println!("({n},{k}) {label:>7}: infeasible"),
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> rif::Result<()> {
    run()
}
