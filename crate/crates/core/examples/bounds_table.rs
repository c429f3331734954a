//! Bound tables for k = 4 and for n = 2k + 1.

use rif::bounds::{bound_report, hoffman_bound};

pub fn run() -> rif::Result<()> {
    println!("n   ekr  prop1  hoffman  lp   general  verdict");
    for n in 8..=13 {
        let r = bound_report(n, 4, None)?;
        let show = |name: &str| {
            r.get(name)
                .and_then(|e| e.value.as_ref())
                .map_or("-".to_string(), ToString::to_string)
        };
        println!(
            "{n:<3} {:<4} {:<6} {:<8} {:<4} {:<8} {}",
            show("ekr"),
            show("prop1"),
            show("hoffman(s=1)"),
            show("delsarte_lp"),
            show("general"),
            r.verdict
        );
    }
    for k in 3..=6 {
        println!(
            "hoffman({}, {k}) = {}",
            2 * k + 1,
            hoffman_bound(2 * k + 1, k, 1)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> rif::Result<()> {
    run()
}
