//! Largest unions of cyclic orbits.

use rif::search::{cyclic_orbit_search, verify_certificate, SearchOptions};

pub fn run() -> rif::Result<()> {
    let options = SearchOptions::default();
    for (n, k) in [(7, 3), (9, 4), (10, 4), (13, 4), (11, 5)] {
        let r = cyclic_orbit_search(n, k, &options)?;
        println!(
            "({n},{k}): size {:<4} degree {:<4} exhaustive over {} {}, certificate {}",
            r.size,
            r.delta.map_or("-".into(), |d| d.to_string()),
            r.scope,
            r.exhaustive,
            if r.family.is_some() {
                verify_certificate(&r).passed()
            } else {
                false
            }
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> rif::Result<()> {
    run()
}
