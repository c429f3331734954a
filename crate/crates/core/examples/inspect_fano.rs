//! Degrees, inner distribution and meet counts of the Fano plane.

use itertools::Itertools;
use rif::{KSet, KSetFamily};

pub fn run() -> rif::Result<()> {
    let fano = KSetFamily::new(
        7,
        3,
        &[
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 6],
            [4, 5, 7],
            [1, 5, 6],
            [2, 6, 7],
            [1, 3, 7],
        ],
    )?;
    println!("{} lines on {} points", fano.len(), fano.n());
    println!("intersecting: {}", fano.is_intersecting());
    println!("degree of every point: {:?}", fano.is_regular()?);
    println!("pairs covered once: {:?}", fano.is_subset_regular(2)?);

    let dist = fano.inner_distribution()?;
    println!("inner distribution: {}", dist.a().iter().join(" "));

    // every non-line meets exactly three lines in two points
    let mut counts = Vec::new();
    for probe in (1..=7).combinations(3).map(KSet::from_elements) {
        if !fano.contains(&probe) {
            counts.push(fano.meet_profile(&probe)?[1]);
        }
    }
    println!(
        "non-lines: {}, lines met in two points: {:?}",
        counts.len(),
        counts.iter().unique().collect::<Vec<_>>()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> rif::Result<()> {
    run()
}
