//! Desarguesian planes PG(2, q) and their MacWilliams transforms.

use itertools::Itertools;
use rif::construct::projective_plane;
use rif::scheme::{macwilliams_transform, scheme_tables};

pub fn run() -> rif::Result<()> {
    for q in [2, 3, 4, 5, 7, 8, 9] {
        let plane = projective_plane(q)?;
        let mw = macwilliams_transform(
            &scheme_tables(plane.n(), plane.k())?,
            &plane.inner_distribution()?,
        )?;
        println!(
            "PG(2,{q}): n = {}, k = {}, degree {:?}, MacWilliams {}",
            plane.n(),
            plane.k(),
            plane.is_regular()?.unwrap_or(0),
            mw.iter().take(4).join(" ")
        );
    }
    match projective_plane(6) {
        Err(e) => println!("q = 6: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> rif::Result<()> {
    run()
}
