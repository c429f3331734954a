//! Building new regular intersecting families from old ones.

use rif::construct::{
    complete_uniform, disjoint_sum, extend_family, product_family, projective_plane,
    prop3_construction, SizeCap,
};
use rif::KSetFamily;

fn describe(name: &str, f: &KSetFamily) -> rif::Result<()> {
    println!(
        "{name:<22} n = {:<3} k = {:<3} size {:<6} degree {:<5} ratio {}  intersecting {}",
        f.n(),
        f.k(),
        f.len(),
        f.is_regular()?.map_or("-".into(), |d| d.to_string()),
        f.ratio(),
        f.is_intersecting()
    );
    Ok(())
}

pub fn run() -> rif::Result<()> {
    let fano = projective_plane(2)?;
    describe("Fano", &fano)?;
    describe("Fano^1", &extend_family(&fano, 1)?)?;
    describe("PG(2,3)^2", &extend_family(&projective_plane(3)?, 2)?)?;
    describe(
        "Fano + C([7],3)",
        &disjoint_sum(&fano, &complete_uniform(7, 3)?)?,
    )?;
    describe("Fano x Fano", &product_family(&fano, &fano)?)?;
    describe(
        "prop3(q=2, l=1)",
        &prop3_construction(2, 1, SizeCap::current())?,
    )?;
    if let Err(e) = extend_family(&fano, 2) {
        println!("Fano^2: {e}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> rif::Result<()> {
    run()
}
