//! Regular intersecting families on [2k].

use rif::construct::{
    balanced_half_family_traced, brace_daykin, neq2k_construction, HalfFamilySpec,
};

pub fn run() -> rif::Result<()> {
    for k in [3, 5, 6] {
        let f = brace_daykin(k)?;
        println!("k = {k}: size {}, degree {:?}", f.len(), f.is_regular()?);
    }

    let spec = HalfFamilySpec::three_exceptions(8)?;
    let (q, trace) = balanced_half_family_traced(&spec)?;
    println!(
        "half family for k = 8: {} sets, greedy fill {}, {} layer swaps, {} profile swaps",
        q.len(),
        trace.greedy_fill,
        trace.layer_energy.len() - 1,
        trace.profile_replacements
    );

    for k in [4, 8] {
        let f = neq2k_construction(k)?;
        println!(
            "k = {k}: size {}, degree {:?}, intersecting {}",
            f.len(),
            f.is_regular()?,
            f.is_intersecting()
        );
    }
    if let Err(e) = neq2k_construction(2) {
        println!("k = 2: {e}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> rif::Result<()> {
    run()
}
