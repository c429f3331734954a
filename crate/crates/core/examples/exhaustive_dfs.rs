//! Exhaustive search at small sizes, and a seeded hunt for 36 sets at (9, 4).

use std::time::Duration;

use rif::search::{dfs_search, SearchOptions, Target};

pub fn run() -> rif::Result<()> {
    for (n, k) in [(6, 3), (7, 3), (8, 3)] {
        let r = dfs_search(n, k, Target::Auto, &SearchOptions::default())?;
        println!(
            "({n},{k}) tried {:?}: largest {}, exhaustive {}, {} nodes",
            r.targets_tried, r.size, r.exhaustive, r.explored_nodes
        );
    }
    let options = SearchOptions {
        seed: 1,
        time_limit: Some(Duration::from_secs(60)),
        ..SearchOptions::default()
    };
    let r = dfs_search(9, 4, Target::Size(36), &options)?;
    println!(
        "(9,4) target 36, seed 1: size {}, degree {:?}, {} nodes in {:.2?}",
        r.size, r.delta, r.explored_nodes, r.elapsed
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> rif::Result<()> {
    run()
}
