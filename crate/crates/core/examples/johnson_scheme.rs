//! Eigenmatrices of J(9, 4) and the identities tying them together.

use num_rational::BigRational;
use rif::scheme::{dual_eigenvalue_closed, gamma_coefficients, gamma_from_tables, scheme_tables};

pub fn run() -> rif::Result<()> {
    let (n, k) = (9, 4);
    let t = scheme_tables(n, k)?;
    println!(
        "J({n},{k}): v = {}, valencies {:?}, multiplicities {:?}",
        t.v, t.r, t.f
    );
    println!("P (row j = eigenvalues on class i):");
    for row in &t.p {
        println!(
            "  {}",
            row.iter().map(|x| format!("{x:>4}")).collect::<String>()
        );
    }

    let v = BigRational::from_integer(t.v.clone());
    let mut identity = true;
    for a in 0..=k {
        for b in 0..=k {
            let entry: BigRational = (0..=k).map(|c| t.p_rational(a, c) * &t.q[c][b]).sum();
            let want = if a == b {
                v.clone()
            } else {
                BigRational::from_integer(0.into())
            };
            identity &= entry == want;
        }
    }
    println!("P Q = v I: {identity}");

    let closed = (0..=k)
        .all(|i| (1..=2).all(|j| dual_eigenvalue_closed(n, k, i, j).is_ok_and(|x| x == t.q[i][j])));
    println!("closed forms for Q columns 1 and 2: {closed}");

    let gamma = gamma_coefficients(n, k)?;
    let agree = gamma
        .iter()
        .enumerate()
        .all(|(i, g)| gamma_from_tables(&t, i) == BigRational::from_integer(g.clone()));
    println!("gamma = {gamma:?}, matches tables: {agree}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> rif::Result<()> {
    run()
}
