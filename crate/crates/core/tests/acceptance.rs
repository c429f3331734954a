//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::time::{Duration, Instant};

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use rif::bounds::{bound_report, hoffman_bound};
use rif::construct::{
    brace_daykin, extend_family, neq2k_construction, product_family, projective_plane,
    prop3_construction, SizeCap,
};
use rif::scheme::{
    dual_eigenvalue_closed, eigenvalue_p, eigenvalue_p_alt, gamma_coefficients, gamma_from_tables,
    lp_max_regular_intersecting, macwilliams_transform, scheme_tables, LpStatus,
};
use rif::search::{cyclic_orbit_search, dfs_search, verify_certificate, SearchOptions, Target};
use rif::{KSet, KSetFamily};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s(e: rif::Error) -> String {
    e.to_string()
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

/// name, family, n, k, expected size
type Witness = (&'static str, KSetFamily, usize, usize, u64);

fn witnesses() -> Result<Vec<Witness>, String> {
    Ok(vec![
        ("PG(2,2)", projective_plane(2).map_err(e2s)?, 7, 7, 3),
        ("PG(2,3)", projective_plane(3).map_err(e2s)?, 13, 13, 4),
        ("neq2k(4)", neq2k_construction(4).map_err(e2s)?, 8, 32, 16),
        ("brace_daykin(3)", brace_daykin(3).map_err(e2s)?, 6, 10, 5),
        (
            "brace_daykin(5)",
            brace_daykin(5).map_err(e2s)?,
            10,
            126,
            63,
        ),
        (
            "neq2k(8)",
            neq2k_construction(8).map_err(e2s)?,
            16,
            6432,
            3216,
        ),
    ])
}

fn bounds_table() -> Outcome {
    let want = [34, 36, 35, 33, 33, 13];
    let mut got = Vec::new();
    for n in 8..=13 {
        let report = bound_report(n, 4, None).map_err(e2s)?;
        let general = report.get("general").and_then(|e| e.value.clone());
        got.push(general.ok_or("no general bound")?);
    }
    let want: Vec<BigInt> = want.iter().map(|&x| BigInt::from(x)).collect();
    ensure(got == want, || format!("got {got:?}"))?;
    Ok(format!("general bounds {}", got.iter().join(", ")))
}

fn hoffman_row() -> Outcome {
    let got: Vec<BigRational> = (3..=6)
        .map(|k| hoffman_bound(2 * k + 1, k, 1))
        .collect::<rif::Result<_>>()
        .map_err(e2s)?;
    ensure(got == [int(7), int(36), int(154), int(624)], || {
        format!("got {got:?}")
    })?;
    Ok(format!("hoffman(2k+1,k,1) = {}", got.iter().join(", ")))
}

fn construction_witnesses() -> Outcome {
    for (name, f, n, size, delta) in witnesses()? {
        ensure((f.n(), f.len()) == (n, size), || {
            format!("{name}: n = {}, size {}", f.n(), f.len())
        })?;
        ensure(f.is_regular() == Ok(Some(delta)), || {
            format!("{name}: not regular with degree {delta}")
        })?;
        ensure(f.is_intersecting(), || format!("{name}: not intersecting"))?;
    }
    Ok("six witnesses regular and intersecting".into())
}

fn exhaustive_small() -> Outcome {
    let o = SearchOptions::default();
    let a = dfs_search(6, 3, Target::Auto, &o).map_err(e2s)?;
    ensure(a.size == 10 && a.exhaustive, || {
        format!("(6,3): size {} exhaustive {}", a.size, a.exhaustive)
    })?;
    let b = dfs_search(7, 3, Target::Auto, &o).map_err(e2s)?;
    ensure(b.size == 7 && b.exhaustive, || {
        format!("(7,3): size {} exhaustive {}", b.size, b.exhaustive)
    })?;
    let c = dfs_search(8, 3, Target::Auto, &o).map_err(e2s)?;
    ensure(c.family.is_none() && c.exhaustive, || {
        format!("(8,3): size {} exhaustive {}", c.size, c.exhaustive)
    })?;
    Ok(format!(
        "(6,3) -> 10, (7,3) -> 7, (8,3) -> none after targets {:?}",
        c.targets_tried
    ))
}

fn lp_sharpness() -> Outcome {
    let mut parts = Vec::new();
    for (n, k, want) in [(7, 3, 7), (13, 4, 13), (9, 4, 36)] {
        let started = Instant::now();
        let lp = lp_max_regular_intersecting(n, k, true).map_err(e2s)?;
        ensure(
            lp.status == LpStatus::Optimal && lp.optimum == int(want),
            || format!("({n},{k}): {:?} {}", lp.status, lp.optimum),
        )?;
        ensure(lp.optimum.is_integer(), || "optimum not integral".into())?;
        ensure(started.elapsed() < Duration::from_secs(1), || {
            format!("({n},{k}) took {:?}", started.elapsed())
        })?;
        parts.push(format!("({n},{k}) = {}", lp.optimum));
    }
    Ok(parts.join(", "))
}

fn scheme_identities() -> Outcome {
    let mut checked = 0;
    for n in 2..=20usize {
        for k in 1..=n / 2 {
            let t = scheme_tables(n, k).map_err(e2s)?;
            let v = BigRational::from_integer(t.v.clone());
            for a in 0..=k {
                for b in 0..=k {
                    let pq: BigRational = (0..=k).map(|c| t.p_rational(a, c) * &t.q[c][b]).sum();
                    let want = if a == b {
                        v.clone()
                    } else {
                        BigRational::zero()
                    };
                    ensure(pq == want, || format!("PQ != vI at ({n},{k})"))?;
                    // r_i Q_ij = f_j P_ji
                    let lhs = BigRational::from_integer(t.r[a].clone()) * &t.q[a][b];
                    let rhs = BigRational::from_integer(&t.f[b] * &t.p[b][a]);
                    ensure(lhs == rhs, || format!("r Q != f P at ({n},{k},{a},{b})"))?;
                    let alt = eigenvalue_p_alt(n, k, a, b).map_err(e2s)?;
                    ensure(eigenvalue_p(n, k, a, b).map_err(e2s)? == alt, || {
                        format!("sums differ at ({n},{k},{a},{b})")
                    })?;
                }
                if a >= 1 {
                    let row: BigInt = t.p[a].iter().sum();
                    ensure(row.is_zero(), || {
                        format!("row {a} of P sums to {row} at ({n},{k})")
                    })?;
                }
            }
            for i in 0..=k {
                for j in (1..=2).filter(|&j| j <= k) {
                    let closed = dual_eigenvalue_closed(n, k, i, j).map_err(e2s)?;
                    ensure(closed == t.q[i][j], || {
                        format!("closed Q at ({n},{k},{i},{j})")
                    })?;
                }
            }
            if k >= 3 {
                for (i, g) in gamma_coefficients(n, k).map_err(e2s)?.iter().enumerate() {
                    ensure(
                        gamma_from_tables(&t, i) == BigRational::from_integer(g.clone()),
                        || format!("gamma at ({n},{k},{i})"),
                    )?;
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} parameter pairs"))
}

fn macwilliams() -> Outcome {
    for (name, f, ..) in witnesses()? {
        let mw = macwilliams_transform(
            &scheme_tables(f.n(), f.k()).map_err(e2s)?,
            &f.inner_distribution().map_err(e2s)?,
        )
        .map_err(e2s)?;
        ensure(mw[1].is_zero(), || format!("{name}: entry 1 = {}", mw[1]))?;
        ensure(mw.iter().all(|x| *x >= BigRational::zero()), || {
            format!("{name}: negative entry")
        })?;
        if name.starts_with("PG") {
            ensure(mw[2].is_zero(), || format!("{name}: entry 2 = {}", mw[2]))?;
        }
    }
    Ok("entry 1 = 0 and nonnegative for all six; entry 2 = 0 for both planes".into())
}

fn combinator_laws() -> Outcome {
    let fano = projective_plane(2).map_err(e2s)?;
    let ext = extend_family(&fano, 1).map_err(e2s)?;
    ensure(ext.len() == 28 && ext.is_regular() == Ok(Some(16)), || {
        format!("Fano^1: {}", ext.len())
    })?;
    let p3 = prop3_construction(2, 1, SizeCap::default()).map_err(e2s)?;
    ensure(
        p3.len() == 245 && p3.ratio() == BigRational::new(3.into(), 7.into()),
        || format!("prop3: {} {}", p3.len(), p3.ratio()),
    )?;
    let prod = product_family(&fano, &fano).map_err(e2s)?;
    ensure(prod.len() == 49 && prod.is_regular() == Ok(Some(9)), || {
        format!("product: {}", prod.len())
    })?;
    Ok("28/16, 245 at 3/7, 49/9".into())
}

fn search_nine_four() -> Outcome {
    let cyclic = cyclic_orbit_search(9, 4, &SearchOptions::default()).map_err(e2s)?;
    let options = SearchOptions {
        seed: 1,
        time_limit: Some(Duration::from_secs(600)),
        ..SearchOptions::default()
    };
    let r = dfs_search(9, 4, Target::Size(36), &options).map_err(e2s)?;
    let report = verify_certificate(&r);
    ensure(
        r.size == 36 && r.delta == Some(16) && report.passed(),
        || {
            format!(
                "dfs size {} delta {:?} certificate {}",
                r.size,
                r.delta,
                report.passed()
            )
        },
    )?;
    let mut extra = Vec::new();
    for (n, k, secs) in [(11, 5, 60), (13, 6, 60)] {
        let opts = SearchOptions {
            time_limit: Some(Duration::from_secs(secs)),
            ..SearchOptions::default()
        };
        let best = cyclic_orbit_search(n, k, &opts).map_err(e2s)?;
        ensure(!best.is_optimal(), || format!("({n},{k}) claimed optimal"))?;
        ensure(
            best.family.is_none() || verify_certificate(&best).passed(),
            || format!("({n},{k}) certificate"),
        )?;
        extra.push(format!(
            "({n},{k}) best {} (delta {:?}, optimal over all families: false)",
            best.size, best.delta
        ));
    }
    Ok(format!(
        "cyclic reaches {}; dfs seed 1 finds 36 with delta 16 in {:.2?}; {}",
        cyclic.size,
        r.elapsed,
        extra.join("; ")
    ))
}

fn fano_meets() -> Outcome {
    let fano = projective_plane(2).map_err(e2s)?;
    let mut non_lines = 0;
    for probe in (1..=7).combinations(3).map(KSet::from_elements) {
        if fano.contains(&probe) {
            continue;
        }
        non_lines += 1;
        let profile = fano.meet_profile(&probe).map_err(e2s)?;
        ensure(profile[1] == 3, || {
            format!("{probe:?} meets {} lines in two points", profile[1])
        })?;
    }
    ensure(non_lines == 28, || format!("{non_lines} non-lines"))?;
    Ok("28 non-lines, each meets 3 lines in 2 points".into())
}

fn main() {
    type Criterion = (&'static str, Duration, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("bounds table k=4", Duration::from_secs(1), bounds_table),
        ("hoffman row n=2k+1", Duration::from_secs(1), hoffman_row),
        (
            "construction witnesses",
            Duration::from_secs(30),
            construction_witnesses,
        ),
        (
            "exhaustive optimality",
            Duration::from_secs(300),
            exhaustive_small,
        ),
        ("LP sharpness", Duration::from_secs(3), lp_sharpness),
        (
            "scheme identities",
            Duration::from_secs(60),
            scheme_identities,
        ),
        (
            "regularity and MacWilliams",
            Duration::from_secs(30),
            macwilliams,
        ),
        ("combinator laws", Duration::from_secs(10), combinator_laws),
        (
            "search (9,4) size 36",
            Duration::from_secs(600 + 130),
            search_nine_four,
        ),
        ("Fano meet counts", Duration::from_secs(1), fano_meets),
    ];
    let mut failed = 0;
    for (i, (name, budget, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = check();
        let spent = started.elapsed();
        let outcome = match outcome {
            Ok(detail) if spent > *budget => {
                Err(format!("{detail}; took {spent:.2?}, budget {budget:?}"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} PASS  {name} ({spent:.2?}): {detail}",
                i + 1
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({spent:.2?}): {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
