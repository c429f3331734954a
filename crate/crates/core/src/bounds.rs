//! Closed-form bounds and existence obstructions for regular intersecting
//! families in `C([n], k)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::math::{binomial, ceil, floor};
use crate::scheme::{self, LpStatus};

fn check_domain(n: usize, k: usize) -> Result<()> {
    if k == 0 || n < 2 * k {
        return Err(Error::InvalidParameters(format!(
            "need n >= 2k > 0, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

fn b(a: usize, c: usize) -> BigInt {
    binomial(a as i64, c as i64)
}

/// Size of a star: `C(n-1, k-1)`.
pub fn ekr_bound(n: usize, k: usize) -> Result<BigInt> {
    check_domain(n, k)?;
    Ok(b(n - 1, k - 1))
}

/// `3 C(n-3, k-2) + C(n-3, k-3)`.
pub fn prop1_bound(n: usize, k: usize) -> Result<BigInt> {
    check_domain(n, k)?;
    let (n, k) = (n as i64, k as i64);
    Ok(BigInt::from(3) * binomial(n - 3, k - 2) + binomial(n - 3, k - 3))
}

fn check_hoffman(n: usize, k: usize, s: usize) -> Result<()> {
    if s == 0 || s.is_multiple_of(2) {
        return Err(Error::InvalidS(format!("s = {s} must be odd and positive")));
    }
    check_domain(n, k)?;
    if k < s + 2 {
        return Err(Error::InvalidParameters(format!(
            "need k >= s + 2, got k = {k}, s = {s}"
        )));
    }
    Ok(())
}

/// Hoffman-type bound for `s`-subset-regular intersecting families (odd
/// `s`): `C(n,k) / (1 + C(n-k,k) / C(n-k-s-2, k-s-2))`.
pub fn hoffman_bound(n: usize, k: usize, s: usize) -> Result<BigRational> {
    check_hoffman(n, k, s)?;
    let ratio = BigRational::new(b(n - k, k), b(n - k - s - 2, k - s - 2));
    Ok(BigRational::from_integer(b(n, k)) / (ratio + BigRational::from_integer(1.into())))
}

/// The same bound in eigenvalue form, `v / (1 - P_{0k} / P_{(s+2)k})`.
pub fn hoffman_bound_eigen(n: usize, k: usize, s: usize) -> Result<BigRational> {
    check_hoffman(n, k, s)?;
    let p0k = scheme::eigenvalue_p(n, k, 0, k)?;
    let psk = scheme::eigenvalue_p(n, k, s + 2, k)?;
    let one = BigRational::from_integer(1.into());
    Ok(BigRational::from_integer(b(n, k)) / (one - BigRational::new(p0k, psk)))
}

/// Number of members a non-member `k`-set would have to meet in `k - 1`
/// points if the `s = 1` Hoffman bound were attained:
/// `t = 3k(k-1)(k-2) / (n^2 - 3kn - n + 3k^2)`. Returns `(t, obstruction)`
/// where `obstruction` holds iff `t` is not a positive integer.
pub fn tightness_integrality_check(n: usize, k: usize, s: usize) -> Result<(BigRational, bool)> {
    if s != 1 {
        return Err(Error::InvalidS(format!("only s = 1 is supported, got {s}")));
    }
    check_domain(n, k)?;
    if k < 3 {
        return Err(Error::InvalidParameters(format!("need k >= 3, got {k}")));
    }
    let (n, k) = (n as i64, k as i64);
    let numer = 3 * k * (k - 1) * (k - 2);
    let denom = n * n - 3 * k * n - n + 3 * k * k;
    let t = BigRational::new(numer.into(), denom.into());
    let obstruction = !(t.is_integer() && t.is_positive());
    Ok((t, obstruction))
}

/// `ceil(1 + k(n-k)/(k^2-n))`, valid for `2k <= n < k^2`.
pub fn lower_bound_regular(n: usize, k: usize) -> Result<BigInt> {
    check_domain(n, k)?;
    if n >= k * k {
        return Err(Error::InvalidParameters(format!(
            "need n < k^2, got n = {n}, k = {k}"
        )));
    }
    let raw = BigRational::new(BigInt::from(k * (n - k)), BigInt::from(k * k - n))
        + BigRational::from_integer(1.into());
    Ok(ceil(&raw))
}

/// `k^2 - k + 1`: no regular intersecting family exists above it.
pub fn existence_threshold(k: usize) -> usize {
    k * k - k + 1
}

pub fn nonexistent(n: usize, k: usize) -> bool {
    n > existence_threshold(k)
}

fn is_sum_of_two_squares(m: u64) -> bool {
    (0..).take_while(|a| a * a <= m).any(|a| {
        let rest = m - a * a;
        let r = (rest as f64).sqrt() as u64;
        (r.saturating_sub(1)..=r + 1).any(|c| c * c == rest)
    })
}

/// `true` when the sum-of-two-squares condition rules out a projective plane
/// of this order: `order ≡ 1, 2 (mod 4)` and `order` is not `a^2 + b^2`.
pub fn brc_obstruction(order: u64) -> bool {
    matches!(order % 4, 1 | 2) && !is_sum_of_two_squares(order)
}

/// Best closed-form upper bound on a regular intersecting family: zero above
/// the threshold, the plane size at the threshold, and otherwise the largest
/// `m <= floor(hoffman(n, k, 1))` for which the degree `km/n` is integral.
pub fn general_bound(n: usize, k: usize) -> Result<BigInt> {
    check_domain(n, k)?;
    let threshold = existence_threshold(k);
    if n > threshold {
        return Ok(BigInt::zero());
    }
    if n == threshold {
        return Ok(BigInt::from(threshold));
    }
    let top = floor(&hoffman_bound(n, k, 1)?);
    let step = BigInt::from(n / n.gcd(&k));
    Ok(&top - top.mod_floor(&step))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Upper,
    Lower,
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: String,
    #[serde(serialize_with = "serialize_opt_big")]
    pub value: Option<BigInt>,
    pub applicable: bool,
    pub kind: BoundKind,
    pub note: String,
}

fn serialize_opt_big<S: serde::Serializer>(
    v: &Option<BigInt>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_str(&x.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// No regular intersecting family exists for these parameters.
    Nonexistent,
    /// The bounds leave room for a family.
    Open,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Nonexistent => f.write_str("Nonexistent"),
            Verdict::Open => f.write_str("Open"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub entries: Vec<BoundEntry>,
    pub verdict: Verdict,
}

impl BoundReport {
    pub fn get(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    fn applicable(&self, kind: BoundKind) -> impl Iterator<Item = &BigInt> {
        self.entries
            .iter()
            .filter(move |e| e.applicable && e.kind == kind)
            .filter_map(|e| e.value.as_ref())
    }

    pub fn min_upper(&self) -> Option<&BigInt> {
        self.applicable(BoundKind::Upper).min()
    }

    pub fn max_lower(&self) -> Option<&BigInt> {
        self.applicable(BoundKind::Lower).max()
    }
}

fn entry(
    name: impl Into<String>,
    value: Option<BigInt>,
    kind: BoundKind,
    note: impl Into<String>,
) -> BoundEntry {
    BoundEntry {
        name: name.into(),
        applicable: value.is_some(),
        value,
        kind,
        note: note.into(),
    }
}

fn skipped(name: impl Into<String>, kind: BoundKind, err: &Error) -> BoundEntry {
    entry(name, None, kind, format!("not applicable: {err}"))
}

/// Every bound for `(n, k)`, plus an optional Hoffman bound for an extra odd
/// `s` (which only constrains `s`-subset-regular families).
pub fn bound_report(n: usize, k: usize, extra_s: Option<usize>) -> Result<BoundReport> {
    check_domain(n, k)?;
    let mut entries = Vec::new();

    entries.push(entry(
        "ekr",
        Some(ekr_bound(n, k)?),
        BoundKind::Upper,
        "size of a star",
    ));
    entries.push(entry(
        "prop1",
        Some(prop1_bound(n, k)?),
        BoundKind::Upper,
        "3C(n-3,k-2) + C(n-3,k-3)",
    ));

    entries.push(match hoffman_bound(n, k, 1) {
        Ok(h) => entry(
            "hoffman(s=1)",
            Some(floor(&h)),
            BoundKind::Upper,
            format!("raw {h}"),
        ),
        Err(e) => skipped("hoffman(s=1)", BoundKind::Upper, &e),
    });
    if let Some(s) = extra_s.filter(|&s| s != 1) {
        let name = format!("hoffman(s={s})");
        entries.push(match hoffman_bound(n, k, s) {
            Ok(h) => entry(
                name,
                Some(floor(&h)),
                BoundKind::Info,
                format!("raw {h}; bounds {s}-subset-regular families only"),
            ),
            Err(e) => skipped(name, BoundKind::Info, &e),
        });
    }

    entries.push(match tightness_integrality_check(n, k, 1) {
        Ok((t, obstruction)) => {
            let note = if obstruction {
                format!("t = {t} is not a positive integer; hoffman(s=1) is not attained")
            } else {
                format!("t = {t}; no integrality obstruction")
            };
            let value = (!obstruction).then(|| t.to_integer());
            BoundEntry {
                name: "tightness(s=1)".into(),
                value,
                applicable: true,
                kind: BoundKind::Info,
                note,
            }
        }
        Err(e) => skipped("tightness(s=1)", BoundKind::Info, &e),
    });

    entries.push(match lp_bound(n, k) {
        Ok(v) => entry(
            "delsarte_lp",
            Some(v),
            BoundKind::Upper,
            "exact LP with regularity",
        ),
        Err(e) => skipped("delsarte_lp", BoundKind::Upper, &e),
    });

    entries.push(match lower_bound_regular(n, k) {
        Ok(v) => entry(
            "lower_regular",
            Some(v),
            BoundKind::Lower,
            "1 + k(n-k)/(k^2-n)",
        ),
        Err(e) => skipped("lower_regular", BoundKind::Lower, &e),
    });

    let threshold = existence_threshold(k);
    entries.push(entry(
        "threshold",
        Some(BigInt::from(threshold)),
        BoundKind::Info,
        if nonexistent(n, k) {
            "n exceeds k^2-k+1: no regular intersecting family"
        } else if n == threshold {
            "n = k^2-k+1: only a projective plane of order k-1"
        } else {
            "n below k^2-k+1"
        },
    ));

    let order = (k - 1) as u64;
    let brc = n == threshold && order >= 2 && brc_obstruction(order);
    if n == threshold && order >= 2 {
        entries.push(BoundEntry {
            name: "brc".into(),
            value: None,
            applicable: true,
            kind: BoundKind::Info,
            note: if brc {
                format!("no projective plane of order {order} (not a sum of two squares)")
            } else {
                format!("order {order} passes the sum-of-two-squares test")
            },
        });
    }

    for name in ["junta(regular)", "junta(irregular)"] {
        entries.push(BoundEntry {
            name: name.into(),
            value: None,
            applicable: false,
            kind: BoundKind::Info,
            note: "not computable (non-constructive constant)".into(),
        });
    }

    let general = general_bound(n, k)?;
    entries.push(entry(
        "general",
        Some(general.clone()),
        BoundKind::Upper,
        "integrality-adjusted",
    ));

    let mut report = BoundReport {
        n,
        k,
        entries,
        verdict: Verdict::Open,
    };
    let crossed = matches!((report.min_upper(), report.max_lower()), (Some(u), Some(l)) if l > u);
    if nonexistent(n, k) || general.is_zero() || brc || crossed {
        report.verdict = Verdict::Nonexistent;
    }
    Ok(report)
}

/// Floor of the LP optimum; zero when infeasible. Skipped for large `k`
/// where the exact program gets slow.
fn lp_bound(n: usize, k: usize) -> Result<BigInt> {
    if k > 16 {
        return Err(Error::InvalidParameters(format!(
            "LP skipped for k = {k} > 16"
        )));
    }
    let out = scheme::lp_max_regular_intersecting(n, k, true)?;
    Ok(match out.status {
        LpStatus::Optimal => floor(&out.optimum),
        LpStatus::Infeasible => BigInt::zero(),
    })
}

/// Convenience for callers holding machine integers.
pub fn general_bound_u64(n: usize, k: usize) -> Result<u64> {
    general_bound(n, k)?
        .to_u64()
        .ok_or_else(|| Error::InvalidParameters("bound exceeds u64".into()))
}
