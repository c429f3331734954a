use super::SearchResult;
use crate::family::KSetFamily;
use crate::math::int;
use crate::scheme::{all_nonnegative, macwilliams_transform, scheme_tables};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CertificateReport {
    pub checks: Vec<Check>,
}

impl CertificateReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name,
            passed,
            detail: detail.into(),
        });
    }
}

pub fn verify_certificate(result: &SearchResult) -> CertificateReport {
    match &result.family {
        Some(f) => {
            let mut report = verify_family(f);
            report.push(
                "size",
                f.len() == result.size,
                format!("reported {}, actual {}", result.size, f.len()),
            );
            report
        }
        None => {
            let mut report = CertificateReport::default();
            report.push("family", false, "no family to check");
            report
        }
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// Recomputes everything a certificate claims from the sets alone.
pub fn verify_family(f: &KSetFamily) -> CertificateReport {
    let mut report = CertificateReport::default();
    let regular = f.is_regular().ok().flatten();
    report.push(
        "regular",
        regular.is_some(),
        regular.map_or("degrees differ".to_string(), |d| format!("delta = {d}")),
    );
    let intersecting = f.is_intersecting();
    report.push("intersecting", intersecting, "");

    let profile = f.degree_profile();
    let sum_ok = profile.sum() == (f.k() * f.len()) as u64;
    report.push(
        "degree_profile",
        sum_ok && (profile.min() == profile.max()) == regular.is_some(),
        format!(
            "min {}, max {}, sum {}",
            profile.min(),
            profile.max(),
            profile.sum()
        ),
    );

    match f.inner_distribution() {
        Ok(dist) => {
            let total: num_rational::BigRational = dist.a().iter().sum();
            let ok = *dist.get(0) == int(1)
                && total == int(f.len() as i64)
                && (!intersecting || *dist.get(f.k()) == int(0));
            report.push("inner_distribution", ok, join(dist.a()));
            if f.n() >= 2 * f.k() {
                match scheme_tables(f.n(), f.k()).and_then(|t| macwilliams_transform(&t, &dist)) {
                    Ok(mw) => {
                        let zero_first = mw.get(1).is_some_and(|x| *x == int(0));
                        report.push(
                            "macwilliams",
                            all_nonnegative(&mw) && zero_first == regular.is_some(),
                            join(&mw),
                        );
                    }
                    Err(e) => report.push("macwilliams", false, e.to_string()),
                }
            }
        }
        Err(e) => report.push("inner_distribution", false, e.to_string()),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::neq2k_construction;
    use crate::family::tests::fano;

    #[test]
    fn fano_passes() {
        let r = verify_family(&fano());
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.get("regular").unwrap().detail, "delta = 3");
    }

    #[test]
    fn tampered_fails_regularity() {
        let mut sets = fano().sets().to_vec();
        sets.pop();
        let f = KSetFamily::from_ksets(7, 3, sets).unwrap();
        let r = verify_family(&f);
        assert!(!r.get("regular").unwrap().passed);
        assert!(r.get("intersecting").unwrap().passed);
        assert!(r.get("macwilliams").unwrap().passed);
        assert!(!r.passed());
    }

    #[test]
    fn neq2k_passes() {
        let r = verify_family(&neq2k_construction(4).unwrap());
        assert!(r.passed());
        assert_eq!(r.get("regular").unwrap().detail, "delta = 16");
    }
}
