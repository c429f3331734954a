use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use rif::math::binomial;
use rif::scheme::{
    dual_eigenvalue_closed, eigenvalue_p, eigenvalue_p_alt, gamma_coefficients, gamma_from_tables,
    multiplicity_by_orthogonality, scheme_tables,
};

fn params() -> impl Strategy<Value = (usize, usize)> {
    (1usize..=10).prop_flat_map(|k| (2 * k..=20usize, Just(k)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn p_times_q_is_v_identity((n, k) in params()) {
        let t = scheme_tables(n, k).unwrap();
        let v = BigRational::from_integer(t.v.clone());
        for a in 0..=k {
            for b in 0..=k {
                let pq: BigRational = (0..=k).map(|c| t.p_rational(a, c) * &t.q[c][b]).sum();
                prop_assert_eq!(pq, if a == b { v.clone() } else { BigRational::zero() });
            }
        }
    }

    #[test]
    fn valencies_and_multiplicities((n, k) in params()) {
        let t = scheme_tables(n, k).unwrap();
        for i in 0..=k {
            // r_i = C(k,i) C(n-k,i)
            prop_assert_eq!(&t.r[i], &(binomial(k as i64, i as i64) * binomial((n - k) as i64, i as i64)));
            for j in 0..=k {
                let lhs = BigRational::from_integer(t.r[i].clone()) * &t.q[i][j];
                prop_assert_eq!(lhs, BigRational::from_integer(&t.f[j] * &t.p[j][i]));
            }
        }
        for j in 0..=k {
            // f_j = C(n,j) - C(n,j-1)
            let f = binomial(n as i64, j as i64) - binomial(n as i64, j as i64 - 1);
            prop_assert_eq!(&t.f[j], &f);
            prop_assert_eq!(multiplicity_by_orthogonality(n, k, j).unwrap(), BigRational::from_integer(f));
        }
        prop_assert_eq!(t.r.iter().sum::<BigInt>(), t.v.clone());
        prop_assert_eq!(t.f.iter().sum::<BigInt>(), t.v.clone());
    }

    #[test]
    fn two_sums_agree_and_rows_vanish((n, k) in params()) {
        for j in 0..=k {
            let mut row = BigInt::zero();
            for i in 0..=k {
                let p = eigenvalue_p(n, k, j, i).unwrap();
                prop_assert_eq!(&p, &eigenvalue_p_alt(n, k, j, i).unwrap());
                row += p;
            }
            if j >= 1 {
                prop_assert!(row.is_zero());
            }
        }
    }

    #[test]
    fn closed_forms_match_inverse((n, k) in params()) {
        let t = scheme_tables(n, k).unwrap();
        for i in 0..=k {
            for j in (1..=2).filter(|&j| j <= k) {
                prop_assert_eq!(dual_eigenvalue_closed(n, k, i, j).unwrap(), t.q[i][j].clone());
            }
        }
        if k >= 3 {
            for (i, g) in gamma_coefficients(n, k).unwrap().into_iter().enumerate() {
                prop_assert_eq!(gamma_from_tables(&t, i), BigRational::from_integer(g));
            }
        }
    }
}

#[test]
fn out_of_domain() {
    assert!(scheme_tables(5, 3).is_err());
    assert!(scheme_tables(4, 0).is_err());
    assert!(gamma_coefficients(9, 2).is_err());
}
