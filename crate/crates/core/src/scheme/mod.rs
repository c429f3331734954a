//! Exact algebra of the Johnson scheme `J(n, k)`.
//!
//! Vertices are the `k`-subsets of `[n]`; two of them are in relation `R_i`
//! when they meet in `k - i` elements. Everything here is expressed through
//! the `(k+1) x (k+1)` eigenvalue matrices, never through the `C(n,k)`-sized
//! adjacency matrices.
//!
//! Indexing follows the usual convention: `p[j][i]` is the eigenvalue of the
//! relation-`i` adjacency matrix on eigenspace `j`, and `q[i][j]` is the dual
//! eigenvalue, so that `P * Q = Q * P = v I`.

mod lp;

pub use lp::{lp_max_regular_intersecting, LpOutcome, LpStatus};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::family::InnerDistribution;
use crate::math::binomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeTables {
    pub n: usize,
    pub k: usize,
    /// `p[j][i]`: eigenvalue of `A_i` on `V_j`.
    pub p: Vec<Vec<BigInt>>,
    /// `q[i][j]`: dual eigenvalues, `v * P^{-1}`.
    pub q: Vec<Vec<BigRational>>,
    /// Valencies `r_i = P_{0i}`.
    pub r: Vec<BigInt>,
    /// Multiplicities `f_j = Q_{0j}`.
    pub f: Vec<BigInt>,
    /// `C(n, k)`.
    pub v: BigInt,
}

pub(crate) fn check_domain(n: usize, k: usize) -> Result<()> {
    if k == 0 || n < 2 * k {
        return Err(Error::InvalidParameters(format!(
            "need k >= 1 and n >= 2k, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

fn check_indices(n: usize, k: usize, j: usize, i: usize) -> Result<()> {
    if k == 0 || n < 2 * k || i > k || j > k {
        return Err(Error::InvalidIndices(format!(
            "need 0 <= i, j <= k <= n - k, got n = {n}, k = {k}, j = {j}, i = {i}"
        )));
    }
    Ok(())
}

fn sign(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `P_{ji} = sum_h (-1)^h C(j,h) C(k-j,i-h) C(n-k-j,i-h)`.
pub fn eigenvalue_p(n: usize, k: usize, j: usize, i: usize) -> Result<BigInt> {
    check_indices(n, k, j, i)?;
    let (n, k, j, i) = (n as i64, k as i64, j as i64, i as i64);
    Ok((0..=i)
        .map(|h| sign(h) * binomial(j, h) * binomial(k - j, i - h) * binomial(n - k - j, i - h))
        .sum())
}

/// The same eigenvalue through the alternative expansion
/// `sum_{h=i}^{k} (-1)^{h-i+j} C(h,i) C(n-2h,k-h) C(n-h-j,h-j)`.
pub fn eigenvalue_p_alt(n: usize, k: usize, j: usize, i: usize) -> Result<BigInt> {
    check_indices(n, k, j, i)?;
    let (n, k, j, i) = (n as i64, k as i64, j as i64, i as i64);
    Ok((i..=k)
        .map(|h| {
            sign(h - i + j)
                * binomial(h, i)
                * binomial(n - 2 * h, k - h)
                * binomial(n - h - j, h - j)
        })
        .sum())
}

impl SchemeTables {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        check_domain(n, k)?;
        let p: Vec<Vec<BigInt>> = (0..=k)
            .map(|j| (0..=k).map(|i| eigenvalue_p(n, k, j, i)).collect())
            .collect::<Result<_>>()?;
        let v = binomial(n as i64, k as i64);
        let inverse = invert(&p).expect("Johnson eigenmatrix is nonsingular");
        let vr = BigRational::from_integer(v.clone());
        let q: Vec<Vec<BigRational>> = inverse
            .into_iter()
            .map(|row| row.into_iter().map(|x| x * &vr).collect())
            .collect();
        let r = p[0].clone();
        let f = q[0]
            .iter()
            .map(|x| {
                assert!(x.is_integer(), "multiplicity {x} is not integral");
                x.to_integer()
            })
            .collect();
        Ok(SchemeTables {
            n,
            k,
            p,
            q,
            r,
            f,
            v,
        })
    }

    pub fn p_rational(&self, j: usize, i: usize) -> BigRational {
        BigRational::from_integer(self.p[j][i].clone())
    }
}

pub fn scheme_tables(n: usize, k: usize) -> Result<SchemeTables> {
    SchemeTables::new(n, k)
}

/// Gauss-Jordan inverse over the rationals.
fn invert(m: &[Vec<BigInt>]) -> Option<Vec<Vec<BigRational>>> {
    let size = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut out: Vec<BigRational> = row
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            out.extend((0..size).map(|c| {
                if c == r {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            out
        })
        .collect();
    for col in 0..size {
        let pivot = (col..size).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x / &p;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, px) in row.iter_mut().zip(&pivot_row) {
                *x = &*x - &factor * px;
            }
        }
    }
    Some(a.into_iter().map(|row| row[size..].to_vec()).collect())
}

/// Multiplicity of eigenspace `j` from the orthogonality relation
/// `sum_i P_{ji}^2 / r_i = v / f_j`, independent of any matrix inversion.
pub fn multiplicity_by_orthogonality(n: usize, k: usize, j: usize) -> Result<BigRational> {
    check_indices(n, k, j, 0)?;
    let mut total = BigRational::zero();
    for i in 0..=k {
        let pji = eigenvalue_p(n, k, j, i)?;
        let ri = eigenvalue_p(n, k, 0, i)?;
        total += BigRational::new(&pji * &pji, ri);
    }
    let v = binomial(n as i64, k as i64);
    Ok(BigRational::from_integer(v) / total)
}

/// Closed forms for the first two dual-eigenvalue columns:
/// `c_1 Q_{i1} = kn - in - k^2` and
/// `c_2 Q_{i2} = (k-i)(k-i-1)(n-k-i)(n-k-i-1) - 2i^2(k-i)(n-k-i) + i^2(i-1)^2`,
/// with `c_1 = k(n-k)/f_1` and `c_2 = k(k-1)(n-k)(n-k-1)/f_2`.
pub fn dual_eigenvalue_closed(n: usize, k: usize, i: usize, j: usize) -> Result<BigRational> {
    check_indices(n, k, j, i)?;
    if !(j == 1 || j == 2) || (j == 2 && k < 2) {
        return Err(Error::InvalidIndices(format!(
            "closed form exists for j in {{1, 2}} (k >= 2 for j = 2), got j = {j}, k = {k}"
        )));
    }
    let f = multiplicity_by_orthogonality(n, k, j)?;
    let (numer, c) = if j == 1 {
        (first_column_numerator(n, k, i), first_column_scale(n, k))
    } else {
        (second_column_numerator(n, k, i), second_column_scale(n, k))
    };
    let c = BigRational::from_integer(c) / f;
    Ok(BigRational::from_integer(numer) / c)
}

/// `kn - in - k^2` (that is, `c_1 Q_{i1}`).
pub fn first_column_numerator(n: usize, k: usize, i: usize) -> BigInt {
    let (n, k, i) = (n as i64, k as i64, i as i64);
    BigInt::from(k * n - i * n - k * k)
}

/// `c_2 Q_{i2}`.
pub fn second_column_numerator(n: usize, k: usize, i: usize) -> BigInt {
    let (n, k, i) = (
        BigInt::from(n as i64),
        BigInt::from(k as i64),
        BigInt::from(i as i64),
    );
    let ki = &k - &i;
    let nki = &n - &k - &i;
    &ki * (&ki - 1) * &nki * (&nki - 1) - BigInt::from(2) * &i * &i * &ki * &nki
        + &i * &i * (&i - 1) * (&i - 1)
}

fn first_column_scale(n: usize, k: usize) -> BigInt {
    BigInt::from(k) * BigInt::from(n - k)
}

fn second_column_scale(n: usize, k: usize) -> BigInt {
    BigInt::from(k) * BigInt::from(k - 1) * BigInt::from(n - k) * BigInt::from(n - k - 1)
}

/// Entry `j` is `sum_i Q_{ij} a_i`; all entries are nonnegative for the
/// inner distribution of any actual family.
pub fn macwilliams_transform(
    tables: &SchemeTables,
    dist: &InnerDistribution,
) -> Result<Vec<BigRational>> {
    if dist.len() != tables.k + 1 {
        return Err(Error::DimensionMismatch {
            expected: tables.k + 1,
            actual: dist.len(),
        });
    }
    Ok((0..=tables.k)
        .map(|j| {
            dist.a()
                .iter()
                .enumerate()
                .fold(BigRational::zero(), |acc, (i, ai)| {
                    acc + &tables.q[i][j] * ai
                })
        })
        .collect())
}

/// `gamma_i = -i (n-2) (kn - in - k^2 + i)` for `i = 0..k-1`.
pub fn gamma_coefficients(n: usize, k: usize) -> Result<Vec<BigInt>> {
    check_domain(n, k)?;
    if k < 3 {
        return Err(Error::InvalidParameters(format!("need k >= 3, got {k}")));
    }
    let (nn, kk) = (n as i64, k as i64);
    Ok((0..kk)
        .map(|i| {
            BigInt::from(-i) * BigInt::from(nn - 2) * BigInt::from(kk * nn - i * nn - kk * kk + i)
        })
        .collect())
}

/// `alpha_i - (k-1)(n-k-1) beta_i` with `alpha_i = c_2 Q_{i2}` and
/// `beta_i = c_1 Q_{i1}` read from the tables, for checking
/// [`gamma_coefficients`].
pub fn gamma_from_tables(tables: &SchemeTables, i: usize) -> BigRational {
    let (n, k) = (tables.n, tables.k);
    let c1 = BigRational::new(first_column_scale(n, k), tables.f[1].clone());
    let c2 = BigRational::new(second_column_scale(n, k), tables.f[2].clone());
    let alpha = c2 * &tables.q[i][2];
    let beta = c1 * &tables.q[i][1];
    let factor = BigRational::from_integer(BigInt::from((k - 1) * (n - k - 1)));
    alpha - factor * beta
}

/// `true` when every entry is nonnegative.
pub fn all_nonnegative(values: &[BigRational]) -> bool {
    values.iter().all(|x| !x.is_negative())
}
