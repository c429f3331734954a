use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{check_domain, first_column_numerator, SchemeTables};
use crate::error::{Error, Result};
use crate::simplex::{LinearProgram, Relation, Solution};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
}

/// Result of the Delsarte program. For an infeasible program `optimum` is
/// zero and `witness` is empty: no nonempty family satisfies the constraints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpOutcome {
    pub status: LpStatus,
    pub optimum: BigRational,
    /// `a_1 .. a_{k-1}` of an optimal inner distribution.
    pub witness: Vec<BigRational>,
    /// The program that was solved, kept for exact re-checking.
    pub program: LinearProgram,
}

impl LpOutcome {
    /// Full inner distribution `(1, a_1, ..., a_{k-1}, 0)` of the witness.
    pub fn distribution(&self) -> Vec<BigRational> {
        let mut a = vec![BigRational::one()];
        a.extend(self.witness.iter().cloned());
        a.push(BigRational::zero());
        a
    }
}

/// Maximises `1 + a_1 + ... + a_{k-1}` over nonnegative rationals subject
/// to `sum_i Q_{ij} a_i >= 0` for `j = 1..k` (with `a_0 = 1`, `a_k = 0`),
/// and, when `require_regular`, `sum_i (kn - in - k^2) a_i = 0`.
pub fn lp_max_regular_intersecting(n: usize, k: usize, require_regular: bool) -> Result<LpOutcome> {
    check_domain(n, k)?;
    let tables = SchemeTables::new(n, k)?;
    let vars = k - 1;
    let mut lp = LinearProgram::new(vec![BigRational::one(); vars]);
    for j in 1..=k {
        let coeffs: Vec<BigRational> = (1..k).map(|i| tables.q[i][j].clone()).collect();
        lp.add(coeffs, Relation::Ge, -tables.q[0][j].clone());
    }
    if require_regular {
        let coeffs: Vec<BigRational> = (1..k)
            .map(|i| BigRational::from_integer(first_column_numerator(n, k, i)))
            .collect();
        let rhs: BigInt = -first_column_numerator(n, k, 0);
        lp.add(coeffs, Relation::Eq, BigRational::from_integer(rhs));
    }
    match lp.solve() {
        Solution::Optimal { value, x } => Ok(LpOutcome {
            status: LpStatus::Optimal,
            optimum: value + BigRational::one(),
            witness: x,
            program: lp,
        }),
        Solution::Infeasible => Ok(LpOutcome {
            status: LpStatus::Infeasible,
            optimum: BigRational::zero(),
            witness: Vec::new(),
            program: lp,
        }),
        Solution::Unbounded => Err(Error::LpUnbounded),
    }
}
