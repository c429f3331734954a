//! Dense two-phase simplex over exact rationals.
//!
//! Maximises `c·x` subject to linear constraints and `x >= 0`. Pivoting
//! follows Bland's rule (lowest-index entering column, lowest-index leaving
//! basic variable on ratio ties), so the method terminates without cycling.
//! Intended for the tiny programs of the scheme module; no attempt is made
//! at sparsity or numerical tricks.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub relation: Relation,
    pub rhs: BigRational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearProgram {
    /// Objective to maximise.
    pub objective: Vec<BigRational>,
    pub constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Optimal {
        value: BigRational,
        x: Vec<BigRational>,
    },
    Infeasible,
    Unbounded,
}

impl LinearProgram {
    pub fn new(objective: Vec<BigRational>) -> Self {
        LinearProgram {
            objective,
            constraints: Vec::new(),
        }
    }

    pub fn add(&mut self, coeffs: Vec<BigRational>, relation: Relation, rhs: BigRational) {
        assert_eq!(coeffs.len(), self.objective.len(), "constraint width");
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    /// Checks `x >= 0` and every constraint exactly.
    pub fn is_feasible(&self, x: &[BigRational]) -> bool {
        x.len() == self.objective.len()
            && x.iter().all(|v| !v.is_negative())
            && self.constraints.iter().all(|c| {
                let lhs = dot(&c.coeffs, x);
                match c.relation {
                    Relation::Le => lhs <= c.rhs,
                    Relation::Ge => lhs >= c.rhs,
                    Relation::Eq => lhs == c.rhs,
                }
            })
    }

    pub fn solve(&self) -> Solution {
        Tableau::build(self).solve(&self.objective)
    }
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b)
        .fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

struct Tableau {
    rows: Vec<Vec<BigRational>>,
    rhs: Vec<BigRational>,
    basis: Vec<usize>,
    num_vars: usize,
    artificial_from: usize,
    width: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let num_vars = lp.objective.len();
        // Normalise to rhs >= 0.
        let normalised: Vec<(Vec<BigRational>, Relation, BigRational)> = lp
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    let rel = match c.relation {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (c.coeffs.iter().map(|v| -v).collect(), rel, -&c.rhs)
                } else {
                    (c.coeffs.clone(), c.relation, c.rhs.clone())
                }
            })
            .collect();
        let slacks = normalised
            .iter()
            .filter(|(_, r, _)| *r != Relation::Eq)
            .count();
        let artificials = normalised
            .iter()
            .filter(|(_, r, _)| *r != Relation::Le)
            .count();
        let artificial_from = num_vars + slacks;
        let width = artificial_from + artificials;

        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        let mut basis = Vec::new();
        let (mut next_slack, mut next_art) = (num_vars, artificial_from);
        for (coeffs, rel, b) in normalised {
            let mut row = coeffs;
            row.resize(width, BigRational::zero());
            match rel {
                Relation::Le => {
                    row[next_slack] = BigRational::one();
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Relation::Ge => {
                    row[next_slack] = -BigRational::one();
                    next_slack += 1;
                    row[next_art] = BigRational::one();
                    basis.push(next_art);
                    next_art += 1;
                }
                Relation::Eq => {
                    row[next_art] = BigRational::one();
                    basis.push(next_art);
                    next_art += 1;
                }
            }
            rows.push(row);
            rhs.push(b);
        }
        Tableau {
            rows,
            rhs,
            basis,
            num_vars,
            artificial_from,
            width,
        }
    }

    fn solve(mut self, objective: &[BigRational]) -> Solution {
        // Phase 1: maximise minus the sum of artificials.
        if self.artificial_from < self.width {
            let cost: Vec<BigRational> = (0..self.width)
                .map(|j| {
                    if j >= self.artificial_from {
                        -BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect();
            let allowed = vec![true; self.width];
            if !self.optimize(&cost, &allowed) {
                unreachable!("phase one is bounded above by zero");
            }
            if self.objective_value(&cost).is_negative() {
                return Solution::Infeasible;
            }
            self.drive_out_artificials();
        }

        let mut cost = objective.to_vec();
        cost.resize(self.width, BigRational::zero());
        let allowed: Vec<bool> = (0..self.width).map(|j| j < self.artificial_from).collect();
        if !self.optimize(&cost, &allowed) {
            return Solution::Unbounded;
        }
        let mut x = vec![BigRational::zero(); self.num_vars];
        for (r, &b) in self.basis.iter().enumerate() {
            if b < self.num_vars {
                x[b] = self.rhs[r].clone();
            }
        }
        Solution::Optimal {
            value: dot(objective, &x),
            x,
        }
    }

    fn objective_value(&self, cost: &[BigRational]) -> BigRational {
        self.basis
            .iter()
            .zip(&self.rhs)
            .fold(BigRational::zero(), |acc, (&b, v)| acc + &cost[b] * v)
    }

    /// Runs simplex iterations to optimality. Returns `false` if unbounded.
    fn optimize(&mut self, cost: &[BigRational], allowed: &[bool]) -> bool {
        loop {
            let entering = (0..self.width).find(|&j| {
                allowed[j] && !self.basis.contains(&j) && self.reduced_cost(cost, j).is_positive()
            });
            let Some(col) = entering else {
                return true;
            };
            let mut leaving: Option<(usize, BigRational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[r] / a;
                let better = match &leaving {
                    None => true,
                    Some((lr, best)) => {
                        ratio < *best || (ratio == *best && self.basis[r] < self.basis[*lr])
                    }
                };
                if better {
                    leaving = Some((r, ratio));
                }
            }
            match leaving {
                Some((row, _)) => self.pivot(row, col),
                None => return false,
            }
        }
    }

    fn reduced_cost(&self, cost: &[BigRational], col: usize) -> BigRational {
        let z = self
            .basis
            .iter()
            .zip(&self.rows)
            .fold(BigRational::zero(), |acc, (&b, row)| {
                acc + &cost[b] * &row[col]
            });
        &cost[col] - z
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            *v = &*v / &p;
        }
        self.rhs[row] = &self.rhs[row] / &p;
        let pivot_row = self.rows[row].clone();
        let pivot_rhs = self.rhs[row].clone();
        for r in 0..self.rows.len() {
            if r == row || self.rows[r][col].is_zero() {
                continue;
            }
            let factor = self.rows[r][col].clone();
            for (v, pv) in self.rows[r].iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = &*v - &factor * pv;
                }
            }
            self.rhs[r] = &self.rhs[r] - &factor * &pivot_rhs;
        }
        self.basis[row] = col;
    }

    /// After a feasible phase one, artificials left in the basis sit at
    /// zero. Pivot them out, or drop the row if it is redundant.
    fn drive_out_artificials(&mut self) {
        let mut r = 0;
        while r < self.rows.len() {
            if self.basis[r] < self.artificial_from {
                r += 1;
                continue;
            }
            match (0..self.artificial_from).find(|&j| !self.rows[r][j].is_zero()) {
                Some(col) => {
                    self.pivot(r, col);
                    r += 1;
                }
                None => {
                    self.rows.remove(r);
                    self.rhs.remove(r);
                    self.basis.remove(r);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64) -> BigRational {
        BigRational::from_integer(p.into())
    }

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn textbook_maximum() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6)
        let mut lp = LinearProgram::new(vec![r(3), r(5)]);
        lp.add(vec![r(1), r(0)], Relation::Le, r(4));
        lp.add(vec![r(0), r(2)], Relation::Le, r(12));
        lp.add(vec![r(3), r(2)], Relation::Le, r(18));
        match lp.solve() {
            Solution::Optimal { value, x } => {
                assert_eq!(value, r(36));
                assert_eq!(x, vec![r(2), r(6)]);
                assert!(lp.is_feasible(&x));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn equality_and_ge_constraints() {
        // max x + y, x + 2y = 3, x >= 1/2, y <= 1 -> x = 3, y = 0
        let mut lp = LinearProgram::new(vec![r(1), r(1)]);
        lp.add(vec![r(1), r(2)], Relation::Eq, r(3));
        lp.add(vec![r(1), r(0)], Relation::Ge, q(1, 2));
        lp.add(vec![r(0), r(1)], Relation::Le, r(1));
        assert_eq!(
            lp.solve(),
            Solution::Optimal {
                value: r(3),
                x: vec![r(3), r(0)]
            }
        );
    }

    #[test]
    fn negative_rhs_is_normalised() {
        // max -x, -x <= -2  ->  x = 2
        let mut lp = LinearProgram::new(vec![r(-1)]);
        lp.add(vec![r(-1)], Relation::Le, r(-2));
        assert_eq!(
            lp.solve(),
            Solution::Optimal {
                value: r(-2),
                x: vec![r(2)]
            }
        );
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = LinearProgram::new(vec![r(1)]);
        lp.add(vec![r(1)], Relation::Le, r(1));
        lp.add(vec![r(1)], Relation::Ge, r(2));
        assert_eq!(lp.solve(), Solution::Infeasible);

        let mut lp = LinearProgram::new(vec![r(1), r(0)]);
        lp.add(vec![r(-1), r(1)], Relation::Le, r(1));
        assert_eq!(lp.solve(), Solution::Unbounded);
    }

    #[test]
    fn redundant_equalities() {
        let mut lp = LinearProgram::new(vec![r(1), r(1)]);
        lp.add(vec![r(1), r(1)], Relation::Eq, r(2));
        lp.add(vec![r(2), r(2)], Relation::Eq, r(4));
        match lp.solve() {
            Solution::Optimal { value, .. } => assert_eq!(value, r(2)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn no_variables() {
        let lp = LinearProgram::new(vec![]);
        assert_eq!(
            lp.solve(),
            Solution::Optimal {
                value: r(0),
                x: vec![]
            }
        );
        let mut lp = LinearProgram::new(vec![]);
        lp.add(vec![], Relation::Eq, r(1));
        assert_eq!(lp.solve(), Solution::Infeasible);
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example, cycles under the largest-coefficient rule.
        let mut lp = LinearProgram::new(vec![q(3, 4), r(-150), q(1, 50), r(-6)]);
        lp.add(vec![q(1, 4), r(-60), q(-1, 25), r(9)], Relation::Le, r(0));
        lp.add(vec![q(1, 2), r(-90), q(-1, 50), r(3)], Relation::Le, r(0));
        lp.add(vec![r(0), r(0), r(1), r(0)], Relation::Le, r(1));
        match lp.solve() {
            Solution::Optimal { value, x } => {
                assert_eq!(value, q(1, 20));
                assert!(lp.is_feasible(&x));
            }
            other => panic!("{other:?}"),
        }
    }
}
