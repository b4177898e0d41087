//! Two-phase primal simplex on a dense tableau with Bland's rule.
//!
//! Generic over [`LpScalar`]: with `BigRational` every pivot is exact and the
//! tolerance is zero; with floats, magnitudes below the scalar's tolerance are
//! treated as zero.

use crate::error::{Error, Result};
use crate::scalar::LpScalar;

/// `maximize objective·x` subject to `constraints·x = rhs`, `x ≥ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearProgram<T> {
    pub constraints: Vec<Vec<T>>,
    pub rhs: Vec<T>,
    pub objective: Vec<T>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution<T> {
    pub values: Vec<T>,
    pub objective: T,
    /// Basic variable of each remaining row after redundant rows are dropped.
    pub basis: Vec<usize>,
    pub pivots: usize,
}

struct Tableau<T> {
    rows: Vec<Vec<T>>,
    basis: Vec<usize>,
    profit: Vec<T>,
    value: T,
    /// Columns that may not enter the basis.
    barred: Vec<bool>,
    pivots: usize,
}

impl<T: LpScalar> Tableau<T> {
    fn rhs(&self) -> usize {
        self.profit.len()
    }

    fn pivot(&mut self, p: usize, q: usize) {
        let rhs = self.rhs();
        let lead = self.rows[p][q].clone();
        for x in self.rows[p].iter_mut() {
            *x = x.clone() / lead.clone();
        }
        let pivot_row = self.rows[p].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == p || row[q].is_zero() {
                continue;
            }
            let factor = row[q].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = x.clone() - factor.clone() * y.clone();
                }
            }
        }
        let factor = self.profit[q].clone();
        if !factor.is_zero() {
            for (x, y) in self.profit.iter_mut().zip(&pivot_row) {
                *x = x.clone() - factor.clone() * y.clone();
            }
            self.value = self.value.clone() + factor * pivot_row[rhs].clone();
        }
        self.basis[p] = q;
        self.pivots += 1;
    }

    /// Runs Bland's rule to optimality. Returns `false` when unbounded.
    fn optimize(&mut self) -> bool {
        let rhs = self.rhs();
        loop {
            let entering = (0..rhs).find(|&j| !self.barred[j] && self.profit[j].is_clearly_positive());
            let Some(q) = entering else {
                return true;
            };
            let mut leave: Option<(usize, T)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[q].is_clearly_positive() {
                    continue;
                }
                let ratio = row[rhs].clone() / row[q].clone();
                let better = match &leave {
                    None => true,
                    Some((l, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((p, _)) => self.pivot(p, q),
                None => return false,
            }
        }
    }
}

impl<T: LpScalar> LinearProgram<T> {
    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    /// Solves the program to optimality.
    pub fn solve(&self) -> Result<LpSolution<T>> {
        let n = self.num_vars();
        let m = self.constraints.len();
        let width = n + m;

        // Phase 1: one artificial per row, maximize minus their sum.
        let mut rows = Vec::with_capacity(m);
        for (i, (row, b)) in self.constraints.iter().zip(&self.rhs).enumerate() {
            let flip = b.is_negative();
            let mut t: Vec<T> = row
                .iter()
                .map(|a| if flip { -a.clone() } else { a.clone() })
                .collect();
            t.extend((0..m).map(|k| if k == i { T::one() } else { T::zero() }));
            t.push(if flip { -b.clone() } else { b.clone() });
            rows.push(t);
        }
        let mut profit = vec![T::zero(); width];
        let mut value = T::zero();
        for row in &rows {
            for j in 0..n {
                profit[j] = profit[j].clone() + row[j].clone();
            }
            value = value - row[width].clone();
        }
        let mut tab = Tableau {
            rows,
            basis: (n..width).collect(),
            profit,
            value,
            barred: vec![false; width],
            pivots: 0,
        };
        tab.optimize();
        if tab.value.is_clearly_negative() {
            return Err(Error::Infeasible);
        }

        // Drive zero-level artificials out of the basis; drop redundant rows.
        let mut i = 0;
        while i < tab.rows.len() {
            if tab.basis[i] < n {
                i += 1;
                continue;
            }
            match (0..n).find(|&j| !tab.rows[i][j].is_negligible()) {
                Some(j) => {
                    tab.pivot(i, j);
                    i += 1;
                }
                None => {
                    tab.rows.remove(i);
                    tab.basis.remove(i);
                }
            }
        }

        // Phase 2 on the original objective.
        for j in n..width {
            tab.barred[j] = true;
        }
        let mut profit: Vec<T> = self.objective.iter().cloned().chain((0..m).map(|_| T::zero())).collect();
        let mut value = T::zero();
        for (row, &b) in tab.rows.iter().zip(&tab.basis) {
            let cb = self.objective[b].clone();
            if cb.is_zero() {
                continue;
            }
            for j in 0..width {
                profit[j] = profit[j].clone() - cb.clone() * row[j].clone();
            }
            value = value + cb * row[width].clone();
        }
        tab.profit = profit;
        tab.value = value;
        if !tab.optimize() {
            return Err(Error::Unbounded);
        }

        let mut values = vec![T::zero(); n];
        for (row, &b) in tab.rows.iter().zip(&tab.basis) {
            values[b] = row[width].clone();
        }
        Ok(LpSolution { values, objective: tab.value, basis: tab.basis, pivots: tab.pivots })
    }

    /// Largest absolute residual of `values` against the equality rows.
    pub fn max_residual(&self, values: &[T]) -> T {
        let mut worst = T::zero();
        for (row, b) in self.constraints.iter().zip(&self.rhs) {
            let lhs = row
                .iter()
                .zip(values)
                .fold(T::zero(), |acc, (a, x)| acc + a.clone() * x.clone());
            let r = (lhs - b.clone()).abs();
            if r > worst {
                worst = r;
            }
        }
        worst
    }
}
