//! Dense two-phase primal simplex.
//!
//! Problems are always `maximize c·x` over `x >= 0`. Pivoting follows
//! Bland's least-index rule in both phases, so degenerate vertices (common
//! in DEA, where many units sit on the frontier) cannot cycle.

use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub coefficients: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

/// `maximize objective·x` subject to `rows`, `x >= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct LpProblem {
    objective: Vec<f64>,
    rows: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { value: f64, solution: Vec<f64> },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn value(&self) -> Option<f64> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(*value),
            _ => None,
        }
    }
}

impl LpProblem {
    pub fn maximize(objective: Vec<f64>) -> Self {
        LpProblem {
            objective,
            rows: Vec::new(),
        }
    }

    pub fn add_constraint(&mut self, coefficients: Vec<f64>, relation: Relation, rhs: f64) {
        self.rows.push(Constraint {
            coefficients,
            relation,
            rhs,
        });
    }

    pub fn with_constraint(mut self, coefficients: Vec<f64>, relation: Relation, rhs: f64) -> Self {
        self.add_constraint(coefficients, relation, rhs);
        self
    }

    pub fn objective(&self) -> &[f64] {
        &self.objective
    }

    pub fn rows(&self) -> &[Constraint] {
        &self.rows
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    fn validate(&self) -> Result<()> {
        let n = self.objective.len();
        if self.objective.iter().any(|c| !c.is_finite()) {
            return Err(Error::MalformedLp(
                "non-finite objective coefficient".into(),
            ));
        }
        for (k, row) in self.rows.iter().enumerate() {
            if row.coefficients.len() != n {
                return Err(Error::MalformedLp(format!(
                    "row {k} has {} coefficients, objective has {n}",
                    row.coefficients.len()
                )));
            }
            if !row.rhs.is_finite() || row.coefficients.iter().any(|c| !c.is_finite()) {
                return Err(Error::MalformedLp(format!(
                    "row {k} has a non-finite entry"
                )));
            }
        }
        Ok(())
    }

    /// Largest violation of any row (and of `x >= 0`) at `x`.
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        let mut worst = x.iter().fold(0.0_f64, |w, &v| w.max(-v));
        for row in &self.rows {
            let lhs: f64 = row.coefficients.iter().zip(x).map(|(a, v)| a * v).sum();
            let viol = match row.relation {
                Relation::Le => lhs - row.rhs,
                Relation::Ge => row.rhs - lhs,
                Relation::Eq => (lhs - row.rhs).abs(),
            };
            worst = worst.max(viol);
        }
        worst
    }
}

struct Tableau {
    // rows x (cols + 1); last column is the right-hand side
    t: Vec<Vec<f64>>,
    // reduced costs, last entry is minus the objective value
    cost: Vec<f64>,
    basis: Vec<usize>,
    cols: usize,
    iterations: usize,
    cap: usize,
    tol: f64,
}

enum Phase {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn pivot(&mut self, pr: usize, pc: usize) {
        let inv = 1.0 / self.t[pr][pc];
        for v in self.t[pr].iter_mut() {
            *v *= inv;
        }
        self.t[pr][pc] = 1.0;
        let pivot_row = self.t[pr].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == pr {
                continue;
            }
            let f = row[pc];
            if f != 0.0 {
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= f * p;
                }
                row[pc] = 0.0;
            }
        }
        let f = self.cost[pc];
        if f != 0.0 {
            for (v, p) in self.cost.iter_mut().zip(&pivot_row) {
                *v -= f * p;
            }
            self.cost[pc] = 0.0;
        }
        self.basis[pr] = pc;
    }

    /// Loads `c` as the objective and prices out the current basis.
    fn set_objective(&mut self, c: &[f64]) {
        self.cost = vec![0.0; self.cols + 1];
        self.cost[..c.len()].copy_from_slice(c);
        for (i, &b) in self.basis.iter().enumerate() {
            let f = self.cost[b];
            if f != 0.0 {
                for (v, p) in self.cost.iter_mut().zip(&self.t[i]) {
                    *v -= f * p;
                }
            }
        }
    }

    fn run(&mut self, allowed: usize) -> Result<Phase> {
        let rhs = self.cols;
        loop {
            let Some(pc) = (0..allowed).find(|&j| self.cost[j] > self.tol) else {
                return Ok(Phase::Optimal);
            };
            let mut leave: Option<(usize, f64)> = None;
            for (i, row) in self.t.iter().enumerate() {
                let a = row[pc];
                if a <= self.tol {
                    continue;
                }
                let ratio = row[rhs].max(0.0) / a;
                leave = match leave {
                    None => Some((i, ratio)),
                    Some((bi, br)) => {
                        if ratio < br - self.tol
                            || (ratio <= br + self.tol && self.basis[i] < self.basis[bi])
                        {
                            Some((i, ratio))
                        } else {
                            Some((bi, br))
                        }
                    }
                };
            }
            let Some((pr, _)) = leave else {
                return Ok(Phase::Unbounded);
            };
            self.iterations += 1;
            if self.iterations > self.cap {
                return Err(Error::NumericalBreakdown(self.cap));
            }
            self.pivot(pr, pc);
        }
    }
}

/// Solves `lp` with feasibility/optimality tolerance `tol`.
pub fn solve(lp: &LpProblem, tol: f64) -> Result<LpOutcome> {
    lp.validate()?;
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::MalformedLp(format!(
            "tolerance {tol} must be positive"
        )));
    }
    let n = lp.num_vars();
    let m = lp.rows.len();

    // Normalize to non-negative right-hand sides.
    let rows: Vec<(Vec<f64>, Relation, f64)> = lp
        .rows
        .iter()
        .map(|r| {
            if r.rhs < 0.0 {
                let rel = match r.relation {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
                (r.coefficients.iter().map(|a| -a).collect(), rel, -r.rhs)
            } else {
                (r.coefficients.clone(), r.relation, r.rhs)
            }
        })
        .collect();

    let n_slack = rows.iter().filter(|r| r.1 != Relation::Eq).count();
    let n_art = rows.iter().filter(|r| r.1 != Relation::Le).count();
    let art_start = n + n_slack;
    let cols = art_start + n_art;

    let mut t = vec![vec![0.0; cols + 1]; m];
    let mut basis = vec![0; m];
    let mut slack = n;
    let mut art = art_start;
    for (i, (coeffs, rel, rhs)) in rows.iter().enumerate() {
        t[i][..n].copy_from_slice(coeffs);
        t[i][cols] = *rhs;
        match rel {
            Relation::Le => {
                t[i][slack] = 1.0;
                basis[i] = slack;
                slack += 1;
            }
            Relation::Ge => {
                t[i][slack] = -1.0;
                slack += 1;
                t[i][art] = 1.0;
                basis[i] = art;
                art += 1;
            }
            Relation::Eq => {
                t[i][art] = 1.0;
                basis[i] = art;
                art += 1;
            }
        }
    }

    let mut tab = Tableau {
        t,
        cost: Vec::new(),
        basis,
        cols,
        iterations: 0,
        cap: 50 * (m + cols),
        tol,
    };

    if n_art > 0 {
        let mut phase1 = vec![0.0; cols];
        for c in phase1.iter_mut().skip(art_start) {
            *c = -1.0;
        }
        tab.set_objective(&phase1);
        tab.run(cols)?;
        let infeasibility: f64 = tab
            .basis
            .iter()
            .zip(&tab.t)
            .filter(|(&b, _)| b >= art_start)
            .map(|(_, row)| row[cols].max(0.0))
            .sum();
        let scale = 1.0 + rows.iter().fold(0.0_f64, |s, r| s.max(r.2.abs()));
        if infeasibility > 10.0 * tol * scale {
            return Ok(LpOutcome::Infeasible);
        }
        // Drive remaining (zero-level) artificials out; drop redundant rows.
        let mut i = 0;
        while i < tab.t.len() {
            if tab.basis[i] >= art_start {
                let pc = (0..art_start).find(|&j| tab.t[i][j].abs() > tol);
                match pc {
                    Some(pc) => {
                        tab.pivot(i, pc);
                        i += 1;
                    }
                    None => {
                        tab.t.remove(i);
                        tab.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }
    }

    tab.set_objective(&lp.objective);
    match tab.run(art_start)? {
        Phase::Unbounded => Ok(LpOutcome::Unbounded),
        Phase::Optimal => {
            let mut solution = vec![0.0; n];
            for (row, &b) in tab.t.iter().zip(&tab.basis) {
                if b < n {
                    solution[b] = row[cols];
                }
            }
            let value = lp.objective.iter().zip(&solution).map(|(c, x)| c * x).sum();
            Ok(LpOutcome::Optimal { value, solution })
        }
    }
}
