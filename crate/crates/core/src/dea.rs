//! Crisp CCR multiplier model.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linprog::{self, LpOutcome, LpProblem, Relation, DEFAULT_TOL};

/// Whether the evaluated unit's own ratio constraint is kept.
///
/// `ExcludeSelf` gives super-efficiency scores, which may exceed 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SelfPolicy {
    IncludeSelf,
    ExcludeSelf,
}

impl fmt::Display for SelfPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SelfPolicy::IncludeSelf => "include-self",
            SelfPolicy::ExcludeSelf => "exclude-self",
        })
    }
}

/// Crisp data: `inputs[i][j]` is input `i` of unit `j`, likewise `outputs[r][j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct CrispDataset {
    names: Vec<String>,
    inputs: Vec<Vec<f64>>,
    outputs: Vec<Vec<f64>>,
}

impl CrispDataset {
    pub fn new(names: Vec<String>, inputs: Vec<Vec<f64>>, outputs: Vec<Vec<f64>>) -> Result<Self> {
        let n = names.len();
        if inputs.is_empty() || outputs.is_empty() {
            return Err(Error::Data("need at least one input and one output".into()));
        }
        for (kind, rows) in [("input", &inputs), ("output", &outputs)] {
            for (k, row) in rows.iter().enumerate() {
                if row.len() != n {
                    return Err(Error::Data(format!(
                        "{kind} {k} has {} values for {n} units",
                        row.len()
                    )));
                }
                if let Some(j) = row.iter().position(|v| !(v.is_finite() && *v > 0.0)) {
                    return Err(Error::Data(format!(
                        "{kind} {k} of unit '{}' is {}, must be positive",
                        names[j], row[j]
                    )));
                }
            }
        }
        Ok(CrispDataset {
            names,
            inputs,
            outputs,
        })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn inputs(&self) -> &[Vec<f64>] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[Vec<f64>] {
        &self.outputs
    }

    pub fn num_dmus(&self) -> usize {
        self.names.len()
    }

    pub fn input(&self, i: usize, j: usize) -> f64 {
        self.inputs[i][j]
    }

    pub fn output(&self, r: usize, j: usize) -> f64 {
        self.outputs[r][j]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CcrResult {
    pub efficiency: f64,
    /// `v_i`
    pub input_weights: Vec<f64>,
    /// `u_r`
    pub output_weights: Vec<f64>,
}

pub fn ccr_efficiency(data: &CrispDataset, p: usize, policy: SelfPolicy) -> Result<CcrResult> {
    ccr_efficiency_with_tol(data, p, policy, DEFAULT_TOL)
}

/// Solves `max Σ u_r y_rp` s.t. `Σ v_i x_ip = 1`, `Σ u_r y_rj − Σ v_i x_ij <= 0`.
///
/// Each factor is divided by its largest value across units before the LP
/// is built; the score is invariant under that rescaling and the weights
/// are mapped back to the original units.
pub fn ccr_efficiency_with_tol(
    data: &CrispDataset,
    p: usize,
    policy: SelfPolicy,
    tol: f64,
) -> Result<CcrResult> {
    let n = data.num_dmus();
    if p >= n {
        return Err(Error::Data(format!(
            "unit index {p} out of range ({n} units)"
        )));
    }
    let m = data.inputs.len();
    let s = data.outputs.len();
    let row_max = |row: &Vec<f64>| row.iter().copied().fold(0.0_f64, f64::max);
    let in_scale: Vec<f64> = data.inputs.iter().map(row_max).collect();
    let out_scale: Vec<f64> = data.outputs.iter().map(row_max).collect();
    let x = |i: usize, j: usize| data.inputs[i][j] / in_scale[i];
    let y = |r: usize, j: usize| data.outputs[r][j] / out_scale[r];

    // variables: u_1..u_s, v_1..v_m
    let mut objective = vec![0.0; s + m];
    for (r, c) in objective.iter_mut().enumerate().take(s) {
        *c = y(r, p);
    }
    let mut lp = LpProblem::maximize(objective);
    let mut norm = vec![0.0; s + m];
    for i in 0..m {
        norm[s + i] = x(i, p);
    }
    lp.add_constraint(norm, Relation::Eq, 1.0);
    for j in 0..n {
        if j == p && policy == SelfPolicy::ExcludeSelf {
            continue;
        }
        let row = (0..s)
            .map(|r| y(r, j))
            .chain((0..m).map(|i| -x(i, j)))
            .collect();
        lp.add_constraint(row, Relation::Le, 0.0);
    }

    match linprog::solve(&lp, tol).map_err(|e| Error::SolverFailure {
        dmu: p,
        reason: e.to_string(),
    })? {
        LpOutcome::Optimal { value, solution } => Ok(CcrResult {
            efficiency: value,
            output_weights: (0..s)
                .map(|r| solution[r].max(0.0) / out_scale[r])
                .collect(),
            input_weights: (0..m)
                .map(|i| solution[s + i].max(0.0) / in_scale[i])
                .collect(),
        }),
        LpOutcome::Unbounded => Err(Error::SolverFailure {
            dmu: p,
            reason: "multiplier LP is unbounded".into(),
        }),
        LpOutcome::Infeasible => Err(Error::SolverFailure {
            dmu: p,
            reason: "multiplier LP is infeasible".into(),
        }),
    }
}

/// Scores every unit in input order.
pub fn ccr_scores(data: &CrispDataset, policy: SelfPolicy) -> Result<Vec<f64>> {
    (0..data.num_dmus())
        .map(|p| ccr_efficiency(data, p, policy).map(|r| r.efficiency))
        .collect()
}
