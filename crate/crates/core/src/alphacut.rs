//! Optimistic α-cut fuzzy CCR.
//!
//! With interval data the multiplier model is maximized at the extremes of
//! each α-cut: the evaluated unit takes its smallest inputs and largest
//! outputs, every other unit the opposite. The interval program therefore
//! reduces to one crisp CCR solve per unit. The normalization level is
//! fixed at 1 since the objective scales linearly with it.

use serde::{Deserialize, Serialize};

use crate::dataset::{FuzzyDataset, Role};
use crate::dea::{ccr_efficiency_with_tol, CrispDataset, SelfPolicy};
use crate::error::Result;
use crate::fuzzy::check_alpha;
use crate::linprog::DEFAULT_TOL;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaScore {
    pub dmu: String,
    pub alpha: f64,
    pub score: f64,
    pub policy: SelfPolicy,
}

/// Optimistic assignment at membership level `level` for unit `p`.
pub(crate) fn optimistic_at(data: &FuzzyDataset, p: usize, level: f64) -> Result<CrispDataset> {
    data.crisp_with(|j, role, f| match (role, j == p) {
        (Role::Input, true) | (Role::Output, false) => f.rise(level),
        (Role::Input, false) | (Role::Output, true) => f.fall(level),
    })
}

/// Most favourable α-cut endpoints for unit `p`.
pub fn alphacut_reduce(data: &FuzzyDataset, p: usize, alpha: f64) -> Result<CrispDataset> {
    check_alpha(alpha)?;
    data.check_index(p)?;
    optimistic_at(data, p, alpha)
}

/// Least favourable α-cut endpoints for unit `p`: its own inputs high and
/// outputs low, everybody else's inputs low and outputs high.
pub fn pessimistic_reduce(data: &FuzzyDataset, p: usize, alpha: f64) -> Result<CrispDataset> {
    check_alpha(alpha)?;
    data.check_index(p)?;
    data.crisp_with(|j, role, f| match (role, j == p) {
        (Role::Input, true) | (Role::Output, false) => f.fall(alpha),
        (Role::Input, false) | (Role::Output, true) => f.rise(alpha),
    })
}

pub fn alphacut_score(
    data: &FuzzyDataset,
    p: usize,
    alpha: f64,
    policy: SelfPolicy,
    tol: f64,
) -> Result<f64> {
    let crisp = alphacut_reduce(data, p, alpha)?;
    Ok(ccr_efficiency_with_tol(&crisp, p, policy, tol)?.efficiency)
}

pub fn pessimistic_score(
    data: &FuzzyDataset,
    p: usize,
    alpha: f64,
    policy: SelfPolicy,
    tol: f64,
) -> Result<f64> {
    let crisp = pessimistic_reduce(data, p, alpha)?;
    Ok(ccr_efficiency_with_tol(&crisp, p, policy, tol)?.efficiency)
}

/// Scores of all units at one α level, in input order.
pub fn alphacut_scores(
    data: &FuzzyDataset,
    alpha: f64,
    policy: SelfPolicy,
) -> Result<Vec<AlphaScore>> {
    check_alpha(alpha)?;
    data.dmus()
        .iter()
        .enumerate()
        .map(|(p, dmu)| {
            Ok(AlphaScore {
                dmu: dmu.name.clone(),
                alpha,
                score: alphacut_score(data, p, alpha, policy, DEFAULT_TOL)?,
                policy,
            })
        })
        .collect()
}
