//! Multi-objective fuzzy CCR.
//!
//! Each fuzzy coefficient carries its own membership objective, competing
//! with the efficiency of the evaluated unit. A common satisfaction level
//! `h` scalarizes the problem:
//!
//! ```text
//! max h  s.t.  h <= (Σ u_r ȳ_rp) / z*,   h <= μ(x̄_ij),   h <= μ(ȳ_rj),   CCR constraints
//! ```
//!
//! Membership is maximized on the branch that works against the evaluated
//! unit (inputs of the others and outputs of `p` on the falling side, the
//! rest on the rising side), so for a fixed `h` the best data sit exactly
//! at membership `h` and the problem becomes one crisp CCR solve. The
//! remaining one-dimensional condition `eff(h) / z* >= h` is monotone in
//! `h`, which is solved by bisection.
//!
//! An α level restricts every coefficient to its α-cut. [`AlphaMode`]
//! selects how that restriction combines with `h`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alphacut::optimistic_at;
use crate::dataset::FuzzyDataset;
use crate::dea::{ccr_efficiency_with_tol, CrispDataset, SelfPolicy};
use crate::error::{Error, Result};
use crate::fuzzy::check_alpha;
use crate::linprog::DEFAULT_TOL;

pub const DEFAULT_H_TOL: f64 = 1e-6;
pub const MAX_BISECTIONS: usize = 60;

/// How an α level constrains the satisfaction level `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlphaMode {
    /// Each coefficient is replaced by the triangle truncated at its α-cut,
    /// `(l_α, m, u_α)`; `h` is measured on that triangle (level
    /// `α + (1 − α)·h` on the original) and `z*` is the optimistic score at α.
    #[default]
    Truncate,
    /// The α-cut bounds and the membership bounds are intersected (level
    /// `max(α, h)`); `z*` always comes from the full support.
    Clamp,
}

impl AlphaMode {
    /// Membership level on the original triangles.
    pub fn level(self, h: f64, alpha: f64) -> f64 {
        match self {
            AlphaMode::Truncate => alpha + (1.0 - alpha) * h,
            AlphaMode::Clamp => alpha.max(h),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MoConfig {
    pub alpha: f64,
    pub policy: SelfPolicy,
    pub h_tol: f64,
    pub lp_tol: f64,
    pub alpha_mode: AlphaMode,
}

impl Default for MoConfig {
    fn default() -> Self {
        MoConfig {
            alpha: 0.0,
            policy: SelfPolicy::ExcludeSelf,
            h_tol: DEFAULT_H_TOL,
            lp_tol: DEFAULT_TOL,
            alpha_mode: AlphaMode::Truncate,
        }
    }
}

impl MoConfig {
    pub fn at_alpha(alpha: f64) -> Self {
        MoConfig {
            alpha,
            ..Self::default()
        }
    }

    pub fn with_policy(mut self, policy: SelfPolicy) -> Self {
        self.policy = policy;
        self
    }

    pub fn with_mode(mut self, mode: AlphaMode) -> Self {
        self.alpha_mode = mode;
        self
    }

    pub fn validate(&self) -> Result<()> {
        check_alpha(self.alpha)?;
        for (name, v) in [("h tolerance", self.h_tol), ("lp tolerance", self.lp_tol)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Data(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MoResult {
    pub dmu: String,
    pub h_star: f64,
    /// `Σ u_r ȳ_rp` at `h_star`.
    pub efficiency: f64,
    /// The normalizer used for this run.
    pub z_star: f64,
    pub input_weights: Vec<f64>,
    pub output_weights: Vec<f64>,
    pub reduced: CrispDataset,
    pub iterations: usize,
    /// 1-based position after [`evaluate_all`]; 0 when not ranked.
    pub rank: usize,
}

/// Best-case score: `p` at its lowest inputs and highest outputs, every
/// other unit at its highest inputs and lowest outputs.
pub fn z_star(data: &FuzzyDataset, p: usize, policy: SelfPolicy) -> Result<f64> {
    z_star_at(data, p, 0.0, policy, DEFAULT_TOL)
}

/// Best-case score restricted to the α-cuts.
pub fn z_star_at(
    data: &FuzzyDataset,
    p: usize,
    alpha: f64,
    policy: SelfPolicy,
    tol: f64,
) -> Result<f64> {
    check_alpha(alpha)?;
    data.check_index(p)?;
    let crisp = optimistic_at(data, p, alpha)?;
    Ok(ccr_efficiency_with_tol(&crisp, p, policy, tol)?.efficiency)
}

/// Data that maximize membership at level `h` under an α restriction.
/// Crisp coordinates always stay at their value.
pub fn reduced_data(
    data: &FuzzyDataset,
    p: usize,
    h: f64,
    alpha: f64,
    mode: AlphaMode,
) -> Result<CrispDataset> {
    if !(0.0..=1.0).contains(&h) {
        return Err(Error::Range {
            name: "h",
            value: h,
        });
    }
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::Range {
            name: "alpha",
            value: alpha,
        });
    }
    data.check_index(p)?;
    optimistic_at(data, p, mode.level(h, alpha))
}

/// Efficiency of `p` on [`reduced_data`] at level `h`.
pub fn eff_at(data: &FuzzyDataset, p: usize, h: f64, cfg: &MoConfig) -> Result<f64> {
    let crisp = reduced_data(data, p, h, cfg.alpha, cfg.alpha_mode)?;
    Ok(ccr_efficiency_with_tol(&crisp, p, cfg.policy, cfg.lp_tol)?.efficiency)
}

/// The normalizer `z*` that `cfg` pairs with unit `p`.
pub fn normalizer(data: &FuzzyDataset, p: usize, cfg: &MoConfig) -> Result<f64> {
    let alpha = match cfg.alpha_mode {
        AlphaMode::Truncate => cfg.alpha,
        AlphaMode::Clamp => 0.0,
    };
    z_star_at(data, p, alpha, cfg.policy, cfg.lp_tol)
}

/// Largest `h` in `[0, 1]` with `eff_at(h) / z* >= h`.
pub fn solve_mo(data: &FuzzyDataset, p: usize, cfg: &MoConfig) -> Result<MoResult> {
    cfg.validate()?;
    data.check_index(p)?;
    let z = normalizer(data, p, cfg)?;
    if z.is_nan() || z <= 0.0 {
        return Err(Error::DegenerateZStar(z));
    }
    let gap = |h: f64| -> Result<f64> { Ok(eff_at(data, p, h, cfg)? / z - h) };

    let mut iterations = 0;
    let h_star = if gap(1.0)? >= 0.0 {
        1.0
    } else {
        // gap(0) >= 0 whenever z* is the level-0 optimum; bracket is [0, 1]
        let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
        while hi - lo > cfg.h_tol && iterations < MAX_BISECTIONS {
            let mid = 0.5 * (lo + hi);
            if gap(mid)? >= 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
            iterations += 1;
        }
        lo
    };

    let reduced = reduced_data(data, p, h_star, cfg.alpha, cfg.alpha_mode)?;
    let ccr = ccr_efficiency_with_tol(&reduced, p, cfg.policy, cfg.lp_tol)?;
    Ok(MoResult {
        dmu: data.dmus()[p].name.clone(),
        h_star,
        efficiency: ccr.efficiency,
        z_star: z,
        input_weights: ccr.input_weights,
        output_weights: ccr.output_weights,
        reduced,
        iterations,
        rank: 0,
    })
}

/// Assigns 1-based ranks by descending score, then descending `h`, then
/// input order. Scores are compared at 1e-9 resolution.
pub fn rank_order(scores: &[(f64, f64)]) -> Vec<usize> {
    let key = |v: f64| (v * 1e9).round() as i64;
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by_key(|&j| (-key(scores[j].0), -key(scores[j].1), j));
    let mut ranks = vec![0; scores.len()];
    for (pos, j) in order.into_iter().enumerate() {
        ranks[j] = pos + 1;
    }
    ranks
}

/// Solves every unit (in parallel) and ranks them. Results are in input order.
pub fn evaluate_all(data: &FuzzyDataset, cfg: &MoConfig) -> Result<Vec<MoResult>> {
    if data.num_dmus() < 2 {
        return Err(Error::Data("ranking needs at least two units".into()));
    }
    cfg.validate()?;
    let mut results = (0..data.num_dmus())
        .into_par_iter()
        .map(|p| solve_mo(data, p, cfg))
        .collect::<Result<Vec<_>>>()?;
    let keys: Vec<(f64, f64)> = results.iter().map(|r| (r.efficiency, r.h_star)).collect();
    for (r, rank) in results.iter_mut().zip(rank_order(&keys)) {
        r.rank = rank;
    }
    Ok(results)
}
