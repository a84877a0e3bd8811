//! Randomized invariants, each runnable with a chosen case count.

use fdea_core::alphacut::{alphacut_score, pessimistic_score};
use fdea_core::dea::{ccr_efficiency, ccr_scores};
use fdea_core::io::{from_csv, from_json, to_csv, to_json};
use fdea_core::linprog::DEFAULT_TOL;
use fdea_core::mo::{normalizer, AlphaMode};
use fdea_core::{eff_at, solve, solve_mo, CrispDataset, LpOutcome, MoConfig, SelfPolicy, TriFuzzy};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use super::lp_oracle::{bounded_lp, build, enumerate};
use super::{crisp_dataset, crisp_fuzzy_dataset, fuzzy_dataset, tri};

pub type Outcome = Result<(), String>;

pub struct Property {
    pub name: &'static str,
    pub check: fn(&mut TestRunner) -> Outcome,
}

/// Runner with `cases` cases; seeded from the OS unless `fixed_seed`.
pub fn runner(cases: u32, fixed_seed: bool) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    if fixed_seed {
        TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
    } else {
        TestRunner::new(config)
    }
}

pub fn assert_holds(check: fn(&mut TestRunner) -> Outcome, cases: u32) {
    if let Err(e) = check(&mut runner(cases, false)) {
        panic!("{e}");
    }
}

fn drive<S: Strategy>(
    runner: &mut TestRunner,
    strategy: S,
    body: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Outcome {
    runner.run(&strategy, body).map_err(|e| e.to_string())
}

pub const ALL: &[Property] = &[
    Property {
        name: "α-cut nesting",
        check: alpha_cuts_nest,
    },
    Property {
        name: "α-cut endpoint consistency",
        check: alpha_cut_endpoints,
    },
    Property {
        name: "α-cut endpoints at tiny spreads",
        check: alpha_cut_endpoints_conditioned,
    },
    Property {
        name: "alphacut monotonicity in α",
        check: alphacut_monotone,
    },
    Property {
        name: "mo α-monotonicity",
        check: mo_monotone,
    },
    Property {
        name: "sandwich pessimistic ≤ mo ≤ alphacut",
        check: sandwich,
    },
    Property {
        name: "mo result invariants and fixed point",
        check: mo_invariants,
    },
    Property {
        name: "g-monotonicity",
        check: eff_at_monotone,
    },
    Property {
        name: "clamp plateau",
        check: clamp_plateau,
    },
    Property {
        name: "crisp degeneracy of all models",
        check: crisp_degeneracy,
    },
    Property {
        name: "CCR range and super-efficiency order",
        check: ccr_range,
    },
    Property {
        name: "CCR weight consistency",
        check: ccr_weights,
    },
    Property {
        name: "CCR units invariance",
        check: ccr_units_invariance,
    },
    Property {
        name: "CCR dominance monotonicity",
        check: ccr_dominance,
    },
    Property {
        name: "CCR redundancy",
        check: ccr_redundancy,
    },
    Property {
        name: "LP vertex-enumeration equivalence",
        check: lp_vertices,
    },
    Property {
        name: "dataset JSON/CSV round-trip",
        check: dataset_round_trip,
    },
];

const POLICIES: [SelfPolicy; 2] = [SelfPolicy::IncludeSelf, SelfPolicy::ExcludeSelf];

fn ordered(a: f64, b: f64) -> (f64, f64) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn mo_config(alpha: f64, ex: bool, clamp: bool) -> MoConfig {
    let mode = if clamp {
        AlphaMode::Clamp
    } else {
        AlphaMode::Truncate
    };
    MoConfig::at_alpha(alpha)
        .with_policy(POLICIES[ex as usize])
        .with_mode(mode)
}

pub fn alpha_cuts_nest(r: &mut TestRunner) -> Outcome {
    drive(r, (tri(), 0.0..=1.0f64, 0.0..=1.0f64), |(f, a, b)| {
        let (lo, hi) = ordered(a, b);
        let outer = f.alpha_interval(lo).unwrap();
        let inner = f.alpha_interval(hi).unwrap();
        prop_assert!(outer.contains(&inner), "{outer:?} ⊉ {inner:?}");
        prop_assert!(inner.lo <= inner.hi);
        Ok(())
    })
}

pub fn alpha_cut_endpoints(r: &mut TestRunner) -> Outcome {
    drive(r, (tri(), 0.0..=1.0f64), |(f, a)| {
        if f.is_crisp() || a == 0.0 {
            return Ok(());
        }
        let cut = f.alpha_interval(a).unwrap();
        // a degenerate side collapses onto the modal value, whose degree is 1
        if f.lower() < f.modal() {
            prop_assert!((f.membership(cut.lo) - a).abs() <= 1e-12);
        }
        if f.modal() < f.upper() {
            prop_assert!((f.membership(cut.hi) - a).abs() <= 1e-12);
        }
        Ok(())
    })
}

/// Down to spreads of 1e-9 the endpoint error stays within a few ulps of
/// the endpoint divided by the spread.
pub fn alpha_cut_endpoints_conditioned(r: &mut TestRunner) -> Outcome {
    let s = (1.0..10.0f64, -9.0..0.0f64, -9.0..0.0f64, 0.0..=1.0f64);
    drive(r, s, |(m, el, eu, a)| {
        let (dl, du) = (m * 10f64.powf(el), m * 10f64.powf(eu));
        let f = TriFuzzy::new(m - dl, m, m + du).unwrap();
        if a == 0.0 {
            return Ok(());
        }
        let cut = f.alpha_interval(a).unwrap();
        let bound = |spread: f64| (4.0 * f64::EPSILON * f.upper() / spread).max(1e-12);
        let lo_err = (f.membership(cut.lo) - a).abs();
        let hi_err = (f.membership(cut.hi) - a).abs();
        prop_assert!(
            lo_err <= bound(dl),
            "lower side error {lo_err:e}, spread {dl:e}"
        );
        prop_assert!(
            hi_err <= bound(du),
            "upper side error {hi_err:e}, spread {du:e}"
        );
        Ok(())
    })
}

pub fn alphacut_monotone(r: &mut TestRunner) -> Outcome {
    let s = (fuzzy_dataset(), 0.0..=1.0f64, 0.0..=1.0f64, any::<bool>());
    drive(r, s, |(d, a, b, ex)| {
        let policy = POLICIES[ex as usize];
        let (lo, hi) = ordered(a, b);
        for p in 0..d.num_dmus() {
            let s_lo = alphacut_score(&d, p, lo, policy, DEFAULT_TOL).unwrap();
            let s_hi = alphacut_score(&d, p, hi, policy, DEFAULT_TOL).unwrap();
            prop_assert!(
                s_lo >= s_hi - 1e-9,
                "unit {p}: {s_lo} at {lo} < {s_hi} at {hi}"
            );
        }
        Ok(())
    })
}

pub fn mo_monotone(r: &mut TestRunner) -> Outcome {
    let s = (fuzzy_dataset(), 0.0..=1.0f64, 0.0..=1.0f64, any::<bool>());
    drive(r, s, |(d, a, b, ex)| {
        let (lo, hi) = ordered(a, b);
        for p in 0..d.num_dmus() {
            let e_lo = solve_mo(&d, p, &mo_config(lo, ex, false))
                .unwrap()
                .efficiency;
            let e_hi = solve_mo(&d, p, &mo_config(hi, ex, false))
                .unwrap()
                .efficiency;
            prop_assert!(
                e_lo >= e_hi - 1e-6,
                "unit {p}: {e_lo} at {lo} < {e_hi} at {hi}"
            );
        }
        Ok(())
    })
}

pub fn sandwich(r: &mut TestRunner) -> Outcome {
    let s = (fuzzy_dataset(), 0.0..=1.0f64, any::<bool>(), any::<bool>());
    drive(r, s, |(d, alpha, ex, clamp)| {
        let cfg = mo_config(alpha, ex, clamp);
        for p in 0..d.num_dmus() {
            let low = pessimistic_score(&d, p, alpha, cfg.policy, DEFAULT_TOL).unwrap();
            let mid = solve_mo(&d, p, &cfg).unwrap().efficiency;
            let high = alphacut_score(&d, p, alpha, cfg.policy, DEFAULT_TOL).unwrap();
            prop_assert!(
                low <= mid + 1e-9 && mid <= high + 1e-9,
                "unit {p}: {low} / {mid} / {high}"
            );
        }
        Ok(())
    })
}

pub fn mo_invariants(r: &mut TestRunner) -> Outcome {
    let s = (fuzzy_dataset(), 0.0..=1.0f64, any::<bool>(), any::<bool>());
    drive(r, s, |(d, alpha, ex, clamp)| {
        let cfg = mo_config(alpha, ex, clamp);
        for p in 0..d.num_dmus() {
            let res = solve_mo(&d, p, &cfg).unwrap();
            prop_assert!((0.0..=1.0).contains(&res.h_star));
            prop_assert!(res.efficiency <= res.z_star + 1e-7);
            prop_assert_eq!(res.efficiency, eff_at(&d, p, res.h_star, &cfg).unwrap());
            if res.h_star < 1.0 {
                let residual = (res.efficiency / res.z_star - res.h_star).abs();
                prop_assert!(
                    residual <= 10.0 * cfg.h_tol,
                    "unit {p}: residual {residual}"
                );
            }
        }
        Ok(())
    })
}

pub fn eff_at_monotone(r: &mut TestRunner) -> Outcome {
    let s = (fuzzy_dataset(), 0.0..=1.0f64, any::<bool>(), any::<bool>());
    drive(r, s, |(d, alpha, ex, clamp)| {
        let cfg = mo_config(alpha, ex, clamp);
        for p in 0..d.num_dmus() {
            let grid: Vec<f64> = (0..=10)
                .map(|k| eff_at(&d, p, k as f64 / 10.0, &cfg).unwrap())
                .collect();
            for w in grid.windows(2) {
                prop_assert!(w[0] >= w[1] - 1e-9, "unit {p}: {grid:?}");
            }
        }
        Ok(())
    })
}

pub fn clamp_plateau(r: &mut TestRunner) -> Outcome {
    let s = (fuzzy_dataset(), 0.0..=1.0f64, any::<bool>());
    drive(r, s, |(d, alpha, ex)| {
        let cfg = mo_config(alpha, ex, true);
        for p in 0..d.num_dmus() {
            let res = solve_mo(&d, p, &cfg).unwrap();
            if res.h_star > alpha {
                continue;
            }
            let at_alpha = eff_at(&d, p, alpha, &cfg).unwrap();
            for k in 0..=4 {
                let h = alpha * k as f64 / 4.0;
                prop_assert_eq!(eff_at(&d, p, h, &cfg).unwrap(), at_alpha);
            }
            let z = normalizer(&d, p, &cfg).unwrap();
            let expected = (at_alpha / z).min(1.0);
            prop_assert!((res.h_star - expected).abs() <= 10.0 * cfg.h_tol);
        }
        Ok(())
    })
}

pub fn crisp_degeneracy(r: &mut TestRunner) -> Outcome {
    let s = (
        crisp_fuzzy_dataset(),
        0.0..=1.0f64,
        any::<bool>(),
        any::<bool>(),
    );
    drive(r, s, |(d, alpha, ex, clamp)| {
        let cfg = mo_config(alpha, ex, clamp);
        let base = ccr_scores(&d.modal().unwrap(), cfg.policy).unwrap();
        for (p, &expected) in base.iter().enumerate() {
            let a = alphacut_score(&d, p, alpha, cfg.policy, DEFAULT_TOL).unwrap();
            let pess = pessimistic_score(&d, p, alpha, cfg.policy, DEFAULT_TOL).unwrap();
            let res = solve_mo(&d, p, &cfg).unwrap();
            prop_assert_eq!(a, expected);
            prop_assert_eq!(pess, expected);
            prop_assert_eq!(res.efficiency, expected);
            prop_assert_eq!(res.h_star, 1.0);
        }
        Ok(())
    })
}

pub fn ccr_range(r: &mut TestRunner) -> Outcome {
    drive(r, crisp_dataset(), |d| {
        let inc = ccr_scores(&d, SelfPolicy::IncludeSelf).unwrap();
        let exc = ccr_scores(&d, SelfPolicy::ExcludeSelf).unwrap();
        for (i, e) in inc.iter().zip(&exc) {
            prop_assert!(*i > 0.0 && *i <= 1.0 + 1e-9);
            prop_assert!(*e >= *i - 1e-9);
        }
        prop_assert!(
            inc.iter().any(|&s| (s - 1.0).abs() <= 1e-9),
            "no efficient unit: {inc:?}"
        );
        Ok(())
    })
}

pub fn ccr_weights(r: &mut TestRunner) -> Outcome {
    drive(r, (crisp_dataset(), any::<bool>()), |(d, ex)| {
        for p in 0..d.num_dmus() {
            let res = ccr_efficiency(&d, p, POLICIES[ex as usize]).unwrap();
            let vx: f64 = res
                .input_weights
                .iter()
                .enumerate()
                .map(|(i, v)| v * d.input(i, p))
                .sum();
            let uy: f64 = res
                .output_weights
                .iter()
                .enumerate()
                .map(|(k, u)| u * d.output(k, p))
                .sum();
            prop_assert!(res
                .input_weights
                .iter()
                .chain(&res.output_weights)
                .all(|&w| w >= -1e-12));
            prop_assert!((vx - 1.0).abs() <= 1e-7);
            prop_assert!((uy - res.efficiency).abs() <= 1e-7);
        }
        Ok(())
    })
}

fn scaled(d: &CrispDataset, input: bool, row: usize, c: f64) -> CrispDataset {
    let mut x = d.inputs().to_vec();
    let mut y = d.outputs().to_vec();
    let target = if input { &mut x[row] } else { &mut y[row] };
    target.iter_mut().for_each(|v| *v *= c);
    CrispDataset::new(d.names().to_vec(), x, y).unwrap()
}

/// Appends a copy of unit `a` with inputs inflated and outputs deflated.
fn with_dominated(d: &CrispDataset, a: usize, grow: &[f64], shrink: &[f64]) -> CrispDataset {
    let mut names = d.names().to_vec();
    names.push("extra".into());
    let extend = |rows: &[Vec<f64>], factor: &dyn Fn(usize) -> f64| -> Vec<Vec<f64>> {
        rows.iter()
            .enumerate()
            .map(|(i, row)| {
                let mut row = row.clone();
                row.push(row[a] * factor(i));
                row
            })
            .collect()
    };
    let x = extend(d.inputs(), &|i| 1.0 + grow[i % grow.len()]);
    let y = extend(d.outputs(), &|r| 1.0 - shrink[r % shrink.len()]);
    CrispDataset::new(names, x, y).unwrap()
}

pub fn ccr_units_invariance(r: &mut TestRunner) -> Outcome {
    let s = (
        crisp_dataset(),
        any::<bool>(),
        0..3usize,
        -3.0..3.0f64,
        any::<bool>(),
    );
    drive(r, s, |(d, input, row, exp, ex)| {
        let policy = POLICIES[ex as usize];
        let rows = if input {
            d.inputs().len()
        } else {
            d.outputs().len()
        };
        let rescaled = scaled(&d, input, row % rows, 10f64.powf(exp));
        let before = ccr_scores(&d, policy).unwrap();
        let after = ccr_scores(&rescaled, policy).unwrap();
        for (b, a) in before.iter().zip(&after) {
            prop_assert!((b - a).abs() <= 1e-7, "{b} vs {a}");
        }
        Ok(())
    })
}

fn dominated_case() -> impl Strategy<Value = (CrispDataset, usize, Vec<f64>, Vec<f64>)> {
    (
        crisp_dataset(),
        0..6usize,
        proptest::collection::vec(0.0..1.0f64, 3),
        proptest::collection::vec(0.0..0.9f64, 3),
    )
}

pub fn ccr_dominance(r: &mut TestRunner) -> Outcome {
    drive(r, dominated_case(), |(d, a, grow, shrink)| {
        let a = a % d.num_dmus();
        let extended = with_dominated(&d, a, &grow, &shrink);
        let b = extended.num_dmus() - 1;
        let scores = ccr_scores(&extended, SelfPolicy::IncludeSelf).unwrap();
        prop_assert!(
            scores[a] >= scores[b] - 1e-9,
            "{} < {}",
            scores[a],
            scores[b]
        );
        Ok(())
    })
}

pub fn ccr_redundancy(r: &mut TestRunner) -> Outcome {
    drive(r, dominated_case(), |(d, a, grow, shrink)| {
        let a = a % d.num_dmus();
        let before = ccr_scores(&d, SelfPolicy::IncludeSelf).unwrap();
        let after = ccr_scores(
            &with_dominated(&d, a, &grow, &shrink),
            SelfPolicy::IncludeSelf,
        )
        .unwrap();
        for (j, b) in before.iter().enumerate() {
            prop_assert!(
                (b - after[j]).abs() <= 1e-9,
                "unit {j}: {b} vs {}",
                after[j]
            );
        }
        Ok(())
    })
}

pub fn lp_vertices(r: &mut TestRunner) -> Outcome {
    drive(r, bounded_lp(), |(c, rows)| {
        let lp = build(&c, &rows);
        match (enumerate(&c, &rows), solve(&lp, DEFAULT_TOL).unwrap()) {
            (None, LpOutcome::Infeasible) => {}
            (Some(expected), LpOutcome::Optimal { value, solution }) => {
                prop_assert!(
                    (value - expected).abs() <= 1e-7,
                    "simplex {value} vs vertices {expected}"
                );
                prop_assert!(lp.max_violation(&solution) <= 1e-7);
            }
            (expected, got) => prop_assert!(false, "oracle {expected:?}, simplex {got:?}"),
        }
        Ok(())
    })
}

pub fn dataset_round_trip(r: &mut TestRunner) -> Outcome {
    drive(r, fuzzy_dataset(), |d| {
        prop_assert_eq!(&from_json(to_json(&d).as_bytes()).unwrap(), &d);
        prop_assert_eq!(&from_csv(to_csv(&d).unwrap().as_bytes(), None).unwrap(), &d);
        Ok(())
    })
}
