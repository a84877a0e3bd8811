//! Efficiency evaluation of decision-making units with triangular fuzzy
//! inputs and outputs.
//!
//! Three models share one LP solver:
//!
//! * [`dea`]: crisp CCR multiplier model, with or without the evaluated
//!   unit's own ratio constraint (super-efficiency).
//! * [`alphacut`]: optimistic α-cut fuzzy CCR.
//! * [`mo`]: multi-objective fuzzy CCR, which trades the efficiency of the
//!   evaluated unit against the membership degree of every coefficient.

pub mod alphacut;
pub mod cli;
pub mod dataset;
pub mod dea;
pub mod error;
pub mod fixtures;
pub mod fuzzy;
pub mod io;
pub mod linprog;
pub mod mo;
pub mod reference;
pub mod report;

pub use alphacut::{alphacut_reduce, alphacut_scores, pessimistic_reduce, AlphaScore};
pub use dataset::{Dmu, FuzzyDataset, Role};
pub use dea::{ccr_efficiency, CcrResult, CrispDataset, SelfPolicy};
pub use error::{Error, Result};
pub use fuzzy::{Interval, TriFuzzy};
pub use io::{load_dataset, load_path, write_dataset, DataFormat};
pub use linprog::{solve, LpOutcome, LpProblem, Relation};
pub use mo::{eff_at, evaluate_all, reduced_data, solve_mo, z_star, AlphaMode, MoConfig, MoResult};
pub use report::{evaluate, write_report, EvalConfig, ModelKind, Report, ReportFormat};
