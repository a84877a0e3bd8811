//! Batch command-line front end.
//!
//! Exit codes: 0 success, 1 data/validation/usage errors, 2 solver failures.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::dea::SelfPolicy;
use crate::error::{Error, Result};
use crate::io::load_path;
use crate::linprog::DEFAULT_TOL;
use crate::mo::{z_star_at, AlphaMode, DEFAULT_H_TOL};
use crate::report::{
    compare, evaluate, write_compare, write_report, EvalConfig, ModelKind, ReportFormat,
};

#[derive(Debug, Parser)]
#[command(name = "fdea", version, about = "Fuzzy DEA efficiency evaluation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Score every unit under one model.
    Eval(EvalArgs),
    /// Best-case score z* of each unit (or one unit).
    Zstar(ZstarArgs),
    /// Side-by-side α-cut vs multi-objective scores.
    Compare(CompareArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Ccr,
    Alpha,
    Mo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Md,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlphaModeArg {
    Truncate,
    Clamp,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Dataset file (.json or .csv).
    #[arg(long)]
    pub data: PathBuf,
    /// Keep the evaluated unit's own ratio constraint (plain CCR scores).
    #[arg(long)]
    pub include_self: bool,
    #[arg(long, value_enum, default_value_t = FormatArg::Md)]
    pub format: FormatArg,
    /// Tolerance of the LP solver.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol_lp: f64,
}

#[derive(Debug, Args)]
pub struct FuzzyArgs {
    /// Comma-separated α levels.
    #[arg(long, value_delimiter = ',', default_value = "0,0.5,0.75,1")]
    pub alpha: Vec<f64>,
    /// Bisection tolerance on h.
    #[arg(long, default_value_t = DEFAULT_H_TOL)]
    pub tol_h: f64,
    #[arg(long, value_enum, default_value_t = AlphaModeArg::Truncate)]
    pub alpha_mode: AlphaModeArg,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub fuzzy: FuzzyArgs,
    #[arg(long, value_enum, default_value_t = ModelArg::Mo)]
    pub model: ModelArg,
}

#[derive(Debug, Args)]
pub struct ZstarArgs {
    #[command(flatten)]
    pub common: Common,
    /// Restrict to one unit.
    #[arg(long)]
    pub dmu: Option<String>,
    /// α level of the best-case extremes.
    #[arg(long, default_value_t = 0.0)]
    pub alpha: f64,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub fuzzy: FuzzyArgs,
}

impl Common {
    fn policy(&self) -> SelfPolicy {
        if self.include_self {
            SelfPolicy::IncludeSelf
        } else {
            SelfPolicy::ExcludeSelf
        }
    }

    fn format(&self) -> ReportFormat {
        match self.format {
            FormatArg::Md => ReportFormat::Markdown,
            FormatArg::Csv => ReportFormat::Csv,
            FormatArg::Json => ReportFormat::Json,
        }
    }
}

fn eval_config(common: &Common, fuzzy: &FuzzyArgs, model: ModelKind) -> EvalConfig {
    EvalConfig {
        model,
        policy: common.policy(),
        alpha_mode: match fuzzy.alpha_mode {
            AlphaModeArg::Truncate => AlphaMode::Truncate,
            AlphaModeArg::Clamp => AlphaMode::Clamp,
        },
        h_tol: fuzzy.tol_h,
        lp_tol: common.tol_lp,
    }
}

fn check_tolerances(values: &[(&str, f64)]) -> Result<()> {
    for (name, v) in values {
        if !(*v > 0.0 && v.is_finite()) {
            return Err(Error::Data(format!("{name} must be positive, got {v}")));
        }
    }
    Ok(())
}

/// Executes a parsed command and returns the full report text.
pub fn execute(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Eval(args) => {
            check_tolerances(&[
                ("--tol-lp", args.common.tol_lp),
                ("--tol-h", args.fuzzy.tol_h),
            ])?;
            let data = load_path(&args.common.data)?;
            let model = match args.model {
                ModelArg::Ccr => ModelKind::Ccr,
                ModelArg::Alpha => ModelKind::Alpha,
                ModelArg::Mo => ModelKind::Mo,
            };
            let cfg = eval_config(&args.common, &args.fuzzy, model);
            let report = evaluate(&data, &args.fuzzy.alpha, &cfg)?;
            Ok(write_report(&report, args.common.format()))
        }
        Command::Compare(args) => {
            check_tolerances(&[
                ("--tol-lp", args.common.tol_lp),
                ("--tol-h", args.fuzzy.tol_h),
            ])?;
            let data = load_path(&args.common.data)?;
            let cfg = eval_config(&args.common, &args.fuzzy, ModelKind::Mo);
            let report = compare(&data, &args.fuzzy.alpha, &cfg)?;
            Ok(write_compare(&report, args.common.format()))
        }
        Command::Zstar(args) => {
            check_tolerances(&[("--tol-lp", args.common.tol_lp)])?;
            crate::fuzzy::check_alpha(args.alpha)?;
            let data = load_path(&args.common.data)?;
            let units: Vec<usize> = match &args.dmu {
                Some(name) => vec![data
                    .index_of(name)
                    .ok_or_else(|| Error::Data(format!("no unit named '{name}'")))?],
                None => (0..data.num_dmus()).collect(),
            };
            let policy = args.common.policy();
            let values = units
                .iter()
                .map(|&p| {
                    z_star_at(&data, p, args.alpha, policy, args.common.tol_lp)
                        .map(|z| (data.dmus()[p].name.clone(), z))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(write_zstar(
                data.name(),
                policy,
                args.alpha,
                &values,
                args.common.format(),
            ))
        }
    }
}

fn write_zstar(
    dataset: &str,
    policy: SelfPolicy,
    alpha: f64,
    values: &[(String, f64)],
    format: ReportFormat,
) -> String {
    match format {
        ReportFormat::Json => {
            let rows: Vec<_> = values
                .iter()
                .map(|(d, z)| serde_json::json!({ "dmu": d, "z_star": z }))
                .collect();
            let doc = serde_json::json!({
                "dataset": dataset,
                "policy": policy,
                "alpha": alpha,
                "rows": rows,
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("json serializes");
            s.push('\n');
            s
        }
        ReportFormat::Csv => {
            let mut s = String::from("dmu,z_star\n");
            for (d, z) in values {
                s.push_str(&format!("{d},{z:.4}\n"));
            }
            s
        }
        ReportFormat::Markdown => {
            let mut s =
                format!("## {dataset} · z* · {policy} · α = {alpha}\n\n| DMU | z* |\n|---|---:|\n");
            for (d, z) in values {
                s.push_str(&format!("| {d} | {z:.4} |\n"));
            }
            s
        }
    }
}

/// Parses `args`, runs the command and writes to the given streams.
/// Nothing is written to `out` unless the command succeeds.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            if out.write_all(text.as_bytes()).is_err() {
                return 1;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_solver() {
                2
            } else {
                1
            }
        }
    }
}
