//! Evaluation reports and their serializations.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::alphacut::alphacut_score;
use crate::dataset::FuzzyDataset;
use crate::dea::{ccr_efficiency_with_tol, SelfPolicy};
use crate::error::Result;
use crate::mo::{evaluate_all, rank_order, AlphaMode, MoConfig};
use crate::reference;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    /// Crisp CCR on modal values.
    Ccr,
    /// Optimistic α-cut model.
    Alpha,
    /// Multi-objective fuzzy model.
    Mo,
}

impl ModelKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ModelKind::Ccr => "ccr",
            ModelKind::Alpha => "alpha",
            ModelKind::Mo => "mo",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Markdown,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub dmu: String,
    pub alpha: f64,
    pub score: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h_star: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z_star: Option<f64>,
    /// Rank among the units at this α (1 = best).
    pub rank: usize,
}

/// A computed value that disagrees with a published reference value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Deviation {
    pub dmu: String,
    pub alpha: f64,
    pub quantity: String,
    pub expected: f64,
    pub computed: f64,
    pub tolerance: f64,
    pub citation: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub dataset: String,
    pub model: ModelKind,
    pub policy: SelfPolicy,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha_mode: Option<AlphaMode>,
    pub alphas: Vec<f64>,
    pub dmus: Vec<String>,
    /// α-major: all units at `alphas[0]`, then `alphas[1]`, ...
    pub rows: Vec<ReportRow>,
    pub deviations: Vec<Deviation>,
}

impl Report {
    pub fn row(&self, dmu: &str, alpha: f64) -> Option<&ReportRow> {
        self.rows.iter().find(|r| r.dmu == dmu && r.alpha == alpha)
    }
}

/// Settings shared by the evaluation entry points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    pub model: ModelKind,
    pub policy: SelfPolicy,
    pub alpha_mode: AlphaMode,
    pub h_tol: f64,
    pub lp_tol: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        let mo = MoConfig::default();
        EvalConfig {
            model: ModelKind::Mo,
            policy: mo.policy,
            alpha_mode: mo.alpha_mode,
            h_tol: mo.h_tol,
            lp_tol: mo.lp_tol,
        }
    }
}

impl EvalConfig {
    pub fn mo_config(&self, alpha: f64) -> MoConfig {
        MoConfig {
            alpha,
            policy: self.policy,
            h_tol: self.h_tol,
            lp_tol: self.lp_tol,
            alpha_mode: self.alpha_mode,
        }
    }
}

/// Runs one model over every unit and α level. The crisp model ignores
/// `alphas` and reports a single row set at α = 1 (modal data).
pub fn evaluate(data: &FuzzyDataset, alphas: &[f64], cfg: &EvalConfig) -> Result<Report> {
    let names = data.dmu_names();
    let alphas: Vec<f64> = match cfg.model {
        ModelKind::Ccr => vec![1.0],
        _ => alphas.to_vec(),
    };
    for &a in &alphas {
        crate::fuzzy::check_alpha(a)?;
    }
    let mut rows = Vec::with_capacity(names.len() * alphas.len());
    for &alpha in &alphas {
        let level: Vec<(f64, Option<f64>, Option<f64>)> = match cfg.model {
            ModelKind::Ccr => {
                let modal = data.modal()?;
                (0..names.len())
                    .map(|p| {
                        ccr_efficiency_with_tol(&modal, p, cfg.policy, cfg.lp_tol)
                            .map(|r| (r.efficiency, None, None))
                    })
                    .collect::<Result<_>>()?
            }
            ModelKind::Alpha => (0..names.len())
                .map(|p| {
                    alphacut_score(data, p, alpha, cfg.policy, cfg.lp_tol).map(|s| (s, None, None))
                })
                .collect::<Result<_>>()?,
            ModelKind::Mo => {
                if names.len() < 2 {
                    // ranking needs two units; still report the single score
                    (0..names.len())
                        .map(|p| {
                            crate::mo::solve_mo(data, p, &cfg.mo_config(alpha))
                                .map(|r| (r.efficiency, Some(r.h_star), Some(r.z_star)))
                        })
                        .collect::<Result<_>>()?
                } else {
                    evaluate_all(data, &cfg.mo_config(alpha))?
                        .into_iter()
                        .map(|r| (r.efficiency, Some(r.h_star), Some(r.z_star)))
                        .collect()
                }
            }
        };
        let keys: Vec<(f64, f64)> = level
            .iter()
            .map(|(s, h, _)| (*s, h.unwrap_or(1.0)))
            .collect();
        let ranks = rank_order(&keys);
        for (j, (score, h_star, z_star)) in level.into_iter().enumerate() {
            rows.push(ReportRow {
                dmu: names[j].clone(),
                alpha,
                score,
                h_star,
                z_star,
                rank: ranks[j],
            });
        }
    }
    let mut report = Report {
        dataset: data.name().to_owned(),
        model: cfg.model,
        policy: cfg.policy,
        alpha_mode: (cfg.model == ModelKind::Mo).then_some(cfg.alpha_mode),
        alphas,
        dmus: names,
        rows,
        deviations: Vec::new(),
    };
    report.deviations = reference::deviations(&report);
    Ok(report)
}

fn fmt4(v: f64) -> String {
    format!("{v:.4}")
}

fn fmt_computed(d: &Deviation) -> String {
    if d.quantity == "rank" {
        format!("{}", d.computed)
    } else {
        fmt4(d.computed)
    }
}

fn fmt_alpha(a: f64) -> String {
    format!("{a}")
}

pub fn write_report(report: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Csv => report_csv(report),
        ReportFormat::Markdown => report_markdown(report),
    }
}

fn report_csv(report: &Report) -> String {
    let mut out = String::from("dmu,alpha,score,h_star,z_star,rank\n");
    for r in &report.rows {
        let opt = |v: Option<f64>| v.map(fmt4).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            csv_field(&r.dmu),
            fmt_alpha(r.alpha),
            fmt4(r.score),
            opt(r.h_star),
            opt(r.z_star),
            r.rank
        );
    }
    for d in &report.deviations {
        let _ = writeln!(
            out,
            "# deviation: {} alpha={} {} expected {} computed {} ({})",
            d.dmu,
            fmt_alpha(d.alpha),
            d.quantity,
            d.expected,
            fmt_computed(d),
            d.citation
        );
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

fn md_grid(out: &mut String, report: &Report, value: impl Fn(&ReportRow) -> Option<f64>) {
    let _ = write!(out, "| α |");
    for d in &report.dmus {
        let _ = write!(out, " {d} |");
    }
    out.push('\n');
    out.push_str("|---|");
    for _ in &report.dmus {
        out.push_str("---:|");
    }
    out.push('\n');
    if report.dmus.is_empty() {
        return;
    }
    for &alpha in &report.alphas {
        let label = if report.model == ModelKind::Ccr {
            "modal".to_owned()
        } else {
            fmt_alpha(alpha)
        };
        let _ = write!(out, "| {label} |");
        for d in &report.dmus {
            let cell = report
                .row(d, alpha)
                .and_then(&value)
                .map(fmt4)
                .unwrap_or_default();
            let _ = write!(out, " {cell} |");
        }
        out.push('\n');
    }
}

fn report_markdown(report: &Report) -> String {
    let mut out = format!(
        "## {} · model {} · {}",
        report.dataset,
        report.model.as_str(),
        report.policy
    );
    if let Some(mode) = report.alpha_mode {
        let _ = write!(out, " · alpha mode {}", alpha_mode_str(mode));
    }
    out.push_str("\n\n");

    if report.model == ModelKind::Mo && report.alphas.len() == 1 {
        let alpha = report.alphas[0];
        let _ = writeln!(out, "α = {}\n", fmt_alpha(alpha));
        out.push_str("| DMU | h* | Eff. scores | Rank |\n|---|---:|---:|---:|\n");
        for d in &report.dmus {
            if let Some(r) = report.row(d, alpha) {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} |",
                    r.dmu,
                    r.h_star.map(fmt4).unwrap_or_default(),
                    fmt4(r.score),
                    r.rank
                );
            }
        }
    } else {
        md_grid(&mut out, report, |r| Some(r.score));
        if report.model == ModelKind::Mo {
            out.push_str("\nh*\n\n");
            md_grid(&mut out, report, |r| r.h_star);
        }
    }

    if !report.deviations.is_empty() {
        out.push_str("\nDeviations from reference values\n\n");
        out.push_str("| DMU | α | Quantity | Expected | Computed | Tolerance | Source |\n");
        out.push_str("|---|---|---|---:|---:|---:|---|\n");
        for d in &report.deviations {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} | {} |",
                d.dmu,
                fmt_alpha(d.alpha),
                d.quantity,
                d.expected,
                fmt_computed(d),
                d.tolerance,
                d.citation
            );
        }
    }
    out
}

pub fn alpha_mode_str(mode: AlphaMode) -> &'static str {
    match mode {
        AlphaMode::Truncate => "truncate",
        AlphaMode::Clamp => "clamp",
    }
}

/// One row of a side-by-side α-cut vs multi-objective comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareRow {
    pub dmu: String,
    pub alpha: f64,
    pub alphacut: f64,
    pub mo: f64,
    pub h_star: f64,
    /// `alphacut − mo`; never negative beyond solver tolerance.
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareReport {
    pub dataset: String,
    pub policy: SelfPolicy,
    pub alpha_mode: AlphaMode,
    pub rows: Vec<CompareRow>,
}

pub fn compare(data: &FuzzyDataset, alphas: &[f64], cfg: &EvalConfig) -> Result<CompareReport> {
    let mut rows = Vec::new();
    for &alpha in alphas {
        crate::fuzzy::check_alpha(alpha)?;
        let mo_cfg = cfg.mo_config(alpha);
        for (p, dmu) in data.dmus().iter().enumerate() {
            let cut = alphacut_score(data, p, alpha, cfg.policy, cfg.lp_tol)?;
            let mo = crate::mo::solve_mo(data, p, &mo_cfg)?;
            rows.push(CompareRow {
                dmu: dmu.name.clone(),
                alpha,
                alphacut: cut,
                mo: mo.efficiency,
                h_star: mo.h_star,
                gap: cut - mo.efficiency,
            });
        }
    }
    Ok(CompareReport {
        dataset: data.name().to_owned(),
        policy: cfg.policy,
        alpha_mode: cfg.alpha_mode,
        rows,
    })
}

pub fn write_compare(report: &CompareReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Csv => {
            let mut out = String::from("dmu,alpha,alphacut,mo,h_star,gap\n");
            for r in &report.rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    csv_field(&r.dmu),
                    fmt_alpha(r.alpha),
                    fmt4(r.alphacut),
                    fmt4(r.mo),
                    fmt4(r.h_star),
                    fmt4(r.gap)
                );
            }
            out
        }
        ReportFormat::Markdown => {
            let mut out = format!(
                "## {} · alpha vs mo · {} · alpha mode {}\n\n",
                report.dataset,
                report.policy,
                alpha_mode_str(report.alpha_mode)
            );
            out.push_str("| α | DMU | α-cut | MO | h* | Gap |\n|---|---|---:|---:|---:|---:|\n");
            for r in &report.rows {
                let _ = writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} |",
                    fmt_alpha(r.alpha),
                    r.dmu,
                    fmt4(r.alphacut),
                    fmt4(r.mo),
                    fmt4(r.h_star),
                    fmt4(r.gap)
                );
            }
            out
        }
    }
}
