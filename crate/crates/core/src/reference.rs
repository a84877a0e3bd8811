//! Published reference values for the bundled datasets.
//!
//! Reports for a dataset whose name matches one of these tables carry a
//! deviation entry for every cell that falls outside its tolerance.

use crate::report::{Deviation, ModelKind, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Score,
    HStar,
    Rank,
}

impl Quantity {
    pub fn as_str(self) -> &'static str {
        match self {
            Quantity::Score => "score",
            Quantity::HStar => "h*",
            Quantity::Rank => "rank",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceCell {
    pub dmu: &'static str,
    pub alpha: f64,
    pub quantity: Quantity,
    pub expected: f64,
    pub tolerance: f64,
    pub citation: &'static str,
}

const GT_UNITS: [&str; 5] = ["D1", "D2", "D3", "D4", "D5"];

const GT_ALPHA: [(f64, [f64; 5]); 4] = [
    (0.0, [1.11, 1.51, 1.28, 1.52, 1.30]),
    (0.5, [0.995, 1.32, 1.03, 1.32, 1.16]),
    (0.75, [0.906, 1.24, 0.93, 1.23, 1.12]),
    (1.0, [0.85, 1.0, 0.86, 1.0, 1.0]),
];

const GT_MO: [(f64, [f64; 5]); 4] = [
    (0.0, [0.899, 1.220, 0.930, 1.220, 1.076]),
    (0.5, [0.86, 1.180, 0.871, 1.169, 1.041]),
    (0.75, [0.85, 1.110, 0.866, 1.160, 1.037]),
    (1.0, [0.85, 1.000, 0.860, 1.000, 1.000]),
];

/// (unit, h*, efficiency, rank) at α = 0.
const AIRCRAFT_MO: [(&str, f64, f64, f64); 5] = [
    ("B757-200", 0.6348, 1.2696, 2.0),
    ("A-321", 0.9798, 1.1720, 3.0),
    ("B767-200", 1.0000, 1.0949, 5.0),
    ("MD-82", 0.9260, 1.8520, 1.0),
    ("A310-300", 1.0000, 1.1237, 4.0),
];

fn grid(
    rows: &[(f64, [f64; 5])],
    citation: &'static str,
    include_modal_row: bool,
) -> Vec<ReferenceCell> {
    rows.iter()
        .filter(|(alpha, _)| include_modal_row || *alpha < 1.0)
        .flat_map(|&(alpha, values)| {
            GT_UNITS
                .iter()
                .zip(values)
                .map(move |(&dmu, expected)| ReferenceCell {
                    dmu,
                    alpha,
                    quantity: Quantity::Score,
                    expected,
                    // the modal row is published to two decimals of a CCR score
                    tolerance: if alpha == 1.0 { 0.01 } else { 0.02 },
                    citation,
                })
        })
        .collect()
}

/// Reference cells for a dataset/model pair, if any are known.
pub fn cells(dataset: &str, model: ModelKind) -> Vec<ReferenceCell> {
    match (dataset, model) {
        ("guo-tanaka", ModelKind::Alpha) => {
            grid(&GT_ALPHA, "guo-tanaka: published α-cut scores", true)
        }
        ("guo-tanaka", ModelKind::Mo) => {
            grid(&GT_MO, "guo-tanaka: published multi-objective scores", true)
        }
        ("guo-tanaka", ModelKind::Ccr) => grid(
            &GT_ALPHA[3..],
            "guo-tanaka: published modal CCR scores",
            true,
        ),
        ("aircraft", ModelKind::Mo) => AIRCRAFT_MO
            .iter()
            .flat_map(|&(dmu, h, eff, rank)| {
                let cell = |quantity, expected, tolerance| ReferenceCell {
                    dmu,
                    alpha: 0.0,
                    quantity,
                    expected,
                    tolerance,
                    citation: "aircraft: published h*, scores and ranks",
                };
                [
                    cell(Quantity::HStar, h, 0.01),
                    cell(Quantity::Score, eff, 0.02),
                    cell(Quantity::Rank, rank, 0.0),
                ]
            })
            .collect(),
        _ => Vec::new(),
    }
}

/// Compares a report with the matching reference cells.
pub fn deviations(report: &Report) -> Vec<Deviation> {
    let mut out = Vec::new();
    for cell in cells(&report.dataset, report.model) {
        let alpha = if report.model == ModelKind::Ccr {
            1.0
        } else {
            cell.alpha
        };
        let Some(row) = report.row(cell.dmu, alpha) else {
            continue;
        };
        let computed = match cell.quantity {
            Quantity::Score => Some(row.score),
            Quantity::HStar => row.h_star,
            Quantity::Rank => Some(row.rank as f64),
        };
        let Some(computed) = computed else { continue };
        if (computed - cell.expected).abs() > cell.tolerance {
            out.push(Deviation {
                dmu: cell.dmu.to_owned(),
                alpha,
                quantity: cell.quantity.as_str().to_owned(),
                expected: cell.expected,
                computed,
                tolerance: cell.tolerance,
                citation: cell.citation.to_owned(),
            });
        }
    }
    out
}
