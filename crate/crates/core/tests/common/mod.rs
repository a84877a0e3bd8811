#![allow(dead_code)]

pub mod lp_oracle;
pub mod props;

use fdea_core::{CrispDataset, Dmu, FuzzyDataset, TriFuzzy};
use proptest::prelude::*;

/// Relative spread of one side: exactly zero, or at least 1e-3.
fn spread() -> impl Strategy<Value = f64> {
    prop_oneof![1 => Just(0.0), 5 => 1e-3..0.5f64]
}

/// Positive triple around a modal value in [1, 10]; about one in four is crisp.
pub fn tri() -> impl Strategy<Value = TriFuzzy> {
    (1.0..10.0f64, spread(), spread(), 0..4u8).prop_map(|(m, dl, du, crisp)| {
        if crisp == 0 {
            TriFuzzy::crisp(m).unwrap()
        } else {
            TriFuzzy::new(m * (1.0 - dl), m, m * (1.0 + du)).unwrap()
        }
    })
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("{prefix}{k}")).collect()
}

pub fn fuzzy_dataset() -> impl Strategy<Value = FuzzyDataset> {
    (3..=6usize, 1..=3usize, 1..=3usize).prop_flat_map(|(n, m, s)| {
        proptest::collection::vec(
            (
                proptest::collection::vec(tri(), m),
                proptest::collection::vec(tri(), s),
            ),
            n,
        )
        .prop_map(move |cols| {
            let dmus = cols
                .into_iter()
                .enumerate()
                .map(|(j, (inputs, outputs))| Dmu {
                    name: format!("U{}", j + 1),
                    inputs,
                    outputs,
                })
                .collect();
            FuzzyDataset::new("random", names("I", m), names("O", s), dmus).unwrap()
        })
    })
}

/// Same shapes with every entry crisp.
pub fn crisp_fuzzy_dataset() -> impl Strategy<Value = FuzzyDataset> {
    fuzzy_dataset().prop_map(|d| {
        let dmus = d
            .dmus()
            .iter()
            .map(|u| Dmu {
                name: u.name.clone(),
                inputs: u
                    .inputs
                    .iter()
                    .map(|f| TriFuzzy::crisp(f.modal()).unwrap())
                    .collect(),
                outputs: u
                    .outputs
                    .iter()
                    .map(|f| TriFuzzy::crisp(f.modal()).unwrap())
                    .collect(),
            })
            .collect();
        FuzzyDataset::new(
            "crisp",
            d.input_names().to_vec(),
            d.output_names().to_vec(),
            dmus,
        )
        .unwrap()
    })
}

/// Crisp matrices (factor-major) with 3–6 units and 1–3 inputs/outputs.
pub fn crisp_dataset() -> impl Strategy<Value = CrispDataset> {
    (3..=6usize, 1..=3usize, 1..=3usize).prop_flat_map(|(n, m, s)| {
        (
            proptest::collection::vec(proptest::collection::vec(1.0..10.0f64, n), m),
            proptest::collection::vec(proptest::collection::vec(1.0..10.0f64, n), s),
        )
            .prop_map(move |(x, y)| CrispDataset::new(names("D", n), x, y).unwrap())
    })
}
