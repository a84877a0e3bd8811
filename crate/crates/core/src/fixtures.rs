//! Bundled example datasets.

use crate::dataset::FuzzyDataset;
use crate::io::from_json;

pub const GUO_TANAKA_JSON: &str = include_str!("../data/guo_tanaka.json");
pub const AIRCRAFT_JSON: &str = include_str!("../data/aircraft.json");

/// Five units, two fuzzy inputs, two fuzzy outputs.
pub fn guo_tanaka() -> FuzzyDataset {
    from_json(GUO_TANAKA_JSON.as_bytes()).expect("bundled fixture is valid")
}

/// Five aircraft types, four inputs and two outputs, partly crisp.
pub fn aircraft() -> FuzzyDataset {
    from_json(AIRCRAFT_JSON.as_bytes()).expect("bundled fixture is valid")
}
