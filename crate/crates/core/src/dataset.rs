use std::collections::HashSet;

use crate::dea::CrispDataset;
use crate::error::{Error, Result};
use crate::fuzzy::TriFuzzy;

/// One decision-making unit with fuzzy inputs and outputs.
#[derive(Debug, Clone, PartialEq)]
pub struct Dmu {
    pub name: String,
    pub inputs: Vec<TriFuzzy>,
    pub outputs: Vec<TriFuzzy>,
}

/// Named units × named fuzzy inputs/outputs.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyDataset {
    name: String,
    note: Option<String>,
    input_names: Vec<String>,
    output_names: Vec<String>,
    dmus: Vec<Dmu>,
}

/// Which side of the production process a factor is on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Input,
    Output,
}

impl FuzzyDataset {
    pub fn new(
        name: impl Into<String>,
        input_names: Vec<String>,
        output_names: Vec<String>,
        dmus: Vec<Dmu>,
    ) -> Result<Self> {
        let ds = FuzzyDataset {
            name: name.into(),
            note: None,
            input_names,
            output_names,
            dmus,
        };
        ds.validate()?;
        Ok(ds)
    }

    pub fn with_note(mut self, note: Option<String>) -> Self {
        self.note = note;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.input_names.is_empty() || self.output_names.is_empty() {
            return Err(Error::Schema(
                "need at least one input and one output".into(),
            ));
        }
        let mut seen = HashSet::new();
        for (j, dmu) in self.dmus.iter().enumerate() {
            if !seen.insert(dmu.name.as_str()) {
                return Err(Error::Schema(format!(
                    "duplicate unit name '{}' (unit {j})",
                    dmu.name
                )));
            }
            if dmu.inputs.len() != self.input_names.len() {
                return Err(Error::Schema(format!(
                    "unit '{}' has {} inputs, expected {}",
                    dmu.name,
                    dmu.inputs.len(),
                    self.input_names.len()
                )));
            }
            if dmu.outputs.len() != self.output_names.len() {
                return Err(Error::Schema(format!(
                    "unit '{}' has {} outputs, expected {}",
                    dmu.name,
                    dmu.outputs.len(),
                    self.output_names.len()
                )));
            }
            let cells = dmu
                .inputs
                .iter()
                .zip(&self.input_names)
                .chain(dmu.outputs.iter().zip(&self.output_names));
            for (f, factor) in cells {
                if f.lower() <= 0.0 {
                    return Err(Error::Value {
                        location: format!("unit '{}', factor '{factor}'", dmu.name),
                        reason: format!("lower bound {} must be positive", f.lower()),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn note(&self) -> Option<&str> {
        self.note.as_deref()
    }

    pub fn input_names(&self) -> &[String] {
        &self.input_names
    }

    pub fn output_names(&self) -> &[String] {
        &self.output_names
    }

    pub fn dmus(&self) -> &[Dmu] {
        &self.dmus
    }

    pub fn num_dmus(&self) -> usize {
        self.dmus.len()
    }

    pub fn dmu_names(&self) -> Vec<String> {
        self.dmus.iter().map(|d| d.name.clone()).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.dmus.iter().position(|d| d.name == name)
    }

    pub fn is_crisp(&self) -> bool {
        self.dmus
            .iter()
            .all(|d| d.inputs.iter().chain(&d.outputs).all(TriFuzzy::is_crisp))
    }

    pub(crate) fn check_index(&self, p: usize) -> Result<()> {
        if p < self.dmus.len() {
            Ok(())
        } else {
            Err(Error::Data(format!(
                "unit index {p} out of range ({} units)",
                self.dmus.len()
            )))
        }
    }

    /// Builds a crisp dataset by picking one value per fuzzy cell.
    /// `pick(unit, role, number)` receives the unit index.
    pub fn crisp_with<F>(&self, pick: F) -> Result<CrispDataset>
    where
        F: Fn(usize, Role, &TriFuzzy) -> f64,
    {
        let n = self.dmus.len();
        let inputs = (0..self.input_names.len())
            .map(|i| {
                (0..n)
                    .map(|j| pick(j, Role::Input, &self.dmus[j].inputs[i]))
                    .collect()
            })
            .collect();
        let outputs = (0..self.output_names.len())
            .map(|r| {
                (0..n)
                    .map(|j| pick(j, Role::Output, &self.dmus[j].outputs[r]))
                    .collect()
            })
            .collect();
        CrispDataset::new(self.dmu_names(), inputs, outputs)
    }

    /// All modal values.
    pub fn modal(&self) -> Result<CrispDataset> {
        self.crisp_with(|_, _, f| f.modal())
    }
}
