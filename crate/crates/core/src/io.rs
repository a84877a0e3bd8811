//! Dataset ingestion and serialization.
//!
//! JSON:
//!
//! ```json
//! {"name": "...", "note": "...", "inputs": ["I1"], "outputs": ["O1"],
//!  "dmus": [{"name": "A", "inputs": [[1, 2, 3]], "outputs": [4]}]}
//! ```
//!
//! `note` is optional. A cell is either `[lower, modal, upper]` or a bare
//! number for a crisp value.
//!
//! CSV: optional leading `# name: ...` / `# note: ...` lines, then a header
//! `dmu,in:I1,...,out:O1,...` and one row per unit. Fuzzy cells are written
//! `l;m;u`, crisp cells as a single number.

use std::path::Path;

use serde_json::{json, Map, Value};

use crate::dataset::{Dmu, FuzzyDataset};
use crate::error::{Error, Result};
use crate::fuzzy::TriFuzzy;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DataFormat {
    Json,
    Csv,
}

impl DataFormat {
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("csv") => DataFormat::Csv,
            _ => DataFormat::Json,
        }
    }
}

pub fn load_dataset(bytes: &[u8], format: DataFormat) -> Result<FuzzyDataset> {
    match format {
        DataFormat::Json => from_json(bytes),
        DataFormat::Csv => from_csv(bytes, None),
    }
}

/// Reads a dataset file; CSV files without a `# name:` line are named after
/// the file stem.
pub fn load_path(path: &Path) -> Result<FuzzyDataset> {
    let bytes = std::fs::read(path)
        .map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
    match DataFormat::from_path(path) {
        DataFormat::Json => from_json(&bytes),
        DataFormat::Csv => {
            let stem = path
                .file_stem()
                .and_then(|s| s.to_str())
                .unwrap_or("dataset");
            from_csv(&bytes, Some(stem))
        }
    }
}

pub fn write_dataset(data: &FuzzyDataset, format: DataFormat) -> Result<String> {
    match format {
        DataFormat::Json => Ok(to_json(data)),
        DataFormat::Csv => to_csv(data),
    }
}

fn make_tri(l: f64, m: f64, u: f64, location: impl Fn() -> String) -> Result<TriFuzzy> {
    TriFuzzy::new(l, m, u).map_err(|e| Error::Value {
        location: location(),
        reason: e.to_string(),
    })
}

fn json_cell(value: &Value, location: impl Fn() -> String) -> Result<TriFuzzy> {
    let bad = |what: &str| Error::Value {
        location: location(),
        reason: format!("expected a number or [lower, modal, upper], got {what}"),
    };
    match value {
        Value::Number(n) => {
            let v = n.as_f64().ok_or_else(|| bad("a non-finite number"))?;
            make_tri(v, v, v, &location)
        }
        Value::Array(items) if items.len() == 3 => {
            let mut t = [0.0; 3];
            for (slot, item) in t.iter_mut().zip(items) {
                *slot = item.as_f64().ok_or_else(|| bad(&item.to_string()))?;
            }
            make_tri(t[0], t[1], t[2], &location)
        }
        other => Err(bad(&other.to_string())),
    }
}

fn str_list(obj: &Map<String, Value>, key: &str) -> Result<Vec<String>> {
    let arr = obj
        .get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Schema(format!("'{key}' must be an array of strings")))?;
    arr.iter()
        .map(|v| {
            v.as_str()
                .map(str::to_owned)
                .ok_or_else(|| Error::Schema(format!("'{key}' must contain only strings")))
        })
        .collect()
}

pub fn from_json(bytes: &[u8]) -> Result<FuzzyDataset> {
    let root: Value = serde_json::from_slice(bytes).map_err(|e| Error::Parse(e.to_string()))?;
    let obj = root
        .as_object()
        .ok_or_else(|| Error::Schema("top level must be an object".into()))?;
    for key in obj.keys() {
        if !matches!(
            key.as_str(),
            "name" | "note" | "inputs" | "outputs" | "dmus"
        ) {
            return Err(Error::Schema(format!("unknown field '{key}'")));
        }
    }
    let name = obj
        .get("name")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Schema("'name' must be a string".into()))?
        .to_owned();
    let note = match obj.get("note") {
        None => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err(Error::Schema("'note' must be a string".into())),
    };
    let input_names = str_list(obj, "inputs")?;
    let output_names = str_list(obj, "outputs")?;
    let raw_dmus = obj
        .get("dmus")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Schema("'dmus' must be an array".into()))?;

    let mut dmus = Vec::with_capacity(raw_dmus.len());
    for (j, raw) in raw_dmus.iter().enumerate() {
        let unit = raw
            .as_object()
            .ok_or_else(|| Error::Schema(format!("dmus[{j}] must be an object")))?;
        let unit_name = unit
            .get("name")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Schema(format!("dmus[{j}].name must be a string")))?
            .to_owned();
        let cells = |key: &str, factors: &[String]| -> Result<Vec<TriFuzzy>> {
            let arr = unit.get(key).and_then(Value::as_array).ok_or_else(|| {
                Error::Schema(format!("unit '{unit_name}': '{key}' must be an array"))
            })?;
            if arr.len() != factors.len() {
                return Err(Error::Schema(format!(
                    "unit '{unit_name}' has {} {key}, expected {}",
                    arr.len(),
                    factors.len()
                )));
            }
            arr.iter()
                .zip(factors)
                .map(|(v, factor)| {
                    json_cell(v, || {
                        format!("unit '{unit_name}', {} '{factor}'", &key[..key.len() - 1])
                    })
                })
                .collect()
        };
        let inputs = cells("inputs", &input_names)?;
        let outputs = cells("outputs", &output_names)?;
        dmus.push(Dmu {
            name: unit_name,
            inputs,
            outputs,
        });
    }
    Ok(FuzzyDataset::new(name, input_names, output_names, dmus)?.with_note(note))
}

fn cell_json(f: &TriFuzzy) -> Value {
    if f.is_crisp() {
        json!(f.modal())
    } else {
        json!([f.lower(), f.modal(), f.upper()])
    }
}

pub fn to_json(data: &FuzzyDataset) -> String {
    let mut root = Map::new();
    root.insert("name".into(), json!(data.name()));
    if let Some(note) = data.note() {
        root.insert("note".into(), json!(note));
    }
    root.insert("inputs".into(), json!(data.input_names()));
    root.insert("outputs".into(), json!(data.output_names()));
    let dmus: Vec<Value> = data
        .dmus()
        .iter()
        .map(|d| {
            json!({
                "name": d.name,
                "inputs": d.inputs.iter().map(cell_json).collect::<Vec<_>>(),
                "outputs": d.outputs.iter().map(cell_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    root.insert("dmus".into(), Value::Array(dmus));
    let mut out =
        serde_json::to_string_pretty(&Value::Object(root)).expect("json values serialize");
    out.push('\n');
    out
}

fn csv_cell(text: &str, location: impl Fn() -> String) -> Result<TriFuzzy> {
    let parse = |s: &str| -> Result<f64> {
        s.trim().parse::<f64>().map_err(|_| Error::Value {
            location: location(),
            reason: format!("'{}' is not a number", s.trim()),
        })
    };
    let parts: Vec<&str> = text.split(';').collect();
    match parts.as_slice() {
        [v] => {
            let v = parse(v)?;
            make_tri(v, v, v, &location)
        }
        [l, m, u] => make_tri(parse(l)?, parse(m)?, parse(u)?, &location),
        _ => Err(Error::Value {
            location: location(),
            reason: format!("expected a number or 'l;m;u', got '{text}'"),
        }),
    }
}

pub fn from_csv(bytes: &[u8], default_name: Option<&str>) -> Result<FuzzyDataset> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse(format!("not UTF-8: {e}")))?;
    let mut name = default_name.unwrap_or("dataset").to_owned();
    let mut note = None;
    let mut body_start = 0;
    for line in text.split_inclusive('\n') {
        let trimmed = line.trim();
        if let Some(meta) = trimmed.strip_prefix('#') {
            let meta = meta.trim();
            if let Some(v) = meta.strip_prefix("name:") {
                name = v.trim().to_owned();
            } else if let Some(v) = meta.strip_prefix("note:") {
                note = Some(v.trim().to_owned());
            }
            body_start += line.len();
        } else if trimmed.is_empty() {
            body_start += line.len();
        } else {
            break;
        }
    }

    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(&bytes[body_start..]);
    let headers = reader
        .headers()
        .map_err(|e| Error::Parse(format!("header: {e}")))?
        .clone();
    if headers.is_empty() || headers.get(0) != Some("dmu") {
        return Err(Error::Schema("header must start with 'dmu'".into()));
    }
    let mut input_cols = Vec::new();
    let mut output_cols = Vec::new();
    for (c, h) in headers.iter().enumerate().skip(1) {
        if let Some(n) = h.strip_prefix("in:") {
            input_cols.push((c, n.to_owned()));
        } else if let Some(n) = h.strip_prefix("out:") {
            output_cols.push((c, n.to_owned()));
        } else {
            return Err(Error::Schema(format!(
                "column {} header '{h}' must start with 'in:' or 'out:'",
                c + 1
            )));
        }
    }

    let mut dmus = Vec::new();
    for (k, record) in reader.records().enumerate() {
        let row = k + 1;
        let record = record.map_err(|e| Error::Parse(format!("row {row}: {e}")))?;
        if record.len() != headers.len() {
            return Err(Error::Schema(format!(
                "row {row} has {} fields, header has {}",
                record.len(),
                headers.len()
            )));
        }
        let unit = record[0].to_owned();
        let read = |cols: &[(usize, String)]| -> Result<Vec<TriFuzzy>> {
            cols.iter()
                .map(|(c, _)| {
                    csv_cell(&record[*c], || {
                        format!("row {row} (unit '{unit}'), column '{}'", &headers[*c])
                    })
                })
                .collect()
        };
        let inputs = read(&input_cols)?;
        let outputs = read(&output_cols)?;
        dmus.push(Dmu {
            name: unit,
            inputs,
            outputs,
        });
    }
    let input_names = input_cols.into_iter().map(|(_, n)| n).collect();
    let output_names = output_cols.into_iter().map(|(_, n)| n).collect();
    Ok(FuzzyDataset::new(name, input_names, output_names, dmus)?.with_note(note))
}

fn cell_csv(f: &TriFuzzy) -> String {
    if f.is_crisp() {
        format!("{}", f.modal())
    } else {
        format!("{};{};{}", f.lower(), f.modal(), f.upper())
    }
}

pub fn to_csv(data: &FuzzyDataset) -> Result<String> {
    let mut out = format!("# name: {}\n", data.name());
    if let Some(note) = data.note() {
        out.push_str(&format!("# note: {}\n", note.replace('\n', " ")));
    }
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["dmu".to_owned()];
    header.extend(data.input_names().iter().map(|n| format!("in:{n}")));
    header.extend(data.output_names().iter().map(|n| format!("out:{n}")));
    writer
        .write_record(&header)
        .map_err(|e| Error::Io(e.to_string()))?;
    for d in data.dmus() {
        let mut row = vec![d.name.clone()];
        row.extend(d.inputs.iter().chain(&d.outputs).map(cell_csv));
        writer
            .write_record(&row)
            .map_err(|e| Error::Io(e.to_string()))?;
    }
    let body = writer.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    out.push_str(&String::from_utf8(body).expect("csv output is UTF-8"));
    Ok(out)
}
