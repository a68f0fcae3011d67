//! CSV datasets and JSON group manifests.
//!
//! Features CSV: a header row of feature names, one comma-delimited row of
//! decimal reals per instance. Labels CSV: a header row of label names and
//! cells in `{0, 1}`. Group manifest: a JSON array of
//! `{"name": .., "cost": .., "features": [..]}` objects that must partition
//! the features exactly.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use ndarray::Array2;
use serde::{Deserialize, Serialize};

use super::{Dataset, Group, GroupStructure};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub name: String,
    pub cost: f64,
    pub features: Vec<String>,
}

struct Table<T> {
    header: Vec<String>,
    rows: Vec<Vec<T>>,
}

fn read_table<T>(
    path: &Path,
    parse: impl Fn(&str) -> std::result::Result<T, String>,
) -> Result<Table<T>> {
    let ingest = |line: Option<usize>, message: String| Error::Ingestion {
        path: path.to_path_buf(),
        line,
        message,
    };
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(file);
    let header: Vec<String> = reader
        .headers()
        .map_err(|e| ingest(Some(1), e.to_string()))?
        .iter()
        .map(|h| h.trim().to_string())
        .collect();
    if header.is_empty() || header.iter().all(String::is_empty) {
        return Err(ingest(Some(1), "missing header row".into()));
    }
    let mut seen = HashMap::new();
    for (c, name) in header.iter().enumerate() {
        if let Some(prev) = seen.insert(name.as_str(), c) {
            return Err(ingest(
                Some(1),
                format!("duplicate column name '{name}' (columns {} and {})", prev + 1, c + 1),
            ));
        }
    }

    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map(|p| p.line() as usize);
            ingest(line, e.to_string())
        })?;
        let line = record.position().map(|p| p.line() as usize);
        let row = record
            .iter()
            .enumerate()
            .map(|(c, cell)| {
                parse(cell.trim()).map_err(|msg| ingest(line, format!("column '{}': {msg}", header[c])))
            })
            .collect::<Result<Vec<T>>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(ingest(None, "no data rows".into()));
    }
    Ok(Table { header, rows })
}

fn to_array<T: Clone>(table: &Table<T>) -> Array2<T> {
    let n = table.rows.len();
    let p = table.header.len();
    Array2::from_shape_vec((n, p), table.rows.concat()).expect("csv enforces equal row lengths")
}

/// Reads a features CSV and a labels CSV with matching row counts.
pub fn load_dataset(features_path: impl AsRef<Path>, labels_path: impl AsRef<Path>) -> Result<Dataset> {
    let features_path = features_path.as_ref();
    let labels_path = labels_path.as_ref();
    let features = read_table(features_path, |cell| {
        let v: f64 = cell.parse().map_err(|_| format!("not a number: '{cell}'"))?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(format!("non-finite value '{cell}'"))
        }
    })?;
    let labels = read_table(labels_path, |cell| match cell {
        "0" => Ok(0u8),
        "1" => Ok(1u8),
        other => Err(format!("non-binary label '{other}'")),
    })?;
    if features.rows.len() != labels.rows.len() {
        return Err(Error::Ingestion {
            path: labels_path.to_path_buf(),
            line: None,
            message: format!(
                "row count mismatch: {} has {} rows, {} has {}",
                features_path.display(),
                features.rows.len(),
                labels_path.display(),
                labels.rows.len()
            ),
        });
    }
    Dataset::new(
        to_array(&features),
        to_array(&labels),
        features.header,
        labels.header,
    )
}

/// Reads a group manifest and resolves feature names against `data`.
pub fn load_groups(manifest_path: impl AsRef<Path>, data: &Dataset) -> Result<GroupStructure> {
    let path = manifest_path.as_ref();
    let bad = |message: String| Error::Manifest {
        path: path.to_path_buf(),
        message,
    };
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let specs: Vec<GroupSpec> =
        serde_json::from_reader(std::io::BufReader::new(file)).map_err(|e| bad(e.to_string()))?;

    let mut owner: Vec<Option<&str>> = vec![None; data.n_features()];
    let mut groups = Vec::with_capacity(specs.len());
    for spec in &specs {
        if spec.cost.is_nan() || spec.cost < 0.0 {
            return Err(bad(format!("negative cost {} for group '{}'", spec.cost, spec.name)));
        }
        if spec.features.is_empty() {
            return Err(bad(format!("group '{}' lists no features", spec.name)));
        }
        let mut features = Vec::with_capacity(spec.features.len());
        for name in &spec.features {
            let j = data
                .feature_index(name)
                .ok_or_else(|| bad(format!("unknown feature name '{name}' in group '{}'", spec.name)))?;
            if let Some(prev) = owner[j] {
                return Err(bad(format!(
                    "feature '{name}' appears in groups '{prev}' and '{}'",
                    spec.name
                )));
            }
            owner[j] = Some(&spec.name);
            features.push(j);
        }
        groups.push(Group {
            name: spec.name.clone(),
            cost: spec.cost,
            features,
        });
    }
    if let Some(j) = owner.iter().position(Option::is_none) {
        return Err(bad(format!("uncovered feature '{}'", data.feature_names()[j])));
    }
    GroupStructure::new(groups, data.n_features()).map_err(|e| bad(e.to_string()))
}

/// Writes `features.csv`-style and `labels.csv`-style files.
///
/// Floats use Rust's shortest round-trip formatting, so reading the files
/// back reproduces the dataset bit for bit.
pub fn write_dataset(data: &Dataset, features_path: impl AsRef<Path>, labels_path: impl AsRef<Path>) -> Result<()> {
    write_csv(features_path.as_ref(), data.feature_names(), data.features(), |v| v.to_string())?;
    write_csv(labels_path.as_ref(), data.label_names(), data.labels(), |v| v.to_string())
}

fn write_csv<T>(path: &Path, header: &[String], values: &Array2<T>, fmt: impl Fn(&T) -> String) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut writer = csv::Writer::from_writer(BufWriter::new(file));
    let io_err = |e: csv::Error| Error::io(path, std::io::Error::other(e));
    writer.write_record(header).map_err(io_err)?;
    for row in values.rows() {
        writer.write_record(row.iter().map(&fmt)).map_err(io_err)?;
    }
    writer.flush().map_err(|e| Error::io(path, e))
}

pub fn write_groups(groups: &GroupStructure, data: &Dataset, path: impl AsRef<Path>) -> Result<()> {
    let path: PathBuf = path.as_ref().to_path_buf();
    let specs: Vec<GroupSpec> = groups
        .groups()
        .iter()
        .map(|g| GroupSpec {
            name: g.name.clone(),
            cost: g.cost,
            features: data.names_of(&g.features),
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&specs)?;
    out.push('\n');
    let mut file = File::create(&path).map_err(|e| Error::io(&path, e))?;
    file.write_all(out.as_bytes()).map_err(|e| Error::io(&path, e))
}
