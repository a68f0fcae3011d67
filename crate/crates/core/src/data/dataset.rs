use std::collections::HashSet;

use ndarray::{Array2, ArrayView1, Axis};

use crate::{Error, Result};

/// Real-valued features and binary labels observed on the same rows.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    features: Array2<f64>,
    labels: Array2<u8>,
    feature_names: Vec<String>,
    label_names: Vec<String>,
}

impl Dataset {
    pub fn new(
        features: Array2<f64>,
        labels: Array2<u8>,
        feature_names: Vec<String>,
        label_names: Vec<String>,
    ) -> Result<Self> {
        let (n, p) = features.dim();
        let (n_labels_rows, q) = labels.dim();
        if n == 0 || p == 0 || q == 0 {
            return Err(Error::invalid(format!(
                "dataset needs at least one row, feature and label (got n={n}, p={p}, q={q})"
            )));
        }
        if n != n_labels_rows {
            return Err(Error::invalid(format!(
                "row count mismatch: {n} feature rows, {n_labels_rows} label rows"
            )));
        }
        if feature_names.len() != p || label_names.len() != q {
            return Err(Error::invalid("name count does not match column count"));
        }
        if let Some(v) = labels.iter().find(|&&v| v > 1) {
            return Err(Error::invalid(format!("non-binary label value {v}")));
        }
        check_unique(&feature_names, "feature")?;
        check_unique(&label_names, "label")?;
        Ok(Dataset {
            features,
            labels,
            feature_names,
            label_names,
        })
    }

    pub fn n_rows(&self) -> usize {
        self.features.nrows()
    }

    pub fn n_features(&self) -> usize {
        self.features.ncols()
    }

    pub fn n_labels(&self) -> usize {
        self.labels.ncols()
    }

    pub fn features(&self) -> &Array2<f64> {
        &self.features
    }

    pub fn labels(&self) -> &Array2<u8> {
        &self.labels
    }

    pub fn feature(&self, j: usize) -> ArrayView1<'_, f64> {
        self.features.column(j)
    }

    pub fn label(&self, l: usize) -> ArrayView1<'_, u8> {
        self.labels.column(l)
    }

    pub fn feature_names(&self) -> &[String] {
        &self.feature_names
    }

    pub fn label_names(&self) -> &[String] {
        &self.label_names
    }

    pub fn feature_index(&self, name: &str) -> Option<usize> {
        self.feature_names.iter().position(|f| f == name)
    }

    /// Names of the given feature indices, in the given order.
    pub fn names_of(&self, features: &[usize]) -> Vec<String> {
        features
            .iter()
            .map(|&j| self.feature_names[j].clone())
            .collect()
    }

    /// New dataset holding the given rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Dataset {
        Dataset {
            features: self.features.select(Axis(0), rows),
            labels: self.labels.select(Axis(0), rows),
            feature_names: self.feature_names.clone(),
            label_names: self.label_names.clone(),
        }
    }
}

fn check_unique(names: &[String], kind: &str) -> Result<()> {
    let mut seen = HashSet::with_capacity(names.len());
    for name in names {
        if !seen.insert(name.as_str()) {
            return Err(Error::invalid(format!("duplicate {kind} name '{name}'")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use ndarray::array;

    use super::*;

    fn names(prefix: &str, k: usize) -> Vec<String> {
        (0..k).map(|i| format!("{prefix}{i}")).collect()
    }

    #[test]
    fn rejects_non_binary_labels() {
        let err = Dataset::new(
            array![[0.0], [1.0]],
            array![[0], [2]],
            names("f", 1),
            names("y", 1),
        )
        .unwrap_err();
        assert!(err.to_string().contains("non-binary label"));
    }

    #[test]
    fn rejects_row_mismatch_and_duplicates() {
        let err = Dataset::new(array![[0.0], [1.0]], array![[0]], names("f", 1), names("y", 1))
            .unwrap_err();
        assert!(err.to_string().contains("row count mismatch"));

        let err = Dataset::new(
            array![[0.0, 1.0]],
            array![[0]],
            vec!["a".into(), "a".into()],
            names("y", 1),
        )
        .unwrap_err();
        assert!(err.to_string().contains("duplicate feature name"));
    }

    #[test]
    fn select_rows_keeps_names() {
        let d = Dataset::new(
            array![[0.0], [1.0], [2.0]],
            array![[0], [1], [0]],
            names("f", 1),
            names("y", 1),
        )
        .unwrap();
        let sub = d.select_rows(&[2, 0]);
        assert_eq!(sub.features().column(0).to_vec(), vec![2.0, 0.0]);
        assert_eq!(sub.feature_names(), d.feature_names());
    }
}
