use ndarray::ArrayView1;

use crate::data::Dataset;
use crate::{Error, Result};

pub const DEFAULT_BINS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Feature,
    Label,
    Shadow,
}

/// Borrowed integer-coded column: every code lies in `0..arity`.
#[derive(Debug, Clone, Copy)]
pub struct ColumnRef<'a> {
    pub codes: &'a [u32],
    pub arity: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Column {
    pub codes: Vec<u32>,
    pub arity: u32,
    pub origin: Origin,
}

impl Column {
    pub fn as_ref(&self) -> ColumnRef<'_> {
        ColumnRef {
            codes: &self.codes,
            arity: self.arity,
        }
    }
}

/// Integer-coded copy of a dataset.
///
/// Columns `0..p` are the features, columns `p..p+q` the labels.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscretizedView {
    columns: Vec<Column>,
    n_features: usize,
    n_rows: usize,
}

impl DiscretizedView {
    /// Builds a view from already discrete columns. Arity is `max code + 1`;
    /// label columns must be binary.
    pub fn from_codes(features: Vec<Vec<u32>>, labels: Vec<Vec<u32>>) -> Result<Self> {
        let n_rows = features
            .first()
            .or(labels.first())
            .map(Vec::len)
            .ok_or_else(|| Error::invalid("view needs at least one column"))?;
        if features.is_empty() || labels.is_empty() {
            return Err(Error::invalid("view needs at least one feature and one label"));
        }
        let n_features = features.len();
        let mut columns = Vec::with_capacity(features.len() + labels.len());
        for (codes, origin) in features
            .into_iter()
            .map(|c| (c, Origin::Feature))
            .chain(labels.into_iter().map(|c| (c, Origin::Label)))
        {
            if codes.len() != n_rows || n_rows == 0 {
                return Err(Error::invalid("columns must share a nonzero row count"));
            }
            let arity = codes.iter().copied().max().unwrap_or(0) + 1;
            if origin == Origin::Label && arity > 2 {
                return Err(Error::invalid("label columns must be binary"));
            }
            let arity = if origin == Origin::Label { 2 } else { arity };
            columns.push(Column { codes, arity, origin });
        }
        Ok(DiscretizedView {
            columns,
            n_features,
            n_rows,
        })
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_features(&self) -> usize {
        self.n_features
    }

    pub fn n_labels(&self) -> usize {
        self.columns.len() - self.n_features
    }

    pub fn n_columns(&self) -> usize {
        self.columns.len()
    }

    /// View column index of label `l`.
    pub fn label_column(&self, l: usize) -> usize {
        self.n_features + l
    }

    /// View column indices of all labels.
    pub fn label_columns(&self) -> Vec<usize> {
        (self.n_features..self.columns.len()).collect()
    }

    pub fn column(&self, c: usize) -> ColumnRef<'_> {
        self.columns[c].as_ref()
    }

    pub fn feature(&self, j: usize) -> ColumnRef<'_> {
        debug_assert!(j < self.n_features);
        self.column(j)
    }

    pub fn label(&self, l: usize) -> ColumnRef<'_> {
        self.column(self.label_column(l))
    }

    pub fn codes(&self, c: usize) -> &[u32] {
        &self.columns[c].codes
    }

    pub fn arity(&self, c: usize) -> u32 {
        self.columns[c].arity
    }

    pub fn origin(&self, c: usize) -> Origin {
        self.columns[c].origin
    }
}

/// Codes each feature column into at most `bins` equal-frequency bins.
///
/// Columns with at most `bins` distinct values are coded by the rank of the
/// value. Otherwise boundaries are the sorted values at positions
/// `floor(b·n/bins)` for `b = 1..bins`, and a value's code is the number of
/// boundaries not above it; equal values therefore always share a code.
/// Codes are compacted so that every code in `0..arity` is used.
pub fn discretize(data: &Dataset, bins: usize) -> Result<DiscretizedView> {
    if bins < 2 {
        return Err(Error::invalid(format!("bins must be at least 2, got {bins}")));
    }
    let mut columns = Vec::with_capacity(data.n_features() + data.n_labels());
    for j in 0..data.n_features() {
        let (codes, arity) = bin_column(data.feature(j), bins);
        columns.push(Column {
            codes,
            arity,
            origin: Origin::Feature,
        });
    }
    for l in 0..data.n_labels() {
        columns.push(Column {
            codes: data.label(l).iter().map(|&v| u32::from(v)).collect(),
            arity: 2,
            origin: Origin::Label,
        });
    }
    Ok(DiscretizedView {
        columns,
        n_features: data.n_features(),
        n_rows: data.n_rows(),
    })
}

fn bin_column(values: ArrayView1<'_, f64>, bins: usize) -> (Vec<u32>, u32) {
    let mut sorted: Vec<f64> = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut distinct = sorted.clone();
    distinct.dedup_by(|a, b| a.total_cmp(b).is_eq());

    let boundaries: Vec<f64> = if distinct.len() <= bins {
        distinct.into_iter().skip(1).collect()
    } else {
        let n = sorted.len();
        (1..bins).map(|b| sorted[b * n / bins]).collect()
    };
    let raw: Vec<usize> = values
        .iter()
        .map(|x| boundaries.partition_point(|b| b.total_cmp(x).is_le()))
        .collect();

    // compact away empty bins left by duplicated boundaries
    let mut used = vec![false; boundaries.len() + 1];
    for &r in &raw {
        used[r] = true;
    }
    let mut remap = vec![0u32; used.len()];
    let mut next = 0u32;
    for (slot, &u) in remap.iter_mut().zip(&used) {
        *slot = next;
        next += u32::from(u);
    }
    (raw.into_iter().map(|r| remap[r]).collect(), next)
}
