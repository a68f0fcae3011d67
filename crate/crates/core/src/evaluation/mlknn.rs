use ndarray::{Array1, Array2, ArrayView2, Axis};
use rayon::prelude::*;

use crate::data::Dataset;
use crate::{Error, Result};

pub const DEFAULT_K: usize = 10;
pub const DEFAULT_SMOOTHING: f64 = 1.0;

/// Multi-label k-nearest-neighbour classifier.
///
/// For each label `l` the model keeps a smoothed prior `P(y_l = 1)` and two
/// tables `P(c | y_l = 1)` and `P(c | y_l = 0)` over the number `c ∈ 0..=k`
/// of a point's neighbours that carry `l`, estimated leave-one-out on the
/// training set. A new point's score for `l` is the posterior
/// `P(y_l = 1 | c)`.
#[derive(Debug, Clone)]
pub struct MlknnModel {
    k: usize,
    s: f64,
    features: Vec<usize>,
    feature_names: Vec<String>,
    mean: Array1<f64>,
    sd: Array1<f64>,
    train: Array2<f64>,
    train_labels: Array2<u8>,
    prior: Vec<f64>,
    given_pos: Vec<Vec<f64>>,
    given_neg: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Prediction {
    pub scores: Array2<f64>,
    pub decisions: Array2<u8>,
}

/// Indices of the `k` rows of `train` closest to `point`, skipping `skip`.
/// Equal distances go to the lower row index.
fn neighbours(train: ArrayView2<'_, f64>, point: &[f64], k: usize, skip: Option<usize>) -> Vec<usize> {
    let width = train.ncols();
    let flat = train.as_slice().expect("training matrix is kept in standard layout");
    let mut dist: Vec<(f64, usize)> = flat
        .chunks_exact(width)
        .enumerate()
        .filter(|(i, _)| Some(*i) != skip)
        .map(|(i, row)| {
            let d: f64 = row.iter().zip(point).map(|(a, b)| (a - b) * (a - b)).sum();
            (d, i)
        })
        .collect();
    let order = |a: &(f64, usize), b: &(f64, usize)| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1));
    if dist.len() > k {
        dist.select_nth_unstable_by(k - 1, order);
        dist.truncate(k);
    }
    dist.sort_by(order);
    dist.into_iter().map(|(_, i)| i).collect()
}

fn label_counts(labels: &Array2<u8>, rows: &[usize]) -> Vec<usize> {
    (0..labels.ncols())
        .map(|l| rows.iter().filter(|&&i| labels[[i, l]] == 1).count())
        .collect()
}

pub fn fit_mlknn(train: &Dataset, subset: &[usize], k: usize, s: f64) -> Result<MlknnModel> {
    if subset.is_empty() {
        return Err(Error::invalid("ML-kNN needs at least one feature"));
    }
    if let Some(&j) = subset.iter().find(|&&j| j >= train.n_features()) {
        return Err(Error::invalid(format!("feature index {j} out of range")));
    }
    let n = train.n_rows();
    if k == 0 || k >= n {
        return Err(Error::invalid(format!("k must satisfy 1 <= k < n = {n}, got {k}")));
    }
    if s.is_nan() || s < 0.0 {
        return Err(Error::invalid(format!("smoothing must be >= 0, got {s}")));
    }

    let raw = train.features().select(Axis(1), subset);
    let mean = raw.mean_axis(Axis(0)).expect("n >= 2");
    let sd = raw.std_axis(Axis(0), 0.0).mapv(|v| if v > 0.0 { v } else { 1.0 });
    let z = ((&raw - &mean) / &sd).as_standard_layout().into_owned();
    let labels = train.labels().clone();
    let q = labels.ncols();

    let prior: Vec<f64> = (0..q)
        .map(|l| {
            let ones = labels.column(l).iter().filter(|&&v| v == 1).count() as f64;
            (s + ones) / (2.0 * s + n as f64)
        })
        .collect();

    let counts: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let row = z.row(i).to_vec();
            label_counts(&labels, &neighbours(z.view(), &row, k, Some(i)))
        })
        .collect();

    let mut pos_hist = vec![vec![0usize; k + 1]; q];
    let mut neg_hist = vec![vec![0usize; k + 1]; q];
    for (i, c) in counts.iter().enumerate() {
        for l in 0..q {
            if labels[[i, l]] == 1 {
                pos_hist[l][c[l]] += 1;
            } else {
                neg_hist[l][c[l]] += 1;
            }
        }
    }
    let smooth = |hist: &[usize]| -> Vec<f64> {
        let total: usize = hist.iter().sum();
        let denom = s * (k as f64 + 1.0) + total as f64;
        hist.iter()
            .map(|&h| if denom > 0.0 { (s + h as f64) / denom } else { 1.0 / (k as f64 + 1.0) })
            .collect()
    };

    Ok(MlknnModel {
        k,
        s,
        features: subset.to_vec(),
        feature_names: train.names_of(subset),
        mean,
        sd,
        train: z,
        train_labels: labels,
        prior,
        given_pos: pos_hist.iter().map(|h| smooth(h)).collect(),
        given_neg: neg_hist.iter().map(|h| smooth(h)).collect(),
    })
}

impl MlknnModel {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn smoothing(&self) -> f64 {
        self.s
    }

    pub fn features(&self) -> &[usize] {
        &self.features
    }

    pub fn priors(&self) -> &[f64] {
        &self.prior
    }

    /// `P(c | y_l = 1)` for `c = 0..=k`.
    pub fn count_given_positive(&self, label: usize) -> &[f64] {
        &self.given_pos[label]
    }

    /// `P(c | y_l = 0)` for `c = 0..=k`.
    pub fn count_given_negative(&self, label: usize) -> &[f64] {
        &self.given_neg[label]
    }

    fn posterior(&self, label: usize, count: usize) -> f64 {
        let on = self.prior[label] * self.given_pos[label][count];
        let off = (1.0 - self.prior[label]) * self.given_neg[label][count];
        if on + off > 0.0 {
            on / (on + off)
        } else {
            0.5
        }
    }

    /// Predicts rows of `data`, whose features must include the model's
    /// subset under the same names.
    pub fn predict(&self, data: &Dataset) -> Result<Prediction> {
        for (&j, name) in self.features.iter().zip(&self.feature_names) {
            if data.feature_names().get(j) != Some(name) {
                return Err(Error::invalid(format!(
                    "dimension mismatch: expected feature '{name}' at column {j}"
                )));
            }
        }
        self.predict_matrix(data.features().select(Axis(1), &self.features).view())
    }

    /// Predicts raw (unstandardized) rows whose columns are the model's
    /// subset, in order.
    pub fn predict_matrix(&self, x: ArrayView2<'_, f64>) -> Result<Prediction> {
        if x.ncols() != self.features.len() {
            return Err(Error::invalid(format!(
                "dimension mismatch: model uses {} features, input has {}",
                self.features.len(),
                x.ncols()
            )));
        }
        let z = (&x - &self.mean) / &self.sd;
        let q = self.prior.len();
        let rows: Vec<Vec<f64>> = (0..z.nrows())
            .into_par_iter()
            .map(|i| {
                let point = z.row(i).to_vec();
                let counts = label_counts(&self.train_labels, &neighbours(self.train.view(), &point, self.k, None));
                (0..q).map(|l| self.posterior(l, counts[l])).collect()
            })
            .collect();
        let scores = Array2::from_shape_fn((z.nrows(), q), |(i, l)| rows[i][l]);
        let decisions = scores.mapv(|p| u8::from(p >= 0.5));
        Ok(Prediction { scores, decisions })
    }
}
