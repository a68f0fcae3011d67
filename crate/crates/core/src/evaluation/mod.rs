//! ML-kNN classification and multi-label metrics for a selected subset.

mod metrics;
mod mlknn;

pub use metrics::{compute_metrics, EvalReport};
pub use mlknn::{fit_mlknn, MlknnModel, Prediction, DEFAULT_K, DEFAULT_SMOOTHING};

use crate::data::{Dataset, GroupStructure};
use crate::Result;

/// Fits ML-kNN on `train` using the features in `subset`, predicts `valid`
/// and scores the predictions. The report carries the subset's group cost.
pub fn evaluate_subset(
    train: &Dataset,
    valid: &Dataset,
    subset: &[usize],
    groups: &GroupStructure,
    k: usize,
    s: f64,
) -> Result<EvalReport> {
    let model = fit_mlknn(train, subset, k, s)?;
    let prediction = model.predict(valid)?;
    let mut report = compute_metrics(valid.labels(), &prediction.scores, &prediction.decisions)?;
    report.subset = train.names_of(subset);
    report.total_cost = groups.subset_cost(subset)?;
    Ok(report)
}
