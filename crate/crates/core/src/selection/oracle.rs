use serde::{Deserialize, Serialize};

use super::forward::check_shapes;
use crate::data::{Budget, GroupStructure};
use crate::info::{DiscretizedView, Joint};
use crate::{Error, Result};

/// Largest feature count [`exhaustive_oracle`] accepts by default.
pub const DEFAULT_MAX_FEATURES: usize = 15;

const TIE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleResult {
    pub subset: Vec<usize>,
    pub cost: f64,
    /// Plug-in `M(Y_1..Y_q; X_S)` in bits.
    pub mi: f64,
}

/// Plug-in mutual information between all labels jointly and the features
/// in `subset` jointly; `0` for the empty subset.
pub fn joint_mutual_information(view: &DiscretizedView, subset: &[usize]) -> Result<f64> {
    if let Some(&j) = subset.iter().find(|&&j| j >= view.n_features()) {
        return Err(Error::invalid(format!("feature index {j} out of range")));
    }
    let n = view.n_rows();
    let y = label_joint(view);
    let (x, xy) = subset.iter().fold((Joint::unit(n), y.clone()), |(x, xy), &j| {
        (x.with(view.feature(j)), xy.with(view.feature(j)))
    });
    Ok(crate::info::nonnegative_cmi(x.entropy(), y.entropy(), xy.entropy(), 0.0))
}

fn label_joint(view: &DiscretizedView) -> Joint {
    (0..view.n_labels()).fold(Joint::unit(view.n_rows()), |j, l| j.with(view.label(l)))
}

/// Best affordable subset by joint mutual information with the labels.
///
/// Every subset with `c(S) <= budget` is enumerated, so this refuses
/// problems with more than `max_features` features. Scores within `1e-12`
/// of the best count as ties; among those the smallest subset wins, then
/// the lexicographically smallest sorted index list.
pub fn exhaustive_oracle(
    view: &DiscretizedView,
    groups: &GroupStructure,
    budget: Budget,
    max_features: usize,
) -> Result<OracleResult> {
    check_shapes(view, groups)?;
    let p = view.n_features();
    if p > max_features {
        return Err(Error::Refused(format!(
            "exhaustive search over {p} features exceeds the limit of {max_features}"
        )));
    }
    let n = view.n_rows();
    let y = label_joint(view);
    let h_y = y.entropy();

    let mut feasible: Vec<(Vec<usize>, f64, f64)> = Vec::new();
    let mut stack = vec![(0usize, Vec::<usize>::new(), Joint::unit(n), y)];
    while let Some((next, subset, x, xy)) = stack.pop() {
        let cost = groups.subset_cost(&subset)?;
        if cost > budget.value() {
            continue;
        }
        let mi = crate::info::nonnegative_cmi(x.entropy(), h_y, xy.entropy(), 0.0);
        for j in next..p {
            let mut child = subset.clone();
            child.push(j);
            stack.push((j + 1, child, x.with(view.feature(j)), xy.with(view.feature(j))));
        }
        feasible.push((subset, cost, mi));
    }

    let best = feasible.iter().map(|f| f.2).fold(f64::NEG_INFINITY, f64::max);
    let (subset, cost, mi) = feasible
        .into_iter()
        .filter(|f| f.2 >= best - TIE)
        .min_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)))
        .expect("the empty subset is always affordable");
    Ok(OracleResult { subset, cost, mi })
}
