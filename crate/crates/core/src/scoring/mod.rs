//! Candidate relevance scores and the shadow-feature pool.
//!
//! Two families of scores are available:
//!
//! - [`Criterion::FullConditioning`]: the conditional mutual information of
//!   the candidate and each label subset given the whole selected set,
//!   `Σ_B M(X_k; Y_B | X_S)`.
//! - [`Criterion::LowerBoundSum`]: low-order surrogates built from subsets of
//!   at most `feature_order` features and `label_order` labels. With
//!   `feature_order = 1` only marginal terms `M(Y_B; X_k)` remain; with
//!   `feature_order = 2` each selected feature `j` contributes
//!   `M(Y_B; X_k | X_j) = M(Y_B; X_k) + II(Y_B, X_k, X_j)`, a multi-label
//!   generalization of JMI.
//!
//! `B` ranges over label subsets of size `label_order` (capped by the number
//! of labels). Scores are plain sums, not averages.

mod shadow;

use serde::{Deserialize, Serialize};

pub use shadow::{make_shadow_pool, max_shadow_score, ShadowPool};

use crate::info::{ColumnRef, DiscretizedView, Joint};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    FullConditioning,
    LowerBoundSum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScoreConfig {
    /// Size of feature subsets in the lower-bound sum (1 or 2). Unused by
    /// full conditioning.
    pub feature_order: u8,
    /// Size of label subsets (1 or 2).
    pub label_order: u8,
    pub criterion: Criterion,
}

impl ScoreConfig {
    pub fn new(criterion: Criterion, feature_order: u8, label_order: u8) -> Result<Self> {
        for (name, order) in [("feature", feature_order), ("label", label_order)] {
            if !(1..=2).contains(&order) {
                return Err(Error::invalid(format!(
                    "{name} order must be 1 or 2, got {order}"
                )));
            }
        }
        Ok(ScoreConfig {
            feature_order,
            label_order,
            criterion,
        })
    }

    /// `Σ_l M(Y_l; X_k)`.
    pub fn marginal() -> Self {
        ScoreConfig {
            feature_order: 1,
            label_order: 1,
            criterion: Criterion::LowerBoundSum,
        }
    }

    /// `Σ_l Σ_{j∈S} M(Y_l; X_k | X_j)`.
    pub fn pairwise() -> Self {
        ScoreConfig {
            feature_order: 2,
            label_order: 1,
            criterion: Criterion::LowerBoundSum,
        }
    }

    /// `Σ_l M(Y_l; X_k | X_S)`.
    pub fn full() -> Self {
        ScoreConfig {
            feature_order: 2,
            label_order: 1,
            criterion: Criterion::FullConditioning,
        }
    }
}

impl Default for ScoreConfig {
    fn default() -> Self {
        ScoreConfig::full()
    }
}

struct Block {
    cond: Joint,
    cond_entropy: f64,
    /// Joint of each label subset with `cond`, and its entropy.
    with_labels: Vec<(Joint, f64)>,
}

/// Scores candidates against a fixed selected set.
///
/// Everything that does not depend on the candidate (the conditioning
/// blocks and their joints with the label subsets) is computed once, so a
/// selection step builds one `Scorer` and scores every real and shadow
/// candidate with it.
pub struct Scorer<'v> {
    view: &'v DiscretizedView,
    selected: Vec<usize>,
    blocks: Vec<Block>,
}

impl<'v> Scorer<'v> {
    /// `labels` are label indices in `0..q`, `selected` feature indices.
    pub fn new(
        view: &'v DiscretizedView,
        selected: &[usize],
        labels: &[usize],
        cfg: &ScoreConfig,
    ) -> Result<Self> {
        let cfg = ScoreConfig::new(cfg.criterion, cfg.feature_order, cfg.label_order)?;
        if labels.is_empty() {
            return Err(Error::invalid("scoring needs at least one label"));
        }
        if let Some(&l) = labels.iter().find(|&&l| l >= view.n_labels()) {
            return Err(Error::invalid(format!("label index {l} out of range")));
        }
        if let Some(&j) = selected.iter().find(|&&j| j >= view.n_features()) {
            return Err(Error::invalid(format!("feature index {j} out of range")));
        }
        let n = view.n_rows();

        let label_sets: Vec<Vec<usize>> = if cfg.label_order == 1 || labels.len() == 1 {
            labels.iter().map(|&l| vec![l]).collect()
        } else {
            labels
                .iter()
                .enumerate()
                .flat_map(|(i, &l)| labels[i + 1..].iter().map(move |&m| vec![l, m]))
                .collect()
        };

        let conditioning: Vec<Joint> = match cfg.criterion {
            Criterion::FullConditioning => {
                let cols: Vec<ColumnRef<'_>> = selected.iter().map(|&j| view.feature(j)).collect();
                vec![Joint::of(n, &cols)]
            }
            Criterion::LowerBoundSum if cfg.feature_order == 1 || selected.is_empty() => {
                vec![Joint::unit(n)]
            }
            Criterion::LowerBoundSum => selected
                .iter()
                .map(|&j| Joint::of(n, &[view.feature(j)]))
                .collect(),
        };

        let blocks = conditioning
            .into_iter()
            .map(|cond| {
                let with_labels = label_sets
                    .iter()
                    .map(|set| {
                        let joint = set.iter().fold(cond.clone(), |acc, &l| acc.with(view.label(l)));
                        let h = joint.entropy();
                        (joint, h)
                    })
                    .collect();
                Block {
                    cond_entropy: cond.entropy(),
                    cond,
                    with_labels,
                }
            })
            .collect();

        Ok(Scorer {
            view,
            selected: selected.to_vec(),
            blocks,
        })
    }

    pub fn selected(&self) -> &[usize] {
        &self.selected
    }

    /// Score of an arbitrary column (a real feature or a shadow).
    pub fn score(&self, candidate: ColumnRef<'_>) -> f64 {
        self.blocks
            .iter()
            .map(|block| {
                let h_kc = block.cond.with(candidate).entropy();
                block
                    .with_labels
                    .iter()
                    .map(|(joint, h_yc)| {
                        let h_kyc = joint.with(candidate).entropy();
                        crate::info::nonnegative_cmi(h_kc, *h_yc, h_kyc, block.cond_entropy)
                    })
                    .sum::<f64>()
            })
            .sum()
    }

    pub fn score_feature(&self, k: usize) -> Result<f64> {
        if k >= self.view.n_features() {
            return Err(Error::invalid(format!("feature index {k} out of range")));
        }
        if self.selected.contains(&k) {
            return Err(Error::invalid(format!("candidate {k} is already selected")));
        }
        Ok(self.score(self.view.feature(k)))
    }
}

/// Relevance of feature `k` given the selected features `selected`,
/// summed over the label indices `labels`.
pub fn score_candidate(
    view: &DiscretizedView,
    k: usize,
    selected: &[usize],
    labels: &[usize],
    cfg: &ScoreConfig,
) -> Result<f64> {
    Scorer::new(view, selected, labels, cfg)?.score_feature(k)
}

/// Index and score of the best candidate: strictly greater scores win, ties
/// go to the lowest index. Order of `scored` does not matter.
pub(crate) fn argmax(scored: impl IntoIterator<Item = (usize, f64)>) -> Option<(usize, f64)> {
    scored.into_iter().fold(None, |best, (k, s)| match best {
        Some((bk, bs)) if bs > s || (bs == s && bk < k) => Some((bk, bs)),
        _ => Some((k, s)),
    })
}
