use serde::{Deserialize, Serialize};

use crate::data::{Dataset, GroupStructure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Phase {
    /// Budget-spending greedy pass.
    Paid,
    /// Zero-cost additions from already paid groups.
    Free,
}

impl Phase {
    pub fn number(self) -> u8 {
        match self {
            Phase::Paid => 1,
            Phase::Free => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    BudgetExhausted,
    ShadowStop,
    PoolExhausted,
    Infeasible,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Step {
    pub feature: usize,
    pub phase: Phase,
    /// Relevance score of the feature when it was added (before any cost
    /// penalty).
    pub score: f64,
    /// Best shadow score at the time; only recorded in the free phase.
    pub shadow_max: Option<f64>,
    pub cumulative_cost: f64,
}

/// Candidate that triggered the shadow stop and was not added.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rejection {
    pub feature: usize,
    pub score: f64,
    pub shadow_max: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelectionTrace {
    pub steps: Vec<Step>,
    pub stop_reason: StopReason,
    pub selected: Vec<usize>,
    pub rejected: Option<Rejection>,
}

impl SelectionTrace {
    pub fn total_cost(&self) -> f64 {
        self.steps.last().map_or(0.0, |s| s.cumulative_cost)
    }

    /// False when the run ended over budget.
    pub fn is_feasible(&self) -> bool {
        self.stop_reason != StopReason::Infeasible
    }

    /// Selected set after each step, in selection order.
    pub fn prefixes(&self) -> impl Iterator<Item = &[usize]> {
        (1..=self.selected.len()).map(|i| &self.selected[..i])
    }

    pub fn report(&self, data: &Dataset, groups: &GroupStructure) -> TraceReport {
        let finite = |v: f64| v.is_finite().then_some(v);
        TraceReport {
            steps: self
                .steps
                .iter()
                .map(|s| StepReport {
                    feature: data.feature_names()[s.feature].clone(),
                    phase: s.phase.number(),
                    score: s.score,
                    shadow_max: s.shadow_max.and_then(finite),
                    cum_cost: s.cumulative_cost,
                })
                .collect(),
            stop_reason: self.stop_reason,
            selected: data.names_of(&self.selected),
            total_cost: groups.subset_cost(&self.selected).unwrap_or(f64::NAN),
            feasible: self.is_feasible(),
            rejected: self.rejected.map(|r| RejectionReport {
                feature: data.feature_names()[r.feature].clone(),
                score: r.score,
                shadow_max: r.shadow_max,
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepReport {
    pub feature: String,
    pub phase: u8,
    pub score: f64,
    pub shadow_max: Option<f64>,
    pub cum_cost: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RejectionReport {
    pub feature: String,
    pub score: f64,
    pub shadow_max: f64,
}

/// JSON form of a [`SelectionTrace`], with feature names.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceReport {
    pub steps: Vec<StepReport>,
    pub stop_reason: StopReason,
    pub selected: Vec<String>,
    pub total_cost: f64,
    pub feasible: bool,
    pub rejected: Option<RejectionReport>,
}
