//! Budgeted feature selection.
//!
//! [`sfs_penalized`] is greedy forward selection maximizing
//! `score(k, S) - λ·c(k, S)`, where `c(k, S)` is the group cost that adding
//! `k` would incur. With `λ = 0` it ignores costs entirely (the "traditional"
//! method) and relies on the budget check alone.
//!
//! [`proposed_select`] runs the cost-blind pass first and then spends no
//! further money: it keeps adding features from groups that are already
//! paid for, stopping as soon as a shadow copy of one of the remaining
//! candidates outscores the best real candidate.
//!
//! [`exhaustive_oracle`] enumerates every affordable subset of a small
//! problem and returns the one with the highest joint mutual information
//! with the labels.

mod forward;
mod oracle;
mod proposed;
mod trace;

use serde::{Deserialize, Serialize};

pub use forward::{lambda_max, sfs_penalized};
pub use oracle::{exhaustive_oracle, joint_mutual_information, OracleResult, DEFAULT_MAX_FEATURES};
pub use proposed::proposed_select;
pub use trace::{Phase, Rejection, SelectionTrace, Step, StepReport, StopReason, TraceReport};

use crate::data::Budget;
use crate::scoring::ScoreConfig;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BudgetMode {
    /// Never exceed the budget: a pick that would not fit ends the run, as
    /// does a budget too small to pay for any further group.
    AffordableOnly,
    /// Keep adding while the running cost is within budget, then stop; the
    /// last pick may overshoot, in which case the trace is infeasible.
    PaperStrict,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopMode {
    /// Stop the zero-cost phase the first time a shadow beats the best real
    /// candidate.
    FirstShadowWin,
    /// Count shadow wins and stop once they reach `ceil(f·|U|)`, where `U`
    /// is the zero-cost pool. A win below the threshold does not block the
    /// real candidate.
    FractionOfWins(f64),
    /// Never stop early; the whole zero-cost pool is added.
    Disabled,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SelectionConfig {
    pub budget: Budget,
    pub score: ScoreConfig,
    /// Cost penalty for [`sfs_penalized`]; ignored by [`proposed_select`].
    pub lambda: f64,
    /// Budget semantics for [`sfs_penalized`]. The first phase of
    /// [`proposed_select`] always uses [`BudgetMode::AffordableOnly`].
    pub budget_mode: BudgetMode,
    pub stop_mode: StopMode,
    pub shadow_seed: u64,
}

impl SelectionConfig {
    pub fn with_budget(budget: f64) -> Self {
        SelectionConfig {
            budget: Budget::new(budget).expect("budget must be nonnegative"),
            ..SelectionConfig::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.lambda.is_nan() || self.lambda < 0.0 {
            return Err(Error::invalid(format!("lambda must be >= 0, got {}", self.lambda)));
        }
        if let StopMode::FractionOfWins(f) = self.stop_mode {
            if !(f > 0.0 && f <= 1.0) {
                return Err(Error::invalid(format!("stop fraction must lie in (0, 1], got {f}")));
            }
        }
        ScoreConfig::new(self.score.criterion, self.score.feature_order, self.score.label_order)?;
        Ok(())
    }
}

impl Default for SelectionConfig {
    fn default() -> Self {
        SelectionConfig {
            budget: Budget::UNLIMITED,
            score: ScoreConfig::default(),
            lambda: 0.0,
            budget_mode: BudgetMode::AffordableOnly,
            stop_mode: StopMode::FirstShadowWin,
            shadow_seed: 0,
        }
    }
}
