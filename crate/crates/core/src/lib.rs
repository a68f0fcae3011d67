//! Cost-constrained multi-label feature selection over grouped features.
//!
//! Features come in groups with a price attached to each group: paying for a
//! group once unlocks all of its features. Given a budget, the crate selects a
//! subset of features that is informative about a vector of binary labels
//! while keeping the total group cost within the budget.
//!
//! The main entry points:
//!
//! - [`selection::proposed_select`]: two-phase selection. A cost-blind greedy
//!   pass spends the budget, then zero-cost features from already paid groups
//!   are added until a permuted "shadow" copy of a candidate looks more
//!   informative than the best real one.
//! - [`selection::sfs_penalized`]: greedy forward selection with a linear cost
//!   penalty, with [`selection::lambda_max`] giving the penalty at which cost
//!   dominates relevance.
//! - [`selection::exhaustive_oracle`]: brute-force optimum for small inputs.
//! - [`evaluation::evaluate_subset`]: ML-kNN fit on a selected subset and the
//!   usual multi-label metrics.
//!
//! All information measures are plug-in estimates in bits over a
//! [`info::DiscretizedView`] of the data.
//!
//! ```no_run
//! use grouplect::data::generate_illustrative;
//! use grouplect::info::discretize;
//! use grouplect::selection::{proposed_select, SelectionConfig};
//!
//! let (data, groups) = generate_illustrative(5000, 0.2, 7).unwrap();
//! let view = discretize(&data, 5).unwrap();
//! let trace = proposed_select(&view, &groups, &SelectionConfig::with_budget(1.0)).unwrap();
//! println!("{:?}", trace.selected);
//! ```

pub mod cli;
pub mod data;
mod error;
pub mod evaluation;
pub mod info;
pub mod scoring;
pub mod selection;

pub use error::{Error, Result};
