use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Upper bound on the total group cost of a selected subset.
///
/// May be `+inf` to disable the constraint.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Budget(f64);

impl Budget {
    pub const UNLIMITED: Budget = Budget(f64::INFINITY);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_nan() || value < 0.0 {
            return Err(Error::invalid(format!("budget must be >= 0, got {value}")));
        }
        Ok(Budget(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Group {
    pub name: String,
    pub cost: f64,
    pub features: Vec<usize>,
}

/// Partition of the feature indices `0..p` into costed groups.
///
/// Selecting any feature of a group pays the group's cost once; every other
/// feature of that group is free from then on.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupStructure {
    groups: Vec<Group>,
    group_of: Vec<usize>,
}

impl GroupStructure {
    pub fn new(groups: Vec<Group>, n_features: usize) -> Result<Self> {
        let mut group_of = vec![usize::MAX; n_features];
        for (g, group) in groups.iter().enumerate() {
            if group.features.is_empty() {
                return Err(Error::invalid(format!("group '{}' is empty", group.name)));
            }
            if group.cost.is_nan() || group.cost < 0.0 {
                return Err(Error::invalid(format!(
                    "negative cost {} for group '{}'",
                    group.cost, group.name
                )));
            }
            for &j in &group.features {
                if j >= n_features {
                    return Err(Error::invalid(format!(
                        "feature index {j} out of range for {n_features} features"
                    )));
                }
                if group_of[j] != usize::MAX {
                    return Err(Error::invalid(format!(
                        "feature {j} appears in groups '{}' and '{}'",
                        groups[group_of[j]].name, group.name
                    )));
                }
                group_of[j] = g;
            }
        }
        if let Some(j) = group_of.iter().position(|&g| g == usize::MAX) {
            return Err(Error::invalid(format!("uncovered feature {j}")));
        }
        Ok(GroupStructure { groups, group_of })
    }

    /// One group per feature, all with the same cost.
    pub fn singletons(n_features: usize, cost: f64) -> Result<Self> {
        let groups = (0..n_features)
            .map(|j| Group {
                name: format!("G{j}"),
                cost,
                features: vec![j],
            })
            .collect();
        Self::new(groups, n_features)
    }

    pub fn groups(&self) -> &[Group] {
        &self.groups
    }

    pub fn n_groups(&self) -> usize {
        self.groups.len()
    }

    pub fn n_features(&self) -> usize {
        self.group_of.len()
    }

    pub fn group_of(&self, feature: usize) -> usize {
        self.group_of[feature]
    }

    pub fn cost_of_group(&self, group: usize) -> f64 {
        self.groups[group].cost
    }

    pub fn total_cost(&self) -> f64 {
        self.groups.iter().map(|g| g.cost).sum()
    }

    /// Smallest strictly positive group cost, if any group has one.
    pub fn min_positive_cost(&self) -> Option<f64> {
        self.groups
            .iter()
            .map(|g| g.cost)
            .filter(|&c| c > 0.0)
            .min_by(f64::total_cmp)
    }

    /// Cost of a feature subset: each touched group is paid exactly once.
    pub fn subset_cost(&self, subset: &[usize]) -> Result<f64> {
        let touched = self.touched(subset)?;
        Ok(self
            .groups
            .iter()
            .zip(&touched)
            .filter(|(_, &t)| t)
            .map(|(g, _)| g.cost)
            .sum())
    }

    /// Extra cost of adding `feature` to `subset`: zero when its group is
    /// already paid for, otherwise the group's cost.
    pub fn incremental_cost(&self, feature: usize, subset: &[usize]) -> Result<f64> {
        self.check_index(feature)?;
        if subset.contains(&feature) {
            return Err(Error::invalid(format!(
                "feature {feature} is already in the subset"
            )));
        }
        let touched = self.touched(subset)?;
        let g = self.group_of[feature];
        Ok(if touched[g] { 0.0 } else { self.groups[g].cost })
    }

    /// Unselected features whose group is already paid for, ascending.
    pub fn zero_cost_pool(&self, subset: &[usize]) -> Result<Vec<usize>> {
        let touched = self.touched(subset)?;
        let mut in_subset = vec![false; self.n_features()];
        for &j in subset {
            in_subset[j] = true;
        }
        Ok((0..self.n_features())
            .filter(|&j| !in_subset[j] && touched[self.group_of[j]])
            .collect())
    }

    fn touched(&self, subset: &[usize]) -> Result<Vec<bool>> {
        let mut touched = vec![false; self.groups.len()];
        for &j in subset {
            self.check_index(j)?;
            touched[self.group_of[j]] = true;
        }
        Ok(touched)
    }

    fn check_index(&self, j: usize) -> Result<()> {
        if j >= self.n_features() {
            return Err(Error::invalid(format!(
                "feature index {j} out of range for {} features",
                self.n_features()
            )));
        }
        Ok(())
    }
}
