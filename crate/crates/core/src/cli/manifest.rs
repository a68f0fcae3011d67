use std::collections::BTreeMap;
use std::path::Path;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::args::{DataArgs, KnnArgs, PolicyArgs, ScoreArgs};

/// Everything needed to rerun a command: inputs, settings and tool
/// version. Contains no timestamps, so reruns reproduce it byte for byte.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub config: BTreeMap<String, Value>,
}

impl RunManifest {
    pub fn new(command: &str) -> Self {
        RunManifest {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            inputs: BTreeMap::new(),
            config: BTreeMap::new(),
        }
    }

    pub fn input(mut self, name: &str, path: &Path) -> Self {
        self.inputs.insert(name.to_string(), path.display().to_string());
        self
    }

    pub fn set(mut self, key: &str, value: impl Serialize) -> Self {
        self.config
            .insert(key.to_string(), serde_json::to_value(value).expect("config values serialize"));
        self
    }

    pub(super) fn data(self, data: &DataArgs) -> Self {
        self.input("features", &data.features)
            .input("labels", &data.labels)
            .input("groups", &data.groups)
    }

    pub(super) fn score(self, score: &ScoreArgs) -> Self {
        self.set("bins", score.bins)
            .set("criterion", value_name(score.criterion))
            .set("a", score.order_a)
            .set("b", score.order_b)
    }

    pub(super) fn policy(self, policy: &PolicyArgs) -> Self {
        self.set("budget_mode", value_name(policy.budget_mode))
            .set("stop_mode", value_name(policy.stop_mode))
            .set("stop_fraction", policy.stop_fraction)
    }

    pub(super) fn knn(self, knn: &KnnArgs) -> Self {
        self.set("k", knn.knn_k).set("s", knn.knn_s)
    }
}

/// Budgets may be infinite, which JSON cannot hold as a number.
pub(super) fn budget_value(budget: f64) -> Value {
    if budget.is_finite() {
        json!(budget)
    } else {
        json!(budget.to_string())
    }
}

/// The spelling a flag value has on the command line.
fn value_name(v: impl ValueEnum) -> String {
    v.to_possible_value().map_or_else(String::new, |p| p.get_name().to_string())
}
