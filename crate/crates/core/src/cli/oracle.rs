use serde::Serialize;

use super::args::OracleArgs;
use super::manifest::{budget_value, RunManifest};
use super::{emit_json, load_inputs};
use crate::data::Budget;
use crate::info::discretize;
use crate::selection::{
    exhaustive_oracle, joint_mutual_information, proposed_select, sfs_penalized, BudgetMode, DEFAULT_MAX_FEATURES,
};
use crate::Result;

#[derive(Serialize)]
struct SubsetSummary {
    method: &'static str,
    subset: Vec<String>,
    cost: f64,
    mi: f64,
}

#[derive(Serialize)]
struct OracleOutput {
    manifest: RunManifest,
    oracle: SubsetSummary,
    greedy: Vec<SubsetSummary>,
}

pub(super) fn run(args: &OracleArgs) -> Result<i32> {
    let (data, groups) = load_inputs(&args.data)?;
    let view = discretize(&data, args.score.bins)?;
    let best = exhaustive_oracle(&view, &groups, Budget::new(args.budget)?, DEFAULT_MAX_FEATURES)?;

    let mut cfg = args.policy.selection(args.budget, args.score.config()?, 0.0, args.seed)?;
    cfg.budget_mode = BudgetMode::AffordableOnly;
    let mut greedy = Vec::new();
    for (method, trace) in [
        ("proposed", proposed_select(&view, &groups, &cfg)?),
        ("traditional", sfs_penalized(&view, &groups, &cfg)?),
    ] {
        greedy.push(SubsetSummary {
            method,
            subset: data.names_of(&trace.selected),
            cost: trace.total_cost(),
            mi: joint_mutual_information(&view, &trace.selected)?,
        });
    }

    let manifest = RunManifest::new("oracle")
        .data(&args.data)
        .set("budget", budget_value(args.budget))
        .score(&args.score)
        .policy(&args.policy)
        .set("seed", args.seed);
    let output = OracleOutput {
        manifest,
        oracle: SubsetSummary {
            method: "oracle",
            subset: data.names_of(&best.subset),
            cost: best.cost,
            mi: best.mi,
        },
        greedy,
    };
    emit_json(&output, args.out.as_deref())?;
    Ok(0)
}
