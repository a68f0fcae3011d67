use std::fmt::Write as _;

use serde::Serialize;

use super::args::{SelectArgs, SelectMethod};
use super::manifest::{budget_value, RunManifest};
use super::{emit_json, load_inputs, EXIT_INFEASIBLE};
use crate::data::{Dataset, GroupStructure};
use crate::info::discretize;
use crate::selection::{lambda_max, proposed_select, sfs_penalized, SelectionTrace, TraceReport};
use crate::Result;

#[derive(Serialize)]
struct SelectOutput {
    manifest: RunManifest,
    method: &'static str,
    lambda: f64,
    trace: TraceReport,
}

pub(super) fn run(args: &SelectArgs) -> Result<i32> {
    let (data, groups) = load_inputs(&args.data)?;
    let score = args.score.config()?;
    let view = discretize(&data, args.score.bins)?;
    let lambda = if args.lambda_max {
        lambda_max(&view, &groups, &score)?
    } else {
        args.lambda
    };
    let cfg = args.policy.selection(args.budget, score, lambda, args.seed)?;
    let (method, trace) = match args.method {
        SelectMethod::Proposed => ("proposed", proposed_select(&view, &groups, &cfg)?),
        SelectMethod::Sfs => ("sfs", sfs_penalized(&view, &groups, &cfg)?),
    };

    let manifest = RunManifest::new("select")
        .data(&args.data)
        .set("budget", budget_value(args.budget))
        .set("method", method)
        .set("lambda", args.lambda)
        .set("lambda_max", args.lambda_max)
        .score(&args.score)
        .policy(&args.policy)
        .set("seed", args.seed);
    let output = SelectOutput {
        manifest,
        method,
        lambda,
        trace: trace.report(&data, &groups),
    };
    let table = step_table(&trace, &data, &groups);
    if args.out.is_some() {
        print!("{table}");
    } else {
        eprint!("{table}");
    }
    emit_json(&output, args.out.as_deref())?;
    Ok(if trace.is_feasible() { 0 } else { EXIT_INFEASIBLE })
}

/// One line per step, then the stop reason and the final set.
pub(crate) fn step_table(trace: &SelectionTrace, data: &Dataset, groups: &GroupStructure) -> String {
    let names = data.feature_names();
    let mut out = String::new();
    let _ = writeln!(out, "{:>4}  {:>5}  {:<12} {:>10}  {:>10}  {:>8}", "step", "phase", "feature", "score", "shadow_max", "cost");
    for (i, s) in trace.steps.iter().enumerate() {
        let shadow = s.shadow_max.map_or_else(|| "-".to_string(), |m| format!("{m:.6}"));
        let _ = writeln!(
            out,
            "{:>4}  {:>5}  {:<12} {:>10.6}  {:>10}  {:>8}",
            i + 1,
            s.phase.number(),
            names[s.feature],
            s.score,
            shadow,
            s.cumulative_cost
        );
    }
    let _ = write!(out, "stop: {}", serde_json::to_value(trace.stop_reason).map_or_else(|_| String::new(), |v| v.as_str().unwrap_or_default().to_string()));
    if let Some(r) = trace.rejected {
        let _ = write!(out, " ({} scored {:.6}, best shadow {:.6})", names[r.feature], r.score, r.shadow_max);
    }
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "selected: {{{}}}  cost {}",
        data.names_of(&trace.selected).join(", "),
        groups.subset_cost(&trace.selected).unwrap_or(f64::NAN)
    );
    out
}
