use serde::Serialize;

use super::args::EvaluateArgs;
use super::manifest::RunManifest;
use super::{emit_json, load_inputs};
use crate::data::train_valid_split;
use crate::evaluation::{evaluate_subset, EvalReport};
use crate::{Error, Result};

#[derive(Serialize)]
struct EvaluateOutput {
    manifest: RunManifest,
    report: EvalReport,
}

pub(super) fn run(args: &EvaluateArgs) -> Result<i32> {
    let (data, groups) = load_inputs(&args.data)?;
    let subset = args
        .subset
        .iter()
        .map(|name| {
            data.feature_index(name.trim())
                .ok_or_else(|| Error::invalid(format!("unknown feature name '{name}'")))
        })
        .collect::<Result<Vec<usize>>>()?;
    let (train, valid) = train_valid_split(&data, args.train_fraction, args.seed)?;
    let report = evaluate_subset(&train, &valid, &subset, &groups, args.knn.knn_k, args.knn.knn_s)?;
    let manifest = RunManifest::new("evaluate")
        .data(&args.data)
        .set("subset", &args.subset)
        .set("train_fraction", args.train_fraction)
        .knn(&args.knn)
        .set("seed", args.seed);
    emit_json(&EvaluateOutput { manifest, report }, args.out.as_deref())?;
    Ok(0)
}
