use std::collections::BTreeMap;

use rayon::prelude::*;

use super::args::{SweepArgs, SweepMethod};
use super::manifest::RunManifest;
use super::{load_inputs, to_json, write_atomic};
use crate::data::{train_valid_split, Dataset, GroupStructure};
use crate::evaluation::{evaluate_subset, EvalReport};
use crate::info::{discretize, DiscretizedView};
use crate::selection::{lambda_max, proposed_select, sfs_penalized, SelectionConfig};
use crate::{Error, Result};

const METRICS: [&str; 9] = [
    "hamming_loss",
    "ranking_loss",
    "coverage_error",
    "zero_one_loss",
    "subset_accuracy",
    "micro_f1",
    "micro_auc",
    "total_cost",
    "n_selected",
];

fn metric_values(r: &EvalReport) -> [f64; 9] {
    [
        r.hamming_loss,
        r.ranking_loss,
        r.coverage_error,
        r.zero_one_loss,
        r.subset_accuracy,
        r.micro_f1,
        r.micro_auc,
        r.total_cost,
        r.subset.len() as f64,
    ]
}

struct Repeat {
    train: Dataset,
    valid: Dataset,
    view: DiscretizedView,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    Infeasible,
    EmptySelection,
    Error,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Infeasible => "infeasible",
            Status::EmptySelection => "empty_selection",
            Status::Error => "error",
        }
    }
}

struct Cell {
    budget: f64,
    method: SweepMethod,
    repeat: usize,
    status: Status,
    selected: Vec<String>,
    cost: f64,
    metrics: Option<[f64; 9]>,
}

fn run_cell(
    rep: &Repeat,
    groups: &GroupStructure,
    method: SweepMethod,
    cfg: SelectionConfig,
    knn: (usize, f64),
) -> Result<(Status, Vec<usize>, Option<EvalReport>)> {
    let scaled = |factor: f64| -> Result<SelectionConfig> {
        Ok(SelectionConfig {
            lambda: factor * lambda_max(&rep.view, groups, &cfg.score)?,
            ..cfg
        })
    };
    let trace = match method {
        SweepMethod::Proposed => proposed_select(&rep.view, groups, &cfg)?,
        SweepMethod::Traditional => sfs_penalized(&rep.view, groups, &SelectionConfig { lambda: 0.0, ..cfg })?,
        SweepMethod::Sfs => sfs_penalized(&rep.view, groups, &cfg)?,
        SweepMethod::SfsLambdaMax => sfs_penalized(&rep.view, groups, &scaled(1.0)?)?,
        SweepMethod::SfsHalfLambdaMax => sfs_penalized(&rep.view, groups, &scaled(0.5)?)?,
    };
    if !trace.is_feasible() {
        return Ok((Status::Infeasible, trace.selected, None));
    }
    if trace.selected.is_empty() {
        return Ok((Status::EmptySelection, trace.selected, None));
    }
    let report = evaluate_subset(&rep.train, &rep.valid, &trace.selected, groups, knn.0, knn.1)?;
    Ok((Status::Ok, trace.selected, Some(report)))
}

fn csv_bytes(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<Vec<u8>> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| Error::invalid(format!("csv encoding failed: {e}"));
    writer.write_record(header).map_err(fail)?;
    for row in rows {
        writer.write_record(&row).map_err(fail)?;
    }
    writer.into_inner().map_err(|e| Error::invalid(e.to_string()))
}

fn mean_sd(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let sd = if values.len() > 1 {
        (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
    } else {
        0.0
    };
    (mean, sd)
}

pub(super) fn run(args: &SweepArgs) -> Result<i32> {
    if args.budgets.is_empty() || args.methods.is_empty() || args.repeats == 0 {
        return Err(Error::invalid("sweep needs at least one budget, method and repeat"));
    }
    let mut budgets = args.budgets.clone();
    budgets.sort_by(f64::total_cmp);
    budgets.dedup();
    let mut methods = args.methods.clone();
    methods.sort();
    methods.dedup();
    let score = args.score.config()?;
    let base: Vec<SelectionConfig> = (0..args.repeats)
        .map(|r| args.policy.selection(0.0, score, args.lambda, args.seed.wrapping_add(r as u64)))
        .collect::<Result<_>>()?;
    for &b in &budgets {
        crate::data::Budget::new(b)?;
    }

    let (data, groups) = load_inputs(&args.data)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| Error::invalid(format!("cannot start worker pool: {e}")))?;

    let cells: Vec<Cell> = pool.install(|| -> Result<Vec<Cell>> {
        let repeats: Vec<Repeat> = (0..args.repeats)
            .into_par_iter()
            .map(|r| {
                let (train, valid) = train_valid_split(&data, args.train_fraction, args.seed.wrapping_add(r as u64))?;
                let view = discretize(&train, args.score.bins)?;
                Ok(Repeat { train, valid, view })
            })
            .collect::<Result<_>>()?;
        let grid: Vec<(f64, SweepMethod, usize)> = budgets
            .iter()
            .flat_map(|&b| methods.iter().flat_map(move |&m| (0..args.repeats).map(move |r| (b, m, r))))
            .collect();
        Ok(grid
            .into_par_iter()
            .map(|(budget, method, repeat)| {
                let cfg = SelectionConfig {
                    budget: crate::data::Budget::new(budget).expect("validated above"),
                    ..base[repeat]
                };
                let outcome = run_cell(&repeats[repeat], &groups, method, cfg, (args.knn.knn_k, args.knn.knn_s));
                let (status, selected, report) = outcome.unwrap_or_else(|e| {
                    eprintln!("budget {budget}, {}, repeat {repeat}: {e}", method.name());
                    (Status::Error, Vec::new(), None)
                });
                Cell {
                    budget,
                    method,
                    repeat,
                    status,
                    cost: groups.subset_cost(&selected).unwrap_or(f64::NAN),
                    selected: data.names_of(&selected),
                    metrics: report.as_ref().map(metric_values),
                }
            })
            .collect())
    })?;

    let long_rows = cells.iter().flat_map(|c| {
        let head = vec![c.budget.to_string(), c.method.name().to_string(), c.repeat.to_string(), c.status.as_str().to_string()];
        match c.metrics {
            Some(values) => METRICS
                .iter()
                .zip(values)
                .map(|(m, v)| [head.clone(), vec![m.to_string(), v.to_string()]].concat())
                .collect::<Vec<_>>(),
            None => vec![[head, vec![String::new(), String::new()]].concat()],
        }
    });
    let metrics_csv = csv_bytes(&["budget", "method", "repeat", "status", "metric", "value"], long_rows)?;

    let mut grouped: BTreeMap<(usize, SweepMethod, usize), Vec<f64>> = BTreeMap::new();
    for c in &cells {
        let b = budgets.iter().position(|&x| x == c.budget).expect("budget from the grid");
        if let Some(values) = c.metrics {
            for (m, v) in values.into_iter().enumerate() {
                grouped.entry((b, c.method, m)).or_default().push(v);
            }
        }
    }
    let summary_rows = grouped.iter().map(|(&(b, method, m), values)| {
        let (mean, sd) = mean_sd(values);
        vec![
            budgets[b].to_string(),
            method.name().to_string(),
            METRICS[m].to_string(),
            values.len().to_string(),
            mean.to_string(),
            sd.to_string(),
        ]
    });
    let summary_csv = csv_bytes(&["budget", "method", "metric", "n", "mean", "sd"], summary_rows)?;

    let selection_rows = cells.iter().map(|c| {
        vec![
            c.budget.to_string(),
            c.method.name().to_string(),
            c.repeat.to_string(),
            c.status.as_str().to_string(),
            c.selected.join(";"),
            c.cost.to_string(),
        ]
    });
    let selections_csv = csv_bytes(&["budget", "method", "repeat", "status", "selected", "cost"], selection_rows)?;

    let manifest = RunManifest::new("sweep")
        .data(&args.data)
        .set("budgets", budgets.iter().map(|b| super::manifest::budget_value(*b)).collect::<Vec<_>>())
        .set("methods", methods.iter().map(|m| m.name()).collect::<Vec<_>>())
        .set("repeats", args.repeats)
        .set("train_fraction", args.train_fraction)
        .set("lambda", args.lambda)
        .score(&args.score)
        .policy(&args.policy)
        .knn(&args.knn)
        .set("seed", args.seed);

    write_atomic(&args.out.join("metrics.csv"), &metrics_csv)?;
    write_atomic(&args.out.join("summary.csv"), &summary_csv)?;
    write_atomic(&args.out.join("selections.csv"), &selections_csv)?;
    write_atomic(&args.out.join("manifest.json"), to_json(&manifest)?.as_bytes())?;

    let failed = cells.iter().filter(|c| c.status == Status::Error).count();
    println!(
        "{} cells ({} failed) written to {}",
        cells.len(),
        failed,
        args.out.display()
    );
    Ok(0)
}
