use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::info::DEFAULT_BINS;
use crate::scoring::{Criterion, ScoreConfig};
use crate::selection::{BudgetMode, SelectionConfig, StopMode};
use crate::Result;

#[derive(Debug, Parser)]
#[command(name = "grouplect", version, about = "Budgeted multi-label feature selection with grouped feature costs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the five-feature, three-label illustrative dataset.
    Synth(SynthArgs),
    /// Run one selection method and print its step table.
    Select(SelectArgs),
    /// Fit ML-kNN on a named feature subset and report the metrics.
    Evaluate(EvaluateArgs),
    /// Split, select and evaluate over a grid of budgets and methods.
    Sweep(SweepArgs),
    /// Find the best affordable subset by exhaustive search.
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[arg(long, default_value_t = 5000)]
    pub n: usize,
    #[arg(long, default_value_t = 0.2)]
    pub rho: f64,
    #[arg(long, env = "GROUPLECT_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Output directory; created if missing.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct DataArgs {
    #[arg(long)]
    pub features: PathBuf,
    #[arg(long)]
    pub labels: PathBuf,
    #[arg(long)]
    pub groups: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BudgetModeArg {
    AffordableOnly,
    PaperStrict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StopModeArg {
    FirstShadowWin,
    FractionOfWins,
    Disabled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CriterionArg {
    /// Condition on the whole selected set jointly.
    FullCmi,
    /// Sum of low-order conditional terms, controlled by --order-a/--order-b.
    LowerBound,
}

#[derive(Debug, Clone, Args)]
pub struct ScoreArgs {
    #[arg(long, default_value_t = DEFAULT_BINS)]
    pub bins: usize,
    #[arg(long, value_enum, default_value_t = CriterionArg::FullCmi)]
    pub criterion: CriterionArg,
    /// Feature interaction order (1 or 2).
    #[arg(long, default_value_t = 2)]
    pub order_a: u8,
    /// Label interaction order (1 or 2).
    #[arg(long, default_value_t = 1)]
    pub order_b: u8,
}

impl ScoreArgs {
    pub fn config(&self) -> Result<ScoreConfig> {
        let criterion = match self.criterion {
            CriterionArg::FullCmi => Criterion::FullConditioning,
            CriterionArg::LowerBound => Criterion::LowerBoundSum,
        };
        ScoreConfig::new(criterion, self.order_a, self.order_b)
    }
}

#[derive(Debug, Clone, Args)]
pub struct PolicyArgs {
    #[arg(long, value_enum, default_value_t = BudgetModeArg::AffordableOnly)]
    pub budget_mode: BudgetModeArg,
    #[arg(long, value_enum, default_value_t = StopModeArg::FirstShadowWin)]
    pub stop_mode: StopModeArg,
    /// Share of the zero-cost pool that shadow wins must reach to stop, for
    /// --stop-mode fraction-of-wins.
    #[arg(long, default_value_t = 0.5)]
    pub stop_fraction: f64,
}

impl PolicyArgs {
    pub fn selection(&self, budget: f64, score: ScoreConfig, lambda: f64, seed: u64) -> Result<SelectionConfig> {
        let cfg = SelectionConfig {
            budget: crate::data::Budget::new(budget)?,
            score,
            lambda,
            budget_mode: match self.budget_mode {
                BudgetModeArg::AffordableOnly => BudgetMode::AffordableOnly,
                BudgetModeArg::PaperStrict => BudgetMode::PaperStrict,
            },
            stop_mode: match self.stop_mode {
                StopModeArg::FirstShadowWin => StopMode::FirstShadowWin,
                StopModeArg::FractionOfWins => StopMode::FractionOfWins(self.stop_fraction),
                StopModeArg::Disabled => StopMode::Disabled,
            },
            shadow_seed: seed,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SelectMethod {
    /// Cost-blind pass plus shadow-stopped zero-cost additions.
    Proposed,
    /// Penalized forward selection with --lambda or --lambda-max.
    Sfs,
}

#[derive(Debug, Args)]
pub struct SelectArgs {
    #[command(flatten)]
    pub data: DataArgs,
    /// Total cost allowed; `inf` for no limit.
    #[arg(long)]
    pub budget: f64,
    #[arg(long, value_enum, default_value_t = SelectMethod::Proposed)]
    pub method: SelectMethod,
    #[arg(long, default_value_t = 0.0, conflicts_with = "lambda_max")]
    pub lambda: f64,
    /// Use the smallest penalty that forces a cheapest group first.
    #[arg(long)]
    pub lambda_max: bool,
    #[command(flatten)]
    pub score: ScoreArgs,
    #[command(flatten)]
    pub policy: PolicyArgs,
    #[arg(long, env = "GROUPLECT_SEED", default_value_t = 0)]
    pub seed: u64,
    /// JSON report path; printed to stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct KnnArgs {
    #[arg(long, default_value_t = crate::evaluation::DEFAULT_K)]
    pub knn_k: usize,
    #[arg(long, default_value_t = crate::evaluation::DEFAULT_SMOOTHING)]
    pub knn_s: f64,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    #[command(flatten)]
    pub data: DataArgs,
    /// Comma-separated feature names.
    #[arg(long, value_delimiter = ',', required = true)]
    pub subset: Vec<String>,
    /// Share of rows used for training.
    #[arg(long, default_value_t = 0.8)]
    pub train_fraction: f64,
    #[command(flatten)]
    pub knn: KnnArgs,
    #[arg(long, env = "GROUPLECT_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum SweepMethod {
    Proposed,
    /// Forward selection ignoring costs (λ = 0).
    Traditional,
    /// Forward selection with the --lambda penalty.
    Sfs,
    SfsLambdaMax,
    SfsHalfLambdaMax,
}

impl SweepMethod {
    pub fn name(self) -> &'static str {
        match self {
            SweepMethod::Proposed => "proposed",
            SweepMethod::Traditional => "traditional",
            SweepMethod::Sfs => "sfs",
            SweepMethod::SfsLambdaMax => "sfs-lambda-max",
            SweepMethod::SfsHalfLambdaMax => "sfs-half-lambda-max",
        }
    }
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub data: DataArgs,
    /// Comma-separated budgets.
    #[arg(long = "budget", value_delimiter = ',', required = true)]
    pub budgets: Vec<f64>,
    #[arg(long = "method", value_enum, value_delimiter = ',', default_values_t = [SweepMethod::Proposed, SweepMethod::Traditional])]
    pub methods: Vec<SweepMethod>,
    #[arg(long, default_value_t = 5)]
    pub repeats: usize,
    #[arg(long, default_value_t = 0.8)]
    pub train_fraction: f64,
    #[arg(long, default_value_t = 0.0)]
    pub lambda: f64,
    #[command(flatten)]
    pub score: ScoreArgs,
    #[command(flatten)]
    pub policy: PolicyArgs,
    #[command(flatten)]
    pub knn: KnnArgs,
    #[arg(long, env = "GROUPLECT_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Output directory for metrics.csv, summary.csv, selections.csv and
    /// manifest.json.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub data: DataArgs,
    #[arg(long)]
    pub budget: f64,
    #[command(flatten)]
    pub score: ScoreArgs,
    #[command(flatten)]
    pub policy: PolicyArgs,
    #[arg(long, env = "GROUPLECT_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
