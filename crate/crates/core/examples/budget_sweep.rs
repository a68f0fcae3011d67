//! Mean and spread of the Hamming loss over repeated 80/20 splits, for a
//! range of budgets. The `grouplect sweep` command does the same and writes
//! CSV files.

use grouplect::data::{generate_illustrative, train_valid_split};
use grouplect::evaluation::evaluate_subset;
use grouplect::info::discretize;
use grouplect::selection::{proposed_select, sfs_penalized, SelectionConfig};

fn main() -> grouplect::Result<()> {
    let (data, groups) = generate_illustrative(3000, 0.2, 5)?;
    let repeats = 5u64;
    println!("{:>6} {:>22} {:>22}", "budget", "traditional", "proposed");
    for budget in [1.0, 2.0, 3.0] {
        let mut losses = [Vec::new(), Vec::new()];
        for r in 0..repeats {
            let (train, valid) = train_valid_split(&data, 0.8, r)?;
            let view = discretize(&train, 5)?;
            let cfg = SelectionConfig {
                shadow_seed: r,
                ..SelectionConfig::with_budget(budget)
            };
            let picks = [sfs_penalized(&view, &groups, &cfg)?, proposed_select(&view, &groups, &cfg)?];
            for (m, trace) in picks.iter().enumerate() {
                losses[m].push(evaluate_subset(&train, &valid, &trace.selected, &groups, 10, 1.0)?.hamming_loss);
            }
        }
        let fmt = |v: &[f64]| {
            let mean = v.iter().sum::<f64>() / v.len() as f64;
            let sd = (v.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (v.len() - 1) as f64).sqrt();
            format!("{mean:.3} ± {sd:.3}")
        };
        println!("{budget:>6} {:>22} {:>22}", fmt(&losses[0]), fmt(&losses[1]));
    }
    Ok(())
}
