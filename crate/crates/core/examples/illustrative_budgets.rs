//! Selections and Hamming loss on the five-feature illustrative data, for
//! budgets 1, 2 and 3, comparing the two-phase method with cost-blind
//! forward selection.
//!
//! ```text
//! cargo run --release --example illustrative_budgets [seed]
//! ```

use grouplect::data::{generate_illustrative, train_valid_split};
use grouplect::evaluation::evaluate_subset;
use grouplect::info::discretize;
use grouplect::selection::{proposed_select, sfs_penalized, SelectionConfig};

fn main() -> grouplect::Result<()> {
    let seed: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let (data, groups) = generate_illustrative(5000, 0.2, seed)?;
    let (train, valid) = train_valid_split(&data, 0.8, seed)?;
    let view = discretize(&train, 5)?;

    println!("{:<8} {:<12} {:<16} {:>8} {:>8}", "budget", "method", "selected", "cost", "hamming");
    for budget in [1.0, 2.0, 3.0] {
        let cfg = SelectionConfig {
            shadow_seed: seed,
            ..SelectionConfig::with_budget(budget)
        };
        let runs = [
            ("traditional", sfs_penalized(&view, &groups, &cfg)?),
            ("proposed", proposed_select(&view, &groups, &cfg)?),
        ];
        for (name, trace) in runs {
            let report = evaluate_subset(&train, &valid, &trace.selected, &groups, 10, 1.0)?;
            println!(
                "{:<8} {:<12} {:<16} {:>8} {:>8.3}",
                budget,
                name,
                format!("{{{}}}", data.names_of(&trace.selected).join(",")),
                trace.total_cost(),
                report.hamming_loss
            );
        }
    }
    Ok(())
}
