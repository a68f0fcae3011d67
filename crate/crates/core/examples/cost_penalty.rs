//! Penalized forward selection with unequal group costs. `lambda_max` is
//! the smallest penalty that forces the first pick into a cheapest group;
//! half of it trades relevance against cost.

use grouplect::data::{generate_illustrative, Group, GroupStructure};
use grouplect::info::discretize;
use grouplect::scoring::ScoreConfig;
use grouplect::selection::{lambda_max, sfs_penalized, SelectionConfig};

fn main() -> grouplect::Result<()> {
    let (data, _) = generate_illustrative(5000, 0.2, 2)?;
    let groups = GroupStructure::new(
        vec![
            Group { name: "lab panel".into(), cost: 4.0, features: vec![0, 1, 2] },
            Group { name: "vitals".into(), cost: 1.0, features: vec![3] },
            Group { name: "imaging".into(), cost: 2.0, features: vec![4] },
        ],
        5,
    )?;
    let view = discretize(&data, 5)?;
    let lam = lambda_max(&view, &groups, &ScoreConfig::default())?;
    println!("lambda_max = {lam:.4}");

    for lambda in [0.0, lam / 2.0, lam] {
        let cfg = SelectionConfig {
            lambda,
            ..SelectionConfig::with_budget(6.0)
        };
        let trace = sfs_penalized(&view, &groups, &cfg)?;
        println!(
            "lambda {lambda:.4}: order {:?}, cost {}",
            data.names_of(&trace.selected),
            trace.total_cost()
        );
    }
    Ok(())
}
