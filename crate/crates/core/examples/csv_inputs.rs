//! Loading your own data: a features CSV, a labels CSV (0/1 cells) and a
//! JSON list of groups with costs.
//!
//! ```text
//! cargo run --example csv_inputs -- features.csv labels.csv groups.json 10
//! ```
//!
//! Without arguments the illustrative data is written to a temporary
//! directory first and read back from there.

use std::path::PathBuf;

use grouplect::data::{generate_illustrative, load_dataset, load_groups, write_dataset, write_groups};
use grouplect::info::discretize;
use grouplect::selection::{proposed_select, SelectionConfig};

fn main() -> grouplect::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (features, labels, groups, budget) = if args.len() >= 3 {
        let budget = args.get(3).and_then(|b| b.parse().ok()).unwrap_or(f64::INFINITY);
        (PathBuf::from(&args[0]), PathBuf::from(&args[1]), PathBuf::from(&args[2]), budget)
    } else {
        let dir = std::env::temp_dir().join("grouplect-csv-example");
        std::fs::create_dir_all(&dir).map_err(|e| grouplect::Error::Io { path: dir.clone(), source: e })?;
        let (data, g) = generate_illustrative(1000, 0.2, 0)?;
        write_dataset(&data, dir.join("features.csv"), dir.join("labels.csv"))?;
        write_groups(&g, &data, dir.join("groups.json"))?;
        println!("wrote example inputs to {}", dir.display());
        (dir.join("features.csv"), dir.join("labels.csv"), dir.join("groups.json"), 2.0)
    };

    let data = load_dataset(&features, &labels)?;
    let groups = load_groups(&groups, &data)?;
    println!(
        "{} rows, {} features in {} groups, {} labels",
        data.n_rows(),
        data.n_features(),
        groups.n_groups(),
        data.n_labels()
    );
    let view = discretize(&data, 5)?;
    let trace = proposed_select(&view, &groups, &SelectionConfig::with_budget(budget))?;
    println!("{}", serde_json::to_string_pretty(&trace.report(&data, &groups))?);
    Ok(())
}
