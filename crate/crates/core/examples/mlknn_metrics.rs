//! Fits ML-kNN on a feature subset and prints the seven multi-label
//! metrics as JSON.

use grouplect::data::{generate_illustrative, train_valid_split};
use grouplect::evaluation::{evaluate_subset, fit_mlknn};

fn main() -> grouplect::Result<()> {
    let (data, groups) = generate_illustrative(2000, 0.2, 4)?;
    let (train, valid) = train_valid_split(&data, 0.8, 4)?;
    let subset = [0, 3, 4];

    let model = fit_mlknn(&train, &subset, 10, 1.0)?;
    println!("priors: {:?}", model.priors());
    println!("P(c | Y1 = 1): {:?}", model.count_given_positive(0));

    let report = evaluate_subset(&train, &valid, &subset, &groups, 10, 1.0)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}
