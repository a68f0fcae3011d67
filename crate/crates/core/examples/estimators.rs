//! Equal-frequency discretization and the plug-in estimators on the
//! illustrative data: X2 is a noisy copy of X4, so it carries most of X4's
//! information about the labels and little extra once X4 is known.

use grouplect::data::generate_illustrative;
use grouplect::info::discretize;

fn main() -> grouplect::Result<()> {
    let (data, _) = generate_illustrative(5000, 0.2, 6)?;
    let view = discretize(&data, 5)?;
    let (x2, x4) = (1, 3);
    let y2 = view.label_column(1);

    println!("H(X4)            = {:.4} bits (5 bins, at most log2 5 = {:.4})", view.entropy(&[x4])?, 5f64.log2());
    println!("M(X2; X4)        = {:.4}", view.mutual_information(&[x2], &[x4])?);
    println!("M(Y2; X4)        = {:.4}", view.mutual_information(&[y2], &[x4])?);
    println!("M(Y2; X2)        = {:.4}", view.mutual_information(&[y2], &[x2])?);
    println!("M(Y2; X2 | X4)   = {:.4}", view.conditional_mi(&[y2], &[x2], &[x4])?);
    println!("II(Y2; X2; X4)   = {:.4}", view.interaction_information(y2, x2, x4)?);
    Ok(())
}
