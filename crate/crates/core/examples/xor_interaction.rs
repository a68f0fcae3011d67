//! A label that is the XOR of two features is invisible to marginal scores
//! but found once the score conditions on the partner feature.

use grouplect::info::DiscretizedView;
use grouplect::scoring::{score_candidate, ScoreConfig};

fn main() -> grouplect::Result<()> {
    let (mut a, mut b, mut noise, mut y) = (vec![], vec![], vec![], vec![]);
    for bits in 0u32..8 {
        a.push(bits & 1);
        b.push((bits >> 1) & 1);
        noise.push((bits >> 2) & 1);
        y.push((bits & 1) ^ ((bits >> 1) & 1));
    }
    let view = DiscretizedView::from_codes(vec![a, b, noise], vec![y])?;
    let y = view.label_column(0);

    println!("M(Y; A)         = {:.3} bits", view.mutual_information(&[0], &[y])?);
    println!("M(Y; A | B)     = {:.3} bits", view.conditional_mi(&[0], &[y], &[1])?);
    println!("II(Y; A; B)     = {:.3} bits", view.interaction_information(y, 0, 1)?);

    for (name, cfg) in [("marginal (a=1)", ScoreConfig::marginal()), ("pairwise (a=2)", ScoreConfig::pairwise())] {
        let with_a = score_candidate(&view, 0, &[1], &[0], &cfg)?;
        let with_noise = score_candidate(&view, 2, &[1], &[0], &cfg)?;
        println!("{name}: score(A | B selected) = {with_a:.3}, score(noise) = {with_noise:.3}");
    }
    Ok(())
}
