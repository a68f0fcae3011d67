use ndarray::Array2;
use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::{Dataset, Group, GroupStructure};
use crate::{Error, Result};

fn sigmoid(s: f64) -> f64 {
    1.0 / (1.0 + (-s).exp())
}

/// Five-feature, three-label synthetic problem with a cheap substitute group.
///
/// `X1..X5` are i.i.d. N(0, 1) and the labels follow
/// `P(Y1=1) = σ(3·X1)`, `P(Y2=1) = σ(2·X4)`, `P(Y3=1) = σ(X5)`.
/// After the labels are drawn, `X2` becomes a copy of `X4` and `X3` a copy
/// of `X5`, each with `round(rho·n)` independently chosen entries shuffled
/// among themselves. Groups are `G1 = {X1, X2, X3}`, `G2 = {X4}`,
/// `G3 = {X5}`, all with cost 1.
pub fn generate_illustrative(n: usize, rho: f64, seed: u64) -> Result<(Dataset, GroupStructure)> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    if !(0.0..=1.0).contains(&rho) {
        return Err(Error::invalid(format!("rho must lie in [0, 1], got {rho}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut x = Array2::<f64>::zeros((n, 5));
    for v in x.iter_mut() {
        *v = rng.sample(StandardNormal);
    }
    let mut y = Array2::<u8>::zeros((n, 3));
    for i in 0..n {
        let probs = [
            sigmoid(3.0 * x[[i, 0]]),
            sigmoid(2.0 * x[[i, 3]]),
            sigmoid(x[[i, 4]]),
        ];
        for (l, p) in probs.into_iter().enumerate() {
            y[[i, l]] = u8::from(rng.random::<f64>() < p);
        }
    }

    let corrupted = (rho * n as f64).round() as usize;
    for (target, source) in [(1, 3), (2, 4)] {
        let copy = x.column(source).to_owned();
        x.column_mut(target).assign(&copy);
        let rows = index::sample(&mut rng, n, corrupted).into_vec();
        let mut values: Vec<f64> = rows.iter().map(|&i| x[[i, target]]).collect();
        values.shuffle(&mut rng);
        for (&i, v) in rows.iter().zip(values) {
            x[[i, target]] = v;
        }
    }

    let feature_names = (1..=5).map(|j| format!("X{j}")).collect();
    let label_names = (1..=3).map(|l| format!("Y{l}")).collect();
    let data = Dataset::new(x, y, feature_names, label_names)?;
    let groups = GroupStructure::new(
        vec![
            Group { name: "G1".into(), cost: 1.0, features: vec![0, 1, 2] },
            Group { name: "G2".into(), cost: 1.0, features: vec![3] },
            Group { name: "G3".into(), cost: 1.0, features: vec![4] },
        ],
        5,
    )?;
    Ok((data, groups))
}
