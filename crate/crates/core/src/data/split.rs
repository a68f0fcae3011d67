use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Dataset;
use crate::{Error, Result};

/// Random row partition into training and validation parts.
///
/// The training part receives `floor(n * train_fraction)` rows. Both parts
/// keep the original row order.
pub fn train_valid_split(
    data: &Dataset,
    train_fraction: f64,
    seed: u64,
) -> Result<(Dataset, Dataset)> {
    if !(train_fraction > 0.0 && train_fraction < 1.0) {
        return Err(Error::invalid(format!(
            "train fraction must lie in (0, 1), got {train_fraction}"
        )));
    }
    let n = data.n_rows();
    let n_train = (n as f64 * train_fraction).floor() as usize;
    if n_train == 0 || n_train == n {
        return Err(Error::invalid(format!(
            "train fraction {train_fraction} leaves an empty part for {n} rows"
        )));
    }
    let mut rows: Vec<usize> = (0..n).collect();
    rows.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let (train, valid) = rows.split_at_mut(n_train);
    train.sort_unstable();
    valid.sort_unstable();
    Ok((data.select_rows(train), data.select_rows(valid)))
}

#[cfg(test)]
mod tests {
    use ndarray::{Array1, Array2};

    use super::*;

    fn indexed(n: usize) -> Dataset {
        let x = Array1::from_iter((0..n).map(|i| i as f64)).into_shape_with_order((n, 1)).unwrap();
        Dataset::new(x, Array2::zeros((n, 1)), vec!["row".into()], vec!["y".into()]).unwrap()
    }

    fn rows(d: &Dataset) -> Vec<usize> {
        d.feature(0).iter().map(|&v| v as usize).collect()
    }

    #[test]
    fn sizes_follow_floor_rule() {
        let (train, valid) = train_valid_split(&indexed(10), 0.8, 1).unwrap();
        assert_eq!((train.n_rows(), valid.n_rows()), (8, 2));
        let (train, valid) = train_valid_split(&indexed(7), 0.5, 1).unwrap();
        assert_eq!((train.n_rows(), valid.n_rows()), (3, 4));
    }

    #[test]
    fn partition_is_disjoint_and_complete() {
        let d = indexed(50);
        let (train, valid) = train_valid_split(&d, 0.8, 4).unwrap();
        let mut all = rows(&train);
        all.extend(rows(&valid));
        all.sort_unstable();
        assert_eq!(all, (0..50).collect::<Vec<_>>());
    }

    #[test]
    fn deterministic_per_seed() {
        let d = indexed(40);
        let a = train_valid_split(&d, 0.8, 5).unwrap();
        let b = train_valid_split(&d, 0.8, 5).unwrap();
        assert_eq!(a, b);
        // different seeds almost surely give different validation rows
        let differing = (0..20u64)
            .filter(|&s| rows(&train_valid_split(&d, 0.8, s).unwrap().1) != rows(&a.1))
            .count();
        assert!(differing >= 19);
    }

    #[test]
    fn rejects_empty_parts() {
        assert!(train_valid_split(&indexed(3), 0.2, 0).is_err());
        assert!(train_valid_split(&indexed(3), 1.0, 0).is_err());
        assert!(train_valid_split(&indexed(3), 0.0, 0).is_err());
    }
}
