use ndarray::Array2;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Multi-label evaluation metrics of one fitted subset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub hamming_loss: f64,
    pub ranking_loss: f64,
    pub coverage_error: f64,
    pub zero_one_loss: f64,
    pub subset_accuracy: f64,
    pub micro_f1: f64,
    pub micro_auc: f64,
    pub subset: Vec<String>,
    pub total_cost: f64,
    pub n_rows: usize,
    /// Rows without both a positive and a negative label, left out of
    /// `ranking_loss`.
    pub ranking_rows_skipped: usize,
    /// Rows without a positive label, left out of `coverage_error`.
    pub coverage_rows_skipped: usize,
}

/// Average 1-based ranks of `values` in ascending order; ties share the
/// mean of their positions.
fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && values[order[end]] == values[order[start]] {
            end += 1;
        }
        let rank = (start + end + 1) as f64 / 2.0;
        for &i in &order[start..end] {
            ranks[i] = rank;
        }
        start = end;
    }
    ranks
}

/// Computes the seven metrics from truth, real-valued scores and binary
/// decisions of the same shape. `subset` and `total_cost` are left empty.
pub fn compute_metrics(truth: &Array2<u8>, scores: &Array2<f64>, decisions: &Array2<u8>) -> Result<EvalReport> {
    if truth.dim() != scores.dim() || truth.dim() != decisions.dim() {
        return Err(Error::invalid(format!(
            "shape mismatch: truth {:?}, scores {:?}, decisions {:?}",
            truth.dim(),
            scores.dim(),
            decisions.dim()
        )));
    }
    let (n, q) = truth.dim();
    if n == 0 || q == 0 {
        return Err(Error::invalid("metrics need at least one row and one label"));
    }

    let mut wrong_bits = 0usize;
    let mut wrong_rows = 0usize;
    let (mut tp, mut fp, mut fn_) = (0usize, 0usize, 0usize);
    let mut ranking_sum = 0.0;
    let mut ranking_rows = 0usize;
    let mut coverage_sum = 0.0;
    let mut coverage_rows = 0usize;

    for ((t, s), d) in truth.outer_iter().zip(scores.outer_iter()).zip(decisions.outer_iter()) {
        let mut row_wrong = false;
        for (&ti, &di) in t.iter().zip(d.iter()) {
            if ti != di {
                wrong_bits += 1;
                row_wrong = true;
            }
            match (ti, di) {
                (1, 1) => tp += 1,
                (0, 1) => fp += 1,
                (1, 0) => fn_ += 1,
                _ => {}
            }
        }
        wrong_rows += usize::from(row_wrong);

        let pos: Vec<f64> = (0..q).filter(|&l| t[l] == 1).map(|l| s[l]).collect();
        let neg: Vec<f64> = (0..q).filter(|&l| t[l] == 0).map(|l| s[l]).collect();
        if !pos.is_empty() && !neg.is_empty() {
            let bad: f64 = pos
                .iter()
                .flat_map(|&a| neg.iter().map(move |&b| if a < b { 1.0 } else if a == b { 0.5 } else { 0.0 }))
                .sum();
            ranking_sum += bad / (pos.len() * neg.len()) as f64;
            ranking_rows += 1;
        }
        if let Some(lowest) = pos.iter().copied().reduce(f64::min) {
            coverage_sum += s.iter().filter(|&&v| v >= lowest).count() as f64;
            coverage_rows += 1;
        }
    }

    let cells = (n * q) as f64;
    let zero_one = wrong_rows as f64 / n as f64;
    let f1_denominator = 2 * tp + fp + fn_;

    let flat_scores: Vec<f64> = scores.iter().copied().collect();
    let ranks = average_ranks(&flat_scores);
    let n_pos = truth.iter().filter(|&&v| v == 1).count();
    let n_neg = truth.len() - n_pos;
    let micro_auc = if n_pos == 0 || n_neg == 0 {
        0.5
    } else {
        let rank_sum: f64 = truth.iter().zip(&ranks).filter(|(&t, _)| t == 1).map(|(_, r)| r).sum();
        let (p, m) = (n_pos as f64, n_neg as f64);
        (rank_sum - p * (p + 1.0) / 2.0) / (p * m)
    };

    Ok(EvalReport {
        hamming_loss: wrong_bits as f64 / cells,
        ranking_loss: if ranking_rows > 0 { ranking_sum / ranking_rows as f64 } else { 0.0 },
        coverage_error: if coverage_rows > 0 { coverage_sum / coverage_rows as f64 } else { 1.0 },
        zero_one_loss: zero_one,
        subset_accuracy: 1.0 - zero_one,
        micro_f1: if f1_denominator == 0 { 1.0 } else { 2.0 * tp as f64 / f1_denominator as f64 },
        micro_auc,
        subset: Vec::new(),
        total_cost: 0.0,
        n_rows: n,
        ranking_rows_skipped: n - ranking_rows,
        coverage_rows_skipped: n - coverage_rows,
    })
}

#[cfg(test)]
mod tests {
    use ndarray::array;
    use proptest::prelude::*;

    use super::*;

    #[test]
    fn perfect_decisions() {
        let t = array![[1u8, 0, 1], [0, 1, 0]];
        let s = t.mapv(f64::from);
        let r = compute_metrics(&t, &s, &t).unwrap();
        assert_eq!(r.hamming_loss, 0.0);
        assert_eq!(r.zero_one_loss, 0.0);
        assert_eq!(r.subset_accuracy, 1.0);
        assert_eq!(r.micro_f1, 1.0);
        assert_eq!(r.micro_auc, 1.0);
        assert_eq!(r.ranking_loss, 0.0);
    }

    #[test]
    fn flipped_decisions() {
        let t = array![[1u8, 0], [0, 1]];
        let d = t.mapv(|v| 1 - v);
        let r = compute_metrics(&t, &d.mapv(f64::from), &d).unwrap();
        assert_eq!(r.hamming_loss, 1.0);
        assert_eq!(r.zero_one_loss, 1.0);
        assert_eq!(r.micro_f1, 0.0);
        assert_eq!(r.micro_auc, 0.0);
        assert_eq!(r.ranking_loss, 1.0);
    }

    #[test]
    fn single_row_ranking_and_coverage() {
        let t = array![[1u8, 0, 0]];
        let s = array![[0.9, 0.5, 0.1]];
        let r = compute_metrics(&t, &s, &array![[1u8, 1, 0]]).unwrap();
        assert_eq!(r.ranking_loss, 0.0);
        assert_eq!(r.coverage_error, 1.0);
        assert!((r.hamming_loss - 1.0 / 3.0).abs() < 1e-15);
        assert!((r.micro_f1 - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn ties_count_half() {
        let t = array![[1u8, 0]];
        let s = array![[0.4, 0.4]];
        let r = compute_metrics(&t, &s, &array![[0u8, 0]]).unwrap();
        assert_eq!(r.ranking_loss, 0.5);
        assert_eq!(r.micro_auc, 0.5);
        assert_eq!(r.coverage_error, 2.0);
    }

    #[test]
    fn rows_without_both_classes_are_skipped() {
        let t = array![[1u8, 1], [0, 0], [1, 0]];
        let s = array![[0.2, 0.8], [0.1, 0.3], [0.3, 0.6]];
        let r = compute_metrics(&t, &s, &t).unwrap();
        assert_eq!(r.ranking_rows_skipped, 2);
        assert_eq!(r.ranking_loss, 1.0);
        assert_eq!(r.coverage_rows_skipped, 1);
        // row 0: both positives, worst rank 2; row 2: positive ranked 2nd
        assert_eq!(r.coverage_error, 2.0);
    }

    #[test]
    fn micro_auc_matches_pair_count() {
        let t = array![[1u8, 0, 1], [0, 1, 0]];
        let s = array![[0.8, 0.3, 0.3], [0.1, 0.9, 0.3]];
        let r = compute_metrics(&t, &s, &t).unwrap();
        let pos = [0.8, 0.3, 0.9];
        let neg = [0.3, 0.1, 0.3];
        let wins: f64 = pos
            .iter()
            .flat_map(|&a| neg.iter().map(move |&b| if a > b { 1.0 } else if a == b { 0.5 } else { 0.0 }))
            .sum();
        assert!((r.micro_auc - wins / 9.0).abs() < 1e-15);
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let t = array![[1u8, 0]];
        assert!(compute_metrics(&t, &array![[0.5]], &t).is_err());
    }

    fn instance() -> impl Strategy<Value = (Array2<u8>, Array2<f64>, Array2<u8>, Vec<usize>)> {
        (1usize..12, 1usize..6).prop_flat_map(|(n, q)| {
            (
                prop::collection::vec(0u8..2, n * q),
                prop::collection::vec(prop_oneof![0.0f64..1.0, Just(0.5)], n * q),
                Just(Vec::from_iter(0..q)).prop_shuffle(),
            )
                .prop_map(move |(t, s, perm)| {
                    let t = Array2::from_shape_vec((n, q), t).unwrap();
                    let s = Array2::from_shape_vec((n, q), s).unwrap();
                    let d = s.mapv(|v| u8::from(v >= 0.5));
                    (t, s, d, perm)
                })
        })
    }

    proptest! {
        #[test]
        fn metric_ranges_and_identities((t, s, d, perm) in instance()) {
            let r = compute_metrics(&t, &s, &d).unwrap();
            let q = t.ncols() as f64;
            for v in [r.hamming_loss, r.ranking_loss, r.zero_one_loss, r.subset_accuracy, r.micro_f1, r.micro_auc] {
                prop_assert!((0.0..=1.0).contains(&v));
            }
            prop_assert!(r.coverage_error >= 1.0 && r.coverage_error <= q);
            prop_assert_eq!(r.subset_accuracy + r.zero_one_loss, 1.0);

            let permuted = |m: &Array2<u8>| Array2::from_shape_fn(m.dim(), |(i, l)| m[[i, perm[l]]]);
            let sp = Array2::from_shape_fn(s.dim(), |(i, l)| s[[i, perm[l]]]);
            let rp = compute_metrics(&permuted(&t), &sp, &permuted(&d)).unwrap();
            prop_assert_eq!(r.micro_f1, rp.micro_f1);
        }

        #[test]
        fn coverage_counts_positives_when_they_rank_first((t, _, _, _) in instance()) {
            let s = t.mapv(|v| if v == 1 { 0.9 } else { 0.1 });
            let r = compute_metrics(&t, &s, &t).unwrap();
            let with_pos: Vec<usize> = t
                .outer_iter()
                .map(|row| row.iter().filter(|&&v| v == 1).count())
                .filter(|&c| c > 0)
                .collect();
            if !with_pos.is_empty() {
                let mean = with_pos.iter().sum::<usize>() as f64 / with_pos.len() as f64;
                prop_assert!((r.coverage_error - mean).abs() < 1e-12);
            }
        }
    }
}
