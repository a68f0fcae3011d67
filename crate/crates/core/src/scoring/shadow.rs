use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{ScoreConfig, Scorer};
use crate::info::{ColumnRef, DiscretizedView};
use crate::{Error, Result};

/// Permuted copies of a set of features.
///
/// A shadow keeps the exact multiset of its source codes but is independent
/// of everything else, so its true conditional mutual information with the
/// labels is zero given any selected set. Whatever a shadow scores on real
/// data is estimation noise, which makes the best shadow score a
/// data-driven threshold for "not informative".
#[derive(Debug, Clone, PartialEq)]
pub struct ShadowPool {
    seed: u64,
    sources: Vec<usize>,
    columns: Vec<Vec<u32>>,
    arities: Vec<u32>,
}

impl ShadowPool {
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Source feature indices, ascending.
    pub fn sources(&self) -> &[usize] {
        &self.sources
    }

    pub fn shadow(&self, source: usize) -> Option<ColumnRef<'_>> {
        let i = self.sources.binary_search(&source).ok()?;
        Some(ColumnRef {
            codes: &self.columns[i],
            arity: self.arities[i],
        })
    }
}

fn shadow_rng(seed: u64, source: usize) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&(source as u64).to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

/// One independent uniform permutation per feature in `features`, each
/// seeded from `(seed, feature)`, so a shadow does not depend on which other
/// features share the pool.
pub fn make_shadow_pool(view: &DiscretizedView, features: &[usize], seed: u64) -> Result<ShadowPool> {
    if features.is_empty() {
        return Err(Error::invalid("shadow pool needs at least one feature"));
    }
    let mut sources = features.to_vec();
    sources.sort_unstable();
    sources.dedup();
    if let Some(&j) = sources.iter().find(|&&j| j >= view.n_features()) {
        return Err(Error::invalid(format!("feature index {j} out of range")));
    }
    let (columns, arities) = sources
        .iter()
        .map(|&j| {
            let mut codes = view.codes(j).to_vec();
            codes.shuffle(&mut shadow_rng(seed, j));
            (codes, view.arity(j))
        })
        .unzip();
    Ok(ShadowPool {
        seed,
        sources,
        columns,
        arities,
    })
}

impl Scorer<'_> {
    /// Best score among the shadows of `remaining`; `-inf` when empty.
    pub fn max_shadow(&self, pool: &ShadowPool, remaining: &[usize]) -> Result<f64> {
        remaining.iter().try_fold(f64::NEG_INFINITY, |best, &j| {
            let shadow = pool
                .shadow(j)
                .ok_or_else(|| Error::invalid(format!("feature {j} has no shadow in the pool")))?;
            Ok(best.max(self.score(shadow)))
        })
    }
}

/// Maximal score over the shadows of `remaining`, conditioned on `selected`.
pub fn max_shadow_score(
    view: &DiscretizedView,
    pool: &ShadowPool,
    remaining: &[usize],
    selected: &[usize],
    labels: &[usize],
    cfg: &ScoreConfig,
) -> Result<f64> {
    Scorer::new(view, selected, labels, cfg)?.max_shadow(pool, remaining)
}
