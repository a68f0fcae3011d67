use rayon::prelude::*;

use super::forward::forward;
use super::{BudgetMode, Phase, Rejection, SelectionConfig, SelectionTrace, Step, StopMode, StopReason};
use crate::data::GroupStructure;
use crate::info::DiscretizedView;
use crate::scoring::{argmax, make_shadow_pool, Scorer};
use crate::Result;

/// Two-phase budgeted selection.
///
/// Phase 1 is cost-blind greedy selection under the budget. Phase 2 then
/// considers only the zero-cost pool `U` (unselected features of groups
/// already paid for). At each step the best real candidate is compared
/// with the best shadow among the candidates still in `U`, before the real
/// one is committed; a shadow win counts towards `cfg.stop_mode`.
pub fn proposed_select(
    view: &DiscretizedView,
    groups: &GroupStructure,
    cfg: &SelectionConfig,
) -> Result<SelectionTrace> {
    cfg.validate()?;
    let phase1 = forward(view, groups, &cfg.score, 0.0, cfg.budget, BudgetMode::AffordableOnly)?;
    let mut steps = phase1.steps;
    let mut selected = phase1.selected;
    let cost = groups.subset_cost(&selected)?;

    let pool = groups.zero_cost_pool(&selected)?;
    if pool.is_empty() {
        return Ok(SelectionTrace {
            steps,
            stop_reason: StopReason::PoolExhausted,
            selected,
            rejected: None,
        });
    }
    let shadows = make_shadow_pool(view, &pool, cfg.shadow_seed)?;
    let wins_needed = match cfg.stop_mode {
        StopMode::FirstShadowWin => 1,
        StopMode::FractionOfWins(f) => ((f * pool.len() as f64).ceil() as usize).max(1),
        StopMode::Disabled => usize::MAX,
    };

    let labels: Vec<usize> = (0..view.n_labels()).collect();
    let mut remaining = pool;
    let mut wins = 0;
    while !remaining.is_empty() {
        let scorer = Scorer::new(view, &selected, &labels, &cfg.score)?;
        let scored: Vec<(usize, f64)> = remaining
            .par_iter()
            .map(|&k| (k, scorer.score(view.feature(k))))
            .collect();
        let (k, score) = argmax(scored).expect("remaining is nonempty");
        let shadow_max = scorer.max_shadow(&shadows, &remaining)?;
        if shadow_max > score {
            wins += 1;
            if wins >= wins_needed {
                return Ok(SelectionTrace {
                    steps,
                    stop_reason: StopReason::ShadowStop,
                    selected,
                    rejected: Some(Rejection {
                        feature: k,
                        score,
                        shadow_max,
                    }),
                });
            }
        }
        selected.push(k);
        remaining.retain(|&j| j != k);
        steps.push(Step {
            feature: k,
            phase: Phase::Free,
            score,
            shadow_max: Some(shadow_max),
            cumulative_cost: cost,
        });
    }
    Ok(SelectionTrace {
        steps,
        stop_reason: StopReason::PoolExhausted,
        selected,
        rejected: None,
    })
}
