use rayon::prelude::*;

use super::{BudgetMode, Phase, SelectionConfig, SelectionTrace, Step, StopReason};
use crate::data::{Budget, GroupStructure};
use crate::info::DiscretizedView;
use crate::scoring::{argmax, ScoreConfig, Scorer};
use crate::{Error, Result};

pub(super) fn check_shapes(view: &DiscretizedView, groups: &GroupStructure) -> Result<()> {
    if view.n_features() != groups.n_features() {
        return Err(Error::invalid(format!(
            "group structure covers {} features but the data has {}",
            groups.n_features(),
            view.n_features()
        )));
    }
    Ok(())
}

/// Best candidate by `score - lambda * incremental cost`, along with its
/// unpenalized score.
fn best_candidate(
    scorer: &Scorer<'_>,
    view: &DiscretizedView,
    groups: &GroupStructure,
    candidates: &[usize],
    selected: &[usize],
    lambda: f64,
) -> Result<Option<(usize, f64)>> {
    let scored: Vec<(usize, f64, f64)> = candidates
        .par_iter()
        .map(|&k| {
            let score = scorer.score(view.feature(k));
            let penalty = if lambda == 0.0 {
                0.0
            } else {
                lambda * groups.incremental_cost(k, selected)?
            };
            Ok((k, score, score - penalty))
        })
        .collect::<Result<_>>()?;
    Ok(argmax(scored.iter().map(|&(k, _, obj)| (k, obj)))
        .map(|(k, _)| (k, scored.iter().find(|c| c.0 == k).expect("argmax returns a candidate").1)))
}

pub(super) struct ForwardRun {
    pub steps: Vec<Step>,
    pub selected: Vec<usize>,
    pub stop_reason: StopReason,
}

pub(super) fn forward(
    view: &DiscretizedView,
    groups: &GroupStructure,
    score: &ScoreConfig,
    lambda: f64,
    budget: Budget,
    mode: BudgetMode,
) -> Result<ForwardRun> {
    check_shapes(view, groups)?;
    let labels: Vec<usize> = (0..view.n_labels()).collect();
    let b = budget.value();
    let cheapest = groups.min_positive_cost();
    let mut selected: Vec<usize> = Vec::new();
    let mut steps = Vec::new();
    let mut cost = 0.0;

    let stop_reason = loop {
        if mode == BudgetMode::PaperStrict && cost > b {
            break StopReason::Infeasible;
        }
        if mode == BudgetMode::AffordableOnly && cheapest.is_some_and(|c| b - cost < c) {
            break StopReason::BudgetExhausted;
        }
        let candidates: Vec<usize> = (0..view.n_features()).filter(|k| !selected.contains(k)).collect();
        let scorer = Scorer::new(view, &selected, &labels, score)?;
        let Some((k, s)) = best_candidate(&scorer, view, groups, &candidates, &selected, lambda)? else {
            break StopReason::PoolExhausted;
        };
        selected.push(k);
        let next_cost = groups.subset_cost(&selected)?;
        if mode == BudgetMode::AffordableOnly && next_cost > b {
            selected.pop();
            break StopReason::BudgetExhausted;
        }
        cost = next_cost;
        steps.push(Step {
            feature: k,
            phase: Phase::Paid,
            score: s,
            shadow_max: None,
            cumulative_cost: cost,
        });
    };
    let stop_reason = if mode == BudgetMode::PaperStrict && cost > b {
        StopReason::Infeasible
    } else {
        stop_reason
    };
    Ok(ForwardRun {
        steps,
        selected,
        stop_reason,
    })
}

/// Greedy forward selection maximizing `score(k, S) - λ·c(k, S)` under
/// `cfg.budget`, with the budget semantics of `cfg.budget_mode`.
pub fn sfs_penalized(
    view: &DiscretizedView,
    groups: &GroupStructure,
    cfg: &SelectionConfig,
) -> Result<SelectionTrace> {
    cfg.validate()?;
    let run = forward(view, groups, &cfg.score, cfg.lambda, cfg.budget, cfg.budget_mode)?;
    Ok(SelectionTrace {
        steps: run.steps,
        stop_reason: run.stop_reason,
        selected: run.selected,
        rejected: None,
    })
}

/// Smallest penalty that makes the first pick come from a cheapest group.
///
/// With `r_k` the score of feature `k` against the empty set and `Δ` the
/// smallest gap between two distinct group costs, any `λ > (max r - min r)/Δ`
/// ranks every cheapest-group feature above every costlier one. The returned
/// value carries a small relative margin. With fewer than two distinct group
/// costs the penalty cannot change the first pick and `0` is returned.
pub fn lambda_max(view: &DiscretizedView, groups: &GroupStructure, score: &ScoreConfig) -> Result<f64> {
    check_shapes(view, groups)?;
    let mut costs: Vec<f64> = groups.groups().iter().map(|g| g.cost).collect();
    costs.sort_by(f64::total_cmp);
    costs.dedup();
    let Some(delta) = costs.windows(2).map(|w| w[1] - w[0]).min_by(f64::total_cmp) else {
        return Ok(0.0);
    };
    let labels: Vec<usize> = (0..view.n_labels()).collect();
    let scorer = Scorer::new(view, &[], &labels, score)?;
    let relevance: Vec<f64> = (0..view.n_features())
        .into_par_iter()
        .map(|k| scorer.score(view.feature(k)))
        .collect();
    let hi = relevance.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lo = relevance.iter().copied().fold(f64::INFINITY, f64::min);
    Ok((hi - lo).max(1e-9) / delta * (1.0 + 1e-6))
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::data::{generate_illustrative, Group};
    use crate::info::discretize;

    fn illustrative(n: usize, seed: u64) -> (DiscretizedView, GroupStructure) {
        let (d, g) = generate_illustrative(n, 0.2, seed).unwrap();
        (discretize(&d, 5).unwrap(), g)
    }

    fn run(view: &DiscretizedView, g: &GroupStructure, budget: f64, mode: BudgetMode, lambda: f64) -> SelectionTrace {
        let cfg = SelectionConfig {
            lambda,
            budget_mode: mode,
            ..SelectionConfig::with_budget(budget)
        };
        sfs_penalized(view, g, &cfg).unwrap()
    }

    #[test]
    fn traditional_picks_on_illustrative_data() {
        let (v, g) = illustrative(4000, 1);
        let at = |b| run(&v, &g, b, BudgetMode::AffordableOnly, 0.0).selected;
        assert_eq!(at(1.0), vec![0]);
        assert_eq!(at(2.0), vec![0, 3]);
        let mut three = at(3.0);
        three.sort();
        assert_eq!(three, vec![0, 3, 4]);
    }

    #[test]
    fn unlimited_budget_orders_every_feature() {
        let (v, g) = illustrative(2000, 2);
        let t = run(&v, &g, f64::INFINITY, BudgetMode::AffordableOnly, 0.0);
        let mut sorted = t.selected.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 1, 2, 3, 4]);
        assert_eq!(t.stop_reason, StopReason::PoolExhausted);
        assert_eq!(t.total_cost(), 3.0);
    }

    #[test]
    fn paper_strict_may_overshoot() {
        let (d, _) = generate_illustrative(2000, 0.2, 3).unwrap();
        let v = discretize(&d, 5).unwrap();
        let g = GroupStructure::singletons(5, 2.0).unwrap();
        let strict = run(&v, &g, 3.0, BudgetMode::PaperStrict, 0.0);
        assert_eq!(strict.selected.len(), 2);
        assert_eq!(strict.stop_reason, StopReason::Infeasible);
        assert!(!strict.is_feasible());
        let safe = run(&v, &g, 3.0, BudgetMode::AffordableOnly, 0.0);
        assert_eq!(safe.selected.len(), 1);
        assert_eq!(safe.stop_reason, StopReason::BudgetExhausted);
    }

    #[test]
    fn zero_budget_selects_only_free_features() {
        let (d, _) = generate_illustrative(1000, 0.2, 4).unwrap();
        let v = discretize(&d, 5).unwrap();
        let g = GroupStructure::new(
            vec![
                Group { name: "paid".into(), cost: 1.0, features: vec![0, 1, 2] },
                Group { name: "free".into(), cost: 0.0, features: vec![3, 4] },
            ],
            5,
        )
        .unwrap();
        let t = run(&v, &g, 0.0, BudgetMode::AffordableOnly, 0.0);
        assert!(t.selected.iter().all(|&k| k >= 3));
        assert_eq!(t.total_cost(), 0.0);
    }

    #[test]
    fn lambda_max_is_zero_for_uniform_costs() {
        let (v, g) = illustrative(500, 5);
        assert_eq!(lambda_max(&v, &g, &ScoreConfig::default()).unwrap(), 0.0);
    }

    #[test]
    fn rejects_mismatched_groups_and_bad_lambda() {
        let (v, _) = illustrative(200, 6);
        let g = GroupStructure::singletons(4, 1.0).unwrap();
        assert!(sfs_penalized(&v, &g, &SelectionConfig::default()).is_err());
        let g = GroupStructure::singletons(5, 1.0).unwrap();
        let cfg = SelectionConfig { lambda: -1.0, ..SelectionConfig::default() };
        assert!(sfs_penalized(&v, &g, &cfg).is_err());
    }

    fn random_problem() -> impl Strategy<Value = (DiscretizedView, GroupStructure)> {
        (3usize..8, 1usize..4, 40usize..120, any::<u64>()).prop_flat_map(|(p, q, n, _)| {
            (
                prop::collection::vec(prop::collection::vec(0u32..3, n), p),
                prop::collection::vec(prop::collection::vec(0u32..2, n), q),
                prop::collection::vec(0usize..3, p),
                prop::collection::vec(prop_oneof![Just(0.0), Just(1.0), Just(2.0), Just(3.5)], 3),
            )
                .prop_map(move |(features, labels, assign, costs)| {
                    let mut groups: Vec<Group> = (0..3)
                        .map(|g| Group { name: format!("g{g}"), cost: costs[g], features: vec![] })
                        .collect();
                    for (j, &g) in assign.iter().enumerate() {
                        groups[g].features.push(j);
                    }
                    groups.retain(|g| !g.features.is_empty());
                    (
                        DiscretizedView::from_codes(features, labels).unwrap(),
                        GroupStructure::new(groups, p).unwrap(),
                    )
                })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn affordable_traces_stay_within_budget(
            (v, g) in random_problem(),
            budget in 0.0f64..8.0,
            lambda in prop_oneof![Just(0.0), 0.0f64..0.5],
        ) {
            let t = run(&v, &g, budget, BudgetMode::AffordableOnly, lambda);
            prop_assert!(t.total_cost() <= budget);
            let mut prev = 0.0;
            for step in &t.steps {
                prop_assert!(step.cumulative_cost >= prev);
                prop_assert!(step.cumulative_cost <= budget);
                prev = step.cumulative_cost;
            }
            prop_assert_eq!(g.subset_cost(&t.selected).unwrap(), t.total_cost());
        }

        #[test]
        fn unlimited_budget_yields_a_permutation((v, g) in random_problem()) {
            let t = run(&v, &g, f64::INFINITY, BudgetMode::AffordableOnly, 0.0);
            let mut sorted = t.selected.clone();
            sorted.sort();
            prop_assert_eq!(sorted, (0..v.n_features()).collect::<Vec<_>>());
        }

        #[test]
        fn lambda_max_forces_a_cheapest_group_first((v, g) in random_problem()) {
            let score = ScoreConfig::default();
            let lam = lambda_max(&v, &g, &score).unwrap();
            let t = run(&v, &g, f64::INFINITY, BudgetMode::AffordableOnly, lam);
            let cheapest = g.groups().iter().map(|gr| gr.cost).fold(f64::INFINITY, f64::min);
            let first = t.selected[0];
            prop_assert_eq!(g.cost_of_group(g.group_of(first)), cheapest);
        }
    }
}
