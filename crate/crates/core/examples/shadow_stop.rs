//! Step-by-step trace of the zero-cost phase: each free candidate is
//! compared with the best shadow (a row-permuted copy) of the candidates
//! still in the pool, and the phase ends when a shadow wins.

use grouplect::data::generate_illustrative;
use grouplect::info::discretize;
use grouplect::selection::{proposed_select, SelectionConfig, StopMode};

fn main() -> grouplect::Result<()> {
    let (data, groups) = generate_illustrative(5000, 0.2, 1)?;
    let view = discretize(&data, 5)?;
    let names = data.feature_names();

    for stop_mode in [StopMode::FirstShadowWin, StopMode::FractionOfWins(1.0), StopMode::Disabled] {
        let cfg = SelectionConfig {
            stop_mode,
            ..SelectionConfig::with_budget(2.0)
        };
        let trace = proposed_select(&view, &groups, &cfg)?;
        println!("{stop_mode:?}");
        for step in &trace.steps {
            let shadow = step.shadow_max.map_or("-".into(), |m| format!("{m:.4}"));
            println!(
                "  phase {}  {:<3} score {:.4}  best shadow {shadow}",
                step.phase.number(),
                names[step.feature],
                step.score
            );
        }
        if let Some(r) = trace.rejected {
            println!("  stopped: {} scored {:.4} but a shadow reached {:.4}", names[r.feature], r.score, r.shadow_max);
        }
        println!("  -> {:?}, {{{}}}", trace.stop_reason, data.names_of(&trace.selected).join(", "));
    }
    Ok(())
}
