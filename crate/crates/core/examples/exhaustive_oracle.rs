//! Exhaustive search for the affordable subset with the highest joint
//! mutual information, next to what the greedy methods pick.

use grouplect::data::{generate_illustrative, Budget};
use grouplect::info::discretize;
use grouplect::selection::{
    exhaustive_oracle, joint_mutual_information, proposed_select, sfs_penalized, SelectionConfig,
};

fn main() -> grouplect::Result<()> {
    let (data, groups) = generate_illustrative(3000, 0.2, 3)?;
    let view = discretize(&data, 3)?;
    for budget in [0.0, 1.0, 2.0, 3.0] {
        let best = exhaustive_oracle(&view, &groups, Budget::new(budget)?, 15)?;
        let cfg = SelectionConfig::with_budget(budget);
        let proposed = proposed_select(&view, &groups, &cfg)?.selected;
        let traditional = sfs_penalized(&view, &groups, &cfg)?.selected;
        println!("B = {budget}");
        println!("  oracle      {:<22} {:.4} bits", format!("{:?}", data.names_of(&best.subset)), best.mi);
        for (name, s) in [("proposed", proposed), ("traditional", traditional)] {
            let mi = joint_mutual_information(&view, &s)?;
            println!("  {name:<11} {:<22} {mi:.4} bits", format!("{:?}", data.names_of(&s)));
        }
    }
    Ok(())
}
