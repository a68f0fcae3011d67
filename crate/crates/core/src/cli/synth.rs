use std::fs;

use super::args::SynthArgs;
use super::manifest::RunManifest;
use super::{to_json, write_atomic};
use crate::data::{generate_illustrative, write_dataset, write_groups};
use crate::{Error, Result};

pub(super) fn run(args: &SynthArgs) -> Result<i32> {
    let (data, groups) = generate_illustrative(args.n, args.rho, args.seed)?;
    fs::create_dir_all(&args.out).map_err(|e| Error::io(&args.out, e))?;
    write_dataset(&data, args.out.join("features.csv"), args.out.join("labels.csv"))?;
    write_groups(&groups, &data, args.out.join("groups.json"))?;
    let manifest = RunManifest::new("synth")
        .set("n", args.n)
        .set("rho", args.rho)
        .set("seed", args.seed);
    write_atomic(&args.out.join("manifest.json"), to_json(&manifest)?.as_bytes())?;
    println!(
        "wrote {} rows, {} features, {} labels, {} groups to {}",
        data.n_rows(),
        data.n_features(),
        data.n_labels(),
        groups.n_groups(),
        args.out.display()
    );
    Ok(0)
}
