//! Command-line front end.
//!
//! The binary only parses arguments and calls [`run`]; every subcommand is
//! an ordinary function here so it can be driven from tests. Exit codes:
//! `0` success, `1` bad input files, `2` bad configuration or refusal, `3`
//! a selection that ended over budget.

mod args;
mod evaluate;
mod manifest;
mod oracle;
mod select;
mod sweep;
mod synth;

use std::fs;
use std::path::Path;

use clap::Parser;
use serde::Serialize;

pub use args::*;
pub use manifest::RunManifest;

use crate::data::{load_dataset, load_groups, Dataset, GroupStructure};
use crate::{Error, Result};

pub const EXIT_INFEASIBLE: i32 = 3;

/// Runs a parsed command and returns its exit code.
pub fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Synth(a) => synth::run(&a),
        Command::Select(a) => select::run(&a),
        Command::Evaluate(a) => evaluate::run(&a),
        Command::Sweep(a) => sweep::run(&a),
        Command::Oracle(a) => oracle::run(&a),
    }
}

/// Parses `args` (program name first), runs the command and reports errors
/// on stderr. Returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub(crate) fn load_inputs(data: &DataArgs) -> Result<(Dataset, GroupStructure)> {
    let dataset = load_dataset(&data.features, &data.labels)?;
    let groups = load_groups(&data.groups, &dataset)?;
    Ok((dataset, groups))
}

/// Writes `bytes` next to `path` and renames into place, so a failed run
/// never leaves a truncated file behind.
pub(crate) fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    }
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".partial");
    let tmp = std::path::PathBuf::from(tmp);
    fs::write(&tmp, bytes).map_err(|e| Error::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| Error::io(path, e))
}

pub(crate) fn to_json(value: &impl Serialize) -> Result<String> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    Ok(text)
}

/// Writes a JSON document to `out`, or to stdout when no path is given.
pub(crate) fn emit_json(value: &impl Serialize, out: Option<&Path>) -> Result<()> {
    let text = to_json(value)?;
    match out {
        Some(path) => write_atomic(path, text.as_bytes()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
