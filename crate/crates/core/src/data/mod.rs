//! Datasets, feature groups with their costs, and the illustrative generator.

mod dataset;
mod groups;
mod io;
mod split;
mod synth;

pub use dataset::Dataset;
pub use groups::{Budget, Group, GroupStructure};
pub use io::{load_dataset, load_groups, write_dataset, write_groups, GroupSpec};
pub use split::train_valid_split;
pub use synth::generate_illustrative;
