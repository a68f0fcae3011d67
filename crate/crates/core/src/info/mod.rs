//! Discretization and plug-in information measures (in bits).

mod discretize;
mod estimate;

pub use discretize::{discretize, ColumnRef, DiscretizedView, Origin, DEFAULT_BINS};
pub use estimate::{conditional_mi_of, entropy_of, mutual_information_of};
pub(crate) use estimate::{nonnegative_cmi, Joint};
