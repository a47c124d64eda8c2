//! Equal-rank closed subsystems, isotropy weights, weight-level symmetry and
//! Wolf pairs.

mod closed;
mod enumerate;
mod weights;
mod wolf;

use thiserror::Error;

use crate::catalog::CatalogError;
use crate::roots::{RationalVector, RootError};

pub use closed::{is_closed, ClosedSubsystem};
pub use enumerate::{canonical_form, enumerate_closed_subsystems};
pub use weights::{first_sum_triple, is_symmetric_pair, isotropy_weights, IsotropyWeights};
pub use wolf::{is_wolf_pair, wolf_subsystem};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubalgebraError {
    #[error("{0} is not a root of the parent system")]
    NotSubset(RationalVector),
    #[error("subset is not closed in the parent system")]
    NotClosed,
    #[error("rank {rank} exceeds the Weyl dedup cap {cap}")]
    RankCap { rank: usize, cap: usize },
    #[error("invalid weight set: {0}")]
    InvalidWeights(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Root(#[from] RootError),
}
