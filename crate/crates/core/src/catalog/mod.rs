//! Irreducible root systems in standard coordinates, direct sums, metric
//! normalization, highest roots, Weyl groups and type identification.
//!
//! | label | ambient | roots |
//! |-------|---------|-------|
//! | `An`  | sum-zero hyperplane of `Q^{n+1}` | `e_i - e_j` |
//! | `Bn`  | `Q^n` | `±e_i ± e_j`, `±e_i` |
//! | `Cn`  | `Q^n` | `±e_i ± e_j`, `±2e_i` |
//! | `Dn`  | `Q^n` | `±e_i ± e_j` |
//! | `E8`  | `Q^8` | `±e_i ± e_j`, `½(±1,…,±1)` with an even number of minus signs |
//! | `E7`  | `(e7+e8)^⊥ ⊂ Q^8` | E8 roots in that hyperplane |
//! | `E6`  | `(e7+e8, e6-e7)^⊥ ⊂ Q^8` | E8 roots in that subspace |
//! | `F4`  | `Q^4` | `±e_i`, `±e_i ± e_j`, `½(±1,±1,±1,±1)` |
//! | `G2`  | `x+y+z = 0` in `Q^3` | `±(e_i - e_j)`, `±(2e_i - e_j - e_k)` |

mod build;
mod identify;
mod label;
mod structure;
mod weyl;

use thiserror::Error;

pub use build::{build, build_type, direct_sum, MAX_BUILD_RANK};
pub use identify::{cartan_matrix, identify_roots, identify_type};
pub use label::{CartanLabel, Series, TypeSpec};
pub use structure::{highest_root, normalize, positive_roots};
pub use weyl::{simple_reflection_perms, weyl_group, Perm, WeylGroup, WEYL_RANK_CAP};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("inadmissible Cartan label {0}")]
    Inadmissible(String),
    #[error("cannot parse type: {0}")]
    Parse(String),
    #[error("system is reducible")]
    Reducible,
    #[error("component with length ratio 3 (G2) cannot be normalized to square lengths 1 and 2")]
    G2Component,
    #[error("rank {rank} exceeds the Weyl-group enumeration cap {cap}")]
    RankCap { rank: usize, cap: usize },
    #[error("internal catalog error: {0}")]
    Internal(String),
}
