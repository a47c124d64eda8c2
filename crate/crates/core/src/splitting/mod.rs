//! Quaternionic weight splittings `W = {±alpha_i ± beta}`: search,
//! verification, metric constraints and the triple case analysis.

mod cases;
mod certificate;
mod search;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::catalog::{highest_root, weyl_group, CatalogError};
use crate::roots::{Rational, RationalVector, RootSystem};
use crate::subalgebra::SubalgebraError;

pub use cases::{case_analysis, check_constraints, CaseKind, CaseTag, CaseWitness, ConstraintReport};
pub use certificate::SplittingCertificate;
pub use search::{find_splittings, verify_certificate};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SplitError {
    #[error("no isotropy weights: the quotient is a point")]
    EmptyWeights,
    #[error("dimension {dim} is not divisible by 4")]
    NotEligible { dim: usize },
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("parent is not normalized to long roots of square length 2")]
    NotNormalized,
    #[error("constraints do not apply to G2")]
    G2Input,
    #[error("parent must be irreducible")]
    Reducible,
    #[error("weight triple matches no case: coefficients {0}")]
    UnclassifiableTriple(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Subalgebra(#[from] SubalgebraError),
}

/// Splitting of the Wolf pair of an irreducible parent: `beta = theta/2` and
/// `A = {alpha - theta/2 : <alpha, theta^vee> = 1}`.
pub fn wolf_certificate(parent: &RootSystem) -> Result<SplittingCertificate, SplitError> {
    if !parent.is_irreducible() {
        return Err(SplitError::Reducible);
    }
    let theta = highest_root(parent)?;
    let beta = theta.scale(Rational::new(1, 2));
    let t2 = theta.norm2();
    let a_set: Vec<RationalVector> = parent
        .roots()
        .iter()
        .filter(|a| Rational::from_int(2) * a.dot(&theta) == t2)
        .map(|a| a - &beta)
        .collect();
    if a_set.is_empty() {
        return Err(SplitError::EmptyWeights);
    }
    SplittingCertificate::from_symmetric(beta, &a_set)
        .ok_or_else(|| SplitError::InvalidCertificate("Wolf construction is not symmetric".into()))
}

/// Keeps the first certificate of each Weyl orbit (input order). Needs the
/// full Weyl group, so the parent rank is capped.
pub fn dedup_by_weyl(
    parent: &RootSystem,
    certs: &[SplittingCertificate],
) -> Result<Vec<SplittingCertificate>, SplitError> {
    let w = weyl_group(parent)?;
    let mut seen: BTreeSet<SplittingCertificate> = BTreeSet::new();
    let mut out = Vec::new();
    for c in certs {
        if seen.contains(c) {
            continue;
        }
        for g in 0..w.order() {
            let img = c.map(|v| w.act(g, v).expect("certificate vectors lie in the root span"))?;
            seen.insert(img);
        }
        out.push(c.clone());
    }
    Ok(out)
}
