//! Exact rational vectors, the root-system axioms, reflections, root chains
//! and subsystem predicates.

pub mod linalg;
mod ops;
mod rational;
mod system;

use thiserror::Error;

pub use ops::{
    cartan_int, classify_pair, is_root_subsystem, reflect, reflection_closure, root_chain,
    PairClass, PairKind, CLOSURE_CAP,
};
pub use rational::{inner, Rational, RationalVector};
pub use system::{
    components, lex_simple_roots, validate_root_system, Axiom, Normalization, RootSystem,
    ValidationReport, Violation,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("reflection or Cartan integer through the zero vector")]
    ZeroVector,
    #[error("pair {alpha} / {beta} violates the inner-product trichotomy of root systems")]
    NormscalViolation { alpha: RationalVector, beta: RationalVector },
    #[error("root chain broken: {missing} expected in the system (from {beta} along {alpha})")]
    ChainBroken { beta: RationalVector, alpha: RationalVector, missing: RationalVector },
    #[error("Cartan number 2<a,b>/<a,a> = {value} is not an integer")]
    NonIntegralCartan { value: Rational },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("reflection closure exceeded {cap} vectors")]
    GrowthCap { cap: usize },
    #[error("not a root system: {0}")]
    Invalid(ValidationReport),
    #[error("parse error: {0}")]
    Parse(String),
}
