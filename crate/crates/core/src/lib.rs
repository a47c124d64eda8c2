//! Exact root-system toolkit and quaternionic weight-splitting classifier.
//!
//! The crate works entirely at the level of roots and weights:
//!
//! * [`roots`]: exact rational vectors, the root-system axioms, reflections,
//!   root chains and subsystem predicates;
//! * [`catalog`]: every irreducible root system in standard coordinates,
//!   direct sums, metric normalization, highest roots, Weyl groups and
//!   Cartan-type identification;
//! * [`subalgebra`]: closed subsystems (equal-rank subalgebras), isotropy
//!   weight sets, the weight-level symmetry test and Wolf pairs;
//! * [`splitting`]: search and verification of splittings
//!   `W = {±alpha_i ± beta}` of an isotropy weight set, the metric
//!   constraints they satisfy, and the triple case analysis;
//! * [`report`]: pair and batch classification pipelines, deterministic
//!   JSON/table/CSV output and the enumeration cache behind the `aqh` CLI.

pub mod catalog;
pub mod report;
pub mod roots;
pub mod splitting;
pub mod subalgebra;

pub use roots::{Rational, RationalVector, RootSystem};
