//! Pair and batch classification, report emission and the enumeration
//! cache behind the `aqh` command.
//!
//! JSON reports carry `schema_version`. Rationals are `"p/q"` strings (plain
//! integers when the denominator is 1). Wall-clock timing is kept out of
//! every serialized form so that reruns are byte-identical.

mod cache;
mod emit;
mod pipeline;
mod spec;

use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{CatalogError, Series};
use crate::roots::Rational;
use crate::splitting::{CaseKind, ConstraintReport, SplitError, SplittingCertificate};
use crate::subalgebra::SubalgebraError;

pub use cache::cached_subsystems;
pub use emit::{check_pair, emit_pair, emit_report, Format};
pub use pipeline::{analyze_pair, build_parent, classify_all, classify_pair, parents, parse_series};
pub use spec::{class_names, describe, parse_roots, parse_subsystem, parse_type, type_name};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReportError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Subalgebra(#[from] SubalgebraError),
    #[error(transparent)]
    Split(#[from] SplitError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// `dim G/H` is not a multiple of 4.
    NotEligible,
    NoSplitting,
    WolfSpace,
    So7U3,
    /// `(A1+A1, torus)`: `S² × S²`.
    S2xs2Type,
    /// Splits at the weight level, but the pair is symmetric and not Wolf.
    SymmetricCandidate,
    /// Splits at the weight level, non-symmetric, none of the known cases.
    UnconfirmedCandidate,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NotEligible => "not_eligible",
            Verdict::NoSplitting => "no_splitting",
            Verdict::WolfSpace => "wolf_space",
            Verdict::So7U3 => "so7_u3",
            Verdict::S2xs2Type => "s2xs2_type",
            Verdict::SymmetricCandidate => "symmetric_candidate",
            Verdict::UnconfirmedCandidate => "unconfirmed_candidate",
        }
    }

    /// At least one certificate was found.
    pub fn is_positive(self) -> bool {
        !matches!(self, Verdict::NotEligible | Verdict::NoSplitting)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateEntry {
    #[serde(flatten)]
    pub certificate: SplittingCertificate,
    pub case: CaseKind,
    /// Present for irreducible, normalized, non-G2 parents.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constraints: Option<ConstraintReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub g_label: String,
    pub h_description: String,
    pub h_type: String,
    pub torus_corank: usize,
    pub dim_m: usize,
    pub quaternionic_n: Rational,
    pub eligible: bool,
    pub symmetric: bool,
    pub is_wolf: bool,
    pub certificates: Vec<CertificateEntry>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Filters {
    pub max_rank: usize,
    /// Restrict simple factors to these series.
    pub series: Option<Vec<Series>>,
    /// Also run direct sums of catalog systems with total rank `<= max_rank`.
    pub include_products: bool,
    /// Keep pairs whose dimension is not a multiple of 4.
    pub include_ineligible: bool,
}

impl Filters {
    pub fn new(max_rank: usize) -> Self {
        Filters { max_rank, series: None, include_products: false, include_ineligible: false }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Statistics {
    pub parents: usize,
    pub closed_subsystems: usize,
    pub pairs_considered: usize,
    pub eligible_pairs: usize,
    pub positives: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub schema_version: u32,
    pub max_rank: usize,
    pub filters: Filters,
    pub statistics: Statistics,
    /// Sorted by `(g_label, h_description)`.
    pub pairs: Vec<PairReport>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ClassificationReport {
    pub fn positives(&self) -> impl Iterator<Item = &PairReport> {
        self.pairs.iter().filter(|p| p.verdict.is_positive())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_examples() {
        let r = classify_pair("G2", "torus").unwrap();
        assert_eq!(r.verdict, Verdict::NoSplitting);
        assert!(r.certificates.is_empty());
        let r = classify_pair("B3", "[[1,-1,0],[-1,1,0],[1,0,-1],[-1,0,1],[0,1,-1],[0,-1,1]]").unwrap();
        assert_eq!(r.verdict, Verdict::So7U3);
        assert_eq!(r.quaternionic_n, Rational::from_int(3));
        let r = classify_pair("A1+A1", "torus").unwrap();
        assert_eq!(r.verdict, Verdict::S2xs2Type);
        assert_eq!(r.quaternionic_n, Rational::ONE);
        let r = classify_pair("A2", "wolf").unwrap();
        assert_eq!(r.verdict, Verdict::WolfSpace);
        assert_eq!(r.torus_corank, 1);
        assert_eq!(classify_pair("G2", "A2#0").unwrap().verdict, Verdict::NotEligible);
    }

    #[test]
    fn pair_errors() {
        assert!(matches!(classify_pair("Q3", "torus"), Err(ReportError::Parse(_))));
        assert!(matches!(classify_pair("A2", "[[1,-1,0]]"), Err(ReportError::Subalgebra(SubalgebraError::NotClosed))));
        assert!(matches!(classify_pair("A1", "A1#0"), Err(ReportError::Split(SplitError::EmptyWeights))));
    }

    #[test]
    fn product_parents() {
        let mut f = Filters::new(3);
        f.include_products = true;
        let names: Vec<String> = parents(&f).iter().map(|t| t.to_string()).collect();
        assert!(names.contains(&"A1+A1".to_string()));
        assert!(names.contains(&"A1+A1+A1".to_string()));
        assert!(names.contains(&"A1+A2".to_string()));
        assert!(!names.contains(&"A2+A2".to_string()));
        f.series = Some(vec![Series::B]);
        f.include_products = false;
        let names: Vec<String> = parents(&f).iter().map(|t| t.to_string()).collect();
        assert_eq!(names, ["B2", "B3"]);
    }

    #[test]
    fn rank_two_positives_are_wolf() {
        let rep = classify_all(&Filters::new(2), None).unwrap();
        let pos: Vec<(String, Verdict)> = rep.positives().map(|p| (p.g_label.clone(), p.verdict)).collect();
        assert_eq!(
            pos,
            [
                ("A2".to_string(), Verdict::WolfSpace),
                ("B2".to_string(), Verdict::WolfSpace),
                ("G2".to_string(), Verdict::WolfSpace)
            ]
        );
    }
}
