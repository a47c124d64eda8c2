use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::linalg::{self, Matrix};
use super::ops::cartan_int;
use super::rational::{Rational, RationalVector};
use super::RootError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Axiom {
    R1,
    R2,
    R3,
    R4,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// First witness of a violated axiom, with the number of times it occurred.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<RationalVector>,
    pub detail: String,
    pub occurrences: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub size: usize,
    pub rank: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violated(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "valid ({} roots, rank {})", self.size, self.rank);
        }
        let parts: Vec<String> = self
            .violations
            .iter()
            .map(|v| format!("{}: {} {:?}", v.axiom, v.detail, v.witness))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

#[derive(Default)]
struct Collector {
    found: BTreeMap<(Axiom, &'static str), Violation>,
}

impl Collector {
    fn add(&mut self, axiom: Axiom, detail: &'static str, witness: Vec<RationalVector>) {
        self.found
            .entry((axiom, detail))
            .and_modify(|v| v.occurrences += 1)
            .or_insert(Violation { axiom, witness, detail: detail.to_string(), occurrences: 1 });
    }
}

/// Check R1–R4 on an arbitrary finite set. Violations are data: the report
/// names each violated axiom with a witness.
pub fn validate_root_system(candidate: &[RationalVector]) -> ValidationReport {
    let mut c = Collector::default();
    if candidate.is_empty() {
        c.add(Axiom::R1, "empty set", vec![]);
    }
    let dim = candidate.first().map_or(0, RationalVector::dim);
    let mut seen = HashSet::new();
    let mut distinct = Vec::new();
    for v in candidate {
        if v.dim() != dim {
            c.add(Axiom::R1, "inconsistent ambient dimension", vec![v.clone()]);
            continue;
        }
        if v.is_zero() {
            c.add(Axiom::R1, "zero vector", vec![v.clone()]);
            continue;
        }
        if !seen.insert(v.clone()) {
            c.add(Axiom::R1, "duplicate vector", vec![v.clone()]);
            continue;
        }
        distinct.push(v.clone());
    }
    for a in &distinct {
        let neg = -a;
        if !seen.contains(&neg) {
            c.add(Axiom::R4, "not closed under negation", vec![a.clone(), neg]);
        }
        for b in &distinct {
            if a == b {
                continue;
            }
            if let Some(k) = b.multiple_of(a) {
                if k != -Rational::ONE {
                    c.add(Axiom::R2, "forbidden multiple", vec![a.clone(), b.clone()]);
                }
            }
            let n = cartan_int(a, b).expect("nonzero, equal dimension");
            if !n.is_integer() {
                c.add(Axiom::R3, "non-integral Cartan number", vec![a.clone(), b.clone()]);
            }
            let image = b - &a.scale(n);
            if !seen.contains(&image) {
                c.add(Axiom::R4, "reflection leaves the set", vec![a.clone(), b.clone()]);
            }
        }
    }
    ValidationReport {
        size: distinct.len(),
        rank: linalg::rank(&distinct),
        violations: c.found.into_values().collect(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Normalization {
    #[serde(rename = "raw")]
    Raw,
    /// Long roots of every irreducible component have square length 2.
    #[serde(rename = "long-squared-2")]
    LongSquared2,
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Normalization::Raw => "raw",
            Normalization::LongSquared2 => "long-squared-2",
        })
    }
}

/// A validated root system in an ambient rational space.
///
/// Roots are stored sorted. Reflections and Cartan numbers use the standard
/// dot product, which is all they ever need since both are scale invariant
/// on each irreducible component. `metric` is the invariant form after
/// per-component rescaling and is only consulted for metric quantities such
/// as `|beta|^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    ambient_dim: usize,
    rank: usize,
    roots: Vec<RationalVector>,
    normalization: Normalization,
    metric: Option<Matrix>,
    base: Option<Vec<RationalVector>>,
}

impl RootSystem {
    /// Validates R1–R4.
    pub fn new(roots: Vec<RationalVector>) -> Result<Self, RootError> {
        let report = validate_root_system(&roots);
        if !report.is_ok() {
            return Err(RootError::Invalid(report));
        }
        Ok(Self::new_unchecked(roots))
    }

    /// Skips validation. For subsets already known to be root systems and for
    /// deliberately broken inputs in tests.
    #[doc(hidden)]
    pub fn new_unchecked(mut roots: Vec<RationalVector>) -> Self {
        roots.sort();
        roots.dedup();
        RootSystem {
            ambient_dim: roots.first().map_or(0, RationalVector::dim),
            rank: linalg::rank(&roots),
            roots,
            normalization: Normalization::Raw,
            metric: None,
            base: None,
        }
    }

    /// The empty system (rank 0) in a given ambient dimension.
    pub fn empty(ambient_dim: usize) -> Self {
        RootSystem {
            ambient_dim,
            rank: 0,
            roots: Vec::new(),
            normalization: Normalization::Raw,
            metric: None,
            base: None,
        }
    }

    pub(crate) fn with_base(mut self, base: Vec<RationalVector>) -> Self {
        self.base = Some(base);
        self
    }

    pub(crate) fn with_metric(mut self, metric: Option<Matrix>, normalization: Normalization) -> Self {
        self.metric = metric;
        self.normalization = normalization;
        self
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn roots(&self) -> &[RationalVector] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn metric(&self) -> Option<&Matrix> {
        self.metric.as_ref()
    }

    pub fn contains(&self, v: &RationalVector) -> bool {
        self.roots.binary_search(v).is_ok()
    }

    pub fn index_of(&self, v: &RationalVector) -> Option<usize> {
        self.roots.binary_search(v).ok()
    }

    /// Inner product in the (possibly rescaled) invariant form.
    pub fn metric_inner(&self, u: &RationalVector, v: &RationalVector) -> Rational {
        match &self.metric {
            None => u.dot(v),
            Some(g) => {
                let mut acc = Rational::ZERO;
                for (i, row) in g.iter().enumerate() {
                    let ui = u.coords()[i];
                    if ui.is_zero() {
                        continue;
                    }
                    for (j, gij) in row.iter().enumerate() {
                        if !gij.is_zero() {
                            acc = acc + ui * *gij * v.coords()[j];
                        }
                    }
                }
                acc
            }
        }
    }

    /// Simple roots: the catalog base when one was fixed at construction,
    /// otherwise the indecomposable lexicographically positive roots.
    pub fn simple_roots(&self) -> Vec<RationalVector> {
        match &self.base {
            Some(b) => b.clone(),
            None => lex_simple_roots(&self.roots),
        }
    }

    pub fn has_fixed_base(&self) -> bool {
        self.base.is_some()
    }

    /// Irreducible components, each sorted; components ordered by their
    /// smallest root.
    pub fn components(&self) -> Vec<Vec<RationalVector>> {
        components(&self.roots)
    }

    pub fn is_irreducible(&self) -> bool {
        !self.roots.is_empty() && self.components().len() == 1
    }
}

/// Connected components of the non-orthogonality graph.
pub fn components(roots: &[RationalVector]) -> Vec<Vec<RationalVector>> {
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for i in 0..n {
        for j in i + 1..n {
            if !roots[i].dot(&roots[j]).is_zero() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<RationalVector>> = BTreeMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(roots[i].clone());
    }
    let mut out: Vec<Vec<RationalVector>> = groups
        .into_values()
        .map(|mut g| {
            g.sort();
            g
        })
        .collect();
    out.sort();
    out
}

/// Indecomposable roots among the lexicographically positive ones.
pub fn lex_simple_roots(roots: &[RationalVector]) -> Vec<RationalVector> {
    let positive: Vec<&RationalVector> = roots.iter().filter(|r| r.is_lex_positive()).collect();
    let pos_set: HashSet<&RationalVector> = positive.iter().copied().collect();
    let mut simple: Vec<RationalVector> = positive
        .iter()
        .filter(|p| {
            !positive.iter().any(|q| {
                let d = **p - *q;
                pos_set.contains(&d)
            })
        })
        .map(|p| (*p).clone())
        .collect();
    simple.sort();
    simple
}
