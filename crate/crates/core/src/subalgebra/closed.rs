use std::collections::HashSet;

use crate::catalog::{identify_roots, TypeSpec};
use crate::roots::{linalg, RationalVector, RootSystem};

use super::SubalgebraError;

/// `subset` is closed under negation and under addition inside `parent`.
/// Vectors outside the parent make the answer `false`.
pub fn is_closed(subset: &[RationalVector], parent: &RootSystem) -> bool {
    let set: HashSet<&RationalVector> = subset.iter().collect();
    if subset.iter().any(|a| !parent.contains(a) || !set.contains(&-a)) {
        return false;
    }
    for (i, a) in subset.iter().enumerate() {
        for b in &subset[i + 1..] {
            let s = a + b;
            if parent.contains(&s) && !set.contains(&s) {
                return false;
            }
        }
    }
    true
}

/// A closed subsystem `R(h)` of a parent system. The equal-rank subalgebra it
/// models is `R(h)` plus a central torus of dimension `torus_corank`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClosedSubsystem {
    roots: Vec<RationalVector>,
    torus_corank: usize,
}

impl ClosedSubsystem {
    pub fn new(parent: &RootSystem, mut roots: Vec<RationalVector>) -> Result<Self, SubalgebraError> {
        roots.sort();
        roots.dedup();
        if let Some(bad) = roots.iter().find(|r| !parent.contains(r)) {
            return Err(SubalgebraError::NotSubset(bad.clone()));
        }
        if !is_closed(&roots, parent) {
            return Err(SubalgebraError::NotClosed);
        }
        Ok(Self::from_closed(parent, roots))
    }

    /// The maximal torus (no roots).
    pub fn torus(parent: &RootSystem) -> Self {
        ClosedSubsystem { roots: Vec::new(), torus_corank: parent.rank() }
    }

    pub(crate) fn from_closed(parent: &RootSystem, mut roots: Vec<RationalVector>) -> Self {
        roots.sort();
        let torus_corank = parent.rank() - linalg::rank(&roots);
        ClosedSubsystem { roots, torus_corank }
    }

    pub(crate) fn from_indices(parent: &RootSystem, indices: &[u16]) -> Self {
        let roots = indices.iter().map(|&i| parent.roots()[i as usize].clone()).collect();
        Self::from_closed(parent, roots)
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

    pub fn torus_corank(&self) -> usize {
        self.torus_corank
    }

    /// Sorted root indices in the parent.
    pub fn indices(&self, parent: &RootSystem) -> Vec<u16> {
        let mut out: Vec<u16> = self
            .roots
            .iter()
            .map(|r| parent.index_of(r).expect("subsystem roots belong to the parent") as u16)
            .collect();
        out.sort_unstable();
        out
    }

    /// The subsystem as a root system of its own (lexicographic base).
    pub fn as_root_system(&self) -> RootSystem {
        RootSystem::new_unchecked(self.roots.clone())
    }

    /// Cartan type of the semisimple part; empty for a torus.
    pub fn type_spec(&self) -> TypeSpec {
        TypeSpec(identify_roots(&self.roots).expect("closed subsystems are root systems"))
    }
}
