use std::collections::HashSet;

use crate::roots::linalg::BasisCoords;
use crate::roots::{reflect, RationalVector, RootSystem};

use super::CatalogError;

/// Full Weyl-group tables are only built up to this rank (F4 has order 1152).
pub const WEYL_RANK_CAP: usize = 4;

/// A root-index permutation.
pub type Perm = Vec<u16>;

/// The Weyl group as permutations of the sorted root list.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    roots: Vec<RationalVector>,
    generators: Vec<RationalVector>,
    elements: Vec<Perm>,
    base: BasisCoords,
}

fn reflection_perm(system: &RootSystem, alpha: &RationalVector) -> Perm {
    system
        .roots()
        .iter()
        .map(|r| {
            let img = reflect(r, alpha).expect("roots are nonzero");
            system.index_of(&img).expect("reflections permute the roots") as u16
        })
        .collect()
}

/// Permutations of the simple reflections. Available at any rank.
pub fn simple_reflection_perms(system: &RootSystem) -> Vec<Perm> {
    system.simple_roots().iter().map(|a| reflection_perm(system, a)).collect()
}

/// Enumerate the full group. Refuses systems above [`WEYL_RANK_CAP`].
pub fn weyl_group(system: &RootSystem) -> Result<WeylGroup, CatalogError> {
    if system.rank() > WEYL_RANK_CAP {
        return Err(CatalogError::RankCap { rank: system.rank(), cap: WEYL_RANK_CAP });
    }
    let generators = system.simple_roots();
    let gens: Vec<Perm> = generators.iter().map(|a| reflection_perm(system, a)).collect();
    let identity: Perm = (0..system.len() as u16).collect();
    let mut seen: HashSet<Perm> = HashSet::from([identity.clone()]);
    let mut frontier = vec![identity];
    while let Some(e) = frontier.pop() {
        for g in &gens {
            let next: Perm = e.iter().map(|&i| g[i as usize]).collect();
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    let mut elements: Vec<Perm> = seen.into_iter().collect();
    elements.sort();
    Ok(WeylGroup {
        roots: system.roots().to_vec(),
        base: BasisCoords::new(generators.clone()),
        generators,
        elements,
    })
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[RationalVector] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn roots(&self) -> &[RationalVector] {
        &self.roots
    }

    /// Image of a root index.
    pub fn apply_index(&self, element: usize, root: usize) -> usize {
        self.elements[element][root] as usize
    }

    /// Image of a sorted set of root indices, sorted.
    pub fn apply_indices(&self, element: usize, set: &[u16]) -> Vec<u16> {
        let p = &self.elements[element];
        let mut out: Vec<u16> = set.iter().map(|&i| p[i as usize]).collect();
        out.sort_unstable();
        out
    }

    /// Linear action on any vector in the span of the roots; `None` outside it.
    pub fn act(&self, element: usize, v: &RationalVector) -> Option<RationalVector> {
        let coeffs = self.base.coords(v)?;
        let p = &self.elements[element];
        let dim = v.dim();
        let mut out = RationalVector::zero(dim);
        for (alpha, k) in self.generators.iter().zip(coeffs) {
            if k.is_zero() {
                continue;
            }
            let idx = self.roots.binary_search(alpha).expect("simple roots are roots");
            let img = &self.roots[p[idx] as usize];
            out = &out + &img.scale(k);
        }
        Some(out)
    }

    /// Lexicographically minimal image of a root-index set over the group.
    pub fn canonical_indices(&self, set: &[u16]) -> Vec<u16> {
        (0..self.order())
            .map(|g| self.apply_indices(g, set))
            .min()
            .unwrap_or_default()
    }
}
