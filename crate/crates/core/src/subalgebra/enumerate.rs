//! Closed-subsystem enumeration.
//!
//! Every closed subsystem `S` of `R` has full rank inside `R ∩ span(S)`, and
//! such intersections are Weyl-conjugate to standard Levi subsystems
//! `R_J` (roots supported on a subset `J` of the simple roots). Full-rank
//! closed subsystems of a system are reached by repeatedly deleting one node
//! from the extended Dynkin diagram of one irreducible component. So the
//! enumerator walks all `R_J`, descends from each, and finally collapses
//! Weyl orbits.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;

use crate::catalog::{highest_root, simple_reflection_perms, weyl_group, Perm, WEYL_RANK_CAP};
use crate::roots::linalg::BasisCoords;
use crate::roots::{components, lex_simple_roots, reflection_closure, RationalVector, RootSystem};

use super::closed::ClosedSubsystem;
use super::SubalgebraError;

fn to_indices(parent: &RootSystem, roots: &[RationalVector]) -> Vec<u16> {
    let mut out: Vec<u16> = roots
        .iter()
        .map(|r| parent.index_of(r).expect("subsystem root in parent") as u16)
        .collect();
    out.sort_unstable();
    out
}

/// Standard Levi subsystems `R_J`, one per subset `J` of the base.
fn levi_subsystems(parent: &RootSystem) -> Vec<Vec<u16>> {
    let bc = BasisCoords::new(parent.simple_roots());
    let supports: Vec<u32> = parent
        .roots()
        .iter()
        .map(|r| {
            bc.coords(r)
                .expect("roots lie in the span of the base")
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .fold(0u32, |m, (i, _)| m | (1 << i))
        })
        .collect();
    (0u32..1 << parent.rank())
        .map(|mask| {
            supports
                .iter()
                .enumerate()
                .filter(|(_, &s)| s & !mask == 0)
                .map(|(i, _)| i as u16)
                .collect()
        })
        .collect()
}

/// One extended-diagram deletion step applied to every component of `set`.
fn deletion_children(parent: &RootSystem, set: &[u16]) -> Vec<Vec<u16>> {
    let roots: Vec<RationalVector> = set.iter().map(|&i| parent.roots()[i as usize].clone()).collect();
    let comps = components(&roots);
    let mut out = Vec::new();
    for (ci, comp) in comps.iter().enumerate() {
        let base = lex_simple_roots(comp);
        let theta = highest_root(&RootSystem::new_unchecked(comp.clone())).expect("component is irreducible");
        let mut extended = base.clone();
        extended.push(-&theta);
        for skip in 0..base.len() {
            let gens: Vec<RationalVector> =
                extended.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, g)| g.clone()).collect();
            let replaced = reflection_closure(&gens).expect("subsystem generators close within a root system");
            let mut child: Vec<RationalVector> = comps
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != ci)
                .flat_map(|(_, c)| c.iter().cloned())
                .collect();
            child.extend(replaced);
            out.push(to_indices(parent, &child));
        }
    }
    out
}

fn descend(parent: &RootSystem, start: Vec<u16>) -> HashSet<Vec<u16>> {
    let mut seen: HashSet<Vec<u16>> = HashSet::from([start.clone()]);
    let mut stack = vec![start];
    while let Some(set) = stack.pop() {
        for child in deletion_children(parent, &set) {
            if seen.insert(child.clone()) {
                stack.push(child);
            }
        }
    }
    seen
}

/// At least one representative of every Weyl class of closed subsystems.
fn representatives(parent: &RootSystem) -> Vec<Vec<u16>> {
    let levis = levi_subsystems(parent);
    let found: Vec<HashSet<Vec<u16>>> = levis.into_par_iter().map(|l| descend(parent, l)).collect();
    let mut all: BTreeSet<Vec<u16>> = BTreeSet::new();
    for s in found {
        all.extend(s);
    }
    all.into_iter().collect()
}

/// Orbit of a root-index set under the group generated by `gens`.
pub(crate) fn orbit(gens: &[Perm], set: &[u16]) -> BTreeSet<Vec<u16>> {
    let mut seen = BTreeSet::from([set.to_vec()]);
    let mut stack = vec![set.to_vec()];
    while let Some(s) = stack.pop() {
        for g in gens {
            let mut img: Vec<u16> = s.iter().map(|&i| g[i as usize]).collect();
            img.sort_unstable();
            if !seen.contains(&img) {
                seen.insert(img.clone());
                stack.push(img);
            }
        }
    }
    seen
}

fn sort_key(set: &[u16]) -> (usize, Vec<u16>) {
    (set.len(), set.to_vec())
}

/// All closed subsystems of `parent`, including the empty one and the parent
/// itself. With `dedup`, one lexicographically minimal representative per
/// Weyl class (parent rank must be at most [`WEYL_RANK_CAP`]). Output is
/// sorted by size, then by sorted root list.
pub fn enumerate_closed_subsystems(
    parent: &RootSystem,
    dedup: bool,
) -> Result<Vec<ClosedSubsystem>, SubalgebraError> {
    if parent.is_empty() {
        return Ok(vec![ClosedSubsystem::torus(parent)]);
    }
    let reps = representatives(parent);
    let mut sets: Vec<Vec<u16>> = if dedup {
        if parent.rank() > WEYL_RANK_CAP {
            return Err(SubalgebraError::RankCap { rank: parent.rank(), cap: WEYL_RANK_CAP });
        }
        let w = weyl_group(parent)?;
        let canon: BTreeSet<Vec<u16>> = reps.par_iter().map(|s| w.canonical_indices(s)).collect();
        canon.into_iter().collect()
    } else {
        let gens = simple_reflection_perms(parent);
        let mut all = BTreeSet::new();
        for s in &reps {
            if !all.contains(s) {
                all.extend(orbit(&gens, s));
            }
        }
        all.into_iter().collect()
    };
    sets.sort_by_key(|s| sort_key(s));
    Ok(sets.iter().map(|s| ClosedSubsystem::from_indices(parent, s)).collect())
}

/// Weyl-canonical form of a subsystem: its lexicographically minimal image.
pub fn canonical_form(parent: &RootSystem, h: &ClosedSubsystem) -> Result<Vec<u16>, SubalgebraError> {
    let idx = h.indices(parent);
    if parent.rank() <= WEYL_RANK_CAP {
        Ok(weyl_group(parent)?.canonical_indices(&idx))
    } else {
        let gens = simple_reflection_perms(parent);
        Ok(orbit(&gens, &idx).into_iter().next().expect("orbit contains the set itself"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_type;
    use crate::subalgebra::is_closed;

    fn sys(s: &str) -> RootSystem {
        build_type(&s.parse().unwrap()).unwrap()
    }

    fn types(parent: &RootSystem, dedup: bool) -> Vec<String> {
        enumerate_closed_subsystems(parent, dedup)
            .unwrap()
            .iter()
            .map(|h| {
                let t = h.type_spec().to_string();
                if t.is_empty() { "torus".to_string() } else { t }
            })
            .collect()
    }

    #[test]
    fn g2_classes() {
        let g2 = sys("G2");
        let mut t = types(&g2, true);
        t.sort();
        assert_eq!(t, ["A1", "A1", "A1+A1", "A2", "G2", "torus"]);
    }

    #[test]
    fn a1_classes() {
        assert_eq!(types(&sys("A1"), true), ["torus", "A1"]);
    }

    #[test]
    fn b2_classes_include_d2_not_short_pair() {
        let b2 = sys("B2");
        let classes = enumerate_closed_subsystems(&b2, false).unwrap();
        let d2: Vec<RationalVector> = [[-1, -1], [-1, 1], [1, -1], [1, 1]]
            .iter()
            .map(|c| RationalVector::from_ints(c))
            .collect();
        let short: Vec<RationalVector> = [[-1, 0], [0, -1], [0, 1], [1, 0]]
            .iter()
            .map(|c| RationalVector::from_ints(c))
            .collect();
        assert!(classes.iter().any(|h| h.roots() == d2.as_slice()));
        assert!(!classes.iter().any(|h| h.roots() == short.as_slice()));
    }

    #[test]
    fn every_output_is_closed() {
        for s in ["A2", "B2", "G2", "A3", "B3", "C3", "A1+A1", "A1+B2"] {
            let p = sys(s);
            for h in enumerate_closed_subsystems(&p, true).unwrap() {
                assert!(is_closed(h.roots(), &p), "{s}: {:?}", h.roots());
            }
        }
    }

    #[test]
    fn dedup_rank_cap() {
        let e6 = sys("E6");
        assert!(matches!(
            enumerate_closed_subsystems(&e6, true),
            Err(SubalgebraError::RankCap { rank: 6, cap: 4 })
        ));
    }

    #[test]
    fn no_dedup_is_union_of_orbits() {
        let a2 = sys("A2");
        // torus, 3 A1's, A2
        assert_eq!(enumerate_closed_subsystems(&a2, false).unwrap().len(), 5);
        let b2 = sys("B2");
        // torus, 2 long A1, 2 short A1, long A1+A1 (D2), short pair A1+A1 is
        // not closed... {±e1}∪{±e2} is not; B2 itself
        let all = enumerate_closed_subsystems(&b2, false).unwrap();
        assert_eq!(all.len(), 1 + 2 + 2 + 1 + 1);
    }
}
