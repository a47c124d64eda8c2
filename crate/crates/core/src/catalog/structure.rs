use std::collections::BTreeSet;

use crate::roots::linalg::{projection, BasisCoords, Matrix};
use crate::roots::{Normalization, Rational, RationalVector, RootSystem};

use super::CatalogError;

/// Coordinates of every root in the system's simple-root base.
pub(crate) fn base_coords(system: &RootSystem) -> BasisCoords {
    BasisCoords::new(system.simple_roots())
}

/// Roots with nonnegative coordinates in the base, sorted.
pub fn positive_roots(system: &RootSystem) -> Vec<RationalVector> {
    let bc = base_coords(system);
    system
        .roots()
        .iter()
        .filter(|r| {
            bc.coords(r)
                .expect("roots lie in the span of the base")
                .iter()
                .all(|c| !c.is_negative())
        })
        .cloned()
        .collect()
}

/// The unique maximal positive root of an irreducible system.
pub fn highest_root(system: &RootSystem) -> Result<RationalVector, CatalogError> {
    if !system.is_irreducible() {
        return Err(CatalogError::Reducible);
    }
    let bc = base_coords(system);
    let pos: Vec<(RationalVector, Vec<Rational>)> = system
        .roots()
        .iter()
        .filter_map(|r| {
            let c = bc.coords(r).expect("roots lie in the span of the base");
            c.iter().all(|x| !x.is_negative()).then(|| (r.clone(), c))
        })
        .collect();
    let dominates = |a: &[Rational], b: &[Rational]| a.iter().zip(b).all(|(x, y)| *x >= *y);
    let maximal: Vec<&RationalVector> = pos
        .iter()
        .filter(|(_, c)| !pos.iter().any(|(_, d)| d != c && dominates(d, c)))
        .map(|(r, _)| r)
        .collect();
    match maximal.as_slice() {
        [theta] => Ok((*theta).clone()),
        _ => Err(CatalogError::Internal(format!("{} maximal roots", maximal.len()))),
    }
}

/// Rescale the invariant form on each irreducible component so that long
/// roots have square length 2. The roots themselves are untouched.
pub fn normalize(system: &RootSystem) -> Result<RootSystem, CatalogError> {
    let dim = system.ambient_dim();
    let mut scaled: Vec<(Rational, Matrix)> = Vec::new();
    for comp in system.components() {
        let lengths: BTreeSet<Rational> = comp.iter().map(RationalVector::norm2).collect();
        let long = *lengths.last().expect("components are nonempty");
        let short = *lengths.first().expect("components are nonempty");
        let ratio = long / short;
        if lengths.len() > 2 {
            return Err(CatalogError::Internal(format!("{} root lengths in one component", lengths.len())));
        }
        if ratio == Rational::from_int(3) {
            return Err(CatalogError::G2Component);
        }
        if ratio != Rational::ONE && ratio != Rational::from_int(2) {
            return Err(CatalogError::Internal(format!("length ratio {ratio}")));
        }
        let s = Rational::from_int(2) / long;
        if s != Rational::ONE {
            scaled.push((s, projection(&comp, dim)));
        }
    }
    // G = I + sum_c (s_c - 1) P_c
    let metric = (!scaled.is_empty()).then(|| {
        let mut g: Matrix = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { Rational::ONE } else { Rational::ZERO }).collect())
            .collect();
        for (s, p) in &scaled {
            let f = *s - Rational::ONE;
            for i in 0..dim {
                for j in 0..dim {
                    g[i][j] = g[i][j] + f * p[i][j];
                }
            }
        }
        g
    });
    Ok(system.clone().with_metric(metric, Normalization::LongSquared2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, build_type, CartanLabel};

    fn sys(s: &str) -> RootSystem {
        build_type(&s.parse().unwrap()).unwrap()
    }

    fn v(c: &[i64]) -> RationalVector {
        RationalVector::from_ints(c)
    }

    #[test]
    fn highest_roots() {
        assert_eq!(highest_root(&sys("A1")).unwrap(), v(&[1, -1]));
        assert_eq!(highest_root(&sys("B3")).unwrap(), v(&[1, 1, 0]));
        assert_eq!(highest_root(&sys("C3")).unwrap(), v(&[2, 0, 0]));
        assert_eq!(highest_root(&sys("G2")).unwrap(), v(&[-1, -1, 2]));
        assert_eq!(highest_root(&sys("F4")).unwrap(), v(&[1, 1, 0, 0]));
        assert_eq!(highest_root(&sys("E8")).unwrap(), v(&[0, 0, 0, 0, 0, 0, 1, 1]));
        assert!(matches!(highest_root(&sys("A1+A1")), Err(CatalogError::Reducible)));
    }

    #[test]
    fn highest_root_is_long_and_dominant() {
        for l in CartanLabel::all_up_to(8) {
            let s = build(l).unwrap();
            let theta = highest_root(&s).unwrap();
            let max_len = s.roots().iter().map(RationalVector::norm2).max().unwrap();
            assert_eq!(theta.norm2(), max_len, "{l}");
            for a in positive_roots(&s) {
                assert!(!theta.dot(&a).is_negative(), "{l}: <theta,{a}> < 0");
            }
        }
    }

    #[test]
    fn positive_roots_are_half() {
        for l in CartanLabel::all_up_to(8) {
            let s = build(l).unwrap();
            assert_eq!(positive_roots(&s).len() * 2, s.len(), "{l}");
        }
    }

    #[test]
    fn normalize_examples() {
        let b3 = normalize(&sys("B3")).unwrap();
        assert_eq!(b3.metric(), None);
        assert_eq!(b3.normalization(), Normalization::LongSquared2);
        assert_eq!(normalize(&sys("A2")).unwrap().metric(), None);
        assert!(matches!(normalize(&sys("G2")), Err(CatalogError::G2Component)));
        assert!(matches!(normalize(&sys("A1+G2")), Err(CatalogError::G2Component)));
        let c3 = normalize(&sys("C3")).unwrap();
        let long = v(&[2, 0, 0]);
        assert_eq!(c3.metric_inner(&long, &long), Rational::from_int(2));
        let short = v(&[1, 1, 0]);
        assert_eq!(c3.metric_inner(&short, &short), Rational::ONE);
    }

    #[test]
    fn normalize_per_component() {
        // C3 needs rescaling, A1 does not; components keep their own scale
        let s = normalize(&sys("A1+C3")).unwrap();
        let a1 = s.roots().iter().find(|r| r.coords()[0] != Rational::ZERO).unwrap().clone();
        assert_eq!(s.metric_inner(&a1, &a1), Rational::from_int(2));
        for r in s.roots() {
            let n = s.metric_inner(r, r);
            assert!(n == Rational::ONE || n == Rational::from_int(2));
        }
    }
}
