//! Cartan-type identification from the Dynkin diagram of a base.
//!
//! Aliases resolve to canonical labels: B1 and C1 to A1, C2 to B2, D3 to A3;
//! D2 splits into A1+A1.

use crate::roots::{cartan_int, lex_simple_roots, RationalVector, RootSystem};

use super::label::{CartanLabel, Series};
use super::CatalogError;

/// Cartan matrix `a_ij = 2<a_i,a_j>/<a_i,a_i>` of a base.
pub fn cartan_matrix(base: &[RationalVector]) -> Vec<Vec<i64>> {
    base.iter()
        .map(|a| {
            base.iter()
                .map(|b| {
                    cartan_int(a, b)
                        .expect("simple roots are nonzero")
                        .to_integer()
                        .expect("Cartan numbers of a root system are integers")
                })
                .collect()
        })
        .collect()
}

fn identify_component(roots: &[RationalVector]) -> Result<CartanLabel, CatalogError> {
    let base = lex_simple_roots(roots);
    let n = base.len();
    let a = cartan_matrix(&base);
    let unrecognized = |why: &str| CatalogError::Internal(format!("unrecognized Dynkin diagram: {why}"));
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut multi: Option<(usize, usize, i64)> = None;
    let mut edges = 0;
    for i in 0..n {
        for j in i + 1..n {
            let m = a[i][j] * a[j][i];
            if m == 0 {
                continue;
            }
            edges += 1;
            adj[i].push(j);
            adj[j].push(i);
            if m > 1 {
                if multi.is_some() {
                    return Err(unrecognized("two multiple edges"));
                }
                multi = Some((i, j, m));
            }
        }
    }
    if n > 0 && edges != n - 1 {
        return Err(unrecognized("not a tree"));
    }
    let label = match multi {
        Some((_, _, 3)) if n == 2 => CartanLabel::new(Series::G, 2),
        Some((i, j, 2)) => {
            if n == 2 {
                CartanLabel::new(Series::B, 2)
            } else if n == 4 && adj[i].len() == 2 && adj[j].len() == 2 {
                CartanLabel::new(Series::F, 4)
            } else {
                let end = if adj[i].len() == 1 {
                    i
                } else if adj[j].len() == 1 {
                    j
                } else {
                    return Err(unrecognized("double edge inside a chain"));
                };
                let other = if end == i { j } else { i };
                if base[end].norm2() < base[other].norm2() {
                    CartanLabel::new(Series::B, n)
                } else {
                    CartanLabel::new(Series::C, n)
                }
            }
        }
        Some(_) => return Err(unrecognized("triple edge outside G2")),
        None => {
            let branch: Vec<usize> = (0..n).filter(|&i| adj[i].len() >= 3).collect();
            match branch.as_slice() {
                [] => CartanLabel::new(Series::A, n),
                [b] if adj[*b].len() == 3 => {
                    let mut arms: Vec<usize> = adj[*b]
                        .iter()
                        .map(|&start| {
                            let (mut prev, mut cur, mut len) = (*b, start, 1);
                            while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                                prev = cur;
                                cur = next;
                                len += 1;
                            }
                            len
                        })
                        .collect();
                    arms.sort_unstable();
                    match arms.as_slice() {
                        [1, 1, _] => CartanLabel::new(Series::D, n),
                        [1, 2, 2] => CartanLabel::new(Series::E, 6),
                        [1, 2, 3] => CartanLabel::new(Series::E, 7),
                        [1, 2, 4] => CartanLabel::new(Series::E, 8),
                        _ => return Err(unrecognized("branch arms")),
                    }
                }
                _ => return Err(unrecognized("several branch nodes")),
            }
        }
    }?;
    if label.root_count() != roots.len() {
        return Err(unrecognized("root count disagrees with the diagram"));
    }
    Ok(label)
}

/// Sorted multiset of irreducible component types. The empty system gives
/// an empty list.
pub fn identify_type(system: &RootSystem) -> Result<Vec<CartanLabel>, CatalogError> {
    identify_roots(system.roots())
}

/// [`identify_type`] on a bare root list assumed to be a root system.
pub fn identify_roots(roots: &[RationalVector]) -> Result<Vec<CartanLabel>, CatalogError> {
    let mut out = crate::roots::components(roots)
        .iter()
        .map(|c| identify_component(c))
        .collect::<Result<Vec<_>, _>>()?;
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, build_type};

    fn names(labels: &[CartanLabel]) -> Vec<String> {
        labels.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn every_catalog_label_round_trips() {
        for l in CartanLabel::all_up_to(8) {
            assert_eq!(identify_type(&build(l).unwrap()).unwrap(), vec![l]);
        }
    }

    #[test]
    fn examples() {
        // +-(g_i - g_j) with g orthonormal
        let a2: Vec<RationalVector> = build("B3".parse().unwrap())
            .unwrap()
            .roots()
            .iter()
            .filter(|r| r.coords().iter().map(|c| c.numer()).sum::<i64>() == 0 && r.norm2().numer() == 2)
            .cloned()
            .collect();
        assert_eq!(a2.len(), 6);
        assert_eq!(names(&identify_roots(&a2).unwrap()), ["A2"]);
        let s = build_type(&"A1+A1".parse().unwrap()).unwrap();
        assert_eq!(names(&identify_type(&s).unwrap()), ["A1", "A1"]);
        let s = build_type(&"G2+A1+B2".parse().unwrap()).unwrap();
        assert_eq!(names(&identify_type(&s).unwrap()), ["A1", "B2", "G2"]);
    }

    #[test]
    fn aliases() {
        // D2 = {±e1±e2} is A1+A1; D3 is A3; C2 is B2
        let d2: Vec<RationalVector> = [[1, 1], [1, -1], [-1, 1], [-1, -1]]
            .iter()
            .map(|c| RationalVector::from_ints(c))
            .collect();
        assert_eq!(names(&identify_roots(&d2).unwrap()), ["A1", "A1"]);
        let mut d3 = Vec::new();
        for i in 0..3 {
            for j in i + 1..3 {
                for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let mut c = [0; 3];
                    c[i] = si;
                    c[j] = sj;
                    d3.push(RationalVector::from_ints(&c));
                }
            }
        }
        assert_eq!(names(&identify_roots(&d3).unwrap()), ["A3"]);
        let c2: Vec<RationalVector> = [[1, 1], [1, -1], [-1, 1], [-1, -1], [2, 0], [-2, 0], [0, 2], [0, -2]]
            .iter()
            .map(|c| RationalVector::from_ints(c))
            .collect();
        assert_eq!(names(&identify_roots(&c2).unwrap()), ["B2"]);
        assert!(identify_roots(&[]).unwrap().is_empty());
    }
}
