use crate::roots::linalg::Matrix;
use crate::roots::{Normalization, Rational, RationalVector, RootSystem};

use super::label::{CartanLabel, Series};
use super::CatalogError;

/// Largest rank the catalog constructs.
pub const MAX_BUILD_RANK: usize = 8;

fn e(dim: usize, i: usize) -> RationalVector {
    RationalVector::unit(dim, i)
}

fn pm_pairs(dim: usize, n: usize, roots: &mut Vec<RationalVector>) {
    for i in 0..n {
        for j in i + 1..n {
            for si in [1, -1] {
                for sj in [1, -1] {
                    let mut c = vec![0; dim];
                    c[i] = si;
                    c[j] = sj;
                    roots.push(RationalVector::from_ints(&c));
                }
            }
        }
    }
}

fn type_a(n: usize) -> (Vec<RationalVector>, Vec<RationalVector>) {
    let dim = n + 1;
    let mut roots = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                roots.push(&e(dim, i) - &e(dim, j));
            }
        }
    }
    let base = (0..n).map(|i| &e(dim, i) - &e(dim, i + 1)).collect();
    (roots, base)
}

fn type_bcd(series: Series, n: usize) -> (Vec<RationalVector>, Vec<RationalVector>) {
    let mut roots = Vec::new();
    pm_pairs(n, n, &mut roots);
    let short_or_long = match series {
        Series::B => Some(Rational::ONE),
        Series::C => Some(Rational::from_int(2)),
        _ => None,
    };
    if let Some(k) = short_or_long {
        for i in 0..n {
            roots.push(e(n, i).scale(k));
            roots.push(e(n, i).scale(-k));
        }
    }
    let mut base: Vec<RationalVector> = (0..n - 1).map(|i| &e(n, i) - &e(n, i + 1)).collect();
    base.push(match series {
        Series::B => e(n, n - 1),
        Series::C => e(n, n - 1).scale(Rational::from_int(2)),
        _ => &e(n, n - 2) + &e(n, n - 1),
    });
    (roots, base)
}

fn e8_roots() -> Vec<RationalVector> {
    let mut roots = Vec::new();
    pm_pairs(8, 8, &mut roots);
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            let c: Vec<i64> = (0..8).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            roots.push(RationalVector::from_fracs(&c, 2));
        }
    }
    roots
}

/// Bourbaki simple roots of E8; E7 and E6 use the first 7 and 6.
fn e8_base() -> Vec<RationalVector> {
    let mut base = vec![
        RationalVector::from_fracs(&[1, -1, -1, -1, -1, -1, -1, 1], 2),
        RationalVector::from_ints(&[1, 1, 0, 0, 0, 0, 0, 0]),
    ];
    for i in 0..6 {
        base.push(&e(8, i + 1) - &e(8, i));
    }
    base
}

fn type_e(n: usize) -> (Vec<RationalVector>, Vec<RationalVector>) {
    let mut roots = e8_roots();
    // E7 lives in (e7+e8)^perp, E6 additionally in (e6-e7)^perp
    let mut constraints = Vec::new();
    if n <= 7 {
        constraints.push(&e(8, 6) + &e(8, 7));
    }
    if n <= 6 {
        constraints.push(&e(8, 5) - &e(8, 6));
    }
    roots.retain(|r| constraints.iter().all(|c| r.dot(c).is_zero()));
    let base = e8_base().into_iter().take(n).collect();
    (roots, base)
}

fn type_f4() -> (Vec<RationalVector>, Vec<RationalVector>) {
    let mut roots = Vec::new();
    pm_pairs(4, 4, &mut roots);
    for i in 0..4 {
        roots.push(e(4, i));
        roots.push(-&e(4, i));
    }
    for mask in 0u32..16 {
        let c: Vec<i64> = (0..4).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
        roots.push(RationalVector::from_fracs(&c, 2));
    }
    let base = vec![
        &e(4, 1) - &e(4, 2),
        &e(4, 2) - &e(4, 3),
        e(4, 3),
        RationalVector::from_fracs(&[1, -1, -1, -1], 2),
    ];
    (roots, base)
}

/// G2 in the plane `x+y+z = 0`: short roots `±(e_i - e_j)` (length² 2),
/// long roots `±(2e_i - e_j - e_k)` (length² 6).
fn type_g2() -> (Vec<RationalVector>, Vec<RationalVector>) {
    let mut roots = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                roots.push(&e(3, i) - &e(3, j));
            }
        }
        let mut c = vec![-1; 3];
        c[i] = 2;
        let long = RationalVector::from_ints(&c);
        roots.push(-&long);
        roots.push(long);
    }
    let base = vec![RationalVector::from_ints(&[1, -1, 0]), RationalVector::from_ints(&[-2, 1, 1])];
    (roots, base)
}

/// Standard realization of an irreducible type with its textbook base.
pub fn build(label: CartanLabel) -> Result<RootSystem, CatalogError> {
    let n = label.rank();
    if n > MAX_BUILD_RANK {
        return Err(CatalogError::Inadmissible(format!("{label}: rank above {MAX_BUILD_RANK}")));
    }
    let (roots, base) = match label.series() {
        Series::A => type_a(n),
        s @ (Series::B | Series::C | Series::D) => type_bcd(s, n),
        Series::E => type_e(n),
        Series::F => type_f4(),
        Series::G => type_g2(),
    };
    let sys = RootSystem::new(roots).map_err(|e| CatalogError::Internal(format!("{label}: {e}")))?;
    debug_assert!(base.iter().all(|b| sys.contains(b)));
    Ok(sys.with_base(base))
}

/// Block-orthogonal direct sum. Bases and metrics are carried over blockwise.
pub fn direct_sum(parts: &[RootSystem]) -> RootSystem {
    if parts.len() == 1 {
        return parts[0].clone();
    }
    let dims: Vec<usize> = parts.iter().map(RootSystem::ambient_dim).collect();
    let total: usize = dims.iter().sum();
    let embed = |k: usize, v: &RationalVector| {
        let offset: usize = dims[..k].iter().sum();
        let mut c = vec![Rational::ZERO; total];
        c[offset..offset + dims[k]].copy_from_slice(v.coords());
        RationalVector::new(c)
    };
    let mut roots = Vec::new();
    let mut base = Vec::new();
    for (k, p) in parts.iter().enumerate() {
        roots.extend(p.roots().iter().map(|r| embed(k, r)));
        base.extend(p.simple_roots().iter().map(|r| embed(k, r)));
    }
    let metric = parts.iter().any(|p| p.metric().is_some()).then(|| {
        let mut g: Matrix = vec![vec![Rational::ZERO; total]; total];
        let mut offset = 0;
        for p in parts {
            let d = p.ambient_dim();
            for i in 0..d {
                for j in 0..d {
                    g[offset + i][offset + j] = match p.metric() {
                        Some(m) => m[i][j],
                        None if i == j => Rational::ONE,
                        None => Rational::ZERO,
                    };
                }
            }
            offset += d;
        }
        g
    });
    let normalization = if parts.iter().all(|p| p.normalization() == Normalization::LongSquared2) {
        Normalization::LongSquared2
    } else {
        Normalization::Raw
    };
    RootSystem::new_unchecked(roots).with_base(base).with_metric(metric, normalization)
}

/// Build a (possibly reducible) type such as `A1+A1`.
pub fn build_type(spec: &super::TypeSpec) -> Result<RootSystem, CatalogError> {
    let parts = spec.labels().iter().map(|&l| build(l)).collect::<Result<Vec<_>, _>>()?;
    if parts.is_empty() {
        return Err(CatalogError::Parse("empty type".into()));
    }
    Ok(direct_sum(&parts))
}
