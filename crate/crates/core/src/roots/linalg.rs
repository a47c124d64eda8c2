//! Small dense linear algebra over exact rationals.

use super::rational::{Rational, RationalVector};

/// Row-major square or rectangular matrix.
pub type Matrix = Vec<Vec<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = *x * inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                for j in 0..cols {
                    let d = f * m[r][j];
                    m[i][j] = m[i][j] - d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Dimension of the linear hull.
pub fn rank(vectors: &[RationalVector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let mut m: Matrix = vectors.iter().map(|v| v.coords().to_vec()).collect();
    rref(&mut m).len()
}

/// Greedy maximal linearly independent subfamily, in input order.
pub fn independent_subset(vectors: &[RationalVector]) -> Vec<RationalVector> {
    let mut chosen: Vec<RationalVector> = Vec::new();
    for v in vectors {
        if v.is_zero() {
            continue;
        }
        let mut trial = chosen.clone();
        trial.push(v.clone());
        if rank(&trial) == trial.len() {
            chosen = trial;
        }
    }
    chosen
}

/// Inverse of a square matrix, `None` when singular.
pub fn invert(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::ONE } else { Rational::ZERO }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn gram(basis: &[RationalVector]) -> Matrix {
    basis
        .iter()
        .map(|a| basis.iter().map(|b| a.dot(b)).collect())
        .collect()
}

/// Coordinates of vectors in a fixed linearly independent basis, via the
/// inverse Gram matrix. Vectors outside the span get `None`.
#[derive(Clone, Debug)]
pub struct BasisCoords {
    basis: Vec<RationalVector>,
    gram_inv: Matrix,
}

impl BasisCoords {
    /// Panics when `basis` is linearly dependent.
    pub fn new(basis: Vec<RationalVector>) -> Self {
        let gram_inv = invert(&gram(&basis)).expect("basis vectors must be independent");
        BasisCoords { basis, gram_inv }
    }

    pub fn basis(&self) -> &[RationalVector] {
        &self.basis
    }

    pub fn coords(&self, v: &RationalVector) -> Option<Vec<Rational>> {
        let rhs: Vec<Rational> = self.basis.iter().map(|b| b.dot(v)).collect();
        let c: Vec<Rational> = self
            .gram_inv
            .iter()
            .map(|row| row.iter().zip(&rhs).fold(Rational::ZERO, |acc, (&a, &b)| acc + a * b))
            .collect();
        (self.combine(&c) == *v).then_some(c)
    }

    pub fn combine(&self, coeffs: &[Rational]) -> RationalVector {
        let dim = self.basis.first().map_or(0, RationalVector::dim);
        self.basis
            .iter()
            .zip(coeffs)
            .fold(RationalVector::zero(dim), |acc, (b, &k)| &acc + &b.scale(k))
    }
}

/// Orthogonal projection matrix onto the span of `vectors` (ambient `dim`).
pub fn projection(vectors: &[RationalVector], dim: usize) -> Matrix {
    let basis = independent_subset(vectors);
    let mut p = vec![vec![Rational::ZERO; dim]; dim];
    if basis.is_empty() {
        return p;
    }
    let ginv = invert(&gram(&basis)).expect("independent basis has invertible Gram matrix");
    // P = B G^{-1} B^T
    for (a, ba) in basis.iter().enumerate() {
        for (b, bb) in basis.iter().enumerate() {
            let g = ginv[a][b];
            if g.is_zero() {
                continue;
            }
            for i in 0..dim {
                let x = ba.coords()[i] * g;
                if x.is_zero() {
                    continue;
                }
                for j in 0..dim {
                    p[i][j] = p[i][j] + x * bb.coords()[j];
                }
            }
        }
    }
    p
}

pub fn determinant(m: &Matrix) -> Rational {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Rational::ONE;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::ZERO;
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det = det * a[c][c];
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c] / a[c][c];
            for j in c..n {
                let d = f * a[c][j];
                a[i][j] = a[i][j] - d;
            }
        }
    }
    det
}
