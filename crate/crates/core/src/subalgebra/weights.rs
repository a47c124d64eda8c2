use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::roots::{Rational, RationalVector, RootSystem};

use super::closed::ClosedSubsystem;
use super::SubalgebraError;

/// Weights of the complexified isotropy representation of an equal-rank
/// pair: `R(g) \ R(h)`. Each weight occurs once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotropyWeights {
    weights: Vec<RationalVector>,
}

impl IsotropyWeights {
    /// A bare weight set: nonzero, pairwise distinct, closed under negation.
    pub fn from_weights(mut weights: Vec<RationalVector>) -> Result<Self, SubalgebraError> {
        weights.sort();
        let before = weights.len();
        weights.dedup();
        if weights.len() != before {
            return Err(SubalgebraError::InvalidWeights("repeated weight".into()));
        }
        if weights.iter().any(RationalVector::is_zero) {
            return Err(SubalgebraError::InvalidWeights("zero weight".into()));
        }
        if weights.iter().any(|w| weights.binary_search(&-w).is_err()) {
            return Err(SubalgebraError::InvalidWeights("not closed under negation".into()));
        }
        Ok(IsotropyWeights { weights })
    }

    pub fn weights(&self) -> &[RationalVector] {
        &self.weights
    }

    pub fn contains(&self, v: &RationalVector) -> bool {
        self.weights.binary_search(v).is_ok()
    }

    /// Real dimension of `G/H`.
    pub fn dim_m(&self) -> usize {
        self.weights.len()
    }

    /// `dim_m / 4`, not necessarily an integer.
    pub fn quaternionic_n(&self) -> Rational {
        Rational::new(self.weights.len() as i64, 4)
    }

    /// Dimension divisible by 4.
    pub fn is_eligible(&self) -> bool {
        self.weights.len().is_multiple_of(4)
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

pub fn isotropy_weights(parent: &RootSystem, h: &ClosedSubsystem) -> IsotropyWeights {
    let inside: HashSet<&RationalVector> = h.roots().iter().collect();
    let weights = parent.roots().iter().filter(|r| !inside.contains(r)).cloned().collect();
    IsotropyWeights { weights }
}

/// No two weights sum to a weight, i.e. `[m, m] ⊆ h` at the weight level.
pub fn is_symmetric_pair(w: &IsotropyWeights) -> bool {
    first_sum_triple(w).is_none()
}

/// First `(w1, w2, w1 + w2)` with all three in `W`, scanning `w1 < w2` in
/// sorted order.
pub fn first_sum_triple(w: &IsotropyWeights) -> Option<(RationalVector, RationalVector, RationalVector)> {
    let ws = w.weights();
    for (i, a) in ws.iter().enumerate() {
        for b in &ws[i + 1..] {
            let s = a + b;
            if w.contains(&s) {
                return Some((a.clone(), b.clone(), s));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_type;

    fn sys(s: &str) -> RootSystem {
        build_type(&s.parse().unwrap()).unwrap()
    }

    fn v(c: &[i64]) -> RationalVector {
        RationalVector::from_ints(c)
    }

    #[test]
    fn g2_torus() {
        let g2 = sys("G2");
        let w = isotropy_weights(&g2, &ClosedSubsystem::torus(&g2));
        assert_eq!(w.dim_m(), 12);
        assert_eq!(w.quaternionic_n(), Rational::from_int(3));
        assert!(!is_symmetric_pair(&w));
    }

    #[test]
    fn b3_mod_u3() {
        let b3 = sys("B3");
        let a2: Vec<_> = b3
            .roots()
            .iter()
            .filter(|r| r.norm2() == Rational::from_int(2) && r.coords().iter().fold(Rational::ZERO, |a, &c| a + c).is_zero())
            .cloned()
            .collect();
        let h = ClosedSubsystem::new(&b3, a2).unwrap();
        assert_eq!(h.torus_corank(), 1);
        let w = isotropy_weights(&b3, &h);
        assert_eq!(w.dim_m(), 12);
        assert_eq!(w.quaternionic_n(), Rational::from_int(3));
        for r in w.weights() {
            // ±g_i or ±(g_i + g_j)
            let nz = r.coords().iter().filter(|c| !c.is_zero()).count();
            let same_sign = r.coords().iter().filter(|c| !c.is_zero()).all(|c| *c == r.coords().iter().find(|c| !c.is_zero()).copied().unwrap());
            assert!(nz == 1 || (nz == 2 && same_sign), "{r}");
        }
        assert!(!is_symmetric_pair(&w));
        assert!(w.contains(&v(&[1, 1, 0])));
    }

    #[test]
    fn b2_mod_d2() {
        let b2 = sys("B2");
        let d2 = ClosedSubsystem::new(&b2, vec![v(&[1, 1]), v(&[-1, -1]), v(&[1, -1]), v(&[-1, 1])]).unwrap();
        let w = isotropy_weights(&b2, &d2);
        assert_eq!(w.weights(), &[v(&[-1, 0]), v(&[0, -1]), v(&[0, 1]), v(&[1, 0])]);
        assert_eq!(w.quaternionic_n(), Rational::ONE);
        assert!(is_symmetric_pair(&w));
    }

    #[test]
    fn a1_torus_is_symmetric() {
        let a1 = sys("A1");
        let w = isotropy_weights(&a1, &ClosedSubsystem::torus(&a1));
        assert!(is_symmetric_pair(&w));
        assert!(!w.is_eligible());
    }

    #[test]
    fn from_weights_validation() {
        assert!(IsotropyWeights::from_weights(vec![v(&[1, 0])]).is_err());
        assert!(IsotropyWeights::from_weights(vec![v(&[0, 0])]).is_err());
        assert!(IsotropyWeights::from_weights(vec![v(&[1, 0]), v(&[1, 0]), v(&[-1, 0])]).is_err());
        assert!(IsotropyWeights::from_weights(vec![v(&[1, 0]), v(&[-1, 0])]).is_ok());
    }
}
