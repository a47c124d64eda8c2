use crate::catalog::{highest_root, simple_reflection_perms, CatalogError};
use crate::roots::RootSystem;

use super::closed::ClosedSubsystem;
use super::enumerate::orbit;
use super::SubalgebraError;

/// `{±theta} ∪ {alpha : <alpha, theta> = 0}` for the highest root `theta`:
/// the roots of the normalizer of the highest-root `Sp(1)`.
pub fn wolf_subsystem(parent: &RootSystem) -> Result<ClosedSubsystem, SubalgebraError> {
    if !parent.is_irreducible() {
        return Err(CatalogError::Reducible.into());
    }
    let theta = highest_root(parent)?;
    let neg = -&theta;
    let roots = parent
        .roots()
        .iter()
        .filter(|a| **a == theta || **a == neg || a.dot(&theta).is_zero())
        .cloned()
        .collect();
    ClosedSubsystem::new(parent, roots)
}

/// `h` is Weyl-conjugate to [`wolf_subsystem`]. The orbit of the Wolf
/// subsystem is small (one element per pair of opposite long roots), so it
/// is walked with simple reflections at any rank.
pub fn is_wolf_pair(parent: &RootSystem, h: &ClosedSubsystem) -> Result<bool, SubalgebraError> {
    let wolf = wolf_subsystem(parent)?;
    if wolf.len() != h.len() {
        return Ok(false);
    }
    let gens = simple_reflection_perms(parent);
    Ok(orbit(&gens, &wolf.indices(parent)).contains(&h.indices(parent)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_type, CartanLabel};
    use crate::roots::RationalVector;
    use crate::subalgebra::{is_closed, is_symmetric_pair, isotropy_weights};

    fn sys(s: &str) -> RootSystem {
        build_type(&s.parse().unwrap()).unwrap()
    }

    fn v(c: &[i64]) -> RationalVector {
        RationalVector::from_ints(c)
    }

    #[test]
    fn b3_wolf() {
        let b3 = sys("B3");
        let h = wolf_subsystem(&b3).unwrap();
        let mut expected = vec![v(&[1, 1, 0]), v(&[-1, -1, 0]), v(&[1, -1, 0]), v(&[-1, 1, 0]), v(&[0, 0, 1]), v(&[0, 0, -1])];
        expected.sort();
        assert_eq!(h.roots(), expected.as_slice());
        assert_eq!(h.type_spec().to_string(), "A1+A1+A1");
        assert!(is_wolf_pair(&b3, &h).unwrap());
    }

    #[test]
    fn g2_wolf_is_a1_a1() {
        let g2 = sys("G2");
        let h = wolf_subsystem(&g2).unwrap();
        assert_eq!(h.type_spec().to_string(), "A1+A1");
        assert_eq!(h.torus_corank(), 0);
    }

    #[test]
    fn a2_wolf_has_torus() {
        let a2 = sys("A2");
        let h = wolf_subsystem(&a2).unwrap();
        assert_eq!(h.len(), 2);
        assert_eq!(h.torus_corank(), 1);
    }

    #[test]
    fn non_wolf_pairs() {
        let b3 = sys("B3");
        let u3: Vec<_> = b3
            .roots()
            .iter()
            .filter(|r| r.coords().iter().filter(|c| !c.is_zero()).count() == 2
                && r.coords().iter().fold(crate::roots::Rational::ZERO, |a, &c| a + c).is_zero())
            .cloned()
            .collect();
        let h = ClosedSubsystem::new(&b3, u3).unwrap();
        assert!(!is_wolf_pair(&b3, &h).unwrap());
        let g2 = sys("G2");
        let long: Vec<_> = g2.roots().iter().filter(|r| r.norm2().numer() == 6).cloned().collect();
        let h = ClosedSubsystem::new(&g2, long).unwrap();
        assert!(!is_wolf_pair(&g2, &h).unwrap());
        assert!(wolf_subsystem(&sys("A1+A1")).is_err());
    }

    #[test]
    fn wolf_is_closed_and_symmetric() {
        for l in CartanLabel::all_up_to(8) {
            let p = build_type(&crate::catalog::TypeSpec(vec![l])).unwrap();
            let h = wolf_subsystem(&p).unwrap();
            assert!(is_closed(h.roots(), &p), "{l}");
            let hull = crate::roots::linalg::rank(h.roots());
            assert_eq!(h.torus_corank(), p.rank() - hull, "{l}");
            let w = isotropy_weights(&p, &h);
            assert!(is_symmetric_pair(&w), "{l}");
            assert!(w.is_eligible(), "{l}");
            // any Weyl conjugate is recognized
            let conj = crate::catalog::simple_reflection_perms(&p)[0].clone();
            let moved: Vec<_> = h.indices(&p).iter().map(|&i| p.roots()[conj[i as usize] as usize].clone()).collect();
            let moved = ClosedSubsystem::new(&p, moved).unwrap();
            assert!(is_wolf_pair(&p, &moved).unwrap(), "{l}");
        }
    }
}
