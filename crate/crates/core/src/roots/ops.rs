use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::rational::{Rational, RationalVector};
use super::system::{validate_root_system, Axiom, RootSystem};
use super::RootError;

/// Largest set [`reflection_closure`] will build before giving up. E8 has 240
/// roots, so anything crystallographic stays far below.
pub const CLOSURE_CAP: usize = 1000;

/// `s_alpha(v) = v - (2<alpha,v>/<alpha,alpha>) alpha`.
pub fn reflect(v: &RationalVector, alpha: &RationalVector) -> Result<RationalVector, RootError> {
    let c = cartan_int(alpha, v)?;
    Ok(v - &alpha.scale(c))
}

/// `2<alpha,beta>/<alpha,alpha>`, exactly. Integrality is not assumed.
pub fn cartan_int(alpha: &RationalVector, beta: &RationalVector) -> Result<Rational, RootError> {
    if alpha.dim() != beta.dim() {
        return Err(RootError::DimensionMismatch { left: alpha.dim(), right: beta.dim() });
    }
    if alpha.is_zero() {
        return Err(RootError::ZeroVector);
    }
    Ok(Rational::from_int(2) * alpha.dot(beta) / alpha.norm2())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairKind {
    Orthogonal,
    Ratio1,
    Ratio2,
    Ratio3,
}

/// Outcome of the inner-product trichotomy for two non-proportional roots.
/// `cartan_value` is `2<short,long>/<short,short>` (0 when orthogonal).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairClass {
    pub kind: PairKind,
    pub cartan_value: i64,
}

/// Classify a pair of roots `beta != ±alpha`: either orthogonal, or
/// `(|long|²/|short|², 2<short,long>/<short,short>)` is one of
/// `(1,±1), (2,±2), (3,±3)`.
pub fn classify_pair(alpha: &RationalVector, beta: &RationalVector) -> Result<PairClass, RootError> {
    if alpha.dim() != beta.dim() {
        return Err(RootError::DimensionMismatch { left: alpha.dim(), right: beta.dim() });
    }
    if alpha.is_zero() || beta.is_zero() {
        return Err(RootError::ZeroVector);
    }
    if alpha == beta || *alpha == -beta {
        return Err(RootError::Precondition("classify_pair needs beta != ±alpha".into()));
    }
    let ip = alpha.dot(beta);
    if ip.is_zero() {
        return Ok(PairClass { kind: PairKind::Orthogonal, cartan_value: 0 });
    }
    let (short, long) = if alpha.norm2() <= beta.norm2() { (alpha, beta) } else { (beta, alpha) };
    let ratio = long.norm2() / short.norm2();
    let cartan = Rational::from_int(2) * ip / short.norm2();
    let violation = || RootError::NormscalViolation { alpha: alpha.clone(), beta: beta.clone() };
    let (Some(r), Some(c)) = (ratio.to_integer(), cartan.to_integer()) else {
        return Err(violation());
    };
    let kind = match r {
        1 => PairKind::Ratio1,
        2 => PairKind::Ratio2,
        3 => PairKind::Ratio3,
        _ => return Err(violation()),
    };
    if c.abs() != r {
        return Err(violation());
    }
    Ok(PairClass { kind, cartan_value: c })
}

/// The vectors `beta - sgn(c) k alpha` for `k = 1..=|c|`, where
/// `c = 2<alpha,beta>/<alpha,alpha>`; each must be a root of `system`.
pub fn root_chain(
    beta: &RationalVector,
    alpha: &RationalVector,
    system: &RootSystem,
) -> Result<Vec<RationalVector>, RootError> {
    if !system.contains(alpha) || !system.contains(beta) {
        return Err(RootError::Precondition("root_chain needs alpha, beta in the system".into()));
    }
    let c = cartan_int(alpha, beta)?;
    if c.is_zero() {
        return Err(RootError::Precondition("root_chain needs <alpha,beta> != 0".into()));
    }
    let Some(c) = c.to_integer() else {
        return Err(RootError::NonIntegralCartan { value: c });
    };
    let step = alpha.scale(Rational::from_int(c.signum()));
    let mut out = Vec::with_capacity(c.unsigned_abs() as usize);
    let mut cur = beta.clone();
    for _ in 0..c.abs() {
        cur = &cur - &step;
        if !system.contains(&cur) {
            return Err(RootError::ChainBroken {
                beta: beta.clone(),
                alpha: alpha.clone(),
                missing: cur,
            });
        }
        out.push(cur.clone());
    }
    Ok(out)
}

/// Smallest superset of `seed` closed under every reflection `s_a`, `a` in
/// the set. Sorted output.
pub fn reflection_closure(seed: &[RationalVector]) -> Result<Vec<RationalVector>, RootError> {
    if seed.iter().any(RationalVector::is_zero) {
        return Err(RootError::ZeroVector);
    }
    if let Some(first) = seed.first() {
        if let Some(bad) = seed.iter().find(|v| v.dim() != first.dim()) {
            return Err(RootError::DimensionMismatch { left: first.dim(), right: bad.dim() });
        }
    }
    let mut set: BTreeSet<RationalVector> = seed.iter().cloned().collect();
    if set.len() > CLOSURE_CAP {
        return Err(RootError::GrowthCap { cap: CLOSURE_CAP });
    }
    let mut frontier: Vec<RationalVector> = set.iter().cloned().collect();
    while !frontier.is_empty() {
        let snapshot: Vec<RationalVector> = set.iter().cloned().collect();
        let mut next = Vec::new();
        // new vectors reflected through everything, and everything through new mirrors
        for f in &frontier {
            for s in &snapshot {
                for img in [reflect(s, f)?, reflect(f, s)?] {
                    if !set.contains(&img) {
                        set.insert(img.clone());
                        next.push(img);
                        if set.len() > CLOSURE_CAP {
                            return Err(RootError::GrowthCap { cap: CLOSURE_CAP });
                        }
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(set.into_iter().collect())
}

/// R1–R3 hold on the candidate itself and its reflection closure is a root
/// system.
pub fn is_root_subsystem(candidate: &[RationalVector]) -> bool {
    let report = validate_root_system(candidate);
    if report.violations.iter().any(|v| v.axiom != Axiom::R4) {
        return false;
    }
    match reflection_closure(candidate) {
        Ok(closed) => validate_root_system(&closed).is_ok(),
        Err(_) => false,
    }
}
