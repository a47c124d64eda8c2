use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::catalog::{identify_type, Series};
use crate::roots::{Normalization, Rational, RationalVector, RootSystem};
use crate::subalgebra::{first_sum_triple, IsotropyWeights};

use super::certificate::SplittingCertificate;
use super::search::verify_certificate;
use super::SplitError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseKind {
    SymmetricNoTriple,
    /// `beta = ±2 alpha_i ± alpha_j`
    CaseA,
    /// `beta = ±alpha_i / 3`
    CaseB,
    /// `beta = (±alpha_i ± alpha_j ± alpha_k) / 3`
    CaseC,
    /// `beta = alpha_i ± alpha_j ± alpha_k`, one alpha not orthogonal to beta
    CaseD1,
    /// `beta = alpha_i + alpha_j - alpha_k`, no alpha orthogonal to beta
    CaseD2,
    /// `beta = alpha_i + alpha_j + alpha_k`, no alpha orthogonal to beta
    CaseD3,
}

impl CaseKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseKind::SymmetricNoTriple => "symmetric_no_triple",
            CaseKind::CaseA => "case_a",
            CaseKind::CaseB => "case_b",
            CaseKind::CaseC => "case_c",
            CaseKind::CaseD1 => "case_d1",
            CaseKind::CaseD2 => "case_d2",
            CaseKind::CaseD3 => "case_d3",
        }
    }
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A weight triple `w1 + w2 = w3` and the resulting expression
/// `beta = sum coefficients[k] * alphas[indices[k]]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseWitness {
    pub triple: [RationalVector; 3],
    pub indices: Vec<usize>,
    pub coefficients: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseTag {
    pub kind: CaseKind,
    pub witness: Option<CaseWitness>,
}

/// Locates the first weight triple `w1 + w2 = w3` and sorts the relation it
/// forces on `beta` into one of the shapes of [`CaseKind`].
pub fn case_analysis(w: &IsotropyWeights, cert: &SplittingCertificate) -> Result<CaseTag, SplitError> {
    if !verify_certificate(w, cert) {
        return Err(SplitError::InvalidCertificate("certificate does not generate the weights".into()));
    }
    let Some((w1, w2, w3)) = first_sum_triple(w) else {
        return Ok(CaseTag { kind: CaseKind::SymmetricNoTriple, witness: None });
    };
    // weight -> (sign of beta, sign of alpha, alpha index)
    let beta = cert.beta();
    let mut split: HashMap<RationalVector, (i64, i64, usize)> = HashMap::new();
    for (i, a) in cert.alphas().iter().enumerate() {
        for s in [1i64, -1] {
            for t in [1i64, -1] {
                let x = &beta.scale(Rational::from_int(s)) + &a.scale(Rational::from_int(t));
                split.insert(x, (s, t, i));
            }
        }
    }
    let (s1, t1, i1) = split[&w1];
    let (s2, t2, i2) = split[&w2];
    let (s3, t3, i3) = split[&w3];
    // (s1 + s2 - s3) beta = t3 a_i3 - t1 a_i1 - t2 a_i2
    let m = s1 + s2 - s3;
    let mut coeff: Vec<i64> = vec![0; cert.n()];
    coeff[i3] += t3;
    coeff[i1] -= t1;
    coeff[i2] -= t2;
    let (indices, coefficients): (Vec<usize>, Vec<Rational>) = coeff
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0)
        .map(|(i, &c)| (i, Rational::new(c, m)))
        .unzip();
    let witness = CaseWitness { triple: [w1, w2, w3], indices, coefficients };
    let kind = classify(cert, &witness)
        .ok_or_else(|| SplitError::UnclassifiableTriple(format!("{:?}", witness.coefficients)))?;
    Ok(CaseTag { kind, witness: Some(witness) })
}

fn classify(cert: &SplittingCertificate, wit: &CaseWitness) -> Option<CaseKind> {
    let abs: Vec<Rational> = {
        let mut a: Vec<Rational> = wit.coefficients.iter().map(Rational::abs).collect();
        a.sort();
        a
    };
    let third = Rational::new(1, 3);
    match abs.as_slice() {
        [a, b] if *a == Rational::ONE && *b == Rational::from_int(2) => Some(CaseKind::CaseA),
        [a] if *a == third => Some(CaseKind::CaseB),
        [a, b, c] if *a == third && *b == third && *c == third => Some(CaseKind::CaseC),
        [a, b, c] if [a, b, c].iter().all(|x| **x == Rational::ONE) => {
            let dots: Vec<Rational> = wit.indices.iter().map(|&i| cert.beta().dot(&cert.alphas()[i])).collect();
            let positive = dots.iter().filter(|d| d.is_positive()).count();
            let minus = wit.coefficients.iter().filter(|c| c.is_negative()).count();
            match (positive, minus) {
                (3, 0) => Some(CaseKind::CaseD3),
                (3, 1) => Some(CaseKind::CaseD2),
                (1, _) => {
                    let k = dots.iter().position(|d| d.is_positive())?;
                    wit.coefficients[k].is_positive().then_some(CaseKind::CaseD1)
                }
                _ => None,
            }
        }
        _ => None,
    }
}

/// Metric values of a certificate on a parent normalized to long roots of
/// square length 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintReport {
    /// `<beta, alpha_i>` in certificate order.
    pub beta_alpha: Vec<Rational>,
    /// `|beta|²`.
    pub beta_norm2: Rational,
    /// Every `<beta, alpha_i>` lies in `{0, 1/4}`.
    pub scalars_ok: bool,
    /// `|beta|²` lies in `{1/4, 3/4, 5/4}`.
    pub beta_ok: bool,
}

impl ConstraintReport {
    pub fn passed(&self) -> bool {
        self.scalars_ok && self.beta_ok
    }
}

pub fn check_constraints(parent: &RootSystem, cert: &SplittingCertificate) -> Result<ConstraintReport, SplitError> {
    if !parent.is_irreducible() {
        return Err(SplitError::Reducible);
    }
    if identify_type(parent)?.iter().any(|l| l.series() == Series::G) {
        return Err(SplitError::G2Input);
    }
    if parent.normalization() != Normalization::LongSquared2 {
        return Err(SplitError::NotNormalized);
    }
    if cert.beta().dim() != parent.ambient_dim() {
        return Err(SplitError::InvalidCertificate("dimension differs from parent".into()));
    }
    let beta = cert.beta();
    let beta_alpha: Vec<Rational> = cert.alphas().iter().map(|a| parent.metric_inner(beta, a)).collect();
    let beta_norm2 = parent.metric_inner(beta, beta);
    let quarter = Rational::new(1, 4);
    let scalars_ok = beta_alpha.iter().all(|x| x.is_zero() || *x == quarter);
    let beta_ok = [1, 3, 5].iter().any(|&k| beta_norm2 == Rational::new(k, 4));
    Ok(ConstraintReport { beta_alpha, beta_norm2, scalars_ok, beta_ok })
}
