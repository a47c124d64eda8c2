use serde::{Deserialize, Serialize};

use crate::roots::{Rational, RationalVector};

use super::SplitError;

/// A presentation `W = {±alpha_i ± beta}` of a weight set.
///
/// Stored canonically: `beta` is lexicographically positive, each `alpha_i`
/// has `<beta, alpha_i> > 0` or, when orthogonal to `beta`, is
/// lexicographically positive, and the alphas are sorted. Two certificates
/// describing the same partition therefore compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawCertificate", into = "RawCertificate")]
pub struct SplittingCertificate {
    beta: RationalVector,
    alphas: Vec<RationalVector>,
}

#[derive(Serialize, Deserialize)]
struct RawCertificate {
    beta: RationalVector,
    alphas: Vec<RationalVector>,
    n: usize,
}

impl TryFrom<RawCertificate> for SplittingCertificate {
    type Error = SplitError;

    fn try_from(raw: RawCertificate) -> Result<Self, SplitError> {
        if raw.n != raw.alphas.len() {
            return Err(SplitError::InvalidCertificate(format!(
                "n = {} but {} alphas",
                raw.n,
                raw.alphas.len()
            )));
        }
        SplittingCertificate::new(raw.beta, raw.alphas)
    }
}

impl From<SplittingCertificate> for RawCertificate {
    fn from(c: SplittingCertificate) -> Self {
        let n = c.alphas.len();
        RawCertificate { beta: c.beta, alphas: c.alphas, n }
    }
}

fn orient(alpha: RationalVector, beta: &RationalVector) -> RationalVector {
    let d = alpha.dot(beta);
    if d.is_negative() || (d.is_zero() && !alpha.is_lex_positive()) {
        -&alpha
    } else {
        alpha
    }
}

impl SplittingCertificate {
    /// Validates and canonicalizes. Signs of `beta` and of each alpha are
    /// free on input.
    pub fn new(beta: RationalVector, alphas: Vec<RationalVector>) -> Result<Self, SplitError> {
        let bad = |m: &str| Err(SplitError::InvalidCertificate(m.into()));
        if alphas.is_empty() {
            return bad("no alphas");
        }
        if beta.is_zero() {
            return bad("beta is zero");
        }
        if alphas.iter().any(|a| a.dim() != beta.dim()) {
            return bad("dimension mismatch");
        }
        if alphas.iter().any(RationalVector::is_zero) {
            return bad("zero alpha");
        }
        let beta = if beta.is_lex_positive() { beta } else { -&beta };
        let mut oriented: Vec<RationalVector> = alphas.into_iter().map(|a| orient(a, &beta)).collect();
        oriented.sort();
        if oriented.windows(2).any(|p| p[0] == p[1]) {
            return bad("alphas not distinct up to sign");
        }
        let cert = SplittingCertificate { beta, alphas: oriented };
        let gen = cert.generated();
        if gen.windows(2).any(|p| p[0] == p[1]) {
            return bad("generated weights collide");
        }
        Ok(cert)
    }

    /// Builds a certificate from `beta` and the full symmetric set
    /// `A = {±alpha_i}`; `None` if `A` is not symmetric or contains zero.
    pub(crate) fn from_symmetric(beta: RationalVector, a_set: &[RationalVector]) -> Option<Self> {
        if !a_set.len().is_multiple_of(2) {
            return None;
        }
        let beta_c = if beta.is_lex_positive() { beta.clone() } else { -&beta };
        let mut reps: Vec<RationalVector> = a_set.iter().map(|a| orient(a.clone(), &beta_c)).collect();
        reps.sort();
        reps.dedup();
        if reps.len() * 2 != a_set.len() {
            return None;
        }
        SplittingCertificate::new(beta, reps).ok()
    }

    pub fn beta(&self) -> &RationalVector {
        &self.beta
    }

    pub fn alphas(&self) -> &[RationalVector] {
        &self.alphas
    }

    /// Quaternionic dimension.
    pub fn n(&self) -> usize {
        self.alphas.len()
    }

    /// The `4n` vectors `±alpha_i ± beta`, sorted.
    pub fn generated(&self) -> Vec<RationalVector> {
        let mut out = Vec::with_capacity(4 * self.alphas.len());
        let nb = -&self.beta;
        for a in &self.alphas {
            let na = -a;
            for s in [a, &na] {
                out.push(s + &self.beta);
                out.push(s + &nb);
            }
        }
        out.sort();
        out
    }

    /// Applies a linear map to `beta` and every alpha and re-canonicalizes.
    pub fn map<F>(&self, f: F) -> Result<Self, SplitError>
    where
        F: Fn(&RationalVector) -> RationalVector,
    {
        SplittingCertificate::new(f(&self.beta), self.alphas.iter().map(&f).collect())
    }

    /// Plain dot products `<beta, alpha_i>`, all nonnegative.
    pub fn beta_dots(&self) -> Vec<Rational> {
        self.alphas.iter().map(|a| a.dot(&self.beta)).collect()
    }
}
