use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::roots::{Rational, RationalVector};
use crate::subalgebra::IsotropyWeights;

use super::certificate::SplittingCertificate;
use super::SplitError;

/// The generated weights of `cert` are exactly `w`.
pub fn verify_certificate(w: &IsotropyWeights, cert: &SplittingCertificate) -> bool {
    cert.generated() == w.weights()
}

/// Every splitting of `w`, canonicalized, sorted and without repeats.
///
/// For a translation `v = 2 beta` the upper half `H = {alpha + beta}` is
/// forced: along each maximal chain `x, x + v, ..., x + kv` inside `W`
/// membership in `H` alternates, starting outside `H` at the bottom and
/// ending inside at the top. So a chain of odd length rules `v` out, and
/// otherwise there is exactly one candidate to verify.
pub fn find_splittings(w: &IsotropyWeights) -> Result<Vec<SplittingCertificate>, SplitError> {
    if w.is_empty() {
        return Err(SplitError::EmptyWeights);
    }
    if !w.is_eligible() {
        return Err(SplitError::NotEligible { dim: w.dim_m() });
    }
    let ws = w.weights();
    let mut translations = BTreeSet::new();
    for a in ws {
        for b in ws {
            let v = a - b;
            if v.is_lex_positive() {
                translations.insert(v);
            }
        }
    }
    let translations: Vec<RationalVector> = translations.into_iter().collect();
    let mut out: Vec<SplittingCertificate> =
        translations.par_iter().filter_map(|v| split_along(w, v)).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

fn split_along(w: &IsotropyWeights, v: &RationalVector) -> Option<SplittingCertificate> {
    let mut upper = Vec::with_capacity(w.dim_m() / 2);
    for bottom in w.weights() {
        if w.contains(&(bottom - v)) {
            continue;
        }
        let mut x = bottom.clone();
        let mut odd = false;
        loop {
            if odd {
                upper.push(x.clone());
            }
            let next = &x + v;
            if !w.contains(&next) {
                break;
            }
            x = next;
            odd = !odd;
        }
        if !odd {
            return None;
        }
    }
    let beta = v.scale(Rational::new(1, 2));
    let a_set: Vec<RationalVector> = upper.iter().map(|h| h - &beta).collect();
    if a_set.iter().any(RationalVector::is_zero) {
        return None;
    }
    let cert = SplittingCertificate::from_symmetric(beta, &a_set)?;
    verify_certificate(w, &cert).then_some(cert)
}
