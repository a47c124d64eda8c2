use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;

use crate::catalog::{build_type, normalize, CartanLabel, CatalogError, Series, TypeSpec, WEYL_RANK_CAP};
use crate::roots::RootSystem;
use crate::splitting::{case_analysis, check_constraints, find_splittings, CaseKind, SplitError};
use crate::subalgebra::{is_symmetric_pair, is_wolf_pair, isotropy_weights, ClosedSubsystem};

use super::cache::cached_subsystems;
use super::spec::{class_names, describe, parse_subsystem, parse_type, type_name};
use super::{CertificateEntry, ClassificationReport, Filters, PairReport, ReportError, Statistics, Verdict, SCHEMA_VERSION};

/// Builds a parent and normalizes it when possible (G2 components stay raw).
pub fn build_parent(spec: &TypeSpec) -> Result<RootSystem, ReportError> {
    let raw = build_type(spec)?;
    match normalize(&raw) {
        Ok(n) => Ok(n),
        Err(CatalogError::G2Component) => Ok(raw),
        Err(e) => Err(e.into()),
    }
}

/// The full pipeline on one pair. Fails on `g = h` (nothing to split).
pub fn analyze_pair(
    g_label: &str,
    parent: &RootSystem,
    h: &ClosedSubsystem,
    h_description: String,
) -> Result<PairReport, ReportError> {
    let w = isotropy_weights(parent, h);
    if w.is_empty() {
        return Err(SplitError::EmptyWeights.into());
    }
    let symmetric = is_symmetric_pair(&w);
    let is_wolf = parent.is_irreducible() && is_wolf_pair(parent, h)?;
    let eligible = w.is_eligible();
    let mut certificates = Vec::new();
    if eligible {
        for cert in find_splittings(&w)? {
            let case = case_analysis(&w, &cert)?.kind;
            let constraints = match check_constraints(parent, &cert) {
                Ok(c) => Some(c),
                Err(SplitError::Reducible | SplitError::G2Input | SplitError::NotNormalized) => None,
                Err(e) => return Err(e.into()),
            };
            certificates.push(CertificateEntry { certificate: cert, case, constraints });
        }
    }
    let h_type = type_name(h);
    let verdict = if !eligible {
        Verdict::NotEligible
    } else if certificates.is_empty() {
        Verdict::NoSplitting
    } else if is_wolf {
        Verdict::WolfSpace
    } else if !symmetric && g_label == "B3" && certificates.iter().any(|c| c.case == CaseKind::CaseD3) {
        Verdict::So7U3
    } else if g_label == "A1+A1" && h.is_empty() {
        Verdict::S2xs2Type
    } else if symmetric {
        Verdict::SymmetricCandidate
    } else {
        Verdict::UnconfirmedCandidate
    };
    Ok(PairReport {
        g_label: g_label.to_string(),
        h_description,
        h_type,
        torus_corank: h.torus_corank(),
        dim_m: w.dim_m(),
        quaternionic_n: w.quaternionic_n(),
        eligible,
        symmetric,
        is_wolf,
        certificates,
        verdict,
    })
}

/// `classify_pair("B3", "A2#0")`, `classify_pair("G2", "torus")`, ...
pub fn classify_pair(g_spec: &str, h_spec: &str) -> Result<PairReport, ReportError> {
    let spec = parse_type(g_spec)?.sorted();
    let parent = build_parent(&spec)?;
    let h = parse_subsystem(&parent, h_spec)?;
    let desc = describe(&parent, &h)?;
    analyze_pair(&spec.to_string(), &parent, &h, desc)
}

/// Catalog parents admitted by `filters`, sorted by label.
pub fn parents(filters: &Filters) -> Vec<TypeSpec> {
    let simple: Vec<CartanLabel> = CartanLabel::all_up_to(filters.max_rank)
        .into_iter()
        .filter(|l| filters.series.as_ref().is_none_or(|s| s.contains(&l.series())))
        .collect();
    let mut out: Vec<TypeSpec> = simple.iter().map(|&l| TypeSpec(vec![l])).collect();
    if filters.include_products {
        // multisets of at least two labels, nondecreasing, total rank bounded
        fn extend(simple: &[CartanLabel], start: usize, left: usize, cur: &mut Vec<CartanLabel>, out: &mut Vec<TypeSpec>) {
            if cur.len() >= 2 {
                out.push(TypeSpec(cur.clone()));
            }
            for i in start..simple.len() {
                if simple[i].rank() <= left {
                    cur.push(simple[i]);
                    extend(simple, i, left - simple[i].rank(), cur, out);
                    cur.pop();
                }
            }
        }
        extend(&simple, 0, filters.max_rank, &mut Vec::new(), &mut out);
    }
    out.sort_by_key(|t| t.to_string());
    out
}

/// Every pair `(g, h)` with `g` from the catalog per `filters` and `h` a
/// Weyl class of proper closed subsystems.
pub fn classify_all(filters: &Filters, cache_dir: Option<&Path>) -> Result<ClassificationReport, ReportError> {
    if filters.max_rank > WEYL_RANK_CAP {
        return Err(CatalogError::RankCap { rank: filters.max_rank, cap: WEYL_RANK_CAP }.into());
    }
    let start = Instant::now();
    let specs = parents(filters);
    let mut stats = Statistics { parents: specs.len(), ..Statistics::default() };
    let mut jobs = Vec::new();
    for spec in &specs {
        let label = spec.to_string();
        let parent = build_parent(spec)?;
        let classes = cached_subsystems(cache_dir, &label, &parent, true)?;
        stats.closed_subsystems += classes.len();
        let names = class_names(&classes);
        for (h, name) in classes.into_iter().zip(names) {
            if h.len() == parent.len() {
                continue;
            }
            jobs.push((label.clone(), parent.clone(), h, name));
        }
    }
    stats.pairs_considered = jobs.len();
    let results: Vec<Result<PairReport, ReportError>> =
        jobs.par_iter().map(|(l, p, h, name)| analyze_pair(l, p, h, name.clone())).collect();
    let mut pairs = Vec::new();
    for r in results {
        let r = r?;
        if r.eligible {
            stats.eligible_pairs += 1;
        }
        if r.eligible || filters.include_ineligible {
            pairs.push(r);
        }
    }
    pairs.sort_by(|a, b| (&a.g_label, &a.h_description).cmp(&(&b.g_label, &b.h_description)));
    stats.positives = pairs.iter().filter(|p| p.verdict.is_positive()).count();
    Ok(ClassificationReport {
        schema_version: SCHEMA_VERSION,
        max_rank: filters.max_rank,
        filters: filters.clone(),
        statistics: stats,
        pairs,
        elapsed: start.elapsed(),
    })
}

/// Parses `B,C,G` style series lists.
pub fn parse_series(s: &str) -> Result<Vec<Series>, ReportError> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            let mut chars = t.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => Series::from_letter(c.to_ascii_uppercase()),
                _ => None,
            }
            .ok_or_else(|| ReportError::Parse(format!("unknown series {t:?}")))
        })
        .collect()
}
