//! Subsystem selectors.
//!
//! ```text
//! torus          no roots (h is the maximal torus)
//! wolf           {±theta} ∪ theta^⊥ for the highest root theta
//! TYPE#k         k-th Weyl class of closed subsystems of type TYPE, counting
//!                from 0 in enumeration order (e.g. A2#0, A1+A1#1, torus#0)
//! [[..],..]      explicit JSON root list; coordinates are integers or
//!                "p/q" strings
//! ```

use serde_json::Value;

use crate::catalog::{TypeSpec, WEYL_RANK_CAP};
use crate::roots::{Rational, RationalVector, RootSystem};
use crate::subalgebra::{canonical_form, enumerate_closed_subsystems, wolf_subsystem, ClosedSubsystem};

use super::ReportError;

pub fn parse_type(s: &str) -> Result<TypeSpec, ReportError> {
    s.parse::<TypeSpec>().map_err(|e| ReportError::Parse(e.to_string()))
}

/// Display form of a subsystem's type: `torus` or labels joined by `+`.
pub fn type_name(h: &ClosedSubsystem) -> String {
    let t = h.type_spec();
    if t.is_empty() {
        "torus".into()
    } else {
        t.to_string()
    }
}

/// `TYPE#k` names for every class in `classes`, numbered per type in order.
pub fn class_names(classes: &[ClosedSubsystem]) -> Vec<String> {
    let mut counts = std::collections::HashMap::<String, usize>::new();
    classes
        .iter()
        .map(|h| {
            let t = type_name(h);
            let k = counts.entry(t.clone()).or_insert(0);
            let name = format!("{t}#{k}");
            *k += 1;
            name
        })
        .collect()
}

pub fn parse_roots(s: &str) -> Result<Vec<RationalVector>, ReportError> {
    let bad = |m: &str| ReportError::Parse(format!("root list: {m}"));
    let v: Value = serde_json::from_str(s).map_err(|e| bad(&e.to_string()))?;
    let rows = v.as_array().ok_or_else(|| bad("expected an array"))?;
    rows.iter()
        .map(|row| {
            let coords = row.as_array().ok_or_else(|| bad("expected an array of arrays"))?;
            coords
                .iter()
                .map(|c| match c {
                    Value::Number(n) => n.as_i64().map(Rational::from_int).ok_or_else(|| bad("non-integer number")),
                    Value::String(t) => t.parse::<Rational>().map_err(|e| bad(&e.to_string())),
                    _ => Err(bad("coordinate must be an integer or a \"p/q\" string")),
                })
                .collect::<Result<Vec<_>, _>>()
                .map(RationalVector::new)
        })
        .collect()
}

/// Resolves a selector against `parent`.
pub fn parse_subsystem(parent: &RootSystem, s: &str) -> Result<ClosedSubsystem, ReportError> {
    let s = s.trim();
    if s == "torus" {
        return Ok(ClosedSubsystem::torus(parent));
    }
    if s == "wolf" {
        return Ok(wolf_subsystem(parent)?);
    }
    if s.starts_with('[') {
        let roots = parse_roots(s)?;
        if let Some(r) = roots.iter().find(|r| r.dim() != parent.ambient_dim()) {
            return Err(ReportError::Parse(format!("root {r} has dimension {}, expected {}", r.dim(), parent.ambient_dim())));
        }
        return Ok(ClosedSubsystem::new(parent, roots)?);
    }
    let (ty, k) = s.split_once('#').ok_or_else(|| ReportError::Parse(format!("unknown subsystem selector {s:?}")))?;
    let k: usize = k.parse().map_err(|_| ReportError::Parse(format!("bad class index in {s:?}")))?;
    let want = if ty == "torus" { "torus".to_string() } else { parse_type(ty)?.sorted().to_string() };
    let classes = enumerate_closed_subsystems(parent, true)?;
    classes
        .into_iter()
        .filter(|h| type_name(h) == want)
        .nth(k)
        .ok_or_else(|| ReportError::Parse(format!("no class {s:?} in this parent")))
}

/// Stable name of a subsystem: its `TYPE#k` class name when the Weyl group is
/// small enough to enumerate, otherwise `wolf` or the bare type.
pub fn describe(parent: &RootSystem, h: &ClosedSubsystem) -> Result<String, ReportError> {
    if parent.rank() <= WEYL_RANK_CAP {
        let classes = enumerate_closed_subsystems(parent, true)?;
        let canon = canonical_form(parent, h)?;
        let names = class_names(&classes);
        let pos = classes
            .iter()
            .position(|c| c.indices(parent) == canon)
            .ok_or_else(|| ReportError::Invariant(format!("{} missing from the class list", type_name(h))))?;
        return Ok(names[pos].clone());
    }
    if parent.is_irreducible() && crate::subalgebra::is_wolf_pair(parent, h)? {
        return Ok("wolf".into());
    }
    Ok(type_name(h))
}
