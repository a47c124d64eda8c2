use std::str::FromStr;

use serde::Serialize;

use crate::roots::Rational;
use crate::splitting::CaseKind;

use super::{ClassificationReport, PairReport, ReportError, Verdict, SCHEMA_VERSION};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
    Csv,
}

impl FromStr for Format {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, ReportError> {
        match s {
            "json" => Ok(Format::Json),
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            _ => Err(ReportError::Parse(format!("unknown format {s:?}"))),
        }
    }
}

/// Checks that a report's verdict agrees with its other fields.
pub fn check_pair(p: &PairReport) -> Result<(), ReportError> {
    let fail = |m: &str| Err(ReportError::Invariant(format!("{} / {}: {m}", p.g_label, p.h_description)));
    let has = !p.certificates.is_empty();
    if p.eligible != p.dim_m.is_multiple_of(4) {
        return fail("eligibility disagrees with dim_m");
    }
    if p.quaternionic_n * Rational::from_int(4) != Rational::from_int(p.dim_m as i64) {
        return fail("quaternionic_n is not dim_m / 4");
    }
    if p.certificates.iter().any(|c| 4 * c.certificate.n() != p.dim_m) {
        return fail("certificate size disagrees with dim_m");
    }
    if p.certificates.iter().any(|c| (c.case == CaseKind::SymmetricNoTriple) != p.symmetric) {
        return fail("case tag disagrees with symmetry");
    }
    if !p.symmetric && p.certificates.iter().any(|c| c.constraints.as_ref().is_some_and(|r| !r.passed())) {
        return fail("non-symmetric certificate violates the metric constraints");
    }
    let ok = match p.verdict {
        Verdict::NotEligible => !p.eligible && !has,
        Verdict::NoSplitting => p.eligible && !has,
        Verdict::WolfSpace => p.is_wolf && has,
        Verdict::So7U3 => {
            !p.symmetric && has && p.g_label == "B3" && p.certificates.iter().any(|c| c.case == CaseKind::CaseD3)
        }
        Verdict::S2xs2Type => has && p.g_label == "A1+A1" && p.h_type == "torus",
        Verdict::SymmetricCandidate => p.symmetric && !p.is_wolf && has,
        Verdict::UnconfirmedCandidate => !p.symmetric && !p.is_wolf && has,
    };
    if !ok {
        return fail(&format!("verdict {} inconsistent with fields", p.verdict));
    }
    Ok(())
}

fn check_report(r: &ClassificationReport) -> Result<(), ReportError> {
    for p in &r.pairs {
        check_pair(p)?;
    }
    let sorted = r
        .pairs
        .windows(2)
        .all(|w| (&w[0].g_label, &w[0].h_description) < (&w[1].g_label, &w[1].h_description));
    if !sorted {
        return Err(ReportError::Invariant("pairs are not sorted".into()));
    }
    Ok(())
}

const COLUMNS: [&str; 11] = [
    "g", "h", "h_type", "torus", "dim", "n", "eligible", "symmetric", "wolf", "certificates", "verdict",
];

fn row(p: &PairReport) -> [String; 11] {
    [
        p.g_label.clone(),
        p.h_description.clone(),
        p.h_type.clone(),
        p.torus_corank.to_string(),
        p.dim_m.to_string(),
        p.quaternionic_n.to_string(),
        p.eligible.to_string(),
        p.symmetric.to_string(),
        p.is_wolf.to_string(),
        p.certificates.len().to_string(),
        p.verdict.to_string(),
    ]
}

fn table(pairs: &[PairReport]) -> String {
    let rows: Vec<[String; 11]> = pairs.iter().map(row).collect();
    let mut width: Vec<usize> = COLUMNS.iter().map(|c| c.len()).collect();
    for r in &rows {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: &[String]| -> String {
        let padded: Vec<String> = cells.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(&COLUMNS.map(String::from));
    out += &line(&width.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>());
    for r in &rows {
        out += &line(r);
    }
    out
}

fn csv(pairs: &[PairReport]) -> Result<String, ReportError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| ReportError::Io(e.to_string());
    w.write_record(COLUMNS).map_err(err)?;
    for p in pairs {
        w.write_record(row(p)).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| ReportError::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

/// Renders a batch report after checking every invariant.
pub fn emit_report(r: &ClassificationReport, format: Format) -> Result<String, ReportError> {
    check_report(r)?;
    match format {
        Format::Json => Ok(json(r)),
        Format::Table => {
            let s = &r.statistics;
            Ok(format!(
                "{}\nparents {}  classes {}  pairs {}  eligible {}  positives {}\n",
                table(&r.pairs),
                s.parents,
                s.closed_subsystems,
                s.pairs_considered,
                s.eligible_pairs,
                s.positives
            ))
        }
        Format::Csv => csv(&r.pairs),
    }
}

#[derive(Serialize)]
struct VersionedPair<'a> {
    schema_version: u32,
    #[serde(flatten)]
    pair: &'a PairReport,
}

/// Renders a single pair after checking its invariants.
pub fn emit_pair(p: &PairReport, format: Format) -> Result<String, ReportError> {
    check_pair(p)?;
    let one = std::slice::from_ref(p);
    match format {
        Format::Json => Ok(json(&VersionedPair { schema_version: SCHEMA_VERSION, pair: p })),
        Format::Table => Ok(table(one)),
        Format::Csv => csv(one),
    }
}
