use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use aqh_core::catalog::{highest_root, identify_type};
use aqh_core::report::{
    build_parent, cached_subsystems, class_names, classify_all, classify_pair, emit_pair, emit_report,
    parse_roots, parse_series, parse_subsystem, parse_type, type_name, Filters, Format, ReportError,
};
use aqh_core::roots::validate_root_system;
use aqh_core::splitting::{find_splittings, wolf_certificate, SplitError};
use aqh_core::subalgebra::{is_symmetric_pair, isotropy_weights, wolf_subsystem};

#[derive(Parser)]
#[command(name = "aqh", version, about = "Root-system search for homogeneous almost quaternion-Hermitian structures")]
struct Cli {
    /// Output format: json, table or csv (table and csv apply to `classify`
    /// and `subsystems`).
    #[arg(long, global = true, default_value = "json")]
    format: String,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Directory for cached subsystem enumerations.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Roots, base and highest root of a type such as B3 or A1+A1.
    Build { g: String },
    /// Check the root-system axioms on a type or a JSON root list.
    Validate { input: String },
    /// Closed subsystems of g, one per Weyl class unless --no-dedup.
    Subsystems {
        g: String,
        #[arg(long)]
        no_dedup: bool,
    },
    /// Isotropy weights of (g, h).
    Weights { g: String, h: String },
    /// All splitting certificates of (g, h).
    Split { g: String, h: String },
    /// Wolf subsystem and certificate of a simple g.
    Wolf { g: String },
    /// Classify one pair (g, h), or the whole catalog when g is omitted.
    Classify {
        g: Option<String>,
        h: Option<String>,
        #[arg(long, default_value_t = 3)]
        max_rank: usize,
        /// Comma-separated series letters, e.g. B,C,G.
        #[arg(long)]
        series: Option<String>,
        #[arg(long)]
        include_products: bool,
    },
}

enum Failure {
    Usage(String),
    Invariant(String),
}

impl From<ReportError> for Failure {
    fn from(e: ReportError) -> Self {
        match e {
            ReportError::Invariant(m) => Failure::Invariant(m),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<SplitError> for Failure {
    fn from(e: SplitError) -> Self {
        ReportError::from(e).into()
    }
}

fn pretty(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("json values serialize") + "\n"
}

fn json_only(format: Format) -> Result<(), Failure> {
    match format {
        Format::Json => Ok(()),
        _ => Err(Failure::Usage("this command only emits json".into())),
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let format: Format = cli.format.parse()?;
    let cache = cli.cache_dir.as_deref();
    match cli.command {
        Command::Build { g } => {
            json_only(format)?;
            let spec = parse_type(&g)?.sorted();
            let p = build_parent(&spec)?;
            let theta = if p.is_irreducible() { Some(highest_root(&p).map_err(ReportError::from)?) } else { None };
            Ok(pretty(json!({
                "type": spec.to_string(),
                "rank": p.rank(),
                "ambient_dim": p.ambient_dim(),
                "normalization": p.normalization(),
                "simple_roots": p.simple_roots(),
                "highest_root": theta,
                "roots": p.roots(),
            })))
        }
        Command::Validate { input } => {
            json_only(format)?;
            let roots = if input.trim_start().starts_with('[') {
                parse_roots(&input)?
            } else {
                build_parent(&parse_type(&input)?)?.roots().to_vec()
            };
            let report = validate_root_system(&roots);
            let ty = if report.is_ok() {
                aqh_core::RootSystem::new(roots)
                    .ok()
                    .and_then(|s| identify_type(&s).ok())
                    .map(|ls| ls.iter().map(|l| l.to_string()).collect::<Vec<_>>().join("+"))
            } else {
                None
            };
            let violations: Vec<_> = report
                .violations
                .iter()
                .map(|v| json!({"axiom": v.axiom, "detail": v.detail, "witness": v.witness, "occurrences": v.occurrences}))
                .collect();
            Ok(pretty(json!({
                "valid": report.is_ok(),
                "size": report.size,
                "rank": report.rank,
                "type": ty,
                "violations": violations,
            })))
        }
        Command::Subsystems { g, no_dedup } => {
            let spec = parse_type(&g)?.sorted();
            let label = spec.to_string();
            let p = build_parent(&spec)?;
            let classes = cached_subsystems(cache, &label, &p, !no_dedup)?;
            let names = class_names(&classes);
            match format {
                Format::Json => {
                    let items: Vec<_> = classes
                        .iter()
                        .zip(&names)
                        .map(|(h, name)| {
                            let name = if no_dedup { None } else { Some(name) };
                            json!({"name": name, "type": type_name(h), "torus_corank": h.torus_corank(), "roots": h.roots()})
                        })
                        .collect();
                    Ok(pretty(json!({"g": label, "dedup": !no_dedup, "count": classes.len(), "subsystems": items})))
                }
                _ => {
                    let sep = if format == Format::Csv { "," } else { "  " };
                    let mut out = format!("name{sep}type{sep}torus{sep}roots\n");
                    for (h, name) in classes.iter().zip(&names) {
                        let name = if no_dedup { "-" } else { name.as_str() };
                        out += &format!("{name}{sep}{}{sep}{}{sep}{}\n", type_name(h), h.torus_corank(), h.len());
                    }
                    Ok(out)
                }
            }
        }
        Command::Weights { g, h } => {
            json_only(format)?;
            let p = build_parent(&parse_type(&g)?.sorted())?;
            let h = parse_subsystem(&p, &h)?;
            let w = isotropy_weights(&p, &h);
            Ok(pretty(json!({
                "dim_m": w.dim_m(),
                "quaternionic_n": w.quaternionic_n(),
                "eligible": w.is_eligible(),
                "symmetric": is_symmetric_pair(&w),
                "weights": w.weights(),
            })))
        }
        Command::Split { g, h } => {
            json_only(format)?;
            let p = build_parent(&parse_type(&g)?.sorted())?;
            let h = parse_subsystem(&p, &h)?;
            let certs = find_splittings(&isotropy_weights(&p, &h))?;
            Ok(pretty(json!({"count": certs.len(), "certificates": certs})))
        }
        Command::Wolf { g } => {
            json_only(format)?;
            let p = build_parent(&parse_type(&g)?.sorted())?;
            let h = wolf_subsystem(&p).map_err(ReportError::from)?;
            let cert = match wolf_certificate(&p) {
                Ok(c) => Some(c),
                Err(SplitError::EmptyWeights) => None,
                Err(e) => return Err(e.into()),
            };
            Ok(pretty(json!({"type": type_name(&h), "torus_corank": h.torus_corank(), "roots": h.roots(), "certificate": cert})))
        }
        Command::Classify { g, h, max_rank, series, include_products } => match (g, h) {
            (Some(g), Some(h)) => Ok(emit_pair(&classify_pair(&g, &h)?, format)?),
            (Some(_), None) | (None, Some(_)) => Err(Failure::Usage("classify takes both g and h, or neither".into())),
            (None, None) => {
                let mut filters = Filters::new(max_rank);
                filters.series = series.as_deref().map(parse_series).transpose()?;
                filters.include_products = include_products;
                let report = classify_all(&filters, cache)?;
                eprintln!("elapsed {:.2?}", report.elapsed);
                Ok(emit_report(&report, format)?)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Invariant(m)) => {
            eprintln!("invariant violation: {m}");
            ExitCode::from(2)
        }
    }
}
