//! Command-line surface over `isogr-core`: enumeration, order queries,
//! diagram reports, Z-data, shrinking, triple intersections, Pieri
//! tables, exports, and the selfcheck suite.
//!
//! Exit codes: 0 on success, 1 on domain errors (invalid symbols,
//! incomparable pairs, overflow), 2 on usage errors.

pub mod cache;
mod export;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use isogr_core::bruhat::{preceq, BruhatPoset};
use isogr_core::diagram::analyze;
use isogr_core::grassmannian::{Grassmannian, LieType, SchubertSymbol};
use isogr_core::ktheory::{triple_intersection, triple_intersection_unified, SpecialSchubert};
use isogr_core::pieri::{build_matrices_with, pieri_coefficient, pieri_row};
use isogr_core::projection::z_data;
use isogr_core::{selfcheck, Error};

#[derive(Parser)]
#[command(
    name = "isogr",
    version,
    about = "Exact Schubert calculus on isotropic Grassmannians"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    runtime: RuntimeArgs,
}

#[derive(Args)]
struct RuntimeArgs {
    /// Directory for poset cache files (caching is off without it)
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    /// Bypass the poset cache even when a directory is configured
    #[arg(long, global = true)]
    no_cache: bool,
    /// Cap on the number of symbols a poset build will accept
    #[arg(long, global = true, default_value_t = 100_000)]
    max_symbols: u64,
}

#[derive(Args)]
struct SpecArgs {
    /// Lie type: B, C, or D
    #[arg(long = "type", value_name = "B|C|D")]
    lie_type: String,
    /// Plane dimension m
    #[arg(long)]
    m: usize,
    /// Rank parameter n
    #[arg(long)]
    n: usize,
}

impl SpecArgs {
    fn to_spec(&self) -> Result<Grassmannian, CliError> {
        let t = LieType::from_str(&self.lie_type).map_err(CliError::Domain)?;
        Grassmannian::new(t, self.m, self.n).map_err(CliError::Domain)
    }
}

/// Comma-separated symbol elements; unsorted input is sorted, not rejected.
#[derive(Clone, Debug)]
struct SymbolArg(Vec<usize>);

impl FromStr for SymbolArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let elems = s
            .split(',')
            .map(|part| part.trim().parse::<usize>())
            .collect::<Result<Vec<usize>, _>>()
            .map_err(|e| format!("symbol elements must be integers: {e}"))?;
        if elems.is_empty() {
            return Err("symbol must have at least one element".into());
        }
        Ok(SymbolArg(elems))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// List every Schubert symbol in canonical (lexicographic) order
    Symbols {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Query T ⪯ P, or dump the whole order with covers and ranks
    Order {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long = "P")]
        p: Option<SymbolArg>,
        #[arg(long = "T")]
        t: Option<SymbolArg>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Richardson diagram report for T <= P
    Diagram {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long = "P")]
        p: SymbolArg,
        #[arg(long = "T")]
        t: SymbolArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Complete-intersection data of the projected Richardson variety
    Zdata {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long = "P")]
        p: SymbolArg,
        #[arg(long = "T")]
        t: SymbolArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Shrink P toward T, preserving the Z-data
    Shrink {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long = "P")]
        p: SymbolArg,
        #[arg(long = "T")]
        t: SymbolArg,
    },
    /// Triple intersection number, by both formula routes
    Triple {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long = "P")]
        p: SymbolArg,
        #[arg(long = "T")]
        t: SymbolArg,
        /// Codimension of the special class
        #[arg(long)]
        r: usize,
        /// Use the extra type D class of codimension k
        #[arg(long)]
        tilde: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Pieri coefficients: single value (--P --Q), one row (--P), or the
    /// full coefficient table
    Pieri {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long = "P")]
        p: Option<SymbolArg>,
        #[arg(long = "Q")]
        q: Option<SymbolArg>,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        tilde: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the invariant suites up to a symbol budget per space
    Selfcheck {
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
    },
}

enum CliError {
    Domain(Error),
    Usage(String),
    Io(std::io::Error),
    Failed,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match dispatch(cli, out, err) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
        Err(CliError::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "io error: {e}");
            1
        }
        Err(CliError::Failed) => 1,
    }
}

fn symbol(spec: &Grassmannian, arg: &SymbolArg) -> Result<SchubertSymbol, CliError> {
    spec.symbol(&arg.0).map_err(CliError::Domain)
}

fn reject_formats(format: Format, allowed: &[Format]) -> Result<(), CliError> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(CliError::Usage(
            "this format is not available for the subcommand".into(),
        ))
    }
}

fn load_poset(
    spec: &Grassmannian,
    runtime: &RuntimeArgs,
    err: &mut dyn Write,
) -> Result<BruhatPoset, CliError> {
    let dir = if runtime.no_cache {
        None
    } else {
        runtime.cache_dir.as_deref()
    };
    cache::load_or_build(spec, runtime.max_symbols as u128, dir, err).map_err(CliError::Domain)
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let runtime = &cli.runtime;
    match cli.command {
        Command::Symbols { spec, format } => {
            reject_formats(format, &[Format::Text, Format::Json])?;
            let g = spec.to_spec()?;
            let count = g.symbol_count().ok_or(Error::Overflow)?;
            if count > runtime.max_symbols as u128 {
                return Err(Error::SizeLimitExceeded {
                    symbols: count,
                    cap: runtime.max_symbols as u128,
                }
                .into());
            }
            let symbols = g.symbols();
            match format {
                Format::Json => {
                    let v: Vec<&[usize]> = symbols.iter().map(|s| s.elems()).collect();
                    writeln!(out, "{}", serde_json::to_string(&v).expect("serialize"))?;
                }
                _ => {
                    for s in &symbols {
                        writeln!(out, "{s}")?;
                    }
                }
            }
            Ok(())
        }
        Command::Order { spec, p, t, format } => {
            let g = spec.to_spec()?;
            match (p, t) {
                (Some(p), Some(t)) => {
                    reject_formats(format, &[Format::Text, Format::Json])?;
                    let p = symbol(&g, &p)?;
                    let t = symbol(&g, &t)?;
                    let le = isogr_core::bruhat::leq(&t, &p).map_err(CliError::Domain)?;
                    let prec = preceq(&g, &t, &p);
                    match format {
                        Format::Json => {
                            writeln!(out, "{}", serde_json::json!({ "leq": le, "preceq": prec }))?
                        }
                        _ => writeln!(out, "{prec}")?,
                    }
                    Ok(())
                }
                (None, None) => {
                    reject_formats(format, &[Format::Text, Format::Json, Format::Dot])?;
                    let poset = load_poset(&g, runtime, err)?;
                    match format {
                        Format::Dot => write!(out, "{}", export::dot(&poset))?,
                        Format::Json => {
                            writeln!(out, "{}", export::poset_json(&poset))?;
                        }
                        _ => {
                            writeln!(out, "symbols: {}", poset.len())?;
                            writeln!(out, "covers:")?;
                            for &(lo, hi) in poset.covers() {
                                writeln!(out, "{} < {}", poset.symbol(lo), poset.symbol(hi))?;
                            }
                        }
                    }
                    Ok(())
                }
                _ => Err(CliError::Usage(
                    "order takes both --P and --T for a query, or neither for a dump".into(),
                )),
            }
        }
        Command::Diagram { spec, p, t, format } => {
            reject_formats(format, &[Format::Text, Format::Json])?;
            let g = spec.to_spec()?;
            let p = symbol(&g, &p)?;
            let t = symbol(&g, &t)?;
            let report = analyze(&g, &p, &t).map_err(CliError::Domain)?;
            match format {
                Format::Json => writeln!(out, "{}", export::diagram_json(&report))?,
                _ => {
                    write!(out, "{}", report.render())?;
                    writeln!(out, "cuts: {}", export::list(report.cuts()))?;
                    writeln!(out, "visible: {}", export::list(report.visible_cuts()))?;
                    writeln!(
                        out,
                        "exceptional: {}",
                        export::list(report.exceptional_cuts())
                    )?;
                    writeln!(out, "zero columns: {}", export::list(report.zero_columns()))?;
                    writeln!(
                        out,
                        "lone stars: {}",
                        export::pair_list(report.lone_stars())
                    )?;
                    writeln!(out, "L: {}", export::list(report.l_set()))?;
                    writeln!(out, "Q: {}", export::list(report.q_set()))?;
                }
            }
            Ok(())
        }
        Command::Zdata { spec, p, t, format } => {
            reject_formats(format, &[Format::Text, Format::Json])?;
            let g = spec.to_spec()?;
            let p = symbol(&g, &p)?;
            let t = symbol(&g, &t)?;
            let z = z_data(&g, &p, &t).map_err(CliError::Domain)?;
            match format {
                Format::Json => writeln!(out, "{}", export::zdata_json(&z))?,
                _ => {
                    writeln!(out, "linear: {}", export::list(z.linear_vars()))?;
                    writeln!(out, "quadratic gaps: {}", export::pair_list(z.quad_gaps()))?;
                    writeln!(out, "l: {}", z.l())?;
                    writeln!(out, "q: {}", z.q())?;
                }
            }
            Ok(())
        }
        Command::Shrink { spec, p, t } => {
            let g = spec.to_spec()?;
            let p = symbol(&g, &p)?;
            let t = symbol(&g, &t)?;
            let shrunk = isogr_core::projection::shrink(&g, &p, &t).map_err(CliError::Domain)?;
            writeln!(out, "{shrunk}")?;
            Ok(())
        }
        Command::Triple {
            spec,
            p,
            t,
            r,
            tilde,
            format,
        } => {
            reject_formats(format, &[Format::Text, Format::Json])?;
            let g = spec.to_spec()?;
            let p = symbol(&g, &p)?;
            let t = symbol(&g, &t)?;
            let special = SpecialSchubert::new(&g, r, tilde).map_err(CliError::Domain)?;
            let by_type = triple_intersection(&g, &p, &t, &special).map_err(CliError::Domain)?;
            let unified =
                triple_intersection_unified(&g, &p, &t, &special).map_err(CliError::Domain)?;
            match format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::json!({
                        "per_type": by_type,
                        "unified": unified,
                        "agree": by_type == unified,
                    })
                )?,
                _ => {
                    writeln!(out, "per-type: {by_type}")?;
                    writeln!(out, "unified: {unified}")?;
                    if by_type != unified {
                        writeln!(out, "MISMATCH: formula routes disagree")?;
                    }
                }
            }
            Ok(())
        }
        Command::Pieri {
            spec,
            p,
            q,
            r,
            tilde,
            format,
        } => {
            let g = spec.to_spec()?;
            let special = SpecialSchubert::new(&g, r, tilde).map_err(CliError::Domain)?;
            match (p, q) {
                (Some(p), Some(q)) => {
                    reject_formats(format, &[Format::Text, Format::Json])?;
                    let p = symbol(&g, &p)?;
                    let q = symbol(&g, &q)?;
                    let value =
                        pieri_coefficient(&g, &p, &q, &special).map_err(CliError::Domain)?;
                    match format {
                        Format::Json => {
                            writeln!(out, "{}", serde_json::json!({ "coefficient": value }))?
                        }
                        _ => writeln!(out, "{value}")?,
                    }
                    Ok(())
                }
                (Some(p), None) => {
                    reject_formats(format, &[Format::Text, Format::Json])?;
                    let p = symbol(&g, &p)?;
                    let row = pieri_row(&g, &p, &special).map_err(CliError::Domain)?;
                    match format {
                        Format::Json => writeln!(out, "{}", export::row_json(&row))?,
                        _ => {
                            for (q, v) in row.coefficients() {
                                writeln!(out, "{q}: {v}")?;
                            }
                        }
                    }
                    Ok(())
                }
                (None, None) => {
                    reject_formats(format, &[Format::Text, Format::Json, Format::Csv])?;
                    let poset = load_poset(&g, runtime, err)?;
                    let mats = build_matrices_with(poset, &special).map_err(CliError::Domain)?;
                    match format {
                        Format::Json => writeln!(out, "{}", export::table_json(&mats))?,
                        Format::Csv => write!(out, "{}", export::table_csv(&mats))?,
                        _ => {
                            for (i, p) in mats.poset().symbols().iter().enumerate() {
                                let cells: Vec<String> = mats
                                    .poset()
                                    .symbols()
                                    .iter()
                                    .enumerate()
                                    .filter(|(j, _)| mats.coefficients().get(i, *j) != 0)
                                    .map(|(j, q)| format!("{q}={}", mats.coefficients().get(i, j)))
                                    .collect();
                                writeln!(out, "{p}: {}", cells.join(" "))?;
                            }
                        }
                    }
                    Ok(())
                }
                (None, Some(_)) => Err(CliError::Usage("pieri --Q requires --P as well".into())),
            }
        }
        Command::Selfcheck { budget } => {
            let reports = selfcheck::run(budget as u128);
            let mut checks = 0u64;
            let mut failed = 0u64;
            for rep in &reports {
                checks += rep.checks;
                if rep.passed() {
                    writeln!(out, "ok   {} ({} checks)", rep.name, rep.checks)?;
                } else {
                    failed += 1;
                    writeln!(
                        out,
                        "FAIL {} ({} checks, {} failures)",
                        rep.name,
                        rep.checks,
                        rep.failures.len() as u64 + rep.suppressed_failures
                    )?;
                    for f in &rep.failures {
                        writeln!(out, "     {f}")?;
                    }
                }
                for note in &rep.notes {
                    writeln!(out, "note: {note}")?;
                }
            }
            writeln!(
                out,
                "{} suites, {} checks, {} failed",
                reports.len(),
                checks,
                failed
            )?;
            if failed > 0 {
                return Err(CliError::Failed);
            }
            Ok(())
        }
    }
}
