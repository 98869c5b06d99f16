//! Argument surface and command dispatch.

use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use evsym_core::{
    ev_multiset, partitions_of, restricted_even_cols, restricted_even_rows, CacheConfig,
    CharacterBackend, ConjectureReport, DegreeGuard, Engine, Error, EvMultiset, Partition, Result,
};

use crate::families::parse_selector;
use crate::payload::*;
use crate::render;

#[derive(Parser, Debug)]
#[command(
    name = "evsym",
    version,
    about = "Exact symmetric-function identities and symmetric group character sums"
)]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Cache directory for transition systems (overrides EVSYM_CACHE_DIR)
    #[arg(long, global = true, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Worker threads for row-parallel sums (default: available parallelism)
    #[arg(long, global = true, value_name = "K")]
    pub threads: Option<usize>,

    /// Largest symmetric-function degree any computation may touch
    #[arg(long, global = true, default_value_t = 24, value_name = "D")]
    pub degree_guard: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Schur,
    Mn,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the partitions of n, optionally restricted to even rows/columns
    #[command(group(ArgGroup::new("restriction").args(["even_rows", "even_cols"])))]
    Partitions {
        n: u32,
        /// Only partitions with at most N parts, all parts even
        #[arg(long = "even-rows", value_name = "N")]
        even_rows: Option<u32>,
        /// Only partitions with at most N parts whose conjugate has all parts even
        #[arg(long = "even-cols", value_name = "N")]
        even_cols: Option<u32>,
    },
    /// Show the multiset Ev(lambda) with multiplicities and signs
    Ev { lambda: String },
    /// Check the alternating power-sum identity for lambda; exit 0 iff equal
    Theorem { lambda: String },
    /// One character value chi^mu_lambda
    Character {
        mu: String,
        lambda: String,
        #[arg(long, value_enum, default_value_t = Method::Schur)]
        method: Method,
    },
    /// Evaluate both sides of the character-sum conjecture
    #[command(group(ArgGroup::new("range").required(true).args(["n", "all_n"])))]
    Conjecture {
        lambda: String,
        /// Evaluate at a single N
        #[arg(long = "N", value_name = "K")]
        n: Option<u32>,
        /// Sweep N from 1 until both index families saturate
        #[arg(long = "all-N")]
        all_n: bool,
        /// Shorthand for --format json
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// Shorthand for --format csv
        #[arg(long)]
        csv: bool,
    },
    /// Render a character table slice
    Chartable {
        n: u32,
        /// Row selector: all | even-rows:N,even-cols:N | ev:LAMBDA | list with ';'
        #[arg(long, value_name = "SELECTOR")]
        rows: String,
        /// Column selector, same grammar
        #[arg(long, value_name = "SELECTOR")]
        cols: String,
    },
    /// Export the Kostka matrix for one degree (optionally with its inverse)
    Kostka {
        n: u32,
        /// Materialize, verify, and include the exact inverse
        #[arg(long)]
        inverse: bool,
    },
}

pub struct CmdOutput {
    pub stdout: String,
    pub exit_code: u8,
}

impl CmdOutput {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            exit_code: 0,
        }
    }
}

/// Exit codes: 0 success/reported, 2 usage or parse, 3 resource guard,
/// 4 internal cross-check failure.
pub fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::InvalidPartition(_)
        | Error::DegreeMismatch { .. }
        | Error::TooFewVariables { .. }
        | Error::InvalidHookSize { .. } => 2,
        Error::DegreeGuardExceeded { .. } => 3,
        Error::BackendDisagreement { .. } | Error::VanishingViolation { .. } => 4,
        Error::Cache(_) => 1,
    }
}

fn json_line<T: serde::Serialize>(payload: &T) -> String {
    let mut s = serde_json::to_string(payload).expect("serializable payload");
    s.push('\n');
    s
}

pub fn run(cli: Cli) -> Result<CmdOutput> {
    let guard = DegreeGuard::new(cli.degree_guard);
    let cache = match &cli.cache_dir {
        Some(dir) => CacheConfig::with_dir(dir),
        None => CacheConfig::from_env(),
    };
    let format = cli.format;
    match cli.command {
        Command::Partitions {
            n,
            even_rows,
            even_cols,
        } => cmd_partitions(n, even_rows, even_cols, guard, format),
        Command::Ev { lambda } => cmd_ev(&lambda.parse()?, format),
        Command::Theorem { lambda } => cmd_theorem(&lambda.parse()?, guard, cache, format),
        Command::Character { mu, lambda, method } => cmd_character(
            &mu.parse()?,
            &lambda.parse()?,
            method,
            guard,
            cache,
            format,
        ),
        Command::Conjecture {
            lambda,
            n,
            all_n,
            json,
            csv,
        } => {
            let format = if json {
                Format::Json
            } else if csv {
                Format::Csv
            } else {
                format
            };
            cmd_conjecture(&lambda.parse()?, n, all_n, guard, cache, format)
        }
        Command::Chartable { n, rows, cols } => cmd_chartable(n, &rows, &cols, guard, cache, format),
        Command::Kostka { n, inverse } => cmd_kostka(n, inverse, guard, cache, format),
    }
}

fn cmd_partitions(
    n: u32,
    even_rows: Option<u32>,
    even_cols: Option<u32>,
    guard: DegreeGuard,
    format: Format,
) -> Result<CmdOutput> {
    let (family, max_length, partitions) = match (even_rows, even_cols) {
        (Some(bound), None) => ("even-rows", Some(bound), restricted_even_rows(n, bound, guard)?),
        (None, Some(bound)) => ("even-cols", Some(bound), restricted_even_cols(n, bound, guard)?),
        (None, None) => ("all", None, partitions_of(n, guard)?),
        (Some(_), Some(_)) => unreachable!("clap group forbids both"),
    };
    let stdout = match format {
        Format::Text => render::partitions_text(&partitions),
        Format::Csv => render::partitions_csv(&partitions),
        Format::Json => json_line(&PartitionsPayload {
            schema_version: SCHEMA_VERSION,
            degree: n,
            family: family.to_string(),
            max_length,
            count: partitions.len(),
            partitions,
        }),
    };
    Ok(CmdOutput::ok(stdout))
}

fn cmd_ev(lambda: &Partition, format: Format) -> Result<CmdOutput> {
    let ev = ev_multiset(lambda);
    let stdout = match format {
        Format::Text => render::ev_text(&ev),
        Format::Csv => render::ev_csv(&ev),
        Format::Json => json_line(&EvPayload {
            schema_version: SCHEMA_VERSION,
            lambda: lambda.clone(),
            entries: ev
                .entries()
                .iter()
                .map(|e| EvEntryRecord {
                    partition: e.partition.clone(),
                    multiplicity: e.multiplicity,
                    sign: e.sign(),
                })
                .collect(),
            total_multiplicity: ev.total_multiplicity(),
        }),
    };
    Ok(CmdOutput::ok(stdout))
}

fn term_records(expansion: &evsym_core::MonomialExpansion) -> Vec<TermRecord> {
    expansion
        .terms()
        .map(|(p, c)| TermRecord {
            partition: p.clone(),
            coefficient: c.to_string(),
        })
        .collect()
}

fn cmd_theorem(
    lambda: &Partition,
    guard: DegreeGuard,
    cache: CacheConfig,
    format: Format,
) -> Result<CmdOutput> {
    let engine = Engine::new(guard, CharacterBackend::Schur, cache);
    let report = engine.verify_theorem(lambda)?;
    let stdout = match format {
        Format::Text => render::theorem_text(&report),
        Format::Csv => render::theorem_csv(&report),
        Format::Json => json_line(&TheoremPayload {
            schema_version: SCHEMA_VERSION,
            lambda: lambda.clone(),
            lhs: term_records(&report.lhs),
            rhs: term_records(&report.rhs),
            equal: report.equal,
            max_part_in_support: report.max_part_in_support,
        }),
    };
    Ok(CmdOutput {
        stdout,
        exit_code: if report.equal { 0 } else { 1 },
    })
}

fn cmd_character(
    mu: &Partition,
    lambda: &Partition,
    method: Method,
    guard: DegreeGuard,
    cache: CacheConfig,
    format: Format,
) -> Result<CmdOutput> {
    let (values, agree): (Vec<(&str, BigInt)>, bool) = match method {
        Method::Schur => {
            let engine = Engine::new(guard, CharacterBackend::Schur, cache);
            (vec![("schur", engine.character(mu, lambda)?)], true)
        }
        Method::Mn => {
            let engine = Engine::new(guard, CharacterBackend::Mn, cache);
            (vec![("mn", engine.character(mu, lambda)?)], true)
        }
        Method::Both => {
            let engine = Engine::new(guard, CharacterBackend::Both, cache);
            match engine.character(mu, lambda) {
                Ok(v) => (vec![("schur", v.clone()), ("mn", v)], true),
                Err(Error::BackendDisagreement { schur, mn, .. }) => {
                    (vec![("schur", schur), ("mn", mn)], false)
                }
                Err(other) => return Err(other),
            }
        }
    };
    let method_name = match method {
        Method::Schur => "schur",
        Method::Mn => "mn",
        Method::Both => "both",
    };
    let stdout = match format {
        Format::Text => render::character_text(&values, agree),
        Format::Csv => render::character_csv(&values),
        Format::Json => {
            let find = |label: &str| {
                values
                    .iter()
                    .find(|(l, _)| *l == label)
                    .map(|(_, v)| v.to_string())
            };
            json_line(&CharacterPayload {
                schema_version: SCHEMA_VERSION,
                mu: mu.clone(),
                lambda: lambda.clone(),
                method: method_name.to_string(),
                schur: find("schur"),
                mn: find("mn"),
                value: if agree {
                    Some(values[0].1.to_string())
                } else {
                    None
                },
                agree,
            })
        }
    };
    Ok(CmdOutput {
        stdout,
        exit_code: if agree { 0 } else { 4 },
    })
}

/// Weighted per-entry cells for the table rendering of one report side.
fn conjecture_cells(
    engine: &Engine,
    ev: &EvMultiset,
    rows: &[(Partition, BigInt)],
    signed: bool,
) -> Result<render::ConjectureCells> {
    let mut columns: Vec<Partition> = ev.entries().iter().map(|e| e.partition.clone()).collect();
    columns.sort();
    let weights: std::collections::HashMap<&Partition, i64> = ev
        .entries()
        .iter()
        .map(|e| {
            let mut w = e.multiplicity as i64;
            if signed && e.sign() < 0 {
                w = -w;
            }
            (&e.partition, w)
        })
        .collect();
    let mut cells = Vec::with_capacity(rows.len());
    for (mu, _) in rows {
        let mut row = Vec::with_capacity(columns.len());
        for col in &columns {
            let chi = engine.character(mu, col)?;
            let w = weights[col];
            row.push(if signed {
                format!("{w:+}*{chi}")
            } else {
                format!("{w}*{chi}")
            });
        }
        cells.push(row);
    }
    Ok(render::ConjectureCells { columns, cells })
}

fn conjecture_body(report: &ConjectureReport) -> ConjectureBody {
    let rows = |side: &[(Partition, BigInt)]| {
        side.iter()
            .map(|(mu, sum)| ConjectureRow {
                mu: mu.clone(),
                sum: sum.to_string(),
            })
            .collect()
    };
    ConjectureBody {
        n: report.n,
        lhs: report.lhs.to_string(),
        rhs: report.rhs.to_string(),
        equal: report.equal,
        lhs_rows: rows(&report.lhs_rows),
        rhs_rows: rows(&report.rhs_rows),
    }
}

fn cmd_conjecture(
    lambda: &Partition,
    n: Option<u32>,
    all_n: bool,
    guard: DegreeGuard,
    cache: CacheConfig,
    format: Format,
) -> Result<CmdOutput> {
    let engine = Engine::new(guard, CharacterBackend::Schur, cache);
    let ns: Vec<u32> = if all_n {
        (1..=engine.saturation_n(lambda)?).collect()
    } else {
        vec![n.expect("clap group guarantees one")]
    };
    let reports: Vec<ConjectureReport> = ns
        .iter()
        .map(|&k| engine.conjecture_report(lambda, k))
        .collect::<Result<_>>()?;

    let stdout = match format {
        Format::Text => {
            let ev = ev_multiset(lambda);
            let mut out = String::new();
            for (idx, report) in reports.iter().enumerate() {
                if idx > 0 {
                    out.push('\n');
                }
                let lhs_cells = conjecture_cells(&engine, &ev, &report.lhs_rows, true)?;
                let rhs_cells = conjecture_cells(&engine, &ev, &report.rhs_rows, false)?;
                out.push_str(&render::conjecture_text(report, &lhs_cells, &rhs_cells));
            }
            out
        }
        Format::Csv => {
            let refs: Vec<&ConjectureReport> = reports.iter().collect();
            render::conjecture_csv(&refs, all_n)
        }
        Format::Json => {
            if all_n {
                json_line(&ConjectureSweepPayload {
                    schema_version: SCHEMA_VERSION,
                    lambda: lambda.clone(),
                    reports: reports.iter().map(conjecture_body).collect(),
                })
            } else {
                json_line(&ConjecturePayload {
                    schema_version: SCHEMA_VERSION,
                    lambda: lambda.clone(),
                    body: conjecture_body(&reports[0]),
                })
            }
        }
    };
    // A conjecture miss is data, not a tool failure.
    Ok(CmdOutput::ok(stdout))
}

fn cmd_chartable(
    degree: u32,
    rows_spec: &str,
    cols_spec: &str,
    guard: DegreeGuard,
    cache: CacheConfig,
    format: Format,
) -> Result<CmdOutput> {
    let rows = parse_selector(rows_spec, degree, guard)?;
    let cols = parse_selector(cols_spec, degree, guard)?;
    let engine = Engine::new(guard, CharacterBackend::Schur, cache);
    let values = engine.character_table_slice(degree, &rows, &cols)?;
    let stdout = match format {
        Format::Text => render::chartable_text(&rows, &cols, &values),
        Format::Csv => render::chartable_csv(&rows, &cols, &values),
        Format::Json => json_line(&ChartablePayload {
            schema_version: SCHEMA_VERSION,
            degree,
            rows,
            cols,
            values: values
                .iter()
                .map(|row| row.iter().map(|v| v.to_string()).collect())
                .collect(),
        }),
    };
    Ok(CmdOutput::ok(stdout))
}

fn cmd_kostka(
    degree: u32,
    inverse: bool,
    guard: DegreeGuard,
    cache: CacheConfig,
    format: Format,
) -> Result<CmdOutput> {
    let engine = Engine::new(guard, CharacterBackend::Schur, cache.clone());
    let system = engine.system(degree)?;
    if inverse {
        system.inverse();
        // Refresh the on-disk copy so the inverse is reusable.
        if cache.is_enabled() {
            system.save_to(&cache)?;
        }
    }
    let stdout = match format {
        Format::Text => render::kostka_text(&system, inverse),
        Format::Csv => render::kostka_csv(&system, inverse),
        Format::Json => {
            let to_strings = |cols: &[Vec<(usize, num_bigint::BigInt)>]| {
                cols.iter()
                    .map(|col| {
                        col.iter()
                            .map(|(i, v)| (*i, v.to_string()))
                            .collect::<Vec<_>>()
                    })
                    .collect::<Vec<_>>()
            };
            json_line(&KostkaPayload {
                schema_version: SCHEMA_VERSION,
                degree,
                order: system.order().to_vec(),
                k_columns: to_strings(system.columns()),
                k_inverse_columns: if inverse {
                    Some(to_strings(system.inverse()))
                } else {
                    None
                },
            })
        }
    };
    Ok(CmdOutput::ok(stdout))
}
