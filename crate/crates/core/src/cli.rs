//! Command-line front end. JSON by default, `--pretty` for aligned text,
//! `--csv` for tables.
//!
//! Exit codes: 0 on success, 2 on invalid input, 3 when an internal
//! consistency check fails.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::euler::{
    chi_closed, chi_report, chi_sign, l2_profile, s_arithmetic_sign, ChiReport, EulerError,
};
use crate::ggroups::SpinGroupDescriptor;
use crate::profinite::{
    profinitely_commensurable, sweep_euler_not_profinite, sweep_theorem_frank_dim, write_csv,
    PairRow, ProfiniteError,
};
use crate::qforms::{anisotropic_dim, witt_index, DiagonalForm, Place, QformError};
use crate::verify::{self, Suite, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "spinchi",
    version,
    about = "Euler characteristics and profinite invariants of level-4 spin groups"
)]
pub struct Cli {
    #[command(flatten)]
    pub flags: Flags,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Flags {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// CSV output (tables and sweeps).
    #[arg(long, global = true)]
    pub csv: bool,
    /// Print only the factored value (`chi`).
    #[arg(long, global = true)]
    pub factored: bool,
    /// Prime bound for the truncated Euler product (`verify`).
    #[arg(long, global = true, default_value_t = 100_000)]
    pub prime_bound: u64,
    /// Largest dimension m + n (`table`, `sweep`, `verify`).
    #[arg(long, global = true, default_value_t = 10)]
    pub d_max: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Euler characteristic of Gamma_{m,n}.
    Chi { m: u32, n: u32 },
    /// Sign of the Euler characteristic.
    Sign { m: u32, n: u32 },
    /// l2-Betti, Novikov–Shubin and l2-torsion profile.
    Profile { m: u32, n: u32 },
    /// Local equivalence and commensurability of Gamma_{m,n} and Gamma_{m2,n2}.
    Compare { m: u32, n: u32, m2: u32, n2: u32 },
    /// chi for every (m, n) with 3 <= m + n <= d-max.
    Table,
    /// Witt index and anisotropic dimension of a diagonal form at a place.
    Witt {
        /// Comma-separated entries such as "1,1,1,1,-1", or "b(m,n)".
        #[arg(allow_hyphen_values = true)]
        form: String,
        /// A prime or "inf".
        place: String,
    },
    /// Sign of the Euler–Poincaré measure over Z[1/S].
    Srank {
        m: u32,
        n: u32,
        /// Primes in S, comma-separated; empty for S = {}.
        #[arg(default_value = "")]
        primes: String,
    },
    /// Local-equivalence sweep over all pairs with m + n <= d-max.
    Sweep {
        /// List only pairs whose Euler characteristics differ.
        #[arg(long)]
        euler: bool,
    },
    /// Self-checks: exactq, clifford, oracles, adelic, float, qforms, explog, sweep, all.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
}

#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Internal(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<EulerError> for CliError {
    fn from(e: EulerError) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Invalid(e.to_string())
        }
    }
}

impl From<QformError> for CliError {
    fn from(e: QformError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<ProfiniteError> for CliError {
    fn from(e: ProfiniteError) -> Self {
        match e {
            ProfiniteError::Euler(e) => e.into(),
            ProfiniteError::Io(e) => CliError::Io(e),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

fn emit_json<W: Write, T: Serialize>(out: &mut W, value: &T, pretty: bool) -> Result<(), CliError> {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .map_err(|e| CliError::Internal(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

#[derive(Debug, Serialize)]
struct WittOutput {
    witt: u32,
    aniso_dim: u32,
}

/// One row per `(m, n)`, flattened for CSV.
#[derive(Debug, Serialize)]
struct TableRow {
    m: u32,
    n: u32,
    d: u32,
    #[serde(rename = "dimX")]
    dim_x: u32,
    delta: u32,
    chi: String,
    chi_rational: String,
    sign: i8,
    case: String,
    betti_degree: Option<u32>,
    torsion_sign: i8,
}

impl From<&ChiReport> for TableRow {
    fn from(r: &ChiReport) -> Self {
        Self {
            m: r.m,
            n: r.n,
            d: r.d,
            dim_x: r.dim_x,
            delta: r.delta,
            chi: r.chi.clone(),
            chi_rational: r.chi_rational.clone(),
            sign: r.sign,
            case: r.case.to_string(),
            betti_degree: r.l2.betti_degree,
            torsion_sign: r.l2.torsion_sign,
        }
    }
}

pub fn table_reports(d_max: u32) -> Result<Vec<ChiReport>, EulerError> {
    let mut rows = Vec::new();
    for d in 3..=d_max {
        for m in 1..d {
            rows.push(chi_report(m, d - m)?);
        }
    }
    Ok(rows)
}

fn parse_primes(s: &str) -> Result<Vec<u64>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Invalid(format!("bad prime {t:?}")))
        })
        .collect()
}

pub fn execute<W: Write>(cli: &Cli, out: &mut W) -> Result<(), CliError> {
    let f = &cli.flags;
    match &cli.command {
        Command::Chi { m, n } => {
            if f.factored {
                writeln!(out, "{}", chi_closed(*m, *n)?.factored_string())?;
            } else if f.pretty {
                let r = chi_report(*m, *n)?;
                writeln!(out, "chi(Gamma_{{{},{}}}) = {}", r.m, r.n, r.chi)?;
                writeln!(out, "  exact   {}", r.chi_rational)?;
                writeln!(out, "  sign    {}", r.sign)?;
                writeln!(out, "  case    {}", r.case)?;
                writeln!(out, "  dim X   {}   delta {}", r.dim_x, r.delta)?;
            } else {
                emit_json(out, &chi_report(*m, *n)?, false)?;
            }
        }
        Command::Sign { m, n } => {
            let desc =
                SpinGroupDescriptor::new(*m, *n).map_err(|e| CliError::Invalid(e.to_string()))?;
            let sign = chi_sign(*m, *n)?;
            if f.pretty {
                writeln!(out, "sign chi(Gamma_{{{m},{n}}}) = {sign}")?;
            } else {
                emit_json(
                    out,
                    &json!({"m": m, "n": n, "delta": desc.delta(), "sign": sign}),
                    false,
                )?;
            }
        }
        Command::Profile { m, n } => {
            let p = l2_profile(*m, *n)?;
            emit_json(out, &json!({"m": m, "n": n, "l2": p}), f.pretty)?;
        }
        Command::Compare { m, n, m2, n2 } => {
            let r = profinitely_commensurable(*m, *n, *m2, *n2)?;
            if f.pretty {
                writeln!(out, "{} vs {}", r.pair[0], r.pair[1])?;
                writeln!(
                    out,
                    "  locally equivalent  {} ({})",
                    r.locally_equivalent, r.witness
                )?;
                writeln!(
                    out,
                    "  Witt indices        {} and {}",
                    r.csp_note.witt_indices[0], r.csp_note.witt_indices[1]
                )?;
                writeln!(out, "  conclusion          {}", r.csp_note.conclusion)?;
                writeln!(
                    out,
                    "  chi                 {} / {}",
                    r.chi_both[0].factored_string(),
                    r.chi_both[1].factored_string()
                )?;
                writeln!(
                    out,
                    "  signs               {} / {}",
                    r.chi_both[0].sign, r.chi_both[1].sign
                )?;
            } else {
                emit_json(out, &r, false)?;
            }
            if !r.violations().is_empty() {
                return Err(CliError::Internal(format!(
                    "violated: {:?}",
                    r.violations()
                )));
            }
        }
        Command::Table => {
            let reports = table_reports(f.d_max)?;
            if f.csv {
                let mut w = csv::Writer::from_writer(&mut *out);
                for r in &reports {
                    w.serialize(TableRow::from(r))
                        .map_err(|e| CliError::Internal(e.to_string()))?;
                }
                w.flush()?;
            } else if f.pretty {
                writeln!(
                    out,
                    "{:>3} {:>3} {:>3} {:>5} {:>5}  chi",
                    "m", "n", "d", "dimX", "sign"
                )?;
                for r in &reports {
                    writeln!(
                        out,
                        "{:>3} {:>3} {:>3} {:>5} {:>5}  {}",
                        r.m, r.n, r.d, r.dim_x, r.sign, r.chi
                    )?;
                }
            } else {
                for r in &reports {
                    emit_json(out, r, false)?;
                }
            }
        }
        Command::Witt { form, place } => {
            let form: DiagonalForm = form.parse()?;
            let place: Place = place.parse()?;
            let witt = witt_index(&form, place)?;
            let aniso = anisotropic_dim(&form, place)?;
            if f.pretty {
                writeln!(
                    out,
                    "{form} at {place}: Witt index {witt}, anisotropic dimension {aniso}"
                )?;
            } else {
                emit_json(
                    out,
                    &WittOutput {
                        witt,
                        aniso_dim: aniso,
                    },
                    false,
                )?;
            }
        }
        Command::Srank { m, n, primes } => {
            let r = s_arithmetic_sign(*m, *n, &parse_primes(primes)?)?;
            emit_json(out, &r, f.pretty)?;
        }
        Command::Sweep { euler } => {
            if *euler {
                let rows: Vec<PairRow> = sweep_euler_not_profinite(f.d_max)?
                    .iter()
                    .map(PairRow::from)
                    .collect();
                if f.csv {
                    write_csv(&rows, &mut *out)?;
                } else {
                    emit_json(out, &rows, f.pretty)?;
                }
            } else {
                let s = sweep_theorem_frank_dim(f.d_max)?;
                if f.csv {
                    write_csv(&s.locally_equivalent, &mut *out)?;
                } else {
                    emit_json(out, &s, f.pretty)?;
                }
                if !s.violations.is_empty() {
                    return Err(CliError::Internal(format!(
                        "{} violations",
                        s.violations.len()
                    )));
                }
            }
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse().map_err(CliError::Invalid)?;
            let opts = VerifyOptions {
                prime_bound: f.prime_bound,
                d_max: f.d_max.max(14),
                ..Default::default()
            };
            let results = verify::run(suite, &opts);
            if f.pretty {
                for r in &results {
                    let status = if r.passed { "PASS" } else { "FAIL" };
                    writeln!(
                        out,
                        "{status} {:<9} {:>6} checks {:>8.2}s",
                        r.suite, r.checks, r.seconds
                    )?;
                    for msg in &r.failures {
                        writeln!(out, "     {msg}")?;
                    }
                }
            } else {
                for r in &results {
                    emit_json(out, r, false)?;
                }
            }
            if results.iter().any(|r| !r.passed) {
                return Err(CliError::Internal("verification failed".into()));
            }
        }
    }
    Ok(())
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_INVALID
                }
            };
        }
    };
    match execute(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(CliError::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
        Err(CliError::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_INTERNAL
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "io error: {e}");
            EXIT_INTERNAL
        }
    }
}
