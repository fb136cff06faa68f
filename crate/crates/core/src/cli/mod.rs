//! Command line front end.
//!
//! Exit codes: 0 on success, 1 on validation errors, 2 when the oracle
//! disagrees with the symbolic counts.

pub mod artifacts;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::oracle::mackey::{MackeyMode, DEFAULT_SAMPLES};
use crate::oracle::orbits::DEFAULT_CEILING;
use crate::oracle::report::{default_pairs, verify_report, VerifyOptions};
use crate::polyq::{QPoly, MIN_Q};
use crate::poset::{enumerate_tm, Bound, ConductorData, Triple};
use crate::support::{dim_u, dim_v, intertwine_v, irreducibility_report};
use crate::SCHEMA;

pub use artifacts::{build_diagram, diagram_emit, table_emit, table_rows, Diagram};

/// Largest component accepted in a componentwise bound.
pub const MAX_COMPONENT: u32 = 40;
/// Largest accepted sum bound.
pub const MAX_SUM: u32 = 80;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
    Dot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Sampled,
}

#[derive(Parser, Debug)]
#[command(name = "gl3branch", version, about = "Branching of ramified GL(3) principal series to K")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Common {
    /// Conductor of chi_2.
    #[arg(long = "M", default_value_t = 0)]
    pub m: u32,
    /// Conductor of chi_3.
    #[arg(long = "N", default_value_t = 1)]
    pub n: u32,
    /// Evaluate every polynomial at this q as well (q >= 4).
    #[arg(long)]
    pub q0: Option<u64>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the artifact here instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(clap::Args, Debug, Clone)]
pub struct BoundArgs {
    /// Componentwise bound "b1,b2,b3".
    #[arg(long, conflicts_with = "sum_bound")]
    pub bound: Option<String>,
    /// Bound on c1 + c2 + c3.
    #[arg(long)]
    pub sum_bound: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate T_m under a bound.
    List {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        bound: BoundArgs,
    },
    /// dim U_c and dim V_c for one triple or a bounded T_m.
    Dims {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        bound: BoundArgs,
        #[arg(long)]
        triple: Option<String>,
    },
    /// I(V_c, V_d) with its inclusion-exclusion terms.
    Intertwine {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        c: String,
        #[arg(long)]
        d: String,
    },
    /// Hasse diagram of T_m in DOT.
    Diagram {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        bound: BoundArgs,
    },
    /// CSV table of dim V_c.
    Table {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        bound: BoundArgs,
    },
    /// Compare symbolic counts with brute force over GL(3, Z/p^n).
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 5)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        level: u32,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: u64,
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        ceiling: u128,
        /// Restrict to one pair (requires --d).
        #[arg(long, requires = "d")]
        c: Option<String>,
        #[arg(long, requires = "c")]
        d: Option<String>,
    },
}

impl Common {
    fn conductors(&self) -> Result<ConductorData> {
        ConductorData::new(self.m, self.n)
    }

    fn q0(&self) -> Result<Option<u64>> {
        match self.q0 {
            Some(q) if q < MIN_Q => Err(Error::QTooSmall(q)),
            other => Ok(other),
        }
    }
}

impl BoundArgs {
    fn resolve(&self, m: &ConductorData) -> Result<Bound> {
        match (&self.bound, self.sum_bound) {
            (Some(b), _) => {
                let t: Triple = b.parse()?;
                if t.0.iter().any(|&x| x > MAX_COMPONENT) {
                    return Err(Error::BoundTooLarge(format!(
                        "components of {t} exceed {MAX_COMPONENT}"
                    )));
                }
                Ok(Bound::ComponentwiseMax(t))
            }
            (None, Some(s)) if s > MAX_SUM => {
                Err(Error::BoundTooLarge(format!("sum bound {s} exceeds {MAX_SUM}")))
            }
            (None, Some(s)) => Ok(Bound::SumMax(s)),
            (None, None) => {
                let n = m.n + 2;
                Ok(Bound::ComponentwiseMax(Triple::new(n, n, n)))
            }
        }
    }
}

fn poly_json(p: &QPoly, q0: Option<u64>) -> Result<Value> {
    let mut v = json!({ "coeffs": p, "display": p.to_string() });
    if let Some(q) = q0 {
        v["at_q0"] = json!(p.eval(q)?.to_string());
    }
    Ok(v)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn parse_triple(s: &str) -> Result<Triple> {
    let t: Triple = s.parse()?;
    if !t.in_t() {
        return Err(Error::NotInT(t));
    }
    Ok(t)
}

fn require_tm(t: Triple, m: &ConductorData) -> Result<()> {
    if t.in_tm(m) {
        Ok(())
    } else {
        Err(Error::NotInTm(t, m.base()))
    }
}

/// Artifact text and exit code of a parsed command.
pub fn execute(cmd: &Command) -> Result<(String, i32)> {
    match cmd {
        Command::List { common, bound } => {
            let m = common.conductors()?;
            let b = bound.resolve(&m)?;
            let tm = enumerate_tm(&m, b);
            let text = match common.format.unwrap_or(Format::Json) {
                Format::Text => tm.iter().map(|t| format!("{t}\n")).collect(),
                _ => pretty(&json!({
                    "schema": SCHEMA,
                    "m": m,
                    "bound": b,
                    "count": tm.len(),
                    "triples": tm,
                })),
            };
            Ok((text, EXIT_OK))
        }
        Command::Dims { common, bound, triple } => {
            let m = common.conductors()?;
            let q0 = common.q0()?;
            let triples = match triple {
                Some(s) => {
                    let t = parse_triple(s)?;
                    require_tm(t, &m)?;
                    vec![t]
                }
                None => enumerate_tm(&m, bound.resolve(&m)?),
            };
            let mut rows = Vec::new();
            let mut text = String::new();
            for t in triples {
                let (u, v) = (dim_u(t, &m)?, dim_v(t, &m)?);
                text.push_str(&format!("{t}\tdim U = {u}\tdim V = {v}\n"));
                rows.push(json!({
                    "triple": t,
                    "dim_U": poly_json(&u, q0)?,
                    "dim_V": poly_json(&v, q0)?,
                }));
            }
            let text = match common.format.unwrap_or(Format::Json) {
                Format::Text => text,
                _ => pretty(&json!({ "schema": SCHEMA, "m": m, "rows": rows })),
            };
            Ok((text, EXIT_OK))
        }
        Command::Intertwine { common, c, d } => {
            let m = common.conductors()?;
            let q0 = common.q0()?;
            let (c, d) = (parse_triple(c)?, parse_triple(d)?);
            require_tm(c, &m)?;
            require_tm(d, &m)?;
            let report = intertwine_v(c, d, &m)?;
            let text = match common.format.unwrap_or(Format::Json) {
                Format::Text => format!("I(V_{c}, V_{d}) = {}\n", report.i_vv),
                _ => {
                    let mut v = serde_json::to_value(&report).expect("report serializes");
                    v["schema"] = json!(SCHEMA);
                    v["m"] = json!(m);
                    v["i_VV_display"] = json!(report.i_vv.to_string());
                    if let Some(q) = q0 {
                        v["i_VV_at_q0"] = json!(report.i_vv.eval(q)?.to_string());
                    }
                    if c == d {
                        v["irreducibility"] = serde_json::to_value(irreducibility_report(c, &m)?)
                            .expect("report serializes");
                    }
                    pretty(&v)
                }
            };
            Ok((text, EXIT_OK))
        }
        Command::Diagram { common, bound } => {
            let m = common.conductors()?;
            let diagram = build_diagram(&m, bound.resolve(&m)?)?;
            let text = match common.format.unwrap_or(Format::Dot) {
                Format::Json => {
                    let mut v = serde_json::to_value(&diagram).expect("diagram serializes");
                    v["schema"] = json!(SCHEMA);
                    pretty(&v)
                }
                _ => diagram.to_dot(),
            };
            Ok((text, EXIT_OK))
        }
        Command::Table { common, bound } => {
            let m = common.conductors()?;
            let q0 = common.q0()?;
            let b = bound.resolve(&m)?;
            let text = match common.format.unwrap_or(Format::Csv) {
                Format::Json => pretty(&json!({
                    "schema": SCHEMA,
                    "m": m,
                    "rows": table_rows(&m, b, q0)?,
                })),
                _ => table_emit(&m, b, q0)?,
            };
            Ok((text, EXIT_OK))
        }
        Command::Verify { common, p, level, mode, seed, samples, ceiling, c, d } => {
            let m = common.conductors()?;
            let pairs = match (c, d) {
                (Some(c), Some(d)) => {
                    let (c, d) = (parse_triple(c)?, parse_triple(d)?);
                    require_tm(c, &m)?;
                    require_tm(d, &m)?;
                    vec![(c, d)]
                }
                _ => default_pairs(&m, *level),
            };
            let opts = VerifyOptions {
                mode: match mode {
                    Mode::Exact => MackeyMode::Exact,
                    Mode::Sampled => MackeyMode::Sampled { samples: *samples, seed: *seed },
                },
                ceiling: *ceiling,
                fallback_to_sampled: true,
                fallback_seed: *seed,
            };
            let report = verify_report(*p, *level, &m, &pairs, &opts)?;
            let code = if report.all_pass { EXIT_OK } else { EXIT_MISMATCH };
            let text = pretty(&serde_json::to_value(&report).expect("report serializes"));
            Ok((text, code))
        }
    }
}

fn output_path(cmd: &Command) -> Option<&PathBuf> {
    match cmd {
        Command::List { common, .. }
        | Command::Dims { common, .. }
        | Command::Intertwine { common, .. }
        | Command::Diagram { common, .. }
        | Command::Table { common, .. }
        | Command::Verify { common, .. } => common.output.as_ref(),
    }
}

/// Runs `argv` (including the program name), writing the artifact to `out`
/// and diagnostics to `err`. Returns the exit code.
pub fn run_command_with<O: Write, E: Write>(argv: &[String], out: &mut O, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok((text, code)) => {
            let written = match output_path(&cli.command) {
                Some(path) => std::fs::write(path, &text),
                None => out.write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return EXIT_INVALID;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

/// Runs `argv` against stdout and stderr.
pub fn run_command(argv: &[String]) -> i32 {
    run_command_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
