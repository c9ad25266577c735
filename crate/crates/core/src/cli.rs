//! Command-line front end. [`run`] returns the process exit code: 0 on
//! success, 1 when an identity or numeric check fails, 2 on usage and parse
//! errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::basis::BasisSymbol;
use crate::check::{run_checks, CheckConfig, Identity};
use crate::element::Element;
use crate::expr::{evaluate, evaluate_function, evaluate_numeric, parse, Expr};
use crate::novikov::{closed_bracket, closed_circ};
use crate::realization::{numeric_rank_independence, phi, vandermonde_independence, DEFAULT_SAMPLES};
use crate::MAX_INDEX;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "novikov", version, about = "Exact Novikov algebra arithmetic and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an expression, e.g. "a_2 * a_3" or "[a_1, b_2]"
    Eval {
        expr: String,
        /// Novikov parameter used by `o` and `[,]`
        #[arg(long, default_value = "b_0")]
        param: String,
        #[arg(long)]
        json: bool,
    },
    /// Sweep the algebra identities over basis and random elements
    Check {
        #[arg(long, value_enum)]
        identity: IdentityArg,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 8)]
        max_index: u64,
        #[arg(long, env = "NOVIKOV_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Print the multiplication, Novikov or bracket table on low basis vectors
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long)]
        max_index: u64,
        #[arg(long)]
        json: bool,
    },
    /// Map an expression to sinh/cosh form and cross-check it numerically
    Realize {
        expr: String,
        #[arg(long, default_value = "b_0")]
        param: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        samples: Option<Vec<f64>>,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
    /// Exact determinants showing 1, sinh x, cosh x, ..., sinh nx, cosh nx are independent
    Independence {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=64))]
        n: u32,
        /// Also check numerical rank on 2n+1 equispaced samples in [-1, 1]
        #[arg(long)]
        numeric: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum IdentityArg {
    All,
    Assoc,
    Leftsym,
    Rightcomm,
    Jacobi,
    Leibniz,
    Hamilton,
    Closedforms,
    Iso,
}

impl IdentityArg {
    fn identities(self) -> Vec<Identity> {
        match self {
            IdentityArg::All => Identity::ALL.to_vec(),
            IdentityArg::Assoc => vec![Identity::Assoc],
            IdentityArg::Leftsym => vec![Identity::LeftSym],
            IdentityArg::Rightcomm => vec![Identity::RightComm],
            IdentityArg::Jacobi => vec![Identity::Jacobi],
            IdentityArg::Leibniz => vec![Identity::Leibniz],
            IdentityArg::Hamilton => vec![Identity::Hamilton],
            IdentityArg::Closedforms => vec![Identity::ClosedForms],
            IdentityArg::Iso => vec![Identity::Iso],
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableKind {
    Circ,
    Bracket,
    Mul,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        // The reader went away, e.g. `novikov table ... | head`.
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn parse_element(text: &str, param: &Element) -> Result<Element, CliError> {
    let e = parse(text).map_err(|e| CliError::Usage(format!("in `{text}`: {e}")))?;
    evaluate(&e, param).map_err(usage)
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Eval { expr, param, json } => {
            let param = parse_element(&param, &Element::one())?;
            let value = parse_element(&expr, &param)?;
            if json {
                writeln!(out, "{}", serde_json::to_string(&value).map_err(usage)?)?;
            } else {
                writeln!(out, "{value}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Check { identity, trials, max_index, seed } => {
            if max_index > MAX_INDEX {
                return Err(CliError::Usage(format!("--max-index must be at most {MAX_INDEX}")));
            }
            let config = CheckConfig { trials, max_index, seed, ..CheckConfig::default() };
            let report = run_checks(&identity.identities(), &config);
            write!(out, "{}", report.render())?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Table { kind, max_index, json } => {
            if max_index > MAX_INDEX / 2 {
                return Err(CliError::Usage(format!("--max-index must be at most {}", MAX_INDEX / 2)));
            }
            table(kind, max_index, json, out)?;
            Ok(EXIT_OK)
        }
        Command::Realize { expr, param, samples, tol, json } => {
            let samples = samples.unwrap_or_else(|| DEFAULT_SAMPLES.to_vec());
            realize(&expr, &param, &samples, tol, json, out)
        }
        Command::Independence { n, numeric } => {
            let (odd, even) = vandermonde_independence(n as usize);
            let exact = odd != 0.into() && even != 0.into();
            writeln!(out, "n = {n}")?;
            writeln!(out, "odd-order system determinant: {odd}")?;
            writeln!(out, "even-order system determinant: {even}")?;
            writeln!(out, "exact independence: {exact}")?;
            let mut ok = exact;
            if numeric {
                let count = 2 * n as usize + 1;
                let samples: Vec<f64> = (0..count).map(|i| -1.0 + 2.0 * i as f64 / (count - 1) as f64).collect();
                let full = numeric_rank_independence(n as u64, &samples).map_err(usage)?;
                writeln!(out, "numeric full rank on {count} samples in [-1, 1]: {full}")?;
                ok &= full;
            }
            Ok(if ok { EXIT_OK } else { EXIT_FAILED })
        }
    }
}

#[derive(Serialize)]
struct SymbolJson {
    kind: &'static str,
    index: u64,
}

impl From<BasisSymbol> for SymbolJson {
    fn from(s: BasisSymbol) -> Self {
        SymbolJson { kind: s.kind().as_str(), index: s.index() }
    }
}

#[derive(Serialize)]
struct TableEntry {
    left: SymbolJson,
    right: SymbolJson,
    result: Element,
}

fn table(kind: TableKind, max_index: u64, json: bool, out: &mut dyn Write) -> std::io::Result<()> {
    let symbols = BasisSymbol::up_to(max_index);
    let mut entries = Vec::with_capacity(symbols.len() * symbols.len());
    for &s in &symbols {
        for &t in &symbols {
            let result = match kind {
                TableKind::Mul => Element::basis(s).product(&Element::basis(t)),
                TableKind::Circ => closed_circ(s, t),
                TableKind::Bracket => closed_bracket(s, t),
            };
            if json {
                entries.push(TableEntry { left: s.into(), right: t.into(), result });
            } else {
                match kind {
                    TableKind::Mul => writeln!(out, "{s} * {t} = {result}")?,
                    TableKind::Circ => writeln!(out, "{s} o {t} = {result}")?,
                    TableKind::Bracket => writeln!(out, "[{s}, {t}] = {result}")?,
                }
            }
        }
    }
    if json {
        writeln!(out, "{}", serde_json::to_string(&entries).expect("table serializes"))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct SampleJson {
    x: f64,
    exact: f64,
    pointwise: f64,
    residual: f64,
}

fn realize(
    expr: &str,
    param: &str,
    samples: &[f64],
    tol: f64,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let param_elem = parse_element(param, &Element::one())?;
    let tree: Expr = parse(expr).map_err(|e| CliError::Usage(format!("in `{expr}`: {e}")))?;
    let value = evaluate(&tree, &param_elem).map_err(usage)?;
    let function = phi(&value);
    let param_fn = phi(&param_elem);
    let transported = evaluate_function(&tree, &param_fn).map_err(usage)?;
    let structural = transported == function;

    let mut rows = Vec::with_capacity(samples.len());
    for &x in samples {
        let exact = function.eval(x).map_err(usage)?;
        let pointwise = evaluate_numeric(&tree, &param_fn, x).map_err(usage)?;
        let residual = (exact - pointwise).abs() / (1.0 + pointwise.abs());
        rows.push(SampleJson { x, exact, pointwise, residual });
    }
    let worst = rows.iter().max_by(|a, b| a.residual.total_cmp(&b.residual));
    let max_residual = worst.map_or(0.0, |r| r.residual);
    let numeric_ok = rows.iter().all(|r| r.residual <= tol);
    let passed = structural && numeric_ok;

    if json {
        let doc = json!({
            "expr": expr,
            "param": param_elem,
            "element": value,
            "function": function,
            "structural_match": structural,
            "samples": rows,
            "max_residual": max_residual,
            "witness_x": worst.map(|r| r.x),
            "tol": tol,
            "passed": passed,
        });
        writeln!(out, "{doc}")?;
    } else {
        writeln!(out, "element:  {value}")?;
        writeln!(out, "function: {function}")?;
        writeln!(out, "structural transport: {}", if structural { "exact match" } else { "MISMATCH" })?;
        for r in &rows {
            writeln!(
                out,
                "x = {:>6}: exact {:.15e} pointwise {:.15e} residual {:.3e}",
                r.x, r.exact, r.pointwise, r.residual
            )?;
        }
        match worst {
            Some(w) => writeln!(out, "max relative residual {:.3e} at x = {} (tol {tol:e})", w.residual, w.x),
            None => writeln!(out, "no samples (tol {tol:e})"),
        }?;
    }
    Ok(if passed { EXIT_OK } else { EXIT_FAILED })
}
