//! The `triad` command line.
//!
//! Exit codes: 0 on success, 1 when an identity check fails, 2 on usage or
//! domain errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::Family;
use crate::genfun::DEFAULT_ORDER;
use crate::konvalina::{c_table, s_table, value, Kind, WeightRule, WeightVector};
use crate::operators::{operator_array, OperatorArray, DEFAULT_OP_DEPTH};
use crate::parse::{parse_poly, parse_rational, parse_scalar_list};
use crate::psi::PsiSequence;
use crate::psi_ext::psi_stirling_table;
use crate::scalar::Scalar;
use crate::suites::{render, run_suite, Suite, SuiteConfig, DEFAULT_SEED};
use crate::triad::{triad_coefficients, TriadSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "triad", version, about = "Exact duality triads and Konvalina coefficients")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a coefficient triangle.
    Table(TableArgs),
    /// Evaluate a Konvalina coefficient or print its triangle.
    Konvalina(KonvalinaArgs),
    /// Run identity suites.
    Verify(VerifyArgs),
    /// Apply an operator-valued array entry to a polynomial.
    Operator(OperatorArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFamily {
    Pascal,
    Stirling1,
    Stirling2,
    Gauss,
    PsiStirling1,
    PsiStirling2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Csv,
    Json,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["family", "spec"])))]
struct TableArgs {
    #[arg(long, value_enum)]
    family: Option<TableFamily>,
    /// Builtin spec name or path to a JSON spec.
    #[arg(long)]
    spec: Option<String>,
    #[arg(long)]
    rows: usize,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
    /// Specialize q to this rational.
    #[arg(long)]
    q: Option<String>,
    #[arg(long)]
    psi: Option<String>,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("weights_source").required(true).args(["weights", "rule"])))]
struct KonvalinaArgs {
    /// Comma-separated scalars.
    #[arg(long, allow_hyphen_values = true)]
    weights: Option<String>,
    #[arg(long, requires = "n")]
    rule: Option<String>,
    /// Number of weights drawn from `--rule`.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value = "first")]
    kind: String,
    #[arg(long, required_unless_present = "table")]
    k: Option<usize>,
    #[arg(long)]
    table: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Defaults to `triad` with `--spec`, otherwise `all`.
    #[arg(long)]
    suite: Option<String>,
    #[arg(long)]
    spec: Option<String>,
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    psi: Option<String>,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    order: usize,
}

#[derive(Debug, Args)]
struct OperatorArgs {
    #[arg(long)]
    array: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, default_value = "qfact")]
    psi: String,
    #[arg(long, allow_hyphen_values = true)]
    apply: String,
    #[arg(long, default_value_t = DEFAULT_OP_DEPTH)]
    depth: usize,
}

/// Machine-readable form of `table --format json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<String>,
    pub rows: Vec<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<String>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Table(a) => table(a, out),
        Command::Konvalina(a) => konvalina(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Operator(a) => operator(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidSpec(format!("write failed: {e}"))
}

fn table(a: TableArgs, out: &mut dyn Write) -> Result<i32> {
    let psi_name = a.psi.clone();
    let psi = psi_name.as_deref().map(str::parse::<PsiSequence>).transpose()?;
    let (label, mut rows, uses_psi) = match (a.family, &a.spec) {
        (Some(TableFamily::PsiStirling1), _) | (Some(TableFamily::PsiStirling2), _) => {
            let second = a.family == Some(TableFamily::PsiStirling2);
            let psi = psi.clone().unwrap_or_else(PsiSequence::q_factorial);
            let name = if second { "psi-stirling2" } else { "psi-stirling1" };
            (Label::Family(name.into()), psi_stirling_table(&psi, second, a.rows)?, Some(psi))
        }
        (Some(f), _) => {
            let family = match f {
                TableFamily::Pascal => Family::Pascal,
                TableFamily::Stirling1 => Family::Stirling1,
                TableFamily::Stirling2 => Family::Stirling2,
                _ => Family::GaussQ,
            };
            (Label::Family(family.name().into()), family.descriptor().table(a.rows)?, None)
        }
        (None, Some(spec)) => {
            let spec = TriadSpec::resolve(spec)?;
            let rows = triad_coefficients(&spec, a.rows)?.into_rows();
            (Label::Spec(spec.label().to_string()), rows, None)
        }
        (None, None) => unreachable!("clap requires a source"),
    };
    if let Some(text) = &a.q {
        let v = parse_rational(text)?;
        for row in &mut rows {
            for cell in row.iter_mut() {
                *cell = cell.specialize(&v)?;
            }
        }
    }
    let text = match a.format {
        Format::Pretty => pretty(&rows),
        Format::Csv => csv(&rows),
        Format::Json => {
            let (family, spec) = match label {
                Label::Family(f) => (Some(f), None),
                Label::Spec(s) => (None, Some(s)),
            };
            let doc = TableJson {
                family,
                spec,
                rows,
                q: a.q.clone(),
                psi: uses_psi.map(|p| p.name().to_string()),
            };
            let mut s = serde_json::to_string(&doc).map_err(|e| Error::InvalidSpec(e.to_string()))?;
            s.push('\n');
            s
        }
    };
    out.write_all(text.as_bytes()).map_err(io)?;
    Ok(EXIT_OK)
}

enum Label {
    Family(String),
    Spec(String),
}

/// Right-aligned columns separated by two spaces.
pub fn pretty(rows: &[Vec<Scalar>]) -> String {
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(Scalar::to_string).collect()).collect();
    let columns = cells.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|j| cells.iter().filter_map(|r| r.get(j)).map(String::len).max().unwrap_or(0))
        .collect();
    let mut s = String::new();
    for row in &cells {
        let line: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
        s.push_str(&line.join("  "));
        s.push('\n');
    }
    s
}

/// One line per row; symbolic cells are double-quoted.
pub fn csv(rows: &[Vec<Scalar>]) -> String {
    let mut s = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .map(|c| {
                if c.is_symbolic() {
                    format!("\"{c}\"")
                } else {
                    c.to_string()
                }
            })
            .collect();
        s.push_str(&line.join(","));
        s.push('\n');
    }
    s
}

fn konvalina(a: KonvalinaArgs, out: &mut dyn Write) -> Result<i32> {
    let w = match (&a.weights, &a.rule) {
        (Some(text), _) => WeightVector::explicit(parse_scalar_list(text)?),
        (None, Some(rule)) => WeightVector::from_rule(rule.parse::<WeightRule>()?, a.n.unwrap_or(0)),
        (None, None) => unreachable!("clap requires weights"),
    };
    let kind: Kind = a.kind.parse()?;
    let text = if a.table {
        let rows = match kind {
            Kind::First => c_table(&w, w.len())?,
            Kind::Second => s_table(&w, a.k.unwrap_or(w.len()), w.len())?,
        };
        pretty(&rows)
    } else {
        format!("{}\n", value(&w, kind, a.k.expect("clap requires k")))
    };
    out.write_all(text.as_bytes()).map_err(io)?;
    Ok(EXIT_OK)
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let suite: Suite = match (&a.suite, &a.spec) {
        (Some(s), _) => s.parse()?,
        (None, Some(_)) => Suite::Triad,
        (None, None) => Suite::All,
    };
    let config = SuiteConfig {
        rows: a.rows,
        seed: a.seed,
        psi: a.psi.as_deref().map(str::parse).transpose()?,
        order: a.order,
        spec: a.spec.as_deref().map(TriadSpec::resolve).transpose()?,
    };
    let reports = run_suite(suite, &config)?;
    out.write_all(render(&reports).as_bytes()).map_err(io)?;
    Ok(if reports.iter().all(|r| r.passed()) {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

fn operator(a: OperatorArgs, out: &mut dyn Write) -> Result<i32> {
    let array: OperatorArray = a.array.parse()?;
    let psi: PsiSequence = a.psi.parse()?;
    let p = parse_poly(&a.apply)?;
    let op = operator_array(array, &psi, a.n, a.k, a.depth)?;
    writeln!(out, "{}", op.apply(&p)?).map_err(io)?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("triad").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn pascal_csv() {
        let (code, out, _) = call(&["table", "--family", "pascal", "--rows", "4", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().last(), Some("1,4,6,4,1"));
    }

    #[test]
    fn gauss_at_one_is_pascal() {
        let (_, gauss, _) = call(&["table", "--family", "gauss", "--rows", "3", "--q", "1", "--format", "csv"]);
        let (_, pascal, _) = call(&["table", "--family", "pascal", "--rows", "3", "--format", "csv"]);
        assert_eq!(gauss, pascal);
    }

    #[test]
    fn symbolic_cells_are_quoted() {
        let (_, out, _) = call(&["table", "--family", "gauss", "--rows", "2", "--format", "csv"]);
        assert_eq!(out, "1\n1,1\n1,\"1 + q\",1\n");
    }

    #[test]
    fn konvalina_value() {
        let (code, out, _) = call(&["konvalina", "--weights", "2,3,5", "--kind", "first", "--k", "2"]);
        assert_eq!((code, out.as_str()), (0, "31\n"));
        let (_, out, _) = call(&["konvalina", "--rule", "qpowers", "--n", "3", "--kind", "second", "--k", "2"]);
        assert_eq!(out, "1 + q + 2*q^2 + q^3 + q^4\n");
    }

    #[test]
    fn operator_image() {
        let (code, out, _) = call(&["operator", "--array", "binom", "--n", "2", "--k", "1", "--apply", "x^3"]);
        assert_eq!((code, out.as_str()), (0, "(1 + q)*x^3\n"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["table", "--rows", "3"]).0, EXIT_USAGE);
        assert_eq!(call(&["table", "--family", "lah", "--rows", "3"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--suite", "nope"]).0, EXIT_USAGE);
        let (code, _, err) = call(&["operator", "--array", "binom", "--n", "2", "--k", "1", "--apply", "x^20"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("konvalina"));
    }
}
