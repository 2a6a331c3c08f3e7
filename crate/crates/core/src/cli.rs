//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on data errors (unreadable or malformed
//! matrix, failed self-check), 2 on usage errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::analyzer::{count_invariant_subspaces, realize_config, JordanSignature, SubspaceCount};
use crate::combinatorics::{derived_composition, partitions_of, Composition, Multipartition};
use crate::error::Error;
use crate::exactalg::{Rational, RationalMatrix};
use crate::spectrum::{count_for_config, enumerate_configs, enumerate_mn, oracle_mn};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DATA: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const DEFAULT_MAX_N: usize = 64;
pub const SELFCHECK_LIMIT: usize = 16;
const ROUNDTRIP_LIMIT: usize = 8;

#[derive(Debug, Parser)]
#[command(
    name = "invsub",
    version,
    about = "Count invariant subspaces of linear operators on R^n"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print M_n, the set of attainable invariant-subspace counts on R^n.
    Spectrum {
        n: usize,
        /// Largest n accepted.
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Print every block configuration on R^n with its count, grouped by r.
    Table {
        n: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Analyze a rational matrix read from a file.
    Analyze { path: PathBuf },
    /// Cross-check the enumeration against the brute-force oracle.
    Selfcheck {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
}

/// Everything a command reports. Exact integers are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    /// SHA-256 of the input file, for commands that read one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input_digest: Option<String>,
    pub result: Payload,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Payload {
    Spectrum {
        n: usize,
        values: Vec<String>,
    },
    Table {
        n: usize,
        groups: Vec<TableGroup>,
    },
    Analysis {
        n: usize,
        finite: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        count: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        signature: Option<JordanSignature>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        profile: Option<Vec<String>>,
    },
    Selfcheck {
        max_n: usize,
        checks: Vec<SelfcheckEntry>,
        passed: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableGroup {
    pub r: usize,
    pub s: usize,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    /// Derived composition as printed, with the 0 part kept when `r` or `s`
    /// is zero.
    pub composition: Vec<usize>,
    pub product: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfcheckEntry {
    pub n: usize,
    pub oracle_match: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roundtrip: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<bool>,
}

impl SelfcheckEntry {
    pub fn passed(&self) -> bool {
        self.oracle_match && self.roundtrip != Some(false) && self.reference != Some(false)
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Data(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Data(e.to_string())
    }
}

/// Parses `args` (program name first), runs the command and returns the exit
/// status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{}", e.render());
                EXIT_OK
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok((report, status)) => {
            let rendered = match cli.format {
                Format::Text => render_text(&report),
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
                    s.push('\n');
                    s
                }
            };
            let written = match &cli.output {
                Some(path) => fs::write(path, rendered)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout
                    .write_all(rendered.as_bytes())
                    .map_err(|e| format!("cannot write output: {e}")),
            };
            match written {
                Ok(()) => status,
                Err(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                    EXIT_DATA
                }
            }
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(stderr, "usage error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Data(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_DATA
        }
    }
}

fn execute(cli: &Cli) -> Result<(ReportDocument, i32), CliError> {
    match &cli.command {
        Command::Spectrum { n, max_n } => {
            check_n(*n, *max_n)?;
            Ok((spectrum_report(*n)?, EXIT_OK))
        }
        Command::Table { n, max_n } => {
            check_n(*n, *max_n)?;
            Ok((table_report(*n)?, EXIT_OK))
        }
        Command::Analyze { path } => {
            let bytes = fs::read(path)
                .map_err(|e| CliError::Data(format!("cannot read {}: {e}", path.display())))?;
            let text = std::str::from_utf8(&bytes)
                .map_err(|e| CliError::Data(format!("{} is not UTF-8: {e}", path.display())))?;
            let matrix = parse_matrix_document(text)?;
            let mut report = analysis_report(&matrix);
            report.command = format!("analyze {}", path.display());
            report.input_digest = Some(hex::encode(Sha256::digest(&bytes)));
            Ok((report, EXIT_OK))
        }
        Command::Selfcheck { max_n } => {
            if !(1..=SELFCHECK_LIMIT).contains(max_n) {
                return Err(CliError::Usage(format!(
                    "--max-n must be between 1 and {SELFCHECK_LIMIT}, got {max_n}"
                )));
            }
            let report = selfcheck_report(*max_n);
            let status = match &report.result {
                Payload::Selfcheck { passed: true, .. } => EXIT_OK,
                _ => EXIT_DATA,
            };
            Ok((report, status))
        }
    }
}

fn check_n(n: usize, max_n: usize) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    if n > max_n {
        return Err(CliError::Usage(format!(
            "n = {n} exceeds the maximum {max_n} (raise it with --max-n)"
        )));
    }
    Ok(())
}

pub fn spectrum_report(n: usize) -> Result<ReportDocument, Error> {
    let set = enumerate_mn(n)?;
    Ok(ReportDocument {
        command: format!("spectrum {n}"),
        input_digest: None,
        result: Payload::Spectrum {
            n,
            values: set.values.iter().map(ToString::to_string).collect(),
        },
    })
}

pub fn table_report(n: usize) -> Result<ReportDocument, Error> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut groups = Vec::new();
    for r in 0..=n / 2 {
        let s = n - 2 * r;
        let mu = Composition::new(vec![r, s])?;
        let mut rows = Vec::new();
        for complex in partitions_of(r) {
            for real in partitions_of(s) {
                let theta = Multipartition::new(mu.clone(), vec![complex.clone(), real])?;
                let derived = derived_composition(&theta)?;
                let mut composition = derived.parts().to_vec();
                if r == 0 {
                    composition.insert(0, 0);
                }
                if s == 0 {
                    composition.push(0);
                }
                let product = composition
                    .iter()
                    .fold(BigUint::from(1u32), |acc, &k| acc * (k + 1));
                rows.push(TableRow {
                    composition,
                    product: product.to_string(),
                });
            }
        }
        groups.push(TableGroup { r, s, rows });
    }
    Ok(ReportDocument {
        command: format!("table {n}"),
        input_digest: None,
        result: Payload::Table { n, groups },
    })
}

pub fn analysis_report(matrix: &RationalMatrix) -> ReportDocument {
    let n = matrix.dim();
    let result = match count_invariant_subspaces(matrix) {
        SubspaceCount::Infinite => Payload::Analysis {
            n,
            finite: false,
            count: None,
            signature: None,
            profile: None,
        },
        SubspaceCount::Finite {
            count,
            signature,
            profile,
        } => Payload::Analysis {
            n,
            finite: true,
            count: Some(count.to_string()),
            signature: Some(signature),
            profile: Some(
                profile
                    .coefficients
                    .iter()
                    .map(ToString::to_string)
                    .collect(),
            ),
        },
    };
    ReportDocument {
        command: "analyze".into(),
        input_digest: None,
        result,
    }
}

/// The value of M₄ worked out by hand.
const M4_REFERENCE: [u32; 8] = [3, 4, 5, 6, 8, 9, 12, 16];

pub fn selfcheck_report(max_n: usize) -> ReportDocument {
    let checks: Vec<SelfcheckEntry> = (1..=max_n)
        .map(|n| {
            let enumerated = enumerate_mn(n).expect("n >= 1");
            let oracle = oracle_mn(n).expect("n >= 1");
            let roundtrip = (n <= ROUNDTRIP_LIMIT).then(|| roundtrip_holds(n));
            let reference = (n == 4).then(|| {
                enumerated
                    .values
                    .iter()
                    .eq(M4_REFERENCE.map(BigUint::from).iter())
            });
            SelfcheckEntry {
                n,
                oracle_match: enumerated == oracle,
                roundtrip,
                reference,
            }
        })
        .collect();
    let passed = checks.iter().all(SelfcheckEntry::passed);
    ReportDocument {
        command: format!("selfcheck --max-n {max_n}"),
        input_digest: None,
        result: Payload::Selfcheck {
            max_n,
            checks,
            passed,
        },
    }
}

fn roundtrip_holds(n: usize) -> bool {
    enumerate_configs(n).expect("n >= 1").all(|c| {
        match count_invariant_subspaces(&realize_config(&c)) {
            SubspaceCount::Finite {
                count, signature, ..
            } => count == count_for_config(&c) && signature == JordanSignature::from(&c),
            SubspaceCount::Infinite => false,
        }
    })
}

pub fn render_text(report: &ReportDocument) -> String {
    let mut out = String::new();
    match &report.result {
        Payload::Spectrum { n, values } => {
            let _ = writeln!(out, "M_{n} = {{{}}}", values.join(", "));
        }
        Payload::Table { groups, .. } => {
            for (i, g) in groups.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                let header = format!("d_{}(mu,theta)", g.r);
                let cells: Vec<String> = g.rows.iter().map(|row| tuple(&row.composition)).collect();
                let width = cells
                    .iter()
                    .map(String::len)
                    .max()
                    .unwrap_or(0)
                    .max(header.len());
                let _ = writeln!(out, "r = {}, s = {}, mu = ({},{})", g.r, g.s, g.r, g.s);
                let _ = writeln!(out, "  {header:<width$}  N_{}", g.r);
                for (cell, row) in cells.iter().zip(&g.rows) {
                    let _ = writeln!(out, "  {cell:<width$}  {}", row.product);
                }
            }
        }
        Payload::Analysis {
            n,
            finite,
            count,
            signature,
            profile,
        } => {
            let _ = writeln!(out, "n: {n}");
            if !finite {
                out.push_str("infinite\n");
            } else {
                let _ = writeln!(out, "count: {}", count.as_deref().unwrap_or("?"));
                if let Some(sig) = signature {
                    let _ = writeln!(out, "real multiplicities: {}", braces(&sig.real));
                    let _ = writeln!(out, "complex-pair multiplicities: {}", braces(&sig.complex));
                }
                if let Some(p) = profile {
                    let _ = writeln!(out, "dimension profile: [{}]", p.join(", "));
                }
            }
        }
        Payload::Selfcheck { checks, passed, .. } => {
            for c in checks {
                let _ = write!(out, "n = {:>2}: oracle {}", c.n, verdict(c.oracle_match));
                if let Some(rt) = c.roundtrip {
                    let _ = write!(out, ", roundtrip {}", verdict(rt));
                }
                if let Some(rf) = c.reference {
                    let _ = write!(out, ", M_4 reference {}", verdict(rf));
                }
                let _ = writeln!(out, " -> {}", if c.passed() { "PASS" } else { "FAIL" });
            }
            out.push_str(if *passed {
                "all checks passed\n"
            } else {
                "some checks FAILED\n"
            });
        }
    }
    out
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "mismatch"
    }
}

fn tuple(parts: &[usize]) -> String {
    let inner: Vec<String> = parts.iter().map(ToString::to_string).collect();
    format!("({})", inner.join(","))
}

fn braces(parts: &[usize]) -> String {
    let inner: Vec<String> = parts.iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(", "))
}

/// Parses a matrix document: either plain text (one row per line,
/// whitespace-separated integers or `p/q` fractions; blank lines and lines
/// starting with `#` ignored) or a JSON object `{"n": .., "rows": [[..], ..]}`
/// whose entries are integers or strings in the same token syntax.
pub fn parse_matrix_document(text: &str) -> Result<RationalMatrix, Error> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    if text.trim_start().starts_with('{') {
        return parse_json_document(text);
    }
    let mut rows = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = rows.len() + 1;
        let entries = line
            .split_whitespace()
            .enumerate()
            .map(|(j, tok)| parse_rational(tok, row, j + 1))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(entries);
    }
    RationalMatrix::from_rows(rows)
}

#[derive(Deserialize)]
struct JsonMatrix {
    n: usize,
    rows: Vec<Vec<serde_json::Value>>,
}

fn parse_json_document(text: &str) -> Result<RationalMatrix, Error> {
    let doc: JsonMatrix = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
    if doc.rows.len() != doc.n {
        return Err(Error::Document(format!(
            "n = {} but {} rows were given",
            doc.n,
            doc.rows.len()
        )));
    }
    let rows = doc
        .rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, v)| {
                    let token = match v {
                        serde_json::Value::String(s) => s.clone(),
                        serde_json::Value::Number(num) => num.to_string(),
                        other => other.to_string(),
                    };
                    parse_rational(&token, i + 1, j + 1)
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    RationalMatrix::from_rows(rows)
}

/// An integer `p` or fraction `p/q` in base 10; `q` must be a nonzero
/// unsigned integer.
pub fn parse_rational(token: &str, row: usize, column: usize) -> Result<Rational, Error> {
    let fail = |reason: &str| Error::Parse {
        row,
        column,
        token: token.to_string(),
        reason: reason.to_string(),
    };
    let (num, den) = match token.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (token, None),
    };
    let numerator = parse_integer(num, true).ok_or_else(|| fail("invalid numerator"))?;
    let denominator = match den {
        None => BigInt::from(1),
        Some(q) => {
            let q = parse_integer(q, false).ok_or_else(|| fail("invalid denominator"))?;
            if q.is_zero() {
                return Err(fail("zero denominator"));
            }
            q
        }
    };
    Ok(Rational::new(numerator, denominator))
}

fn parse_integer(s: &str, signed: bool) -> Option<BigInt> {
    let digits = if signed {
        s.strip_prefix(['-', '+']).unwrap_or(s)
    } else {
        s
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}
