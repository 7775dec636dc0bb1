//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 element cap exceeded.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value as Json};

use crate::analyzer::{analyze, build_semigroup, AnalysisOptions, FiniteSemigroup, SemigroupSpec};
use crate::catalog::verify_claims;
use crate::error::{Error, Result};
use crate::eval::eval_expression;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "intsemi", version, about = "Construct and analyze finite interval semigroups")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalFlags,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalFlags {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Refuse to build semigroups with more elements than this (overrides the spec's element_cap).
    #[arg(long, global = true, value_name = "N")]
    pub max_elements: Option<u64>,
    /// Cross-check the analysis by exhaustive subset search up to this order.
    #[arg(long, global = true, value_name = "N")]
    pub subset_oracle_cap: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the semigroup and list its elements.
    Construct { spec: PathBuf },
    /// Build the semigroup and print its structure report.
    Analyze {
        spec: PathBuf,
        /// Also print the Cayley table.
        #[arg(long)]
        table: bool,
        /// Print the table as CSV.
        #[arg(long, requires = "table")]
        csv: bool,
    },
    /// Print the Cayley table.
    Table {
        spec: PathBuf,
        /// Print the table as CSV.
        #[arg(long)]
        csv: bool,
    },
    /// Re-check the embedded catalog of worked-example claims.
    VerifyClaims {
        /// Only run claims whose id starts with this prefix.
        prefix: Option<String>,
    },
    /// Evaluate an expression tree inside the spec's carrier.
    Eval { spec: PathBuf, expr: PathBuf },
}

/// Parses `args` (including the program name), runs the command, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let g = &cli.global;
    let text = match &cli.command {
        Command::Construct { spec } => {
            let s = build(spec, g)?;
            let elements = s.render_set(&(0..s.order()).collect::<Vec<_>>());
            if g.json {
                pretty(&json!({"order": s.order(), "elements": elements}))
            } else {
                format!("order: {}\n{}\n", s.order(), elements.join("\n"))
            }
        }
        Command::Analyze { spec, table, csv } => {
            let s = build(spec, g)?;
            let report = analyze(&s, &options(g));
            let mut text = if g.json && *table {
                let mut v = serde_json::to_value(&report).expect("reports serialize");
                v["table"] = table_json(&s);
                pretty(&v)
            } else if g.json {
                report.to_json() + "\n"
            } else {
                report.to_text()
            };
            if *table && !g.json {
                text.push('\n');
                text.push_str(&table_text(&s, *csv)?);
            }
            text
        }
        Command::Table { spec, csv } => {
            let s = build(spec, g)?;
            if g.json {
                pretty(&table_json(&s))
            } else {
                table_text(&s, *csv)?
            }
        }
        Command::VerifyClaims { prefix } => {
            let summary = verify_claims(prefix.as_deref())?;
            let text = if g.json {
                pretty(&serde_json::to_value(&summary).expect("summaries serialize"))
            } else {
                summary.to_text()
            };
            write_out(out, &text)?;
            return Ok(if summary.all_expected() { EXIT_OK } else { EXIT_VERIFICATION });
        }
        Command::Eval { spec, expr } => {
            let spec = read_spec(spec, g)?;
            let expr: Json = serde_json::from_str(&read_file(expr)?)
                .map_err(|e| Error::InvalidInput(format!("expression {}: {e}", expr.display())))?;
            let value = eval_expression(&spec, &expr)?;
            if g.json {
                pretty(&json!({"value": value.to_string()}))
            } else {
                format!("{value}\n")
            }
        }
    };
    write_out(out, &text)?;
    Ok(EXIT_OK)
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::InvalidInput(format!("writing output: {e}")))
}

fn pretty(v: &Json) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))
}

fn read_spec(path: &Path, g: &GlobalFlags) -> Result<SemigroupSpec> {
    let mut spec = SemigroupSpec::from_json_str(&read_file(path)?)?;
    if let Some(cap) = g.max_elements {
        spec.element_cap = cap;
    }
    Ok(spec)
}

fn build(path: &Path, g: &GlobalFlags) -> Result<FiniteSemigroup> {
    build_semigroup(&read_spec(path, g)?)
}

fn options(g: &GlobalFlags) -> AnalysisOptions {
    let mut opts = AnalysisOptions::default();
    if let Some(cap) = g.subset_oracle_cap {
        opts.subset_oracle_cap = cap;
    }
    opts
}

fn labels(s: &FiniteSemigroup) -> Vec<String> {
    (0..s.order()).map(|i| s.render(i)).collect()
}

fn table_json(s: &FiniteSemigroup) -> Json {
    let names = labels(s);
    let rows: Vec<Vec<&str>> =
        s.table_rows().iter().map(|row| row.iter().map(|&c| names[c].as_str()).collect()).collect();
    json!({"elements": names, "rows": rows})
}

/// The Cayley table with row and column headers in canonical element order.
fn table_text(s: &FiniteSemigroup, csv: bool) -> Result<String> {
    let names = labels(s);
    let rows = s.table_rows();
    if csv {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::InvalidInput(format!("csv output: {e}"));
        w.write_record(std::iter::once("*").chain(names.iter().map(String::as_str))).map_err(io)?;
        for (i, row) in rows.iter().enumerate() {
            w.write_record(std::iter::once(names[i].as_str()).chain(row.iter().map(|&c| names[c].as_str())))
                .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::InvalidInput(format!("csv output: {e}")))?;
        return Ok(String::from_utf8(bytes).expect("labels are utf-8"));
    }
    let width = names.iter().map(|n| n.chars().count()).max().unwrap_or(1).max(1);
    let mut out = format!("{:>width$} |", "*");
    for n in &names {
        out.push_str(&format!(" {n:>width$}"));
    }
    out.push('\n');
    out.push_str(&"-".repeat(width + 2 + (width + 1) * names.len()));
    out.push('\n');
    for (i, row) in rows.iter().enumerate() {
        out.push_str(&format!("{:>width$} |", names[i]));
        for &c in row {
            out.push_str(&format!(" {:>width$}", names[c]));
        }
        out.push('\n');
    }
    Ok(out)
}
