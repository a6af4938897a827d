//! `fibalg` — exact verification of Fibonacci-element identities over
//! quaternion, octonion, and arbitrary structure-constant algebras.
//!
//! Exit codes: 0 all checks passed, 1 at least one verification failure,
//! 2 usage or input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fibalg_core::scalar::parse_rational;
use fibalg_core::suites::{
    default_named_algebras, run_suite, SuiteAlgebra, SuiteConfig, SuiteKind,
};
use fibalg_core::{cross, fib_element, imaginary_fib_vector, AlgebraSpec, Report};

const EXIT_VERIFICATION_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "fibalg",
    version,
    about = "Exact, zero-float verification of Fibonacci-element identities over \
             quaternions, octonions, and arbitrary finite-dimensional algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and print a report
    Verify(VerifyArgs),
    /// Inspect tables, Fibonacci elements, and cross products
    #[command(subcommand)]
    Show(ShowCommand),
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run: scalar-identities, algebra-axioms, fib-elements,
    /// cassini, cross-axioms, fib-vectors, or all
    #[arg(long, default_value = "all")]
    suite: String,

    /// Index range for element identities, e.g. -15..15
    #[arg(long = "m-range", default_value = "-15..15", allow_hyphen_values = true)]
    m_range: String,

    /// Largest partial-sum length checked
    #[arg(long = "p-max", default_value_t = 200)]
    p_max: u32,

    /// Index bound for the scalar-identity and Fibonacci-vector sweeps
    #[arg(long = "k-max", default_value_t = 30, allow_hyphen_values = true)]
    k_max: i64,

    /// Named algebra, e.g. quaternion:1,1 or octonion:2,1/2,-3
    /// (repeatable; parameters are exact fractions)
    #[arg(long = "algebra")]
    algebras: Vec<String>,

    /// Custom algebra file in the structured text format (repeatable)
    #[arg(long = "algebra-file")]
    algebra_files: Vec<PathBuf>,

    /// Seeded random algebras to include (default: 20 when no --algebra
    /// or --algebra-file is given, otherwise 0)
    #[arg(long = "random-count")]
    random_count: Option<u32>,

    /// Seed for random algebras and random sample draws
    #[arg(long)]
    seed: Option<u64>,

    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Emit wall-clock elapsed_ms in JSON reports instead of the
    /// deterministic 0 (reports stop being byte-reproducible)
    #[arg(long)]
    timings: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum ShowCommand {
    /// Print the multiplication table of an algebra
    Table {
        /// Named algebra, e.g. quaternion:1,1 or octonion:1,1,1
        #[arg(long)]
        algebra: Option<String>,
        /// Custom algebra file in the structured text format
        #[arg(long = "algebra-file")]
        algebra_file: Option<PathBuf>,
        /// Emit the structured text document instead of the grid
        #[arg(long)]
        export: bool,
    },
    /// Print the coordinates of the Fibonacci element F_m
    FibElement {
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long = "algebra-file")]
        algebra_file: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
    },
    /// Print the cross product of imaginary Fibonacci vectors F_k × F_m
    Cross {
        /// Vector dimension: 3 or 7
        #[arg(long)]
        dim: usize,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(args) => cmd_verify(&args),
        Command::Show(show) => cmd_show(&show).map(|()| ExitCode::SUCCESS),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, String> {
    let kinds: Vec<SuiteKind> = if args.suite == "all" {
        SuiteKind::ALL.to_vec()
    } else {
        vec![SuiteKind::from_name(&args.suite).ok_or_else(|| {
            format!(
                "unknown suite `{}`; expected one of all, {}",
                args.suite,
                SuiteKind::ALL.map(SuiteKind::name).join(", ")
            )
        })?]
    };
    let (m_min, m_max) = parse_range(&args.m_range)?;

    let mut algebras = Vec::new();
    for text in &args.algebras {
        algebras.push(SuiteAlgebra::trusted(parse_algebra(text)?));
    }
    for path in &args.algebra_files {
        algebras.push(SuiteAlgebra::imported(load_algebra_file(path)?));
    }
    let explicit = !algebras.is_empty();
    if !explicit {
        algebras = default_named_algebras();
    }
    let uses_algebras = kinds.iter().any(|k| {
        matches!(
            k,
            SuiteKind::AlgebraAxioms | SuiteKind::FibElements | SuiteKind::Cassini
        )
    });
    let random_count = args
        .random_count
        .unwrap_or(if explicit || !uses_algebras { 0 } else { 20 });

    let config = SuiteConfig {
        m_min,
        m_max,
        p_max: args.p_max,
        k_max: args.k_max,
        algebras,
        random_count,
        seed: args.seed,
    };
    config.validate().map_err(|e| e.to_string())?;

    let mut reports = Vec::new();
    for kind in &kinds {
        reports.push(run_suite(*kind, &config).map_err(|e| e.to_string())?);
    }

    match args.format {
        Format::Json => {
            let mut merged = Report::merged(args.suite.clone(), reports);
            if !args.timings {
                merged = merged.with_elapsed_ms(0);
            }
            let rendered = serde_json::to_string_pretty(&merged)
                .expect("reports serialize infallibly");
            println!("{rendered}");
            Ok(exit_for(&merged))
        }
        Format::Text => {
            for report in &reports {
                println!(
                    "suite {}: {} cases, {} failures ({} ms)",
                    report.suite,
                    report.cases,
                    report.failures.len(),
                    report.elapsed_ms
                );
                for failure in &report.failures {
                    let inputs = failure
                        .inputs
                        .iter()
                        .map(|(k, v)| format!("{k}={v}"))
                        .collect::<Vec<_>>()
                        .join(" ");
                    println!("  FAIL {} {}", failure.op, inputs);
                    println!("    lhs: {}", failure.lhs);
                    println!("    rhs: {}", failure.rhs);
                }
            }
            let merged = Report::merged(args.suite.clone(), reports);
            println!(
                "total: {} cases, {} failures ({} ms)",
                merged.cases,
                merged.failures.len(),
                merged.elapsed_ms
            );
            println!(
                "result: {}",
                if merged.passed() { "PASS" } else { "FAIL" }
            );
            Ok(exit_for(&merged))
        }
    }
}

fn exit_for(report: &Report) -> ExitCode {
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFICATION_FAILURE)
    }
}

fn cmd_show(show: &ShowCommand) -> Result<(), String> {
    match show {
        ShowCommand::Table {
            algebra,
            algebra_file,
            export,
        } => {
            let spec = resolve_algebra(algebra.as_deref(), algebra_file.as_deref())?;
            if *export {
                print!("{}", spec.to_text());
            } else {
                print!("{}", format_table(&spec));
            }
            Ok(())
        }
        ShowCommand::FibElement {
            algebra,
            algebra_file,
            m,
        } => {
            let spec = resolve_algebra(algebra.as_deref(), algebra_file.as_deref())?;
            println!("{}", fib_element(&spec, *m));
            Ok(())
        }
        ShowCommand::Cross { dim, k, m } => {
            let x = imaginary_fib_vector(*dim, *k).map_err(|e| e.to_string())?;
            let y = imaginary_fib_vector(*dim, *m).map_err(|e| e.to_string())?;
            let product = cross(&x, &y).map_err(|e| e.to_string())?;
            println!("{product}");
            Ok(())
        }
    }
}

/// Parses `MIN..MAX` with both bounds inclusive.
fn parse_range(text: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("bad range `{text}`; expected MIN..MAX"))?;
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|_| format!("bad range bound `{lo}`"))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|_| format!("bad range bound `{hi}`"))?;
    Ok((lo, hi))
}

/// Parses `quaternion:α,β` or `octonion:α,β,γ` with exact fraction
/// parameters.
fn parse_algebra(text: &str) -> Result<Arc<AlgebraSpec>, String> {
    let (name, param_text) = text
        .split_once(':')
        .ok_or_else(|| format!("bad algebra `{text}`; expected name:params"))?;
    let params: Vec<_> = param_text
        .split(',')
        .map(|p| parse_rational(p).map_err(|e| format!("in `{text}`: {e}")))
        .collect::<Result<_, _>>()?;
    match (name, params.len()) {
        ("quaternion", 2) => Ok(AlgebraSpec::quaternion(
            params[0].clone(),
            params[1].clone(),
        )),
        ("octonion", 3) => Ok(AlgebraSpec::octonion(
            params[0].clone(),
            params[1].clone(),
            params[2].clone(),
        )),
        ("quaternion", n) => Err(format!("quaternion takes 2 parameters, got {n}")),
        ("octonion", n) => Err(format!("octonion takes 3 parameters, got {n}")),
        (other, _) => Err(format!(
            "unknown algebra `{other}`; expected quaternion or octonion"
        )),
    }
}

fn load_algebra_file(path: &Path) -> Result<Arc<AlgebraSpec>, String> {
    let source =
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let label = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("custom")
        .to_string();
    AlgebraSpec::from_text(label, &source).map_err(|e| format!("{}: {e}", path.display()))
}

fn resolve_algebra(
    algebra: Option<&str>,
    file: Option<&Path>,
) -> Result<Arc<AlgebraSpec>, String> {
    match (algebra, file) {
        (Some(text), None) => parse_algebra(text),
        (None, Some(path)) => load_algebra_file(path),
        (Some(_), Some(_)) => Err("give either --algebra or --algebra-file, not both".into()),
        (None, None) => Err("an algebra is required: --algebra or --algebra-file".into()),
    }
}

/// Basis labels: `1, i, j, k` for dimension 4, `1, e1, …` otherwise.
fn basis_labels(dim: usize) -> Vec<String> {
    if dim == 4 {
        ["1", "i", "j", "k"].map(String::from).to_vec()
    } else {
        (0..dim)
            .map(|k| if k == 0 { "1".to_string() } else { format!("e{k}") })
            .collect()
    }
}

/// Renders `Σ_k c·e_k` as a short sum like `-2e3` or `1/2 + e4`.
fn format_cell(spec: &AlgebraSpec, i: usize, j: usize, labels: &[String]) -> String {
    let zero = fibalg_core::scalar::rat_int(0);
    let mut terms = Vec::new();
    for (k, label) in labels.iter().enumerate().take(spec.dim()) {
        let c = spec.constant(i, j, k);
        if *c == zero {
            continue;
        }
        let magnitude = c.to_string();
        let term = if k == 0 {
            magnitude
        } else if magnitude == "1" {
            label.clone()
        } else if magnitude == "-1" {
            format!("-{label}")
        } else {
            format!("{magnitude}{label}")
        };
        terms.push(term);
    }
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = terms[0].clone();
    for term in &terms[1..] {
        if let Some(rest) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(term);
        }
    }
    out
}

fn format_table(spec: &AlgebraSpec) -> String {
    let dim = spec.dim();
    let labels = basis_labels(dim);
    let mut cells = vec![vec![String::new(); dim + 1]; dim + 1];
    cells[0][0] = "·".to_string();
    for (k, label) in labels.iter().enumerate() {
        cells[0][k + 1] = label.clone();
        cells[k + 1][0] = label.clone();
    }
    for i in 0..dim {
        for j in 0..dim {
            cells[i + 1][j + 1] = format_cell(spec, i, j, &labels);
        }
    }
    let widths: Vec<usize> = (0..=dim)
        .map(|col| cells.iter().map(|row| row[col].chars().count()).max().unwrap_or(1))
        .collect();
    let mut out = format!("{}\n", spec.label());
    for row in &cells {
        let line = row
            .iter()
            .enumerate()
            .map(|(col, cell)| format!("{cell:>width$}", width = widths[col]))
            .collect::<Vec<_>>()
            .join("  ");
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
