//! Command-line front end: exact counts, polynomial output, enumeration
//! streams, and the identity verification suites.
//!
//! Exit codes: 0 on success (and all checks passing), 1 when a
//! verification run has failures, 2 on usage or parameter errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use asm_core::verify::{BRUTE_N_LIMIT, SIDE_K_LIMIT, SIDE_N_LIMIT};
use asm_core::{
    alpha_eval, asm_total, count_side_matrices_brute, dpp_determinant, enumerate_asms,
    enumerate_side_matrices, enumerate_triangles, parse_row, refined_counts_brute, side_formula,
    AlphaPolynomial, BottomRow, RefinedTable, Verifier, VerifyConfig,
};

/// Caps keeping every command at desk scale.
const MAX_FORMULA_N: usize = 500;
const MAX_POLY_N: usize = asm_core::operator::DEFAULT_MAX_VARS;
const MAX_BRUTE_N: usize = BRUTE_N_LIMIT;
const MAX_ENUM_ASM_N: usize = 6;
const MAX_DET_N: usize = 64;

#[derive(Parser)]
#[command(
    name = "asmcount",
    version,
    about = "Exact counts of alternating sign matrices, monotone triangles, and their generalizations"
)]
struct Cli {
    /// Output format: human-readable or line-delimited JSON records
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Plain)]
    output: OutputMode,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputMode {
    Plain,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Total number of n x n alternating sign matrices
    Count {
        #[arg(long)]
        n: usize,
        /// Count by explicit enumeration instead of the product formula
        #[arg(long)]
        brute: bool,
    },
    /// Counts refined by the column of the 1 in the first row
    Refined {
        #[arg(long)]
        n: usize,
        /// Count by explicit enumeration instead of the product formula
        #[arg(long)]
        brute: bool,
    },
    /// Number of monotone triangles with the given bottom row (any
    /// integer row is accepted; non-increasing rows evaluate the
    /// polynomial extension)
    Alpha {
        /// Comma-separated integers, e.g. 1,2,4
        #[arg(long)]
        row: String,
    },
    /// The counting polynomial for n rows, in canonical text form
    AlphaPoly {
        #[arg(long)]
        n: usize,
    },
    /// Stream monotone triangles (--row) or sign matrices (--n, with
    /// --k for the rectangular generalization)
    Enumerate {
        /// Bottom row for monotone triangles
        #[arg(long, conflicts_with_all = ["n", "k"])]
        row: Option<String>,
        /// Matrix size for alternating sign matrices
        #[arg(long)]
        n: Option<usize>,
        /// Column count for the rectangular generalization
        #[arg(long, requires = "n")]
        k: Option<usize>,
    },
    /// Count of the n x k rectangular generalization
    Side {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Count by explicit enumeration instead of the product formula
        #[arg(long)]
        brute: bool,
    },
    /// Determinant counting descending plane partitions with no part
    /// greater than n - 1
    Dpp {
        #[arg(long)]
        n: usize,
    },
    /// Run the exact identity verification suites
    Verify {
        /// Restrict to specific suites (repeatable)
        #[arg(long)]
        suite: Vec<String>,
        #[arg(long)]
        poly_n_max: Option<usize>,
        #[arg(long)]
        brute_n_max: Option<usize>,
        #[arg(long)]
        matrix_n_max: Option<usize>,
        #[arg(long)]
        identity_n_max: Option<usize>,
        #[arg(long)]
        q_len: Option<usize>,
        #[arg(long)]
        side_n_max: Option<usize>,
        #[arg(long)]
        side_k_max: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn check_range(what: &str, value: usize, lo: usize, hi: usize) -> Result<(), String> {
    if value < lo || value > hi {
        return Err(format!("{what} must be between {lo} and {hi}, got {value}"));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let mode = cli.output;
    match cli.command {
        Command::Count { n, brute } => {
            let value = if brute {
                check_range("--n with --brute", n, 1, MAX_BRUTE_N)?;
                count_side_matrices_brute(n, n).expect("square case is valid")
            } else {
                check_range("--n", n, 1, MAX_FORMULA_N)?;
                asm_total(n)
            };
            emit_value(mode, json!({"command": "count", "n": n, "brute": brute}), &value.to_string());
        }
        Command::Refined { n, brute } => {
            let values = if brute {
                check_range("--n with --brute", n, 1, MAX_BRUTE_N)?;
                refined_counts_brute(n)
            } else {
                check_range("--n", n, 1, MAX_FORMULA_N)?;
                RefinedTable::new(n).values().to_vec()
            };
            let strings: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            match mode {
                OutputMode::Plain => println!("{}", strings.join(" ")),
                OutputMode::Structured => println!(
                    "{}",
                    json!({"command": "refined", "n": n, "brute": brute, "values": strings})
                ),
            }
        }
        Command::Alpha { row } => {
            let row = parse_row(&row).map_err(|e| e.to_string())?;
            check_range("row length", row.len(), 1, MAX_POLY_N)?;
            let value = alpha_eval(&row).map_err(|e| e.to_string())?;
            emit_value(mode, json!({"command": "alpha", "row": row}), &value.to_string());
        }
        Command::AlphaPoly { n } => {
            check_range("--n", n, 1, MAX_POLY_N)?;
            let poly = AlphaPolynomial::new(n).map_err(|e| e.to_string())?;
            let text = poly.poly().to_string();
            match mode {
                OutputMode::Plain => println!("{text}"),
                OutputMode::Structured => {
                    println!("{}", json!({"command": "alpha-poly", "n": n, "poly": text}))
                }
            }
        }
        Command::Enumerate { row, n, k } => return enumerate(mode, row, n, k),
        Command::Side { n, k, brute } => {
            check_range("--n", n, 1, if brute { SIDE_N_LIMIT } else { MAX_FORMULA_N })?;
            if k < n {
                return Err(format!("--k must be at least --n, got n = {n}, k = {k}"));
            }
            check_range("--k", k, n, if brute { SIDE_K_LIMIT } else { MAX_FORMULA_N })?;
            let value = if brute {
                count_side_matrices_brute(n, k).map_err(|e| e.to_string())?
            } else {
                side_formula(n, k)
            };
            emit_value(
                mode,
                json!({"command": "side", "n": n, "k": k, "brute": brute}),
                &value.to_string(),
            );
        }
        Command::Dpp { n } => {
            check_range("--n", n, 2, MAX_DET_N)?;
            emit_value(mode, json!({"command": "dpp", "n": n}), &dpp_determinant(n).to_string());
        }
        Command::Verify {
            suite,
            poly_n_max,
            brute_n_max,
            matrix_n_max,
            identity_n_max,
            q_len,
            side_n_max,
            side_k_max,
        } => {
            let mut config = VerifyConfig::default();
            if let Some(v) = poly_n_max {
                config.poly_n_max = v;
            }
            if let Some(v) = brute_n_max {
                config.brute_n_max = v;
            }
            if let Some(v) = matrix_n_max {
                config.matrix_n_max = v;
            }
            if let Some(v) = identity_n_max {
                config.identity_n_max = v;
            }
            if let Some(v) = q_len {
                config.q_len = v;
            }
            if let Some(v) = side_n_max {
                config.side_n_max = v;
            }
            if let Some(v) = side_k_max {
                config.side_k_max = v;
            }
            let suites = if suite.is_empty() { None } else { Some(suite.as_slice()) };
            let report = Verifier::new()
                .run_selected(&config, suites)
                .map_err(|e| e.to_string())?;
            let width = witness_width();
            match mode {
                OutputMode::Plain => {
                    for c in &report.checks {
                        let status = if c.passed() { "PASS" } else { "FAIL" };
                        let params: Vec<String> =
                            c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                        println!("{status} {} [{}] ({} ms)", c.name, params.join(" "), c.elapsed_ms);
                        if !c.passed() {
                            println!("  lhs: {}", clip(&c.lhs, width));
                            println!("  rhs: {}", clip(&c.rhs, width));
                        }
                    }
                    println!(
                        "passed {}/{} checks",
                        report.summary.passed, report.summary.total
                    );
                }
                OutputMode::Structured => {
                    for c in &report.checks {
                        println!("{}", serde_json::to_string(c).expect("check serializes"));
                    }
                    println!(
                        "{}",
                        serde_json::to_string(&report.summary).expect("summary serializes")
                    );
                }
            }
            if !report.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn enumerate(
    mode: OutputMode,
    row: Option<String>,
    n: Option<usize>,
    k: Option<usize>,
) -> Result<ExitCode, String> {
    match (row, n) {
        (Some(row), None) => {
            let values = parse_row(&row).map_err(|e| e.to_string())?;
            check_range("row length", values.len(), 1, MAX_POLY_N)?;
            let bottom = BottomRow::new(values).map_err(|e| e.to_string())?;
            let mut count = 0u64;
            for (i, t) in enumerate_triangles(&bottom).enumerate() {
                match mode {
                    OutputMode::Plain => {
                        if i > 0 {
                            println!();
                        }
                        println!("{t}");
                    }
                    OutputMode::Structured => {
                        println!("{}", json!({ "triangle": t.rows() }))
                    }
                }
                count += 1;
            }
            if mode == OutputMode::Structured {
                println!("{}", json!({ "count": count }));
            }
        }
        (None, Some(n)) => {
            let matrices = match k {
                None => {
                    check_range("--n", n, 1, MAX_ENUM_ASM_N)?;
                    enumerate_asms(n)
                }
                Some(k) => {
                    check_range("--n", n, 1, SIDE_N_LIMIT)?;
                    check_range("--k", k, n, SIDE_K_LIMIT)?;
                    enumerate_side_matrices(n, k).map_err(|e| e.to_string())?
                }
            };
            for (i, m) in matrices.iter().enumerate() {
                match mode {
                    OutputMode::Plain => {
                        if i > 0 {
                            println!();
                        }
                        println!("{m}");
                    }
                    OutputMode::Structured => {
                        let rows: Vec<Vec<i8>> = (1..=m.n_rows())
                            .map(|r| (1..=m.n_cols()).map(|c| m.at(r, c)).collect())
                            .collect();
                        println!("{}", json!({ "matrix": rows }));
                    }
                }
            }
            if mode == OutputMode::Structured {
                println!("{}", json!({ "count": matrices.len() }));
            }
        }
        _ => return Err("give either --row (triangles) or --n (matrices)".into()),
    }
    Ok(ExitCode::SUCCESS)
}

fn emit_value(mode: OutputMode, mut record: serde_json::Value, value: &str) {
    match mode {
        OutputMode::Plain => println!("{value}"),
        OutputMode::Structured => {
            record["value"] = serde_json::Value::String(value.to_string());
            println!("{record}");
        }
    }
}

/// Width hint for clipped witnesses in plain verify output.
fn witness_width() -> usize {
    std::env::var("ASMCOUNT_WIDTH")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(100)
}

fn clip(s: &str, width: usize) -> String {
    if s.len() <= width {
        s.to_string()
    } else {
        format!("{}...", &s[..width])
    }
}
