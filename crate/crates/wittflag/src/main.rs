//! Command-line front end: compute single presentations, run the
//! verification suites, emit batch rank tables, and self-check.
//!
//! Exit codes: 0 success, 1 usage or parameter error, 2 internal check
//! failure (a presentation or suite that did not certify).

use clap::{Parser, Subcommand, ValueEnum};

use wittflag::verify;
use wittflag::witt::{self, FlagType, Structure, WittError};

#[derive(Parser)]
#[command(name = "wittflag", about = "Witt rings of classical flag manifolds, exactly")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Verb {
    /// Compute the presentation and graded ranks for one parameter tuple.
    Compute {
        /// Series: A, B, C or D.
        #[arg(long = "type")]
        flag_type: FlagType,
        /// Spin/orthogonal/symplectic parameter (types B, C, D).
        #[arg(long, default_value_t = 0)]
        m: u64,
        /// Comma-separated block sizes, e.g. 3,5.
        #[arg(long, value_delimiter = ',')]
        blocks: Vec<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a named verification suite.
    Verify {
        /// One of: examples, lemmas, series, appendix, tables, all.
        #[arg(long)]
        suite: String,
        /// Size bound for the appendix suite (f + g).
        #[arg(long = "max-size", default_value_t = 12)]
        max_size: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit every covered presentation with total parameter n <= max-n.
    Table {
        /// Series: A, B, C or D.
        #[arg(long = "type")]
        flag_type: FlagType,
        #[arg(long = "max-n", default_value_t = 8)]
        max_n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run every suite at reduced bounds.
    Selfcheck,
}

/// Hard bound for the table verb; larger sweeps repeat the same structure
/// at rapidly growing cost.
const TABLE_CAP: u64 = 9;

/// Largest f + g the brute-force rank expansion covers exactly.
const APPENDIX_CAP: u64 = 24;

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            let first = e.to_string();
            let first = first.lines().next().unwrap_or("usage error");
            eprintln!("wittflag: {first}");
            std::process::exit(1);
        }
    };
    let code = match cli.verb {
        Verb::Compute { flag_type, m, blocks, format } => run_compute(flag_type, m, &blocks, format),
        Verb::Verify { suite, max_size, format } => run_verify(&suite, max_size, format),
        Verb::Table { flag_type, max_n, format } => run_table(flag_type, max_n, format),
        Verb::Selfcheck => run_selfcheck(),
    };
    std::process::exit(code);
}

fn run_compute(flag_type: FlagType, m: u64, blocks: &[u64], format: Format) -> i32 {
    match witt::compute(flag_type, m, blocks) {
        Ok(p) => {
            match format {
                Format::Json => println!("{}", p.to_json()),
                Format::Text => print!("{}", p.render_text()),
            }
            0
        }
        Err(WittError::Params(msg)) => {
            eprintln!("wittflag: {msg}");
            1
        }
        Err(WittError::Check(msg)) => {
            eprintln!("wittflag: check failure: {msg}");
            2
        }
    }
}

fn run_verify(suite: &str, max_size: u64, format: Format) -> i32 {
    if max_size > APPENDIX_CAP {
        eprintln!("wittflag: --max-size {max_size} is above the exact expansion bound {APPENDIX_CAP}");
        return 1;
    }
    let Some(reports) = verify::suites_by_name(suite, max_size) else {
        eprintln!(
            "wittflag: unknown suite {suite:?}; expected examples, lemmas, series, appendix, tables or all"
        );
        return 1;
    };
    let mut failures = 0;
    for report in &reports {
        match format {
            Format::Text => print!("{}", report.render_text()),
            Format::Json => {
                println!("{}", serde_json::to_string_pretty(report).expect("report serializes"))
            }
        }
        failures += report.failures();
    }
    if failures == 0 {
        0
    } else {
        2
    }
}

fn table_row_line(row: &witt::TableRow) -> String {
    let blocks: Vec<String> = row.blocks.iter().map(|b| b.to_string()).collect();
    let params = format!("m={} blocks=({})", row.m, blocks.join(","));
    match &row.outcome {
        Ok(p) => {
            let ext = p.exterior_generators.len();
            format!(
                "{} {:<24} a={:<6} ext={:<3} ranks={:<20} {}",
                p.flag_type,
                params,
                p.scalar_a,
                ext,
                p.ranks.to_string(),
                match p.structure {
                    Structure::Ring => "RING",
                    Structure::AdditiveOnly => "ADDITIVE_ONLY",
                }
            )
        }
        Err(e) => format!("? {params:<24} FAILED: {e}"),
    }
}

fn run_table(flag_type: FlagType, max_n: u64, format: Format) -> i32 {
    if max_n > TABLE_CAP {
        eprintln!(
            "wittflag: --max-n {max_n} is above the supported table bound {TABLE_CAP}; \
             use the compute verb for individual larger parameters"
        );
        return 1;
    }
    let rows = witt::rank_table(flag_type, max_n);
    let mut failures = 0usize;
    for row in &rows {
        match format {
            Format::Text => println!("{}", table_row_line(row)),
            Format::Json => match &row.outcome {
                Ok(p) => println!("{}", p.to_json_compact()),
                Err(e) => println!(
                    "{}",
                    serde_json::json!({
                        "m": row.m,
                        "blocks": row.blocks,
                        "error": e.to_string(),
                    })
                ),
            },
        }
        if row.outcome.is_err() {
            failures += 1;
        }
    }
    match format {
        Format::Text => println!("rows: {}, check failures: {failures}", rows.len()),
        Format::Json => println!(
            "{}",
            serde_json::json!({ "rows": rows.len(), "check_failures": failures })
        ),
    }
    if failures == 0 {
        0
    } else {
        2
    }
}

fn run_selfcheck() -> i32 {
    let reports = [
        verify::examples_suite(),
        verify::lemmas_suite(),
        verify::series_suite(3),
        verify::appendix_suite(10),
        verify::tables_suite(5),
        verify::classification_suite(5),
    ];
    let mut failures = 0;
    for report in &reports {
        print!("{}", report.render_text());
        failures += report.failures();
    }
    if failures == 0 {
        println!("selfcheck: PASS");
        0
    } else {
        println!("selfcheck: FAIL ({failures} items)");
        2
    }
}
