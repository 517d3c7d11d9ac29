use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use frobsoc_cli::run::malformed;
use frobsoc_cli::{document_from_flags, run_document, table, FlagJob, Report};

/// Socle degrees of Frobenius powers over complete intersections.
///
/// Writes one JSON report to stdout. Exit status: 0 success, 1 malformed
/// input, 2 hypothesis violation, 3 internal inconsistency.
#[derive(Parser, Debug)]
#[command(name = "frobsoc", version)]
struct Cli {
    /// check | socle | betti | gb | tor1 | fuzz | explore
    mode: Option<String>,
    /// Job document (JSON); flags override its fields.
    #[arg(long, value_name = "FILE")]
    job: Option<PathBuf>,
    /// Characteristic.
    #[arg(long)]
    p: Option<u64>,
    /// Variables and weights, e.g. `x:1,y:1`.
    #[arg(long)]
    vars: Option<String>,
    /// Generators of C; repeatable or comma-separated.
    #[arg(long = "C", value_name = "POLY")]
    c: Vec<String>,
    /// Generators of I; repeatable or comma-separated.
    #[arg(long = "I", value_name = "POLY")]
    i: Vec<String>,
    /// Frobenius exponent, q = p^e.
    #[arg(long)]
    e: Option<u64>,
    /// Fuzz master seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Number of fuzz instances.
    #[arg(long)]
    count: Option<u64>,
    /// Also evaluate every e' from e up to this value.
    #[arg(long, value_name = "E")]
    all_e_up_to: Option<u64>,
    /// Largest admissible q (default 32).
    #[arg(long)]
    q_cap: Option<u64>,
    /// Accept a positive-dimensional C as Gorenstein in explore mode.
    #[arg(long)]
    assume_gorenstein: bool,
    /// Fuzz profile: ci | explore.
    #[arg(long)]
    profile: Option<String>,
}

fn emit(report: &Report) -> ExitCode {
    let json = serde_json::to_string_pretty(report).expect("reports serialize");
    let mut stdout = std::io::stdout().lock();
    let _ = writeln!(stdout, "{json}");
    let stderr = std::io::stderr();
    if stderr.is_terminal() {
        let color = std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty());
        let _ = write!(stderr.lock(), "{}", table::render(report, color));
    }
    ExitCode::from(report.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return emit(&malformed(e.render().to_string().trim().to_string()));
        }
    };
    let base = match &cli.job {
        None => None,
        Some(path) => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => return emit(&malformed(format!("{}: {e}", path.display()))),
            };
            match serde_json::from_str(&text) {
                Ok(v) => Some(v),
                Err(e) => return emit(&malformed(format!("{}: invalid JSON: {e}", path.display()))),
            }
        }
    };
    let flags = FlagJob {
        mode: cli.mode,
        p: cli.p,
        vars: cli.vars,
        c: cli.c,
        i: cli.i,
        e: cli.e,
        seed: cli.seed,
        count: cli.count,
        all_e_up_to: cli.all_e_up_to,
        q_cap: cli.q_cap,
        assume_gorenstein: cli.assume_gorenstein,
        profile: cli.profile,
    };
    let doc = match document_from_flags(&flags, base) {
        Ok(d) => d,
        Err(e) => return emit(&malformed(e.to_string())),
    };
    emit(&run_document(&doc))
}
