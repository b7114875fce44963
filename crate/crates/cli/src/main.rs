use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sostar_cli::{export, parse_tol, run, ExportRequest, Suite, SuiteSelector, EXIT_USAGE};

#[derive(Parser)]
#[command(name = "sostar", version, about = "Exact verification of SO*(2n) isogenies and SO*(8) triality")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and print a summary table.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Entry-wise tolerance for floating-point claims.
        #[arg(long, default_value = "1e-9", value_parser = parse_tol)]
        tol: f64,
        /// Write the full JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Print a basis with its structure constants and Killing signature.
    Export {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write to a file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Verify { suite, tol, json } => {
            let sel = SuiteSelector {
                suite,
                tol,
                output_path: json,
            };
            run(&sel, &mut io::stdout().lock())
        }
        Command::Export {
            family,
            n,
            p,
            q,
            format: Format::Json,
            out,
        } => match export(&ExportRequest { family, n, p, q }) {
            Ok(v) => {
                let mut text = serde_json::to_string_pretty(&v).expect("serializes");
                text.push('\n');
                let written = match out {
                    Some(path) => std::fs::write(&path, text),
                    None => io::stdout().lock().write_all(text.as_bytes()),
                };
                match written {
                    Ok(()) => 0,
                    Err(e) => {
                        eprintln!("i/o error: {e}");
                        EXIT_USAGE
                    }
                }
            }
            Err(e) => {
                eprintln!("{e}");
                e.exit_code()
            }
        },
    };
    ExitCode::from(code as u8)
}
