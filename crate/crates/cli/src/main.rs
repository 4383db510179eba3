use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use linfty_cwl::document::parse_file;
use linfty_cwl::run::{run, RunOptions};

#[derive(Parser)]
#[command(name = "linfty-cwl", version, about = "Exact L∞-algebra cohomology and characteristic classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the queries of a definition document.
    Run {
        file: PathBuf,
        /// Print the machine-readable report.
        #[arg(long)]
        json: bool,
        /// Weight up to which algebra identities are checked.
        #[arg(long)]
        max_weight: Option<usize>,
        /// Cohomology degree range `a..b` (inclusive) for queries that give none.
        #[arg(long, value_parser = parse_range)]
        degrees: Option<(i32, i32)>,
        /// Seed for random sections and splittings.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write a gallery instance as a definition document.
    Export {
        name: String,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// List the gallery instances.
    Gallery,
}

fn parse_range(text: &str) -> Result<(i32, i32), String> {
    let (a, b) = text.split_once("..").ok_or("expected a..b")?;
    let a = a.trim().parse::<i32>().map_err(|e| e.to_string())?;
    let b = b.trim().parse::<i32>().map_err(|e| e.to_string())?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

fn configure_threads() {
    if let Some(n) = std::env::var("LINFTY_CWL_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match cli.command {
        Command::Run { file, json, max_weight, degrees, seed } => {
            let doc = match parse_file(&file) {
                Ok(doc) => doc,
                Err(e) => {
                    eprintln!("{}: {e}", file.display());
                    return ExitCode::from(2);
                }
            };
            let report = run(&doc, &RunOptions { max_weight, degrees, seed });
            print!("{}", if json { report.to_json() } else { report.to_text() });
            ExitCode::from(report.exit_code() as u8)
        }
        Command::Export { name, output } => match linfty_cwl::export_gallery(&name) {
            Ok(text) => match output {
                Some(path) => match std::fs::write(&path, text) {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(e) => {
                        eprintln!("{}: {e}", path.display());
                        ExitCode::from(2)
                    }
                },
                None => {
                    print!("{text}");
                    ExitCode::SUCCESS
                }
            },
            Err(e) => {
                eprintln!("{e}");
                ExitCode::from(2)
            }
        },
        Command::Gallery => {
            for name in linfty_cwl::gallery_names() {
                println!("{name}");
            }
            ExitCode::SUCCESS
        }
    }
}
