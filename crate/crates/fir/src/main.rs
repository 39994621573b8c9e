use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fir::{analyze, builtin_corpus, run_corpus, table_report, GroupSpec};

#[derive(Parser)]
#[command(name = "fir", version)]
#[command(about = "Decide whether a finite group has a faithful irreducible representation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every criterion on one group. Exit 0 if the verdict is true, 1 if false, 2 on error.
    Analyze {
        /// Group spec, e.g. `burnside`, `gdq:2,3`, `perm:(1 2 3);(1 2)`
        #[arg(long)]
        group: GroupSpec,
        /// Field characteristic: 0 or a prime
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        /// Cross-check against the exact character table
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
        /// Record wall-clock time in the report
        #[arg(long)]
        timing: bool,
    },
    /// Print the complex character table.
    Ctable {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long)]
        json: bool,
    },
    /// Sweep the builtin corpus and check every cross-module invariant.
    Corpus {
        #[arg(long)]
        with_oracle: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match cli.command {
        Command::Analyze { group, characteristic, oracle, json, timing } => {
            match analyze(&group, characteristic, oracle, timing) {
                Ok(r) => {
                    print!("{}", if json { r.to_json() + "\n" } else { r.to_text() });
                    if r.criteria.verdict {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => {
                    eprintln!("fir: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Ctable { group, json } => {
            let built = match group.build() {
                Ok(g) => g,
                Err(e) => {
                    eprintln!("fir: {e}");
                    return ExitCode::from(2);
                }
            };
            match table_report(&group.to_string(), &built) {
                Ok(t) => {
                    print!("{}", if json { t.to_json() + "\n" } else { t.to_text() });
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("fir: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Corpus { with_oracle, jobs, json } => {
            let report = run_corpus(&builtin_corpus(), with_oracle, jobs);
            print!("{}", if json { report.to_json() + "\n" } else { report.to_text() });
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
