//! Command-line front end. All result output goes to stdout and is
//! deterministic for a fixed seed; timings go to stderr only.

use clap::{Parser, Subcommand};
use cmreg::{
    arrangement_to_string, minimal_resolution, parse_arrangement, regularity, run_suite,
    sharp_example, Error, FieldDescriptor, Strategy, Suite, SuiteConfig,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "cmreg",
    version,
    about = "Castelnuovo-Mumford regularity of subspace arrangement ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Regularity of the intersection ideal of an arrangement file
    Regularity {
        /// Arrangement file (header `ring n=<n> field=<p|Q>`, then
        /// `subspace: <form>; ...` lines)
        file: PathBuf,
        /// Route: betti, hyperplane, or both (both also cross-checks)
        #[arg(long, default_value = "both")]
        strategy: Strategy,
        /// Seed for the generic linear forms the hyperplane route draws
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Minimal graded Betti table of the intersection ideal
    Betti {
        /// Arrangement file
        file: PathBuf,
    },
    /// Run a verification suite
    Verify {
        /// theorem-random, sharp, prop-aux, hyperplane-lemma, ses, or all
        suite: Suite,
        /// Trials per randomized suite
        #[arg(long, default_value_t = 10)]
        trials: usize,
        /// Base seed; trial k uses seed base + k
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest projective dimension drawn
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Largest arrangement size drawn; also the sharp-suite ceiling
        #[arg(long, default_value_t = 3)]
        d: usize,
        /// Fixed codimension list (comma-separated); default draws them
        #[arg(long, value_delimiter = ',')]
        codims: Option<Vec<usize>>,
        /// Coefficient field: a prime, or Q
        #[arg(long, default_value = "32003")]
        field: FieldDescriptor,
        /// Emit one JSON record per line instead of plain text
        #[arg(long)]
        json: bool,
    },
    /// Print the d-regular sharp configuration as an arrangement file
    Sharp {
        /// Number of lines through the auxiliary line; at least 2
        #[arg(long)]
        d: usize,
        /// Seed for the generic direction vectors
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Reduced Groebner basis of the intersection ideal, one generator
    /// per line
    Intersect {
        /// Arrangement file
        file: PathBuf,
    },
}

fn read_arrangement(path: &Path) -> Result<cmreg::Arrangement, Error> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("cannot read {}: {e}", path.display()),
    })?;
    parse_arrangement(&text)
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        _ => 3,
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Regularity {
            file,
            strategy,
            seed,
        } => {
            let start = Instant::now();
            let x = read_arrangement(&file)?;
            let ideal = x.intersection_ideal()?;
            let out = regularity(&ideal, strategy, seed)?;
            println!("regularity = {}", out.regularity);
            println!("strategy = {strategy}");
            if let Some(b) = out.betti {
                println!("betti route = {b}");
            }
            if let Some(h) = out.hyperplane {
                println!("hyperplane route = {h}");
                println!("genericity retries = {}", out.genericity_retries);
            }
            eprintln!("wall time: {:?}", start.elapsed());
            Ok(ExitCode::SUCCESS)
        }
        Command::Betti { file } => {
            let start = Instant::now();
            let x = read_arrangement(&file)?;
            let table = minimal_resolution(&x.intersection_ideal()?)?.betti_table();
            print!("{}", table.render());
            eprintln!("wall time: {:?}", start.elapsed());
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            suite,
            trials,
            seed,
            n,
            d,
            codims,
            field,
            json,
        } => {
            let config = SuiteConfig {
                suite,
                trials,
                base_seed: seed,
                max_n: n,
                max_d: d,
                codims,
                field,
            };
            let outcome = run_suite(&config);
            if json {
                for report in &outcome.reports {
                    println!(
                        "{}",
                        serde_json::to_string(report)
                            .map_err(|_| Error::Internal("report serialization failed"))?
                    );
                }
                println!(
                    "{}",
                    serde_json::json!({
                        "suite": suite.to_string(),
                        "passed": outcome.passed,
                        "failed": outcome.failed,
                        "max_regularity": outcome.max_regularity,
                    })
                );
            } else {
                for report in &outcome.reports {
                    println!("{}", report.render_line());
                }
                println!("suite {suite}: {}", outcome.render_summary());
            }
            eprintln!("total wall time: {:?}", outcome.total_wall);
            Ok(if outcome.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Sharp { d, seed } => {
            if d < 2 {
                return Err(Error::Parse {
                    line: 0,
                    message: "--d must be at least 2 for the sharp configuration".to_string(),
                });
            }
            let x = sharp_example(d, seed)?;
            print!("{}", arrangement_to_string(&x));
            Ok(ExitCode::SUCCESS)
        }
        Command::Intersect { file } => {
            let start = Instant::now();
            let x = read_arrangement(&file)?;
            let ideal = x.intersection_ideal()?;
            for g in ideal.groebner()?.generators() {
                println!("{g}");
            }
            eprintln!("wall time: {:?}", start.elapsed());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
