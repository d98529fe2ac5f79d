//! Front-end for computing, certifying and tabulating information sets of
//! Reed-Muller codes.

pub mod args;
pub mod error;
pub mod infoset;
pub mod output;
pub mod tables;
pub mod verify;

use rm_infoset::modular::enumerate_isos;
use rm_infoset::reed_muller::{factorizations, RMFactorization};

pub use args::{Cli, Command, Format, IsoChoice, Which};
pub use error::{CliError, Result};
pub use infoset::{cmd_infoset, InfosetRow, RunConfig};
pub use tables::{cmd_tables, TableId, TableReport};
pub use verify::{Verification, Verifier};

/// What a command printed and how the process should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: Option<String>,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: None,
            code: 0,
        }
    }
}

/// Runs a parsed command line on a pool of `cli.threads` workers.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Threads(e.to_string()))?;
    pool.install(|| dispatch(&cli.command))
}

fn dispatch(command: &Command) -> Result<Outcome> {
    match command {
        Command::Infoset(a) => {
            let config = RunConfig::try_from(a)?;
            let rows = cmd_infoset(&config)?;
            let stdout = output::infoset(&rows, config.format);
            Ok(match infoset::first_failure(&rows) {
                Some(msg) => Outcome {
                    stdout,
                    stderr: Some(CliError::VerificationFailed(msg).to_string()),
                    code: 3,
                },
                None => Outcome::ok(stdout),
            })
        }
        Command::Tables(a) => {
            let reports = cmd_tables(a.which)?;
            let stdout = output::tables(&reports, a.format);
            let failing: Vec<&str> = reports
                .iter()
                .filter(|r| !r.passes(a.strict))
                .map(|r| r.table.id.name())
                .collect();
            Ok(if failing.is_empty() {
                Outcome::ok(stdout)
            } else {
                Outcome {
                    stdout,
                    stderr: Some(format!(
                        "tables differ from the reference: {}",
                        failing.join(", ")
                    )),
                    code: 3,
                }
            })
        }
        Command::Factorizations(a) => {
            if a.m < 2 {
                return Err(CliError::Usage(format!("m = {} is below 2", a.m)));
            }
            Ok(Outcome::ok(output::factorizations(
                &factorizations(a.m, a.rho),
                a.format,
            )))
        }
        Command::Isos(a) => {
            let facts = match a.r1 {
                Some(r1) => vec![RMFactorization::new(a.m, r1)?],
                None => factorizations(a.m, 1),
            };
            if facts.is_empty() {
                return Err(CliError::NoFactorization { m: a.m, rho: 1 });
            }
            let mut all = Vec::new();
            for f in &facts {
                all.extend(enumerate_isos(f.r1(), f.r2())?);
            }
            Ok(Outcome::ok(output::isos(&all, a.format)))
        }
    }
}
