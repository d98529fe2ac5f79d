use std::fmt;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Parser)]
#[command(
    name = "rm-infoset",
    version,
    about = "Information sets for Reed-Muller codes from their defining sets"
)]
pub struct Cli {
    /// Worker threads; defaults to all cores. Never changes the output.
    #[arg(long, env = "RM_INFOSET_THREADS", global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Compute information sets of R(rho, m).
    Infoset(InfosetArgs),
    /// Regenerate the reference tables and diff them against the embedded copies.
    Tables(TablesArgs),
    /// List the factorizations 2^m - 1 = r1 * r2 usable for a given order.
    Factorizations(FactorizationsArgs),
    /// List the isomorphisms Z_n -> Z_r1 x Z_r2 by their image of 1.
    Isos(IsosArgs),
}

#[derive(Debug, Clone, Args)]
pub struct InfosetArgs {
    #[arg(long)]
    pub m: u32,
    #[arg(long, default_value_t = 1)]
    pub rho: u32,
    /// First factor; every usable factorization when omitted.
    #[arg(long)]
    pub r1: Option<u64>,
    /// `crt`, `all`, or the image of 1 as `d1,d2`.
    #[arg(long, default_value = "crt")]
    pub iso: IsoChoice,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Certify every set with the rank oracle.
    #[arg(long)]
    pub verify: bool,
    /// Use the general defining-set pipeline even for orders 1 and 2.
    #[arg(long)]
    pub generic: bool,
}

#[derive(Debug, Clone, Args)]
pub struct TablesArgs {
    #[arg(long, value_enum, default_value_t = Which::All)]
    pub which: Which,
    /// Treat annotated discrepancies as failures too.
    #[arg(long)]
    pub strict: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct FactorizationsArgs {
    #[arg(long)]
    pub m: u32,
    #[arg(long, default_value_t = 1)]
    pub rho: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct IsosArgs {
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub r1: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "I")]
    I,
    #[value(name = "II")]
    II,
    #[value(name = "III")]
    III,
    #[value(name = "IV")]
    IV,
    #[value(name = "V")]
    V,
    #[value(name = "VI")]
    VI,
    #[value(name = "all")]
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsoChoice {
    Crt,
    All,
    Delta(u64, u64),
}

impl FromStr for IsoChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "crt" => Ok(IsoChoice::Crt),
            "all" => Ok(IsoChoice::All),
            other => {
                let bad = || format!("expected `crt`, `all` or `d1,d2`, got {other:?}");
                let inner = other.trim_start_matches('(').trim_end_matches(')');
                let (d1, d2) = inner.split_once(',').ok_or_else(bad)?;
                let d1 = d1.trim().parse().map_err(|_| bad())?;
                let d2 = d2.trim().parse().map_err(|_| bad())?;
                Ok(IsoChoice::Delta(d1, d2))
            }
        }
    }
}

impl fmt::Display for IsoChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoChoice::Crt => f.write_str("crt"),
            IsoChoice::All => f.write_str("all"),
            IsoChoice::Delta(d1, d2) => write!(f, "{d1},{d2}"),
        }
    }
}
