use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use compel_core::PropertyKind;

use crate::families::Family;
use crate::suites::Suite;

pub const DEFAULT_SEED: u64 = 2024;
pub const DEFAULT_MAX_N: usize = 16;

#[derive(Parser, Debug)]
#[command(
    name = "compel",
    version,
    about = "Compelling chromatic numbers of small graphs"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Seed for every random graph a command draws.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Largest graph order any exhaustive routine will attempt.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    pub max_n: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Give up after this many seconds (exit code 3).
    #[arg(long, global = true)]
    pub timeout_secs: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute chi_P of a graph file (`-` reads standard input).
    Chi {
        graph: PathBuf,
        #[arg(long, short)]
        property: PropertyKind,
    },
    /// Test whether a coloring compels a property.
    Check {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long, short)]
        property: PropertyKind,
    },
    /// Tabulate chi_P over a graph family next to its closed form.
    FamilyTable {
        family: Family,
        /// Inclusive range `a..b`, or a single value.
        range: NRange,
        #[arg(long, short)]
        property: PropertyKind,
    },
    /// Run a verification suite.
    Verify { suite: Suite },
    /// Look for a total dominator coloring with three colors.
    Td3 { graph: PathBuf },
    /// Print a family member in graph-file format.
    Generate { family: Family, n: usize },
}

/// Inclusive range of family parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{t}` is not a number"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => (num(s)?, num(s)?),
        };
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(NRange { lo, hi })
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("2..12".parse::<NRange>().unwrap(), NRange { lo: 2, hi: 12 });
        assert_eq!("3..=5".parse::<NRange>().unwrap(), NRange { lo: 3, hi: 5 });
        assert_eq!("7".parse::<NRange>().unwrap(), NRange { lo: 7, hi: 7 });
        assert!("5..2".parse::<NRange>().is_err());
        assert!("a..2".parse::<NRange>().is_err());
    }

    #[test]
    fn parses_commands() {
        let cli = Cli::try_parse_from([
            "compel",
            "chi",
            "g.txt",
            "--property",
            "Edge",
            "--format",
            "json",
        ])
        .unwrap();
        assert_eq!(cli.global.format, Format::Json);
        assert_eq!(cli.global.seed, DEFAULT_SEED);
        assert!(matches!(
            cli.command,
            Command::Chi {
                property: PropertyKind::Edge,
                ..
            }
        ));
        let cli = Cli::try_parse_from([
            "compel",
            "family-table",
            "mop-random",
            "3..11",
            "-p",
            "connected",
        ])
        .unwrap();
        assert!(matches!(
            cli.command,
            Command::FamilyTable {
                family: Family::MopRandom,
                ..
            }
        ));
        assert!(Cli::try_parse_from(["compel", "chi", "g.txt", "-p", "clique"]).is_err());
    }
}
