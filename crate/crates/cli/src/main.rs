mod commands;
mod error;
mod render;
mod spec_file;

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use render::Format;

#[derive(Debug, Parser)]
#[command(name = "lrs", version, about = "Linear recurring sequences and their impulse response sequences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,
}

/// Where the sequence comes from. Missing initials mean the IRS.
#[derive(Debug, Clone, Args)]
pub struct SpecArgs {
    /// Recurrence coefficients p1,...,pr (integers or p/q).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "spec")]
    pub coeffs: Option<String>,
    /// Initial values a0,...,a(r-1).
    #[arg(long, allow_hyphen_values = true, requires = "coeffs")]
    pub initials: Option<String>,
    /// JSON spec file.
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct IndexArgs {
    /// A single index.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["from", "to"])]
    pub n: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub from: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub to: Option<i64>,
}

impl IndexArgs {
    pub fn range(&self, default_len: i64) -> RangeInclusive<i64> {
        match self.n {
            Some(n) => n..=n,
            None => {
                let lo = self.from.unwrap_or(0);
                lo..=self.to.unwrap_or(lo + default_len - 1)
            }
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Terms of a sequence.
    Eval {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        index: IndexArgs,
    },
    /// The impulse response sequence of a coefficient set.
    Irs {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Ordinary generating function as a rational function.
    Genfunc {
        #[command(flatten)]
        spec: SpecArgs,
        /// Also expand this many series coefficients.
        #[arg(long)]
        count: Option<usize>,
    },
    /// Closed-form values from the characteristic roots.
    ClosedForm {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        index: IndexArgs,
        #[arg(long, default_value_t = 256)]
        precision_bits: usize,
        #[arg(long, default_value_t = 20)]
        digits: usize,
    },
    /// A sequence written through IRS values.
    Represent {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        index: IndexArgs,
    },
    /// The IRS written through shifts of a sequence.
    Toeplitz {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Exact identity checks over parameter ranges.
    Verify {
        #[command(flatten)]
        spec: SpecArgs,
        /// addition, nonlinear, negative, small-m, transfer, congruence or named:<name>
        #[arg(long)]
        suite: String,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        m: Option<RangeInclusive<i64>>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        n: Option<RangeInclusive<i64>>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        r: Option<RangeInclusive<i64>>,
    },
    /// Stirling numbers of the second kind: one column or the triangle.
    Stirling {
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 7)]
        rows: usize,
    },
    /// Wythoff and Pell-Wythoff arrays.
    Wythoff {
        #[arg(long, default_value = "fibonacci")]
        variant: String,
        #[arg(long, default_value_t = 8)]
        rows: usize,
        #[arg(long, default_value_t = 8)]
        cols: usize,
    },
    /// Boustrophedon transform of a list or of a sequence's first terms.
    Boustrophedon {
        /// Input values a0,a1,...
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["coeffs", "spec"])]
        values: Option<String>,
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 8)]
        count: usize,
    },
}

/// `lo..hi` inclusive, or a single integer.
pub fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let bad = || format!("expected lo..hi or an integer, got {s:?}");
    match s.split_once("..") {
        Some((lo, hi)) => {
            let lo = lo.trim().parse().map_err(|_| bad())?;
            let hi = hi.trim().parse().map_err(|_| bad())?;
            Ok(lo..=hi)
        }
        None => s.trim().parse().map(|v| v..=v).map_err(|_| bad()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or_default();
            eprintln!("error[usage]: {}", first.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(2)
        }
    }
}
