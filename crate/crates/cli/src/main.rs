use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use opturan::Mode;

mod commands;

/// Exit statuses.
pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_MISMATCH: u8 = 2;
pub const EXIT_REFUSED: u8 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
    Graph6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Connected,
    General,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Connected => Mode::Connected,
            ModeArg::General => Mode::General,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[value(name = "Mk")]
    Mk,
    #[value(name = "Gn")]
    Gn,
    #[value(name = "2M5")]
    TwoM5,
    #[value(name = "Tn")]
    Tn,
    #[value(name = "On")]
    On,
    #[value(name = "H")]
    H,
    #[value(name = "Hprime")]
    Hprime,
}

/// Outerplanar Turán numbers of double stars.
#[derive(Debug, Parser)]
#[command(name = "opturan", version)]
pub struct Cli {
    /// Search threads.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=256))]
    pub workers: u32,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Result cache file.
    #[arg(long, global = true, env = "OPTURAN_CACHE")]
    pub cache: Option<PathBuf>,

    /// Allow orders above the default resource caps.
    #[arg(long, global = true)]
    pub override_cap: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a construction as graph6 with a summary line.
    Construct {
        #[arg(value_enum)]
        family: Family,
        /// Order, for Mk, Gn, Tn and On.
        #[arg(long, short = 'n')]
        n: Option<usize>,
        /// Number of H copies, for Hprime.
        #[arg(long)]
        t: Option<usize>,
        /// Size of the attached fan, for Hprime.
        #[arg(long)]
        i: Option<usize>,
        /// Double star to test against (default depends on the family).
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
    },
    /// Read graph6 lines from stdin and report on each.
    Check {
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long, default_value_t = 2)]
        q: usize,
    },
    /// Exact value for one order.
    Ex {
        #[arg(long, short = 'n')]
        n: usize,
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long, default_value_t = 2)]
        q: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Connected)]
        mode: ModeArg,
    },
    /// Compare exact values with every closed form that applies.
    Verify {
        #[arg(long, default_value_t = 9)]
        n_max: usize,
        /// Double stars as p,q; repeatable. Defaults to a standard set.
        #[arg(long = "spec", value_parser = commands::parse_spec)]
        specs: Vec<(usize, usize)>,
    },
    /// Exact S(2,3) values in both modes against the chain bound.
    Probe {
        #[arg(long, default_value_t = 7)]
        from: usize,
        #[arg(long, default_value_t = 10)]
        to: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = commands::run(&cli, &mut io::stdin().lock(), &mut out);
    let _ = out.flush();
    ExitCode::from(code)
}
