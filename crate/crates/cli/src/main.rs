use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

/// Automata, transductions and combings for automatic structures.
#[derive(Parser, Debug)]
#[command(name = "combkit", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// write the resulting automaton here instead of standard output
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Operations on automata and transducers
    Aut {
        #[command(subcommand)]
        op: AutOp,
    },
    /// List accepted words (or pairs) up to a length
    Enum {
        file: PathBuf,
        #[arg(long)]
        maxlen: usize,
    },
    /// Check that an automaton is a prefix-closed combing with uniqueness
    CheckCombing {
        file: PathBuf,
        #[arg(long)]
        oracle: PathBuf,
        #[arg(long, default_value_t = 4)]
        radius: usize,
        #[arg(long, default_value_t = 8)]
        maxlen: usize,
    },
    /// Check (or search for) significant letters of a word list or linear language
    SigCheck {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        maxlen: usize,
        /// search for positions instead of checking the given ones
        #[arg(long)]
        search: bool,
    },
    /// Check k-centrality of significant letters, or profile them
    CentralCheck {
        file: PathBuf,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long, default_value_t = 8)]
        maxlen: usize,
    },
    /// Extract the generator language of a combing
    Extract {
        file: PathBuf,
        #[arg(long)]
        oracle: PathBuf,
        /// fellow-traveler bound of the combing
        #[arg(long)]
        ft: usize,
    },
    /// Build a combing from a language of generators
    Build {
        file: PathBuf,
        #[arg(long)]
        oracle: PathBuf,
        #[arg(long)]
        central: bool,
        #[arg(long, default_value_t = 2)]
        margin: usize,
        /// lower bound for the fellow-traveler constant
        #[arg(long, default_value_t = 0)]
        hint: usize,
        #[arg(long, default_value_t = 8)]
        sample_len: usize,
        #[arg(long, default_value_t = 4)]
        verify_radius: usize,
        #[arg(long, default_value_t = 8)]
        verify_maxlen: usize,
    },
    /// Empirical fellow-traveler bound of a combing
    FtBound {
        file: PathBuf,
        #[arg(long)]
        oracle: PathBuf,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        maxlen: usize,
        /// largest distance measured
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
pub enum AutOp {
    Union {
        a: PathBuf,
        b: PathBuf,
    },
    Concat {
        a: PathBuf,
        b: PathBuf,
    },
    Reverse {
        a: PathBuf,
    },
    /// Prefix/suffix automata for every state
    Split {
        a: PathBuf,
    },
    Trim {
        a: PathBuf,
    },
    /// Exit 0 iff both automata accept the same language
    Equiv {
        a: PathBuf,
        b: PathBuf,
    },
    Project {
        t: PathBuf,
        #[arg(long, value_enum, default_value_t = TapeArg::First)]
        tape: TapeArg,
    },
    /// Transducer restricted to L(r) × L(s)
    IntersectRect {
        t: PathBuf,
        r: PathBuf,
        s: PathBuf,
    },
    /// Identity relation on L(r)
    Identity {
        r: PathBuf,
    },
    /// Bound on the length difference of accepted pairs
    SyncBound {
        t: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Sync,
    Async,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TapeArg {
    First,
    Second,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    ExitCode::from(commands::run(&cli))
}
