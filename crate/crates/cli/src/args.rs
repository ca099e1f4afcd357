use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Subadditive functions on finite groups, weak 2-cocycles and coset posets.
///
/// Every command reads one JSON document (from FILE, or stdin when FILE is
/// omitted or `-`) and writes one to stdout, so commands can be piped.
#[derive(Debug, Parser)]
#[command(name = "slg", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build and check groups.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Subadditive functions r: G → ℕ.
    #[command(subcommand)]
    R(RCmd),
    /// Idempotent and valued cocycles.
    #[command(subcommand)]
    Cocycle(CocycleCmd),
    /// Coset posets and their Hasse diagrams.
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Batch property checks.
    #[command(subcommand)]
    Check(CheckCmd),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Preset {
    Cyclic,
    Dihedral,
    Symmetric,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Input file; stdin if omitted or `-`.
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GroupCmd {
    /// Emit a preset group. For dihedral, N is the group order.
    Make { preset: Preset, n: usize },
    /// Check the group axioms of a table; violations go to stderr.
    Verify(Input),
    /// Emit the quotient G/N, N the normal closure of the given elements.
    Quotient {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        normal: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum TransformOp {
    Bump,
    Halve,
    Evenize,
    Inflate,
}

#[derive(Debug, Subcommand)]
pub enum RCmd {
    /// Word length over a generating set, read from a group file.
    FromGens {
        #[command(flatten)]
        input: Input,
        /// Generators, as labels or indices.
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<String>,
    },
    /// Validate an r-function and print M_r and N1.
    Validate(Input),
    /// Apply a transform and emit the result.
    Transform {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        op: TransformOp,
        /// Element for `bump`.
        #[arg(long)]
        at: Option<String>,
        /// Parent group file for `inflate`; the input lives on the quotient.
        #[arg(long)]
        parent: Option<PathBuf>,
        /// Generators of the normal subgroup for `inflate`.
        #[arg(long, value_delimiter = ',')]
        normal: Vec<String>,
    },
    /// Emit every r with values at most MAX, one document per line.
    Enumerate {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 3)]
        max: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Valuation,
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PartnerR {
    /// r = r_f; the partner has all exponents ≥ 0.
    Rf,
    /// r = halve(r_f); anti-diagonal exponents lie in {0, 1}.
    Half,
}

#[derive(Debug, Subcommand)]
pub enum CocycleCmd {
    /// Idempotent cocycle e_r from an r-function.
    Er(Input),
    /// Valued cocycle b_r from an r-function (carries its seed).
    Br(Input),
    /// The exponent table of ε_r.
    EpsTable {
        #[command(flatten)]
        input: Input,
        /// Print exponents as integers.
        #[arg(long)]
        raw: bool,
    },
    /// Print any cocycle file as a table.
    Show(Input),
    /// Check normalization and the cocycle identity on all triples.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Level::Strict)]
        level: Level,
        /// Treat every u(σ) as 1.
        #[arg(long)]
        unramified: bool,
    },
    /// Split a seeded cocycle as c · b_r; emits r, writes c to --c-out.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        c_out: Option<PathBuf>,
        #[arg(long)]
        unramified: bool,
    },
    /// Valuation test v(f(σ,σ^-1)) ≤ 1 for all σ.
    Hereditary(Input),
    /// r_f(σ) = v(f(σ,σ^-1)).
    Rf(Input),
    /// h = f^-1 · b_r.
    Partner {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = PartnerR::Rf)]
        r: PartnerR,
    },
    /// Lift an idempotent cocycle on G/N to G.
    Inflate {
        #[command(flatten)]
        input: Input,
        /// Parent group file.
        #[arg(long)]
        parent: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        normal: Vec<String>,
    },
    /// Push an idempotent cocycle on G down to G/N.
    Deflate {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        normal: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum DotModeArg {
    Coset,
    Expanded,
}

#[derive(Debug, Subcommand)]
pub enum PosetCmd {
    /// Poset of an r-function.
    FromR(Input),
    /// Poset of an idempotent cocycle.
    FromE(Input),
    /// Check the poset axioms and lower subtractivity.
    Verify(Input),
    /// Graphviz rendering of the Hasse diagram.
    Dot {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = DotModeArg::Coset)]
        mode: DotModeArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum CheckCmd {
    /// Run the full property suite for one preset group.
    All {
        preset: Preset,
        n: usize,
        #[arg(long, default_value_t = 3)]
        max: u32,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Random pairs for the product law.
        #[arg(long, default_value_t = 200)]
        pairs: usize,
    },
}
