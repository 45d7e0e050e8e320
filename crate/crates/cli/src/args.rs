use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use braid_dcp::simconj::DEFAULT_BUDGET;

/// Braid words are space-separated signed generator indices (`"1 -2 3"`),
/// or `sK` / `sK^-1` tokens. Quote them as a single argument.
#[derive(Debug, Parser)]
#[command(name = "braid-dcp", version, about = "Braid group normal forms, conjugacy and double coset decisions")]
pub struct Cli {
    /// Emit one JSON record instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Node budget for conjugacy searches, or element budget for oracles.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,

    /// Worker threads for conjugacy searches.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Strands {
    /// Number of strands.
    #[arg(long = "n", short = 'n')]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct Block {
    /// Block bounds `k l` of `B_[k,l]`.
    #[arg(long, num_args = 2, value_names = ["K", "L"])]
    pub interval: Vec<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Left normal form `Δ^p x₁ ⋯ x_r`.
    Nf {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Word problem: are two words the same braid?
    Eq {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Permutation induced on the strands.
    Perm {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Algebraic crossing number of a strand pair, or the whole matrix.
    Cross {
        #[command(flatten)]
        strands: Strands,
        #[arg(long, num_args = 2, value_names = ["I", "J"])]
        pair: Option<Vec<usize>>,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// The block-swap braid `τ_{p,q}`.
    Tau {
        #[command(flatten)]
        strands: Strands,
        p: usize,
        q: usize,
    },
    /// Membership in `α·B_[k,l]·α⁻¹`, or in `⟨Δ²⟩·B_[k,l]` with `--center`.
    Member {
        #[command(flatten)]
        strands: Strands,
        #[command(flatten)]
        block: Block,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        alpha: String,
        #[arg(long, conflicts_with = "alpha")]
        center: bool,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Generators of the centralizer of `B_[k,l]`.
    Centralizer {
        #[command(flatten)]
        strands: Strands,
        #[command(flatten)]
        block: Block,
    },
    /// Finds `x` with `x⁻¹ u x = v`.
    Conj {
        #[command(flatten)]
        strands: Strands,
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Finds one `x` with `x⁻¹ s_i x = t_i` for two tuple files.
    Simconj { s: PathBuf, t: PathBuf },
    /// Decides a double coset instance file.
    Dcp { instance: PathBuf },
    /// Bounded brute-force deciders.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Searches `a`, `b` up to the length bound.
    Dcp {
        instance: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Searches a conjugator up to the length bound.
    Conj {
        #[command(flatten)]
        strands: Strands,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Searches a word in the block generators equal to the input.
    Member {
        #[command(flatten)]
        strands: Strands,
        #[command(flatten)]
        block: Block,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Samples words and checks that commuting with the centralizer means
    /// lying in `⟨Δ²⟩·B_[k,l]`.
    DoubleCentralizer {
        #[command(flatten)]
        strands: Strands,
        #[command(flatten)]
        block: Block,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}
