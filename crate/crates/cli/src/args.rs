//! Argument grammar.

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "hookline", version, about = "Symbols, hyperoctahedral characters, unipotent degrees, flags and small group tables")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Print the payload as compact JSON instead of the text rendering.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for the parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Seed for the randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// JSON file overriding the audit ranges.
    #[arg(long, global = true)]
    pub caps: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Arrays and symbols.
    #[command(subcommand)]
    Symbol(SymbolCmd),
    /// Hook/Fourier identity sweeps.
    #[command(subcommand)]
    Asai(AsaiCmd),
    /// Characters of the hyperoctahedral group.
    #[command(subcommand)]
    Weyl(WeylCmd),
    /// Unipotent degrees.
    #[command(subcommand)]
    Degree(DegreeCmd),
    /// Kostka numbers, flags and the level-n pipeline.
    #[command(subcommand)]
    Young(YoungCmd),
    /// Flag counts (same as `young flags` / `young stable`).
    #[command(subcommand)]
    Flags(FlagsCmd),
    /// Matrix groups over finite fields and their character tables.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Acceptance checks.
    #[command(subcommand)]
    Audit(AuditCmd),
}

#[derive(Debug, Subcommand)]
pub enum SymbolCmd {
    /// Rank and defect of an array such as "{1|0}".
    Rank { array: String },
    /// Defect of an array.
    Defect { array: String },
    /// The similarity class Sim(X).
    Sim { array: String },
    /// Fourier transform R̃ (or its parity component R̃_e).
    Fourier {
        array: String,
        #[arg(long)]
        parity: Option<u8>,
    },
    /// The special array of X with the ♯-map, s(X) and d(X).
    Special { array: String },
}

#[derive(Debug, Subcommand)]
pub enum AsaiCmd {
    /// Exhaustive sweep of the commutation identities.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_entry: u32,
        #[arg(long, default_value_t = 5)]
        max_union: usize,
        #[arg(long)]
        max_rank: Option<u64>,
        #[arg(long, default_value_t = 6)]
        d_max: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum WeylCmd {
    /// Signed cycle types of rank n with centralizer orders.
    Classes {
        #[arg(long)]
        n: u32,
    },
    /// The ρ table for defect 0 or 1.
    Char {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        defect: i64,
        /// Render as CSV instead of the default text.
        #[arg(long)]
        csv: bool,
    },
    /// φ on one symbol and class by both routes, or the full cross-route sweep.
    Phi {
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        symbol: Option<String>,
        #[arg(long)]
        class: Option<String>,
    },
    /// Orthogonality, φ routes and character bounds at rank n.
    Audit {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum DegreeCmd {
    /// Degree of one label: `--lambda` for A / 2A, `--symbol` for B, C, D, 2D.
    Eval {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        symbol: Option<String>,
        #[arg(long)]
        lambda: Option<String>,
    },
    /// All labels of a kind and rank with their degrees.
    Enumerate {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        rank: u64,
        #[arg(long)]
        q: u64,
    },
    /// Number of labels with degree at most D, with the per-label audits.
    Count {
        #[arg(long)]
        kind: String,
        #[arg(long)]
        rank: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        max: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum YoungCmd {
    /// K_{λμ}.
    Kostka {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Nonzero coefficients c_μ with χ_λ = Σ c_μ φ_μ.
    Inverse {
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 4)]
        cap: u32,
    },
    /// F_a(N) with its bounds.
    Flags(FlagCountArgs),
    /// g-stable flags and ε.
    Stable(StableArgs),
    /// χ_λ(g) through the flag pipeline, λ₁ = N − n with n ≤ 4.
    Lowa {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        eig: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum FlagsCmd {
    Count(FlagCountArgs),
    Stable(StableArgs),
}

#[derive(Debug, Args)]
pub struct FlagCountArgs {
    /// Flag dimensions a_1 < … < a_k.
    #[arg(long)]
    pub a: String,
    #[arg(long = "N")]
    pub n: u32,
    #[arg(long)]
    pub q: u64,
}

#[derive(Debug, Args)]
pub struct StableArgs {
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub q: u64,
    /// `1:39,c:1` (eigenvalue:multiplicity, c primitive) or `J2+J2`, `J3`, `C2`.
    #[arg(long)]
    pub eig: String,
    /// Ambient dimension; implied by the multiplicities for split elements.
    #[arg(long = "N")]
    pub n: Option<u32>,
    /// Also count by enumeration (small q^N only).
    #[arg(long)]
    pub brute: bool,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub q: u64,
}

#[derive(Debug, Subcommand)]
pub enum GroupCmd {
    /// Order and conjugacy classes.
    Build(GroupArgs),
    /// The character table with its validation.
    Table(GroupArgs),
    /// supp(x) for a matrix file, checked on random conjugates in GL_n(q).
    Support {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value_t = 16)]
        conjugates: usize,
    },
    /// Frobenius class-product counts, all triples cross-checked by convolution.
    Frobenius {
        #[command(flatten)]
        group: GroupArgs,
        /// Classes c1,c2,c3 for a single count.
        #[arg(long)]
        classes: Option<String>,
    },
    /// Which classes lie in C·C.
    Thompson {
        #[command(flatten)]
        group: GroupArgs,
        /// Use the class of the Coxeter-torus generator.
        #[arg(long)]
        torus: bool,
        /// Use this class index instead.
        #[arg(long)]
        class: Option<usize>,
    },
    /// Σ over cuspidal χ of χ(t)²χ(z) against p(1 − q)χ(1).
    Cancel {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum AuditCmd {
    /// Every acceptance criterion in order.
    All,
    /// Validate a character table stored as JSON.
    Table { file: PathBuf },
}
