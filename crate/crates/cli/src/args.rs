use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "combrep", version, about = "Exact computations in algebraic combinatorics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Schur and Hall-Littlewood polynomials
    #[command(subcommand)]
    Poly(PolyCmd),
    /// RSK and skew RSK
    #[command(subcommand)]
    Rsk(RskCmd),
    /// Crystal operators on words, tableaux and biwords
    #[command(subcommand)]
    Crystal(CrystalCmd),
    /// Lambda-chains, admissible pairs and compression
    #[command(subcommand)]
    Alcove(AlcoveCmd),
    /// Differential posets, sl2 structures and the Peck property
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Representation diagrams and Gelfand-Tsetlin lattices
    #[command(subcommand)]
    Repdiag(RepdiagCmd),
    /// Stable graded multiplicities
    #[command(subcommand)]
    Mult(MultCmd),
    /// Acceptance suite
    #[command(subcommand)]
    Verify(VerifyCmd),
}

/// A partition as comma-separated parts; trailing zeros set the number of
/// variables when `--n` is omitted.
#[derive(Args, Debug, Clone)]
pub struct ShapeArgs {
    #[arg(long)]
    pub shape: String,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum HlMethod {
    RamYip,
    Tableau,
    Aggregate,
}

#[derive(Subcommand, Debug)]
pub enum PolyCmd {
    /// s_λ(x_1, …, x_n)
    Schur(ShapeArgs),
    /// P_λ(x_1, …, x_n; t)
    Hl {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value = "ram-yip")]
        method: HlMethod,
    },
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    #[arg(long, default_value_t = 3)]
    pub rows: u32,
    #[arg(long, default_value_t = 3)]
    pub cols: u32,
    #[arg(long, default_value_t = 4)]
    pub max_sum: u32,
}

#[derive(Subcommand, Debug)]
pub enum RskCmd {
    /// Insert a matrix or biword; `--t`/`--u` select skew RSK
    Run {
        /// Matrix JSON, inline or a file path
        #[arg(long, conflicts_with = "biword")]
        matrix: Option<String>,
        /// Biword such as "1,2 1,2 2,1"
        #[arg(long)]
        biword: Option<String>,
        /// Initial insertion tableau (skew mode)
        #[arg(long)]
        t: Option<String>,
        /// Initial recording tableau (skew mode)
        #[arg(long)]
        u: Option<String>,
    },
    /// Recover the input from (P, Q); skew tableaux give (biword, T, U)
    Invert {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
    },
    /// Round trip and RSK(Aᵀ) = (Q, P) over a bounded matrix family
    VerifyTranspose(FamilyArgs),
    /// Skew Cauchy identity in nx + ny variables up to a total degree
    VerifyCauchy {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long, default_value_t = 2)]
        nx: usize,
        #[arg(long, default_value_t = 2)]
        ny: usize,
        #[arg(long, default_value_t = 3)]
        degree: u32,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CrystalOp {
    F,
    E,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Subcommand, Debug)]
pub enum CrystalCmd {
    /// Apply f̃_i or ẽ_i; prints 0 when the operator is undefined
    Apply {
        #[arg(long, conflicts_with_all = ["tableau", "biword"])]
        word: Option<String>,
        #[arg(long, conflicts_with = "biword")]
        tableau: Option<String>,
        #[arg(long)]
        biword: Option<String>,
        /// Side of the biword to act on (f only)
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
        #[arg(long)]
        i: u32,
        #[arg(long, value_enum, default_value = "f")]
        op: CrystalOp,
    },
    /// RSK intertwines biword and tableau crystal operators
    VerifyRsk {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_delimiter = ',', default_values_t = [1, 2])]
        colors: Vec<u32>,
    },
}

#[derive(Subcommand, Debug)]
pub enum AlcoveCmd {
    /// The λ-chain, blocks separated by `|`
    Chain(ShapeArgs),
    /// List admissible pairs, or test one pair given by `--w` and `--subword`
    Admissible {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Permutation in one-line notation, e.g. 1234
        #[arg(long, requires = "subword")]
        w: Option<String>,
        /// Subword of the chain, e.g. "(1,3) | (1,4)"
        #[arg(long)]
        subword: Option<String>,
    },
    /// Per-tableau compression of the alcove sum
    Compress {
        #[command(flatten)]
        shape: ShapeArgs,
        /// Also print the aggregate of every filling
        #[arg(long)]
        aggregates: bool,
    },
}

/// Where a poset comes from: a JSON file or a built-in family.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct PosetSource {
    /// Poset JSON, inline or a file path
    #[arg(long)]
    pub poset: Option<String>,
    /// Young's lattice up to this rank
    #[arg(long)]
    pub young: Option<usize>,
    /// Boolean lattice B_n
    #[arg(long)]
    pub boolean: Option<usize>,
    /// Chain with k covers
    #[arg(long)]
    pub chain: Option<usize>,
}

/// sl2 operators; required for `--poset` and `--young`, built in otherwise.
#[derive(Args, Debug, Clone)]
pub struct OperatorArgs {
    /// Operator JSON for X, inline or a file path
    #[arg(long, requires = "y")]
    pub x: Option<String>,
    /// Operator JSON for Y, inline or a file path
    #[arg(long, requires = "x")]
    pub y: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum PosetCmd {
    /// DU − UD = r·Id on the given ranks
    CheckDifferential {
        #[command(flatten)]
        source: PosetSource,
        #[arg(long, default_value_t = 1)]
        r: i64,
        /// Ranks to check, e.g. 0-5 or 0,2,3; defaults to all but the top rank
        #[arg(long)]
        ranks: Option<String>,
    },
    /// X raises, Y lowers, and [X, Y] acts as (2i − n) on rank i
    CheckSl2 {
        #[command(flatten)]
        source: PosetSource,
        #[command(flatten)]
        ops: OperatorArgs,
    },
    /// Rank symmetry, unimodality and the strong Sperner property
    CheckPeck {
        #[command(flatten)]
        source: PosetSource,
    },
    /// Σ q^h over the eigenvalues of [X, Y]
    Character {
        #[command(flatten)]
        source: PosetSource,
        #[command(flatten)]
        ops: OperatorArgs,
    },
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct DiagramSource {
    /// Diagram JSON, inline or a file path
    #[arg(long)]
    pub diagram: Option<String>,
    /// Build the GT lattice of this shape (with `--n`)
    #[arg(long, requires = "n")]
    pub gt_shape: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct DiagramArgs {
    #[command(flatten)]
    pub source: DiagramSource,
    #[arg(long)]
    pub n: Option<usize>,
    /// Cartan matrix as JSON rows, inline or a file path; defaults to type A
    #[arg(long)]
    pub cartan: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum RepdiagCmd {
    /// l_i, ρ_i and m_i for every element
    Weights(DiagramArgs),
    /// Structure, crossing and diamond conditions
    Check(DiagramArgs),
    /// Find edge labels; prints the labeled diagram JSON
    Solve(DiagramArgs),
    /// Bracket and Serre relations of the generated matrices
    Verify(DiagramArgs),
    /// The GT lattice as diagram JSON
    Gt(ShapeArgs),
}

#[derive(Subcommand, Debug)]
pub enum MultCmd {
    /// G_{αβ}(q) up to q^degree
    Stable {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        degree: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Run every acceptance check
    All {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = combrep_core::suite::DEFAULT_SEED)]
        seed: u64,
        /// Worker threads; 0 uses all cores
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}
