use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "rama",
    version,
    about = "Exact expansion coefficients, asymptotic expansions and reference values for truncated exponential sums"
)]
pub struct Cli {
    /// Decimal digits for numeric output.
    #[arg(long, global = true, env = "RAMA_PRECISION", default_value_t = 50)]
    pub digits: u32,

    /// Output format (JSON unless the command says otherwise).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact coefficient of an expansion.
    Coeff(CoeffArgs),
    /// Truncated asymptotic expansion at a point.
    Eval(EvalArgs),
    /// Reference value from finite sums and convergent series.
    Oracle(OracleArgs),
    /// Region of the w-plane containing a point.
    Classify(ClassifyArgs),
    /// Points on the curve |w e^(1-w)| = 1.
    Szego(SzegoArgs),
    /// Run a verification suite; exits 1 if any check fails.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Rho,
    Gamma,
    #[value(name = "U", alias = "u")]
    U,
    Tau,
    Psi,
    Beta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CoeffMode {
    Plain,
    Tilde,
    Uj,
    Uj2,
    Knuth,
    Carlitz,
}

#[derive(Args, Debug)]
pub struct CoeffArgs {
    #[arg(value_enum)]
    pub family: Family,
    /// Index r (or s for beta).
    #[arg(long)]
    pub r: usize,
    /// Evaluate at this rational (or Gaussian rational) v.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "symbolic_v")]
    pub v: Option<String>,
    /// Keep v symbolic (the default when --v is absent).
    #[arg(long, alias = "symbolic")]
    pub symbolic_v: bool,
    /// Evaluate U at this Gaussian rational w, e.g. 1/2+1/4i.
    #[arg(long, allow_hyphen_values = true)]
    pub w: Option<String>,
    #[arg(long, value_enum, default_value_t = CoeffMode::Plain)]
    pub mode: CoeffMode,
    /// Truncation degree for the carlitz mode.
    #[arg(long, default_value_t = 10)]
    pub order: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EvalTarget {
    Theta,
    Gamma,
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "T", alias = "t")]
    T,
    Psi,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[arg(value_enum)]
    pub target: EvalTarget,
    /// Positive rational n.
    #[arg(long)]
    pub n: String,
    /// v (Gaussian rational; an integer for psi).
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub v: String,
    /// w for S and T.
    #[arg(long, allow_hyphen_values = true)]
    pub w: Option<String>,
    /// Number of terms R.
    #[arg(long, default_value_t = 4)]
    pub terms: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleTarget {
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "T", alias = "t")]
    T,
    Theta,
    Psi,
    GammaFactorial,
    #[value(name = "Ei", alias = "ei")]
    Ei,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(value_enum)]
    pub target: OracleTarget,
    #[arg(long)]
    pub n: u64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub v: i64,
    /// Gaussian rational w for S and T.
    #[arg(long, allow_hyphen_values = true)]
    pub w: Option<String>,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    /// Gaussian rational w, e.g. -1/2+3/2i.
    #[arg(long, allow_hyphen_values = true)]
    pub w: String,
    /// Half-width of the boundary band (default 1e-20).
    #[arg(long)]
    pub epsilon: Option<String>,
}

#[derive(Args, Debug)]
pub struct SzegoArgs {
    /// Smallest t; the curve's edge -W(1/e) when absent.
    #[arg(long, allow_hyphen_values = true)]
    pub t_min: Option<String>,
    #[arg(long, default_value = "3", allow_hyphen_values = true)]
    pub t_max: String,
    /// Spacing in t (needs --t-min).
    #[arg(long, requires = "t_min")]
    pub step: Option<String>,
    /// Number of points from the edge when --t-min is absent.
    #[arg(long, default_value_t = 200)]
    pub count: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Identities,
    Conjecture,
    Convergence,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 25)]
    pub max_r: usize,
}
