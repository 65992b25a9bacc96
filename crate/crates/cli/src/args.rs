use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qgamma::bounds::LinearRange;
use qgamma::cmcheck::{GridSpec, Spacing, Tolerances};
use qgamma::kernels::{Params, ScanGrid};

#[derive(Debug, Parser)]
#[command(
    name = "qgamma",
    version,
    about = "Evaluate gamma and q-gamma functions and check complete-monotonicity claims numerically",
    after_help = "Exit codes: 0 = all expectations met, 1 = a mathematical expectation failed, 2 = usage or domain error."
)]
pub struct Cli {
    /// Plain-text file of `flag=value` lines used as defaults; command-line flags win
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one special function with its truncation-error bound
    Eval(EvalArgs),
    /// Check complete-monotonicity claims of registered cases
    Verify(VerifyArgs),
    /// Sample a proof kernel w(t) and count its sign changes
    ScanKernel(ScanArgs),
    /// Evaluate two-sided gamma-ratio bounds and complex modulus bounds
    Bounds(BoundsArgs),
    /// Tabulate |Γ_q(x) - Γ(x)| as q increases towards 1
    QLimitTable(QLimitArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EvalFn {
    Gamma,
    LogGamma,
    Psi,
    PsiN,
    GammaQ,
    LogGammaQ,
    PsiQ,
    #[value(name = "psi-q-n")]
    PsiQN,
    #[value(name = "dilog-F", alias = "dilog-f")]
    DilogF,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct EvalArgs {
    #[arg(value_enum)]
    pub function: EvalFn,
    #[arg(long)]
    pub x: f64,
    #[arg(long)]
    pub q: Option<f64>,
    /// Derivative order for psi-n and psi-q-n
    #[arg(long)]
    pub n: Option<usize>,
    #[command(flatten)]
    pub eval_cfg: EvalCfgArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct EvalCfgArgs {
    /// Relative truncation tolerance of the series evaluators
    #[arg(long)]
    pub rel_tol: Option<f64>,
    /// Maximum number of series terms
    #[arg(long)]
    pub max_terms: Option<usize>,
    /// Largest q accepted by the q-series evaluators
    #[arg(long)]
    pub q_series_max: Option<f64>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write CSV here instead of standard output
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

/// Case and kernel parameters.
#[derive(Debug, Args, Default)]
pub struct ParamArgs {
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long)]
    pub b: Option<f64>,
    #[arg(long)]
    pub c: Option<f64>,
    #[arg(long)]
    pub s: Option<f64>,
    #[arg(long)]
    pub q: Option<f64>,
    /// Comma-separated shifts a_1,...,a_n
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub a_list: Option<Vec<f64>>,
}

impl ParamArgs {
    pub fn to_params(&self) -> Params {
        let mut p = Params::new();
        for (name, v) in [
            ("alpha", self.alpha),
            ("a", self.a),
            ("b", self.b),
            ("c", self.c),
            ("s", self.s),
            ("q", self.q),
        ] {
            if let Some(v) = v {
                p.set(name, v);
            }
        }
        if let Some(list) = &self.a_list {
            p.set_list(list.clone());
        }
        p
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpacingArg {
    Linear,
    Geometric,
}

/// Grid offsets are measured from the left end of each case's interval.
#[derive(Debug, Args)]
pub struct GridArgs {
    /// Smallest grid offset from the interval's left end
    #[arg(long)]
    pub x_min: Option<f64>,
    /// Largest grid offset from the interval's left end
    #[arg(long)]
    pub x_max: Option<f64>,
    #[arg(long)]
    pub points: Option<usize>,
    #[arg(long, value_enum)]
    pub spacing: Option<SpacingArg>,
    /// Comma-separated difference steps
    #[arg(long, value_delimiter = ',')]
    pub h_set: Option<Vec<f64>>,
    #[arg(long)]
    pub max_order: Option<usize>,
    #[arg(long)]
    pub tol_abs: Option<f64>,
    #[arg(long)]
    pub tol_rel: Option<f64>,
}

impl GridArgs {
    pub fn grid(&self) -> GridSpec {
        let d = GridSpec::default();
        GridSpec {
            x_min: self.x_min.unwrap_or(d.x_min),
            x_max: self.x_max.unwrap_or(d.x_max),
            points: self.points.unwrap_or(d.points),
            spacing: match self.spacing {
                Some(SpacingArg::Linear) => Spacing::Linear,
                Some(SpacingArg::Geometric) => Spacing::Geometric,
                None => d.spacing,
            },
            origin: d.origin,
            h_set: self.h_set.clone().unwrap_or(d.h_set),
            max_order: self.max_order.unwrap_or(d.max_order),
        }
    }

    pub fn tolerances(&self) -> Tolerances {
        let d = Tolerances::default();
        Tolerances {
            abs: self.tol_abs.unwrap_or(d.abs),
            rel: self.tol_rel.unwrap_or(d.rel),
        }
    }
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct VerifyArgs {
    /// Case id, or `all` for every case at its sample parameters plus the
    /// seeded sampling checks
    pub case: String,
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Seed for the sampled checks
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct ScanArgs {
    pub kernel: String,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long)]
    pub t_min: Option<f64>,
    #[arg(long)]
    pub t_max: Option<f64>,
    #[arg(long)]
    pub t_points: Option<usize>,
    #[command(flatten)]
    pub out: OutputArgs,
}

impl ScanArgs {
    pub fn grid(&self) -> ScanGrid {
        let d = ScanGrid::default();
        ScanGrid {
            t_min: self.t_min.unwrap_or(d.t_min),
            t_max: self.t_max.unwrap_or(d.t_max),
            points: self.t_points.unwrap_or(d.points),
            ..d
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundName {
    Gautschi,
    KershawPsi,
    KershawPower,
    QSandwich,
    Rademacher,
    BetaComplex,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct BoundsArgs {
    #[arg(value_enum)]
    pub name: BoundName,
    #[arg(long, value_delimiter = ',')]
    pub n: Option<Vec<u64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub x: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    pub s: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',')]
    pub q: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub c: Option<Vec<f64>>,
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long)]
    pub b: Option<f64>,
    /// Real parts of s
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub re: Option<Vec<f64>>,
    /// Imaginary parts of s
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub im: Option<Vec<f64>>,
    /// Real parts of s as lo:hi:count
    #[arg(long, allow_hyphen_values = true)]
    pub sigma_grid: Option<LinearRange>,
    /// Imaginary parts of s as lo:hi:count
    #[arg(long, allow_hyphen_values = true)]
    pub tau_grid: Option<LinearRange>,
    /// Draw this many admissible quasi-random arguments instead of taking them from flags
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct QLimitArgs {
    #[arg(long, value_delimiter = ',', default_values_t = [0.5, 1.0, 1.5, 2.5])]
    pub x: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_values_t = [0.9, 0.99, 0.999])]
    pub q: Vec<f64>,
    #[command(flatten)]
    pub eval_cfg: EvalCfgArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}
