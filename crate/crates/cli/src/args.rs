use clap::{Args, Parser, Subcommand, ValueEnum};
use hurwitz_asym::MMode;

#[derive(Debug, Parser)]
#[command(
    name = "hurwitz-asym",
    version,
    about = "Large-t evaluation of the Hurwitz zeta function zeta_1(x, s) = sum_{n>=1} (n+x)^-s",
    long_about = "Large-t evaluation of the Hurwitz zeta function zeta_1(x, s) = sum_{n>=1} (n+x)^-s \
                  by a finite asymptotic series with a certified error bound.\n\n\
                  Domain: x >= 0, 0 < sigma <= 1, t > 0. Data goes to stdout, diagnostics to stderr.\n\
                  Exit codes: 0 success, 2 invalid parameters, 3 numerical failure.\n\
                  Set HURWITZ_ASYM_PRECISION=double|extended to choose the working precision."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Asymptotic value with its per-piece breakdown and error bound.
    Eval(EvalArgs),
    /// Euler-Maclaurin reference value.
    Reference(ReferenceArgs),
    /// Quadrature check of the exact eta-representation against the reference.
    VerifyExact(VerifyExactArgs),
    /// Quadrature check of the alpha-representation against the reference.
    VerifyAlpha(VerifyAlphaArgs),
    /// Lower-ray integral by quadrature against its boundary-term expansion.
    VerifyGl(VerifyGlArgs),
    /// Error against the reference for N = 1..N-max.
    SweepN(SweepNArgs),
    /// Admissibility and error over a grid of eta values.
    SweepEta(SweepEtaArgs),
    /// Error over a grid of t with the fitted log-log slope.
    Scaling(ScalingArgs),
    /// Wall time of the asymptotic series against the reference.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Output {
    #[default]
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    /// M from the dropped-tail tolerance (default: the error bound).
    #[default]
    Tolerance,
    /// M = ceil(x + max(1, eta^(N-1), eta^N / |sin(eta/2)|)).
    ClosedForm,
}

impl From<ModeArg> for MMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Tolerance => MMode::ToleranceTargeted,
            ModeArg::ClosedForm => MMode::ClosedForm,
        }
    }
}

#[derive(Clone, Debug, Args)]
pub struct PointArgs {
    /// Shift x >= 0.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub x: f64,
    /// Real part of s, 0 < sigma <= 1.
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    pub sigma: f64,
    /// Imaginary part of s, t > 0.
    #[arg(long, allow_negative_numbers = true)]
    pub t: f64,
    #[arg(long, value_enum, default_value_t = Output::Csv)]
    pub output: Output,
}

#[derive(Clone, Debug, Args)]
pub struct SeriesArgs {
    /// Separation parameter; every (x+n)*eta must stay more than eps*t away from t.
    /// For integer x the series needs eta > (1+eps)*t.
    #[arg(long, default_value_t = 1e-3, allow_negative_numbers = true)]
    pub eps: f64,
    #[arg(long = "m-mode", value_enum, default_value_t = ModeArg::Tolerance)]
    pub m_mode: ModeArg,
    /// Dropped-tail tolerance for the tolerance mode.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Explicit length of the correction series, overriding --m-mode.
    #[arg(long = "M")]
    pub m: Option<u64>,
    /// Refuse any M above this.
    #[arg(long = "m-cap", default_value_t = hurwitz_asym::admissibility::DEFAULT_M_CAP)]
    pub m_cap: u64,
}

#[derive(Clone, Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub point: PointArgs,
    /// Contour height eta > 0.
    #[arg(long, allow_negative_numbers = true)]
    pub eta: f64,
    /// Boundary terms per index, N >= 1.
    #[arg(long = "N", default_value_t = 2)]
    pub n: usize,
    #[command(flatten)]
    pub series: SeriesArgs,
}

#[derive(Clone, Debug, Args)]
pub struct ReferenceArgs {
    #[command(flatten)]
    pub point: PointArgs,
    /// Direct-sum cutoff K >= max(10, |s|); default max(10, ceil|s|) + 2J.
    #[arg(long = "K")]
    pub k: Option<u64>,
    /// Bernoulli corrections, at most 30.
    #[arg(long = "J", default_value_t = hurwitz_asym::oracles::MAX_J)]
    pub j: usize,
}

#[derive(Clone, Debug, Args)]
pub struct QuadArgs {
    /// Absolute quadrature tolerance.
    #[arg(long = "abs-tol", default_value_t = 1e-14)]
    pub abs_tol: f64,
    /// Relative quadrature tolerance.
    #[arg(long = "rel-tol", default_value_t = 1e-12)]
    pub rel_tol: f64,
    /// Direction of the ray from i*eta, |phi1| < pi/2.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub phi1: f64,
    /// Direction of the ray from -i*eta, |phi2| < pi/2.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub phi2: f64,
}

#[derive(Clone, Debug, Args)]
pub struct VerifyExactArgs {
    #[command(flatten)]
    pub point: PointArgs,
    /// Contour height, away from multiples of 2*pi; t <= 40.
    #[arg(long, allow_negative_numbers = true)]
    pub eta: f64,
    #[command(flatten)]
    pub quad: QuadArgs,
}

#[derive(Clone, Debug, Args)]
pub struct VerifyAlphaArgs {
    #[command(flatten)]
    pub point: PointArgs,
    /// Split point 0 < alpha < 2*pi.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub alpha: f64,
    #[command(flatten)]
    pub quad: QuadArgs,
}

#[derive(Clone, Debug, Args)]
pub struct VerifyGlArgs {
    #[command(flatten)]
    pub point: PointArgs,
    #[arg(long, allow_negative_numbers = true)]
    pub eta: f64,
    /// Boundary terms per index, N >= 1.
    #[arg(long = "N", default_value_t = 2)]
    pub n: usize,
    /// Correction-series length; default is the closed-form M.
    #[arg(long = "M")]
    pub m: Option<u64>,
    #[command(flatten)]
    pub quad: QuadArgs,
}

#[derive(Clone, Debug, Args)]
pub struct SweepNArgs {
    #[command(flatten)]
    pub point: PointArgs,
    #[arg(long, allow_negative_numbers = true)]
    pub eta: f64,
    /// Largest N in the sweep.
    #[arg(long = "N-max", default_value_t = 4)]
    pub n_max: usize,
    #[command(flatten)]
    pub series: SeriesArgs,
}

#[derive(Clone, Debug, Args)]
pub struct SweepEtaArgs {
    #[command(flatten)]
    pub point: PointArgs,
    #[arg(long = "eta-min", allow_negative_numbers = true)]
    pub eta_min: f64,
    #[arg(long = "eta-max", allow_negative_numbers = true)]
    pub eta_max: f64,
    /// Number of grid points, spaced evenly.
    #[arg(long, default_value_t = 11)]
    pub steps: usize,
    #[arg(long = "N", default_value_t = 2)]
    pub n: usize,
    #[command(flatten)]
    pub series: SeriesArgs,
}

#[derive(Clone, Debug, Args)]
pub struct ScalingArgs {
    /// Shift x >= 0.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub x: f64,
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    pub sigma: f64,
    /// Comma-separated t grid.
    #[arg(
        long = "t-values",
        value_delimiter = ',',
        default_value = "25,50,100,200"
    )]
    pub t_values: Vec<f64>,
    /// eta is the admissible value nearest eta-factor * t.
    #[arg(long = "eta-factor", default_value_t = 4.0)]
    pub eta_factor: f64,
    #[arg(long = "N", default_value_t = 2)]
    pub n: usize,
    #[arg(long, default_value_t = 0.5)]
    pub eps: f64,
    /// Largest accepted distance between the fitted slope and sigma - N - 1.
    #[arg(long = "slope-tol", default_value_t = 0.7)]
    pub slope_tol: f64,
    #[arg(long, value_enum, default_value_t = Output::Csv)]
    pub output: Output,
}

#[derive(Clone, Debug, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub point: PointArgs,
    /// Target contour height; the nearest admissible value is used.
    #[arg(long, default_value_t = 2500.0, allow_negative_numbers = true)]
    pub eta: f64,
    #[arg(long = "N", default_value_t = 2)]
    pub n: usize,
    #[command(flatten)]
    pub series: SeriesArgs,
    /// Timing runs per method; the best is reported.
    #[arg(long, default_value_t = 3)]
    pub repeats: usize,
    /// Smallest speedup reported as a pass.
    #[arg(long = "min-speedup", default_value_t = 50.0)]
    pub min_speedup: f64,
}
