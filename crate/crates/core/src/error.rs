use thiserror::Error;

/// Every failure mode of the library.
///
/// The variant name doubles as the diagnostic tag printed by the command line
/// front end, see [`Error::name`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole of the gamma function at {0}")]
    Pole(f64),

    #[error("result magnitude exp({log_magnitude}) is not representable")]
    Overflow { log_magnitude: f64 },

    #[error("singular denominator: |xi*z - i*t| = {modulus:e} is below the floor {floor:e}")]
    SingularDenominator { modulus: f64, floor: f64 },

    #[error("coefficient table holds orders up to {max_n}, order {requested} requested")]
    TableTooSmall { max_n: usize, requested: usize },

    #[error("eta = {eta} is inadmissible: worst n = {worst_n}, margin = {margin:e}")]
    Inadmissible { eta: f64, worst_n: i64, margin: f64 },

    #[error("no admissible eta within 50% of {target} (eps = {eps})")]
    NoAdmissibleEta { target: f64, eps: f64 },

    #[error("eta = {eta} resonates with a multiple of 2*pi (|sin(eta/2)| = {sin_half:e})")]
    Resonance { eta: f64, sin_half: f64 },

    #[error("series truncation M = {m:e} exceeds the cap {cap}")]
    MCapExceeded { m: f64, cap: u64 },

    #[error("regime not supported: {0}")]
    Regime(String),

    #[error("eta = {eta} sits on the regime threshold {threshold}")]
    ThresholdBoundary { eta: f64, threshold: f64 },

    #[error("reference precision not met: error estimate {estimate:e} vs |value| {magnitude:e}")]
    Precision { estimate: f64, magnitude: f64 },

    #[error("quadrature tolerance not met: error estimate {estimate:e} after {subdivisions} subdivisions")]
    Tolerance { estimate: f64, subdivisions: usize },

    #[error("contour passes within {distance:e} of the pole 2*pi*i*{m}")]
    PoleProximity { m: i64, distance: f64 },
}

impl Error {
    /// Short stable name of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::Domain(_) => "Domain",
            Error::Pole(_) => "Pole",
            Error::Overflow { .. } => "Overflow",
            Error::SingularDenominator { .. } => "SingularDenominator",
            Error::TableTooSmall { .. } => "TableTooSmall",
            Error::Inadmissible { .. } => "Inadmissible",
            Error::NoAdmissibleEta { .. } => "NoAdmissibleEta",
            Error::Resonance { .. } => "Resonance",
            Error::MCapExceeded { .. } => "MCapExceeded",
            Error::Regime(_) => "Regime",
            Error::ThresholdBoundary { .. } => "ThresholdBoundary",
            Error::Precision { .. } => "Precision",
            Error::Tolerance { .. } => "Tolerance",
            Error::PoleProximity { .. } => "PoleProximity",
        }
    }

    /// True when the error stems from caller-supplied parameters rather than
    /// from a numerical failure during evaluation.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidParameter(_)
                | Error::Domain(_)
                | Error::Pole(_)
                | Error::TableTooSmall { .. }
                | Error::Inadmissible { .. }
                | Error::NoAdmissibleEta { .. }
                | Error::Resonance { .. }
                | Error::Regime(_)
                | Error::ThresholdBoundary { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
