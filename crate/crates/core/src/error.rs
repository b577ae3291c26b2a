use thiserror::Error;

/// Everything that can go wrong while building, counting or verifying.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coefficient `{0}` must be non-zero")]
    ZeroCoefficient(&'static str),

    #[error("exponents must satisfy n > m >= 1 (got n = {n}, m = {m})")]
    BadExponents { n: u32, m: u32 },

    #[error("|{name}| = {modulus:e} is outside the supported range [1e-8, 1e8]")]
    CoefficientOutOfRange { name: &'static str, modulus: f64 },

    #[error("coefficient `{0}` is not finite")]
    NonFinite(&'static str),

    #[error("side lengths do not form a triangle at r = {radius}")]
    NotATriangle { radius: f64 },

    #[error("radius {radius} lies outside the triangle region")]
    OutsideRegion { radius: f64 },

    #[error("could not bracket a sign change for {what}")]
    BracketFailure { what: &'static str },

    #[error("exponents n = {n}, m = {m} are not coprime; reduce them first")]
    NonCoprime { n: u32, m: u32 },

    #[error("no circle root passed the residual filter at radius {radius}")]
    NoCandidate { radius: f64 },

    #[error("perturbed instances disagree near radius {radius} ({plus} vs {minus} events)")]
    FallbackDisagreement { radius: f64, plus: usize, minus: usize },

    #[error("root {re} + {im}i is singular (|J| = {jacobian:e})")]
    SingularRoot { re: f64, im: f64, jacobian: f64 },

    #[error("oracle grid densification failed to stabilise (found {found} roots)")]
    GridExhausted { found: usize },

    #[error("invalid radius {0}: must be positive and finite")]
    BadRadius(f64),
}

impl Error {
    /// Variant name, used as a stable tag in CLI diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroCoefficient(_) => "ZeroCoefficient",
            Error::BadExponents { .. } => "BadExponents",
            Error::CoefficientOutOfRange { .. } => "CoefficientOutOfRange",
            Error::NonFinite(_) => "NonFinite",
            Error::NotATriangle { .. } => "NotATriangle",
            Error::OutsideRegion { .. } => "OutsideRegion",
            Error::BracketFailure { .. } => "BracketFailure",
            Error::NonCoprime { .. } => "NonCoprime",
            Error::NoCandidate { .. } => "NoCandidate",
            Error::FallbackDisagreement { .. } => "FallbackDisagreement",
            Error::SingularRoot { .. } => "SingularRoot",
            Error::GridExhausted { .. } => "GridExhausted",
            Error::BadRadius(_) => "BadRadius",
        }
    }

    /// True when the instance or query itself was rejected, as opposed to a
    /// numerical failure further down the pipeline.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::ZeroCoefficient(_)
                | Error::BadExponents { .. }
                | Error::CoefficientOutOfRange { .. }
                | Error::NonFinite(_)
                | Error::BadRadius(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
