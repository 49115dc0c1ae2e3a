use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("degenerate mass: {0}")]
    DegenerateMass(&'static str),

    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("argument outside domain: {0}")]
    Domain(String),

    #[error("loop integral is logarithmically singular at z = 0")]
    LogSingularity,

    #[error("quadrature did not reach tolerance {target:e}: estimate {estimate} with error {achieved:e}")]
    Tolerance {
        target: f64,
        achieved: f64,
        estimate: f64,
    },

    #[error("scattering denominator vanishes (resonance pole) at k = {k}")]
    ResonancePole { k: f64 },

    #[error("root finder failed: {0}")]
    Solver(String),

    #[error("eigensolver did not converge after {iterations} iterations (best estimate {estimate}, residual {residual:e})")]
    Eigensolver {
        iterations: usize,
        estimate: f64,
        residual: f64,
    },

    #[error("no matching cutoff in search bracket [{lo:e}, {hi:e}]")]
    Calibration { lo: f64, hi: f64 },

    #[error("basis dimension {required} exceeds cap {cap}")]
    BasisTooLarge { required: u128, cap: usize },

    #[error("boost speed |u| = {u} is not below c = {c}")]
    SuperluminalBoost { u: f64, c: f64 },

    #[error("config line {line}: {msg}")]
    ConfigParse { line: usize, msg: String },

    #[error("config validation: {0}")]
    ConfigValidation(String),

    #[error("table contract violated: {0}")]
    TableContract(String),

    #[error("i/o error on {path}: {msg}")]
    Io { path: String, msg: String },
}

impl Error {
    /// Process exit code for the command-line frontend.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ConfigParse { .. } | Error::ConfigValidation(_) => 2,
            Error::Io { .. } => 4,
            _ => 3,
        }
    }
}
