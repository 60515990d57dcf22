//! Error type shared by all modules, with stable CLI exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown group spec `{0}`")]
    InvalidGroup(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("level k={k} below dual Coxeter number h∨={h_dual}: empty quantum space regime")]
    LevelTooSmall { k: i64, h_dual: i64 },
    #[error("level k={k} must exceed h∨={h_dual} for this operation")]
    LevelNotAboveDualCoxeter { k: i64, h_dual: i64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("Weyl group order {order} exceeds guard {guard}; choose a smaller rank")]
    WeylGuard { order: usize, guard: usize },
    #[error("rank {rank} exceeds the supported maximum {max} for this operation")]
    RankGuard { rank: usize, max: usize },
    #[error("matrix is not hyperbolic (trace {trace}): transversality hypothesis fails")]
    NonHyperbolic { trace: i64 },
    #[error("A⊗w − I is singular: 1 is an eigenvalue, fixed points are not isolated")]
    SingularFixedPointSystem,
    #[error("theta truncation radius insufficient: {0}")]
    Truncation(String),
    #[error("quadrature did not converge: {0}")]
    QuadratureNonConvergence(String),
    #[error("numerically ambiguous branch resolution: {0}")]
    BranchAmbiguous(String),
    #[error("corpus failure: {0}")]
    Corpus(String),
}

impl Error {
    /// Stable process exit code for the CLI contract:
    /// 10–19 input errors, 20–29 guards, 30 numerical ambiguity.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidGroup(_) => 10,
            Error::InvalidWord(_) => 11,
            Error::InvalidArgument(_) => 12,
            Error::LevelTooSmall { .. } | Error::LevelNotAboveDualCoxeter { .. } => 13,
            Error::Io(_) | Error::Json(_) => 14,
            Error::DimensionMismatch(_) => 15,
            Error::Corpus(_) => 16,
            Error::WeylGuard { .. } => 20,
            Error::RankGuard { .. } => 21,
            Error::NonHyperbolic { .. } => 22,
            Error::Truncation(_) => 23,
            Error::QuadratureNonConvergence(_) => 24,
            Error::SingularFixedPointSystem => 25,
            Error::BranchAmbiguous(_) => 30,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
