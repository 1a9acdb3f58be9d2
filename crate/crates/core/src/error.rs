use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpinError {
    #[error("Lorentz index {0} out of range 0..=3")]
    IndexOutOfRange(usize),

    #[error("mass must be positive and finite, got {0}")]
    NonPositiveMass(f64),

    #[error("momentum components must be finite")]
    NonFiniteMomentum,

    #[error("{operator}: |p| = {norm:e} lies in the singular domain (|p| < {limit:e})")]
    SingularMomentum { operator: String, norm: f64, limit: f64 },

    #[error("not a pure rotation (residual {0:e})")]
    NotARotation(f64),

    #[error("not a restricted Lorentz transformation: {0}")]
    NotRestricted(String),

    #[error("{operator}: diagonal spin block is not Hermitian (residual {residual:e})")]
    NonHermitian { operator: String, residual: f64 },

    #[error("{0}: no tabulated Dirac-basis projection")]
    NotTabulated(String),

    #[error("unknown operator kind '{0}'")]
    UnknownKind(String),

    #[error("expression error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T, E = SpinError> = std::result::Result<T, E>;
