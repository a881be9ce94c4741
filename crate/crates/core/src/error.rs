use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("variable lists differ: {left} vs {right}")]
    VariableMismatch { left: String, right: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent of `{var}` is not representable: {detail}")]
    NonRepresentable { var: String, detail: String },
    #[error("coefficient {0} is not an integer")]
    NonIntegral(String),
    #[error("compositions have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),
    #[error("Verlinde elements have different levels ({0} and {1})")]
    LevelMismatch(u32, u32),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("invalid modulus {0}: need a prime in (2^30, 2^32)")]
    InvalidModulus(u64),
    #[error("evaluation points are not pairwise distinct and nonzero")]
    ZetaCollision,
    #[error("generator `{0}` is not available on every factor")]
    UnknownGenerator(String),
    #[error("filtration is not invariant under weight operator `{0}`")]
    WeightNotInvariant(String),
    #[error("factors have inconsistent shapes: {0}")]
    Inconsistent(String),
    #[error("oracle runs disagree after {attempts} attempts (degenerate evaluation points?)")]
    Degenerate { attempts: u32 },
}
