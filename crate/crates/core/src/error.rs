use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is singular over GF({0})")]
    Singular(u8),

    #[error("modulus mismatch: GF({0}) vs GF({1})")]
    ModulusMismatch(u8, u8),

    #[error("closure exceeded cap of {0} elements")]
    ClosureOverflow(usize),

    #[error("generators must be non-empty and share one degree")]
    BadGenerators,

    #[error("subgroup is not contained in the parent group")]
    NotSubgroup,

    #[error("group is not transitive on {0} points")]
    Intransitive(usize),

    #[error("not a semidirect complement: {0}")]
    NotComplement(&'static str),

    #[error("invalid classical group parameters: {0}")]
    InvalidParameters(String),

    #[error("unknown group name `{0}`")]
    UnknownGroup(String),

    #[error("{0} does not divide {1}")]
    Divisibility(String, String),

    #[error("values are not powers of one prime: {0}")]
    MixedPrimes(String),

    #[error("invalid incidence structure: {0}")]
    InvalidStructure(String),

    #[error("block set is not preserved by generator {0}")]
    NotAutomorphism(usize),

    #[error("construction check failed: {0}")]
    Construction(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
