use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("cannot parse group spec `{spec}`: {reason}")]
    Parse { spec: String, reason: String },

    #[error("invalid group data: {0}")]
    InvalidGroup(String),

    #[error("subgroup is not normal: {witness_element} conjugated by {witness_conjugator} leaves it")]
    NotNormal {
        witness_element: usize,
        witness_conjugator: usize,
    },

    #[error("coset enumeration exceeded {max_cosets} cosets")]
    LimitExceeded { max_cosets: usize },

    #[error("coset table is incomplete")]
    IncompleteTable,

    #[error("{what} is {value}, above the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("G-action on the tensor square is inconsistent: {0}")]
    ActionInconsistent(String),

    #[error("map does not extend to a homomorphism: {0}")]
    ExtensionFailed(String),

    #[error("set is not closed under multiplication: {a} * {b} falls outside")]
    NotClosed { a: usize, b: usize },

    #[error("subgroup violation: {0}")]
    SubgroupViolation(String),
}
