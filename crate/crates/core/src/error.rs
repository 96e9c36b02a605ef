use thiserror::Error;

/// Errors raised by table validation, constructions and searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    Shape(String),

    #[error("operation is not associative: ({i}*{j})*{k} != {i}*({j}*{k})")]
    NonAssociative { i: usize, j: usize, k: usize },

    #[error("element {0} is not a two-sided zero")]
    BadZero(usize),

    #[error("element {0} is not a two-sided identity")]
    BadIdentity(usize),

    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),

    #[error("semigroup has no zero")]
    NoZero,

    #[error("semigroup has no identity")]
    NoIdentity,

    #[error("order {order} exceeds the configured bound {bound}")]
    TooLarge { order: usize, bound: usize },

    #[error("map is not a homomorphism: f({x}*{y}) != f({x})*f({y})")]
    NotHomomorphism { x: usize, y: usize },

    #[error("search budget of {budget} nodes exhausted")]
    BudgetExceeded { budget: u64 },

    #[error("ill-formed morphism triple: {0}")]
    IllFormedTriple(String),

    #[error("operation requires a non-trivial homomorphism")]
    TrivialInput,

    #[error("mismatched arguments: {0}")]
    Mismatch(String),

    #[error("hypothesis not met: {0}")]
    HypothesisUnmet(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
