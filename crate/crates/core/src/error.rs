use thiserror::Error;

/// Errors shared across the crate.
///
/// Construction errors carry the offending elements by label so that a
/// failure is reproducible from the message alone.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a lattice needs at least one element")]
    EmptyLattice,

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("not a partial order: `{a}` and `{b}` lie on a cycle")]
    NotAPartialOrder { a: String, b: String },

    #[error("not a lattice: `{a}` and `{b}` have no {which}")]
    NotALattice {
        a: String,
        b: String,
        /// "meet" or "join".
        which: &'static str,
    },

    #[error("no global bottom or top element")]
    NoBounds,

    #[error("the empty subset has no ideal classification")]
    EmptySubset,

    #[error("multiplication violates axiom {axiom} with witness ({})", .witness.join(", "))]
    AxiomViolation { axiom: u8, witness: Vec<String> },

    #[error("`{0}` is not a prime element")]
    NotPrime(String),

    #[error("the given subset is not an ideal")]
    NotAnIdeal,

    #[error("invalid modulus {0}: expected 2 <= n <= 1000000")]
    InvalidModulus(u64),

    #[error("top is join-reducible: `{a}` v `{b}` = top")]
    TopJoinReducible { a: String, b: String },

    #[error("not distributive at ({a}, {b}, {c})")]
    NotDistributive { a: String, b: String, c: String },

    #[error("{what} size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Invalid(String),

    #[error("io error: {0}")]
    Io(String),

    #[error("multiplication table is missing product `{a}` * `{b}`")]
    MissingProduct { a: String, b: String },

    #[error("duplicate product line for `{a}` * `{b}`")]
    DuplicateProduct { a: String, b: String },
}
