//! Error types shared across the crate.

use thiserror::Error;

/// Errors from group enumeration and subgroup machinery.
#[derive(Debug, Error)]
pub enum GroupError {
    #[error("generators use different realizations (expected {expected}, found {found})")]
    MixedRealization { expected: String, found: String },

    #[error("element closure exceeded the limit of {limit} elements")]
    LimitExceeded { limit: usize },

    #[error("actor subgroup does not normalize the target subgroup (witness: actor element {actor} sends target element {target} outside)")]
    NotNormalized { actor: u32, target: u32 },

    #[error("no Hall {{{p},{q}}}-subgroup found within {retries} conjugation retries")]
    HallNotFound { p: u64, q: u64, retries: usize },

    #[error("Sylow {p}-subgroup search stalled at order {reached} below {target}")]
    InternalSearchFailure { p: u64, reached: u64, target: u64 },

    #[error("quotient construction failed: subgroup of order {order} is not normal")]
    QuotientFailure { order: u64 },
}

/// Errors from the declarative group builders.
#[derive(Debug, Error)]
pub enum BuildError {
    #[error("action is not a homomorphism: closure has order {got}, expected {expected}")]
    ActionNotHomomorphism { expected: u64, got: u64 },

    #[error("action matrix is singular over GF({modulus})")]
    SingularActionMatrix { modulus: u64 },

    #[error("matrix action requires an elementary-abelian-product kernel, got {kernel}")]
    KernelNotTranslations { kernel: String },

    #[error("action is not fixed-point-free: actor index {actor} fixes target index {target}")]
    NotFixedPointFree { actor: u32, target: u32 },

    #[error("assembled group classifies as {got}, expected {expected}")]
    StructureMismatch { expected: String, got: String },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("no character yields a faithful irreducible induced module")]
    ModuleReducible,

    #[error("spec parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Fatal inconsistencies detected while building a character table.
#[derive(Debug, Error)]
pub enum TableError {
    #[error("eigenspace splitting left a subspace of dimension {dim} after consuming all class matrices")]
    SplitIncomplete { dim: usize },

    #[error("no integer degree d in (0, p/2) with d^2 matching the orthogonality sum (character {index})")]
    NoSquareRoot { index: usize },

    #[error("sum of squared degrees {got} does not equal the group order {order}")]
    DegreeSumMismatch { got: u64, order: u64 },

    #[error("lifted multiplicity {value} out of range [0, {degree}] (character {chi}, class {class})")]
    MultiplicityOutOfRange { value: u64, degree: u64, chi: usize, class: usize },

    #[error("codegree (|G|/|ker|)/d is not an integer (character {chi}: |ker| = {kernel_order}, d = {degree})")]
    NonIntegralCodegree { chi: usize, kernel_order: u64, degree: u64 },

    #[error("orthogonality violated for character pair ({a}, {b})")]
    OrthogonalityViolated { a: usize, b: usize },

    #[error("cache io: {0}")]
    CacheIo(#[from] std::io::Error),

    #[error("cache parse: {0}")]
    CacheParse(String),
}

/// Errors from graph parsing and graph-level decisions.
#[derive(Debug, Error)]
pub enum GraphError {
    #[error("graph parse error: {0}")]
    Parse(String),

    #[error("minimality is only defined for realizable graphs")]
    NotRealizableInput,
}
