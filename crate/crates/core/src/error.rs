use thiserror::Error;

/// Errors raised by the constructions in this crate.
///
/// Input problems (bad labels, cycles, non-lattices, malformed tuples) are
/// separated from [`Error::Internal`], which signals that a checked
/// mathematical identity failed at runtime.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("element index {0} is out of range")]
    IndexOutOfRange(usize),

    #[error("order relation has a cycle through `{0}` and `{1}`")]
    Cycle(String, String),

    #[error("operation requires a nonempty poset")]
    EmptyPoset,

    #[error("`{0}` is not below `{1}`")]
    NotBelow(String, String),

    #[error("`{lower}` and `{upper}` have no unique {kind}")]
    NotALattice {
        lower: String,
        upper: String,
        kind: &'static str,
    },

    #[error("distributivity fails for ({0}, {1}, {2})")]
    NotDistributive(String, String, String),

    #[error("subset is not a nonempty order ideal")]
    NotAnIdeal,

    #[error("invalid lattice homomorphism: {0}")]
    InvalidHom(String),

    #[error("exponent vector has {found} entries, poset has {expected}")]
    DomainMismatch { expected: usize, found: usize },

    #[error("exponent vector is not in the semigroup")]
    NotAMember,

    #[error("poset has no unique minimal element")]
    NoUniqueMinimum,

    #[error("Q has no unique minimal element")]
    NoUniqueMinimalInQ,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("box bound {bound} is below max nu0 = {required}")]
    BoxTooSmall { bound: u64, required: u64 },

    #[error("arithmetic overflow in exponent vector")]
    Overflow,

    #[error("invalid tuple: {0}")]
    InvalidTuple(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("internal check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
