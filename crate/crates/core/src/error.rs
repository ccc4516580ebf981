use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Shapes of matrices or vectors do not line up.
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    /// Two objects were required to live in the same ambient group.
    AmbientMismatch(&'static str),
    /// A homomorphism does not send source relations into the target lattice.
    IllDefinedHomomorphism,
    /// An enumeration was requested over an infinite quotient.
    InfiniteQuotient,
    /// A contact order of zero appeared in a profile.
    ZeroContactOrder { component: usize, index: usize },
    /// The profile disagrees with the divisor on the number of components.
    ComponentCountMismatch { divisor: usize, profile: usize },
    /// Contact orders do not sum to the prescribed intersection number.
    OrderConstraint {
        component: usize,
        expected: BigIntDisplay,
        found: BigIntDisplay,
    },
    /// An operation needs at least one contact point.
    NoContacts,
    /// The identification of divisor copies is not an automorphism.
    NonInvertibleIdentification,
    /// Flux data is required for an active component but absent.
    MissingFlux { component: usize },
    /// Supplied coset representatives are not a transversal.
    NotATransversal(String),
    /// A subgroup containment required by a construction fails.
    Containment(&'static str),
    /// A square's maps do not match its grid of groups.
    IllTypedSquare(String),
    /// A cover point violates the membership constraint.
    Membership,
    /// A divisor record is malformed.
    InvalidDivisor(String),
    /// Should be impossible given validated inputs.
    Internal(&'static str),
}

/// Decimal rendering of a big integer, kept as a string so the error type
/// stays `Eq` and cheap to clone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigIntDisplay(pub String);

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch {
                context,
                expected,
                found,
            } => write!(f, "dimension mismatch in {context}: expected {expected}, found {found}"),
            Error::AmbientMismatch(ctx) => write!(f, "ambient group mismatch in {ctx}"),
            Error::IllDefinedHomomorphism => {
                write!(f, "homomorphism is not well-defined on the source relations")
            }
            Error::InfiniteQuotient => write!(f, "quotient is infinite"),
            Error::ZeroContactOrder { component, index } => write!(
                f,
                "contact orders must have nonzero entries (component {component}, entry {index})"
            ),
            Error::ComponentCountMismatch { divisor, profile } => write!(
                f,
                "profile has {profile} tuples but the divisor has {divisor} components"
            ),
            Error::OrderConstraint {
                component,
                expected,
                found,
            } => write!(
                f,
                "contact orders of component {component} sum to {} but A.V_r = {}",
                found.0, expected.0
            ),
            Error::NoContacts => write!(f, "at least one contact point is required"),
            Error::NonInvertibleIdentification => {
                write!(f, "identification is not an automorphism of H1(V)")
            }
            Error::MissingFlux { component } => {
                write!(f, "flux subgroup missing for component {component}")
            }
            Error::NotATransversal(why) => {
                write!(f, "representatives are not a transversal: {why}")
            }
            Error::Containment(what) => write!(f, "containment violated: {what}"),
            Error::IllTypedSquare(what) => write!(f, "ill-typed square: {what}"),
            Error::Membership => write!(f, "point does not satisfy the cover membership constraint"),
            Error::InvalidDivisor(what) => write!(f, "invalid divisor data: {what}"),
            Error::Internal(what) => write!(f, "internal error: {what}"),
        }
    }
}

impl core::error::Error for Error {}
