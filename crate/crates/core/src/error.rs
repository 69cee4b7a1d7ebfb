use thiserror::Error;

/// Errors raised by the poset, path, classification, group and tree routines.
///
/// Variant names are stable: the CLI reports them verbatim in its error objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation closure is not antisymmetric: {0} and {1} lie in a cycle")]
    CycleInOrder(String, String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("element `{0}` declared twice")]
    DuplicateElement(String),
    #[error("colour name `{0}` is reserved")]
    ReservedColor(String),
    #[error("not a cycle-free partial order: {0}")]
    NotACFPO(String),
    #[error("empty element set")]
    EmptySet,
    #[error("not a tree")]
    NotATree,
    #[error("element `{0}` is not in the centre set")]
    ElementNotInCenter(String),
    #[error("invalid size {0}")]
    InvalidSize(usize),
    #[error("empty poset")]
    EmptyPoset,
    #[error("alternating class {0} is not odd and at least 3")]
    NotOddClass(usize),
    #[error("alternating class {0} is not even")]
    NotEvenClass(usize),
    #[error("element `{0}` is not the first point of an alternating chain of maximal length")]
    NotAWitness(String),
    #[error("too large to materialise: {0}")]
    TooLarge(String),
    #[error("permutation groups act on different carriers")]
    CarrierMismatch,
    #[error("poset is not connected")]
    NotConnected,
    #[error("element `{0}` is moved by an automorphism")]
    NotAFixedPoint(String),
    #[error("set is not invariant under the automorphism group")]
    NotInvariant,
    #[error("subset is not path-connected")]
    NotConnectedSubset,
    #[error("sets are not disjoint")]
    Disjointness,
    #[error("alternating class {0} exceeds 3")]
    NotCFPO3(usize),
    #[error("no fixed point found")]
    NoFixedPoint,
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("malformed document: {0}")]
    Malformed(String),
}

impl Error {
    /// The variant name, as printed in machine-readable error objects.
    pub fn name(&self) -> &'static str {
        match self {
            Error::CycleInOrder(..) => "CycleInOrder",
            Error::UnknownElement(_) => "UnknownElement",
            Error::DuplicateElement(_) => "DuplicateElement",
            Error::ReservedColor(_) => "ReservedColor",
            Error::NotACFPO(_) => "NotACFPO",
            Error::EmptySet => "EmptySet",
            Error::NotATree => "NotATree",
            Error::ElementNotInCenter(_) => "ElementNotInCenter",
            Error::InvalidSize(_) => "InvalidSize",
            Error::EmptyPoset => "EmptyPoset",
            Error::NotOddClass(_) => "NotOddClass",
            Error::NotEvenClass(_) => "NotEvenClass",
            Error::NotAWitness(_) => "NotAWitness",
            Error::TooLarge(_) => "TooLarge",
            Error::CarrierMismatch => "CarrierMismatch",
            Error::NotConnected => "NotConnected",
            Error::NotAFixedPoint(_) => "NotAFixedPoint",
            Error::NotInvariant => "NotInvariant",
            Error::NotConnectedSubset => "NotConnectedSubset",
            Error::Disjointness => "Disjointness",
            Error::NotCFPO3(_) => "NotCFPO3",
            Error::NoFixedPoint => "NoFixedPoint",
            Error::VerificationFailed(_) => "VerificationFailed",
            Error::Malformed(_) => "Malformed",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
