use thiserror::Error;

/// Errors raised by the algebra, graph and complex layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("variable `{0}` occurs in the polynomial")]
    VariableOccurs(String),
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("monomial order is not compatible with `{0}`")]
    NotYCompatible(String),
    #[error("expected a monomial ideal")]
    NotMonomial,
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("operation undefined for the unit ideal")]
    UnitIdeal,
    #[error("negative degree {0}")]
    NegativeDegree(i64),
    #[error("split does not satisfy the decomposition identity")]
    InvalidSplit,
    #[error("tree is not certified and Cohen-Macaulay status was not asserted")]
    NotCertified,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("non-bipartite graph requires a walk bound")]
    MissingWalkBound,
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),
    #[error("simplicial complex is not pure")]
    NotPure,
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
