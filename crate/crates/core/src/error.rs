use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {n} outside allowed range 1..={max}")]
    OrderOutOfRange { n: usize, max: usize },
    #[error("self loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge endpoint {v} out of range for order {n}")]
    EndpointOutOfRange { v: usize, n: usize },
    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(String),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("induced subgraph requested on an empty vertex set")]
    EmptyInducedSet,
    #[error("graph order {n} exceeds the exhaustive-search budget of {budget}")]
    OrderBudgetExceeded { n: usize, budget: usize },
    #[error("family is not union-closed: {a:?} | {b:?} is missing")]
    NotUnionClosed { a: Vec<usize>, b: Vec<usize> },
    #[error("no {provenance} family is defined for the {parameter} parameter")]
    UnsupportedFamily { parameter: String, provenance: String },
    #[error("minimal members requested on a family that is not complete for its provenance")]
    IncompleteFamily,
    #[error("vertex {0} is not in the set")]
    VertexNotInSet(usize),
    #[error("set is not a maximal VCIr-set of minimum size")]
    NotAVcirSet,
    #[error("no vertex cover of size {0} is reachable by exchanges; tau exceeds vcir")]
    NoCoverOfVcirSize(usize),
    #[error("search over {size} nodes exceeds budget of {budget}")]
    BudgetExceeded { size: usize, budget: usize },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("malformed fixture data: {0}")]
    MalformedFixture(String),
    #[error("invalid JSON document: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
