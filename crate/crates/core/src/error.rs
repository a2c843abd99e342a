use thiserror::Error;

use crate::graph::Vertex;
use crate::recognition::Claw;

/// Failure while reading one of the text formats. Line numbers are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("vertex id {id} out of range 1..={n}")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("missing `{0}` directive")]
    Missing(&'static str),
    #[error("unexpected `{0}` directive")]
    Unexpected(String),
}

impl ParseError {
    pub(crate) fn new(line: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, kind }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid endpoints: s and t must be distinct vertices of the graph")]
    InvalidEndpoints,
    #[error("t is not reachable from s")]
    NoPath,
    #[error("capacity of {cap} exceeded")]
    Capacity { cap: usize },
    #[error("duplicate path at index {index}")]
    DuplicatePath { index: usize },
    #[error("path lengths differ within one input")]
    MixedLengths,
    #[error("not a solution: {0}")]
    NotASolution(String),
    #[error("graph is not chordal: chordless cycle witness {cycle:?}")]
    NonChordalWitness { cycle: Vec<Vertex> },
    #[error("graph is not claw-free: {0}")]
    NotClawFree(Claw),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("layer index {index} out of range 1..={max}")]
    LayerOutOfRange { index: usize, max: usize },
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = SprError> = std::result::Result<T, E>;
