use thiserror::Error;

use crate::complex::Violation;

#[derive(Debug, Error)]
pub enum ComplexError {
    #[error("malformed document: {0}")]
    Document(String),
    #[error("empty {kind} id")]
    EmptyId { kind: &'static str },
    #[error("duplicate {kind} id {id:?}")]
    DuplicateId { kind: &'static str, id: String },
    #[error("{owner:?} refers to undeclared id {reference:?}")]
    UnknownReference { owner: String, reference: String },
    #[error("face {face:?} has an empty boundary")]
    EmptyTrail { face: String },
    #[error("face {face:?} is not a closed trail (break after position {position})")]
    NonClosedTrail { face: String, position: usize },
    #[error("invalid direction {dir} in face {face:?} (expected 1 or -1)")]
    BadDirection { face: String, dir: i64 },
    #[error("simplicial rules violated: {}", join(.0))]
    SimplicialViolation(Vec<Violation>),
    #[error("standing assumptions violated: {}", join(.0))]
    EmptyKind(Vec<Violation>),
}

fn join(vs: &[Violation]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TopologyError {
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown edge {0:?}")]
    UnknownEdge(String),
    #[error("vertex {0:?} is not a cut vertex")]
    NotACutVertex(String),
    #[error("vertex {vertex:?} is not an endpoint of edge {edge:?}")]
    NotIncident { edge: String, vertex: String },
    #[error("invalid rotation at edge {edge:?}: {reason}")]
    InvalidRotation { edge: String, reason: String },
    #[error("cell complex is not a closed surface: {0}")]
    NotClosedSurface(String),
    #[error("local-surface / link-complex bijection failed at {0}")]
    BijectionFailure(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("complex is not connected")]
    NotConnected,
    #[error("complex is not locally connected (link at {0:?} is disconnected)")]
    NotLocallyConnected(String),
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("candidate cap {cap} exceeded after examining {examined} candidates ({found} solutions so far)")]
    CapExceeded { cap: u64, examined: u64, found: u64 },
}

#[derive(Debug, Error, PartialEq)]
pub enum GenerateError {
    #[error("at least 3 vertices are required, got {0}")]
    TooFewVertices(usize),
    #[error("probability {0} outside [0, 1]")]
    BadProbability(f64),
    #[error("no triangle survived sampling")]
    Unsatisfiable,
}

/// Umbrella error for the command-line front end and the verdict pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
