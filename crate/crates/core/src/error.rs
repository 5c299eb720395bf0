use thiserror::Error;

use crate::embedding::Vertex;

/// Malformed rotation systems. These are raised by builders only; a
/// well-formed graph that violates the pseudo-triangulation axioms is
/// reported through [`crate::ValidationReport`] instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(Vertex),
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("multi-edge {0}-{1}")]
    MultiEdge(Vertex, Vertex),
    #[error("dart {0}->{1} has no twin")]
    MissingTwin(Vertex, Vertex),
    #[error("graph is not connected")]
    Disconnected,
    #[error("outer dart {0}->{1} is not an edge")]
    BadOuterDart(Vertex, Vertex),
    #[error("reflex angle of vertex {0} names non-neighbor {1}")]
    BadReflex(Vertex, Vertex),
    #[error("reflex map has {got} entries, expected {expected}")]
    ReflexLength { got: usize, expected: usize },
    #[error("face list does not describe an embedding: {0}")]
    BadFaces(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubgraphError {
    #[error("subgraph has {0} vertices, need at least 3")]
    TooSmall(usize),
    #[error("{0}-{1} is not an edge of the host graph")]
    NotAnEdge(Vertex, Vertex),
    #[error("n = {n} exceeds the brute-force cap of {cap}")]
    AboveCap { n: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlipError {
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(Vertex, Vertex),
    #[error("{0}-{1} lies on the outer face")]
    OuterEdge(Vertex, Vertex),
    #[error("{0}-{1} is not incident to an interior triangle")]
    NoIncidentTriangle(Vertex, Vertex),
    #[error("move {removed:?} -> {inserted:?} is not a current flip candidate")]
    StaleMove {
        removed: (Vertex, Vertex),
        inserted: (Vertex, Vertex),
    },
    #[error("flip of {0:?} between two triangles would create multi-edge {1:?}")]
    TwoTriangleMultiEdge((Vertex, Vertex), (Vertex, Vertex)),
    #[error("merged region of {0:?} has unexpected shape: {1}")]
    BadRegion((Vertex, Vertex), String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("outer face has {0} vertices, operation needs a triangle")]
    NotTriangular(usize),
    #[error("input is not a valid 4-PPT: {0}")]
    Invalid(String),
    #[error("{0}-{1} is not an edge of the region boundary")]
    NotBoundaryEdge(Vertex, Vertex),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("wrong form: expected {expected}, found {found}")]
    WrongForm { expected: String, found: String },
    #[error("target order is not a permutation of the interior labels")]
    BadPermutation,
    #[error("outer cycles differ")]
    OuterMismatch,
    #[error("construction stalled: {0}")]
    Stuck(String),
    #[error(transparent)]
    Flip(#[from] FlipError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("n = {n} exceeds the cap of {cap}")]
    AboveCap { n: usize, cap: usize },
    #[error("bad outer cycle: {0}")]
    BadOuter(String),
    #[error("graph is not part of this flip graph")]
    NotInUniverse,
    #[error("{0}")]
    Precondition(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InducedError {
    #[error("outer face has {0} vertices, induced triangulation needs a triangle")]
    NotTriangular(usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(Vertex, Vertex),
    #[error("{0}-{1} lies on the outer face")]
    OuterEdge(Vertex, Vertex),
    #[error("flip of {0}-{1} would create multi-edge {2}-{3}")]
    MultiEdge(Vertex, Vertex, Vertex, Vertex),
    #[error("induced graph is not a triangulation: {0}")]
    NotTriangulation(String),
    #[error("double wheel needs n >= 5, got {0}")]
    WheelTooSmall(usize),
    #[error("lower-bound construction failed verification at n = {0}: {1}")]
    Construction(usize, String),
    #[error("merged region has 4 boundary vertices")]
    QuadRegion,
    #[error("emulation failed: {0}")]
    Emulation(String),
    #[error(transparent)]
    Flip(#[from] FlipError),
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("parse error at {field}: {message}")]
    Parse { field: String, message: String },
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
