//! Combinatorial pointed pseudo-triangulations whose interior faces have at
//! most four sides, their flips, and constructive flip sequences between
//! them.
//!
//! The central type is [`Cppt`], a rotation system with one tagged reflex
//! angle per vertex. [`flip`] implements the flip operation, [`canon`] the
//! constructive sequences, [`lab`] the brute-force flip-graph oracle and
//! [`induced`] the reduction to triangulation flips.

pub mod canon;
pub mod corners;
pub mod embedding;
pub mod error;
pub mod fixtures;
pub mod flip;
pub mod induced;
pub mod io;
pub mod lab;
pub mod tagged;
pub mod validate;

pub use tagged::Cppt;
pub use embedding::{Angle, Dart, Edge, Embedding, Face, Vertex};
pub use error::{CanonError, FlipError, InducedError, IoError, LabError, StructureError, SubgraphError};
pub use flip::{FlipCase, FlipMove};
pub use validate::{Rule, ValidationReport};
