//! Framed 4-valent graphs, their chord-diagram codes, and two decision
//! procedures with certificates: planarity and checkerboard embeddability in
//! the projective plane.

pub mod canon;
pub mod certificate;
pub mod circuit;
pub mod cli;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod graph;
pub mod named;
pub mod parity;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use circuit::{all_rotating_circuits, rotating_circuit, standard_circuit, RotatingCircuit};
pub use diagram::{FramedChordDiagram, InterlacementGraph};
pub use error::{Error, Result};
pub use format::{parse_diagram_file, DiagramFile};
pub use graph::{FramedFourGraph, HalfEdge, Pairing, SmoothingChoice, SourceSinkStructure};
pub use named::NamedGraph;
pub mod minor;
pub mod obstructions;
pub mod sminor;
