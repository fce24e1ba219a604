//! Bounded-degree expander tooling: exact and spectral expansion measures,
//! Cayley graphs of `SL(2, Z/qZ)`, bond percolation, and searches for
//! spanning subgraphs that keep expansion while raising girth.

pub mod builders;
pub mod error;
pub mod family;
pub mod format;
pub mod graph;
pub mod groups;
pub mod metrics;
pub mod percolation;
pub mod probe;
pub mod rng;
pub mod search;

pub use error::{Error, ErrorKind, Result};
pub use family::{expand_family, FamilySpec};
pub use graph::{Edge, EdgeList, Graph, VertexSubset};
pub use metrics::{Diameter, Girth, Spectrum};
