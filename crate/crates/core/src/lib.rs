//! Finite-graph constructions and exact certificates for chromatic numbers
//! of curve-graph relatives: Kneser and cyclic-interval families with their
//! total variants, fractional-chromatic certificates, combinatorial
//! curve-diagram colorings on closed surfaces, and the bespoke symplectic,
//! octahedron, and Farey graphs.

pub mod cliquegraph;
pub mod fractional;
pub mod graph;
pub mod kneser;
pub mod morphism;
pub mod report;
pub mod solve;
pub mod special;
pub mod surface;

pub use graph::{Coloring, Graph, GraphError};
pub use solve::{Budget, SearchError, DEFAULT_BUDGET};
