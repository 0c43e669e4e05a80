//! Exact search and verification for H-colorings of cubic multigraphs and
//! the perfect-matching, even-subgraph and join covers that go with them.

pub mod catalog;
pub mod certificate;
pub mod conjectures;
pub mod corpus;
pub mod covers;
pub mod error;
pub mod graph;
pub mod hcoloring;
pub mod invariants;
pub mod io;
pub mod iso;
pub mod normal;
pub mod oum;

pub use catalog::Named;
pub use error::{Error, Result};
pub use graph::{EdgeCorrespondence, EdgeSubset, MultiGraph, TriangleRef};
