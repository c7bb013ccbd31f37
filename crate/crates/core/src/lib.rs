//! Immersion order, edge sums and certified decompositions for multigraphs
//! that exclude the Kuratowski graphs K5 and K3,3 as immersions.

pub mod branchwidth;
pub mod cli;
pub mod confluence;
pub mod connectivity;
pub mod decomposer;
pub mod embedding;
pub mod error;
pub mod generate;
pub mod multigraph;
pub mod relations;
pub mod search;

pub use error::{Error, Guard, Result};
pub use multigraph::{EdgeId, Item, MultiGraph, Path, VertexId};
