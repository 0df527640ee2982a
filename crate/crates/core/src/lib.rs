//! Exact computation of the domination chain of small graphs, Grundy
//! domination, and membership tests for the graphs where upper domination or
//! independence meets the Grundy domination number.

pub mod error;
pub mod certify;
pub mod classcheck;
pub mod families;
pub mod family_spec;
pub mod graph;
pub mod graph6;
pub mod grundy;
pub mod invariants;
pub mod iso;
pub mod limits;
pub mod scan;
pub mod theorems;
pub mod verify;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{Girth, Graph, Structure};
pub use graph6::{encode_graph6, parse_graph6};
pub use limits::Limits;
pub use vertex_set::VertexSet;
