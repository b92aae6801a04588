//! Brauer graphs, skew Brauer graphs, their Kauer moves and coverings, and
//! exact models of the associated algebras.

pub mod algebra;
pub mod covering;
pub mod error;
pub mod graph;
pub mod homotopy;
pub mod linalg;
pub mod moves;
pub mod perm;
pub mod presentation;
pub mod random;
pub mod samples;

pub use error::{Error, Result};
pub use graph::{BrauerGraph, GradedGraph, Grading};
pub use perm::Perm;
