//! Exact decisions for edge ideals of small graphs: well-covered, W2,
//! Cohen–Macaulay (Reisner) and Gorenstein, plus closed-form classifiers for
//! circulant and SQC graphs that can be checked against brute force.

pub mod circulant;
pub mod complex;
pub mod error;
pub mod gorenstein;
pub mod graph;
pub mod indsets;
pub mod io;
pub mod snf;
pub mod sqc;

pub use complex::{CharSpec, HomologyProfile, SimplicialComplex};
pub use error::{Error, Result};
pub use gorenstein::{is_gorenstein, EngineOptions, Verdict};
pub use graph::{CirculantSpec, Graph, VertexSet};
