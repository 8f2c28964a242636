//! Exact independent-set computations on direct products of
//! vertex-transitive graphs.
//!
//! The crate builds the standard vertex-transitive families (Kneser-type
//! graphs, circular graphs, derangement graphs, Cayley graphs) and their
//! direct products, computes independence numbers and complete families of
//! maximum independent sets, and checks the product formula
//! `α(G×H) = max{α(G)|H|, α(H)|G|}` together with its normality
//! classification on concrete instances.

pub mod bitset;
pub mod error;
pub mod graph;
pub mod mis;
pub mod report;
pub mod spec;
pub mod symmetry;
pub mod theorem;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use mis::{MisFamily, Ratio, SearchLimits};
