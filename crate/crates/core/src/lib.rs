//! Exact tools for strongly regular graphs and their integral representations.
//!
//! The crate builds the graphs, designs and lattice vector systems used in
//! the study of integrability (existence of an integer matrix `N` with
//! `NᵀN = s(A + tI)`), verifies such certificates exactly and searches for
//! them on small instances. No floating point decides any result.

pub mod bitset;
pub mod certify;
pub mod constructions;
pub mod design;
pub mod error;
pub mod exact;
pub mod graph;
pub mod lattice;
pub mod registry;
pub mod report;
pub mod search;

pub use error::{Error, Result};
pub use graph::{Graph, SrgParams};
