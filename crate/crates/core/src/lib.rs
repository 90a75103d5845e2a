//! k-tuple total domination in inflated graphs.
//!
//! The inflation `G_I` of a graph `G` replaces every vertex of degree `d` by
//! a clique `K_d` and every edge by an edge between the two cliques, so that
//! distinct edges stay non-adjacent. This crate builds inflations, computes
//! `gamma_{x k, t}(G_I)` exactly, brackets it with closed-form bounds, and
//! certifies the cases where it equals `n k` or `n k + 1` through
//! edge-disjoint 2-factor decompositions of `G`.

pub mod check;
pub mod closed_forms;
pub mod decomposition;
pub mod domination;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod inflation;
pub mod report;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{Family, Graph};
pub use inflation::{inflate, InflatedGraph, InflatedVertex};
pub use vertex_set::VertexSet;
