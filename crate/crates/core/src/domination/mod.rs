//! k-tuple total domination: verification, bounds and exact minimization.
//!
//! A set `S` is a kTDS of a graph when every vertex has at least `k`
//! neighbours in `S` (open neighbourhoods, so members count too).

mod bounds;
mod brute;
mod solver;
mod upper;

pub use bounds::{bounds, BoundEntry, BoundSource, BoundsReport};
pub use brute::{brute_force_min_ktds, brute_force_min_ktds_with_cap, BRUTE_FORCE_CAP};
pub use solver::{solve, solve_inflated, solve_inflated_with, SolverConfig, DEFAULT_MAX_NODES};
pub use upper::generic_upper_set;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    BruteForce,
    CliqueBnb,
    ClosedForm,
    Certificate,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::BruteForce => "brute_force",
            Method::CliqueBnb => "clique_bnb",
            Method::ClosedForm => "closed_form",
            Method::Certificate => "certificate",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub gamma: usize,
    pub witness: VertexSet,
    pub method: Method,
    pub nodes_explored: u64,
}

/// True iff every vertex of `host` has at least `k` neighbours in `set`.
pub fn is_ktds(host: &Graph, set: &VertexSet, k: usize) -> Result<bool> {
    if k == 0 {
        return input("k must be at least 1");
    }
    if let Some(v) = set.max() {
        if v >= host.order() {
            return input(format!("vertex {v} is not in the host graph"));
        }
    }
    let mask = set.to_mask(host.order());
    Ok((0..host.order()).all(|v| host.neighbors(v).iter().filter(|&&w| mask[w]).count() >= k))
}

pub(crate) fn check_k(g: &Graph, k: usize) -> Result<()> {
    if k < 2 {
        return input(format!("k must be at least 2 here, got {k}"));
    }
    let delta = g.min_degree();
    if k > delta {
        return Err(Error::Infeasible(format!("minimum degree {delta} is below k = {k}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph};
    use crate::inflation::inflate;

    #[test]
    fn cycle_needs_everything_for_k2() {
        let c6 = cycle_graph(6).unwrap();
        let all: VertexSet = (0..6).collect();
        assert!(is_ktds(&c6, &all, 2).unwrap());
        for skip in 0..6 {
            let s: VertexSet = (0..6).filter(|&v| v != skip).collect();
            assert!(!is_ktds(&c6, &s, 2).unwrap());
        }
    }

    #[test]
    fn solver_witness_verifies() {
        let gi = inflate(&complete_graph(4).unwrap()).unwrap();
        let r = solve(&gi, 2, &SolverConfig::default()).unwrap();
        assert!(is_ktds(gi.graph(), &r.witness, 2).unwrap());
    }

    #[test]
    fn input_errors() {
        let c = cycle_graph(4).unwrap();
        assert!(is_ktds(&c, &VertexSet::new(), 0).is_err());
        let s: VertexSet = [4].into_iter().collect();
        assert!(is_ktds(&c, &s, 1).is_err());
    }

    #[test]
    fn whole_vertex_set_iff_min_degree() {
        for n in 3..7 {
            let g = complete_graph(n).unwrap();
            let all: VertexSet = (0..n).collect();
            for k in 1..n + 1 {
                assert_eq!(is_ktds(&g, &all, k).unwrap(), g.min_degree() >= k);
            }
        }
    }
}
