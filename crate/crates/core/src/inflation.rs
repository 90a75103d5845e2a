//! The inflation `G_I` of a base graph `G`.
//!
//! Every base vertex `i` of degree `d` becomes a red clique `X_i` of `d`
//! vertices, one per incident base edge. The inflated vertex for base edge
//! `{i, j}` on the `i` side is named by the ordered pair `(owner = i,
//! partner = j)`; the blue edge of `{i, j}` joins `(i, j)` to `(j, i)`.
//! Vertices are indexed in `(owner, partner)` order, so each red clique is a
//! contiguous index range.

use std::fmt::Write as _;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InflatedVertex {
    pub owner: usize,
    pub partner: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InflatedGraph {
    base: Graph,
    vertices: Vec<InflatedVertex>,
    clique_start: Vec<usize>,
    blue: Vec<usize>,
    graph: Graph,
}

/// Builds `G_I`. Pendant base vertices give single-vertex red cliques.
pub fn inflate(g: &Graph) -> Result<InflatedGraph> {
    InflatedGraph::new(g)
}

impl InflatedGraph {
    pub fn new(g: &Graph) -> Result<InflatedGraph> {
        if let Some(v) = (0..g.order()).find(|&v| g.degree(v) == 0) {
            return input(format!("base vertex {v} is isolated; inflation needs minimum degree >= 1"));
        }
        let n = g.order();
        let mut clique_start = Vec::with_capacity(n + 1);
        let mut vertices = Vec::with_capacity(2 * g.size());
        for owner in 0..n {
            clique_start.push(vertices.len());
            vertices.extend(g.neighbors(owner).iter().map(|&partner| InflatedVertex { owner, partner }));
        }
        clique_start.push(vertices.len());

        let index = |owner: usize, partner: usize| -> usize {
            let pos = g.neighbors(owner).binary_search(&partner).expect("adjacent pair");
            clique_start[owner] + pos
        };
        let blue: Vec<usize> = vertices.iter().map(|v| index(v.partner, v.owner)).collect();

        let mut pairs = Vec::new();
        for owner in 0..n {
            let range = clique_start[owner]..clique_start[owner + 1];
            for a in range.clone() {
                for b in a + 1..range.end {
                    pairs.push((a, b));
                }
            }
        }
        for (a, &b) in blue.iter().enumerate() {
            if a < b {
                pairs.push((a, b));
            }
        }
        let graph = Graph::from_edges(vertices.len(), &pairs)?;
        Ok(InflatedGraph { base: g.clone(), vertices, clique_start, blue, graph })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// The inflated graph as a plain graph over vertex indices.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[InflatedVertex] {
        &self.vertices
    }

    pub fn vertex(&self, idx: usize) -> InflatedVertex {
        self.vertices[idx]
    }

    pub fn index_of(&self, v: InflatedVertex) -> Option<usize> {
        if v.owner >= self.base.order() {
            return None;
        }
        let pos = self.base.neighbors(v.owner).binary_search(&v.partner).ok()?;
        Some(self.clique_start[v.owner] + pos)
    }

    /// Index range of the red clique `X_i`.
    pub fn clique_range(&self, i: usize) -> Range<usize> {
        self.clique_start[i]..self.clique_start[i + 1]
    }

    pub fn red_clique(&self, i: usize) -> Result<VertexSet> {
        if i >= self.base.order() {
            return input(format!("base vertex {i} does not exist"));
        }
        Ok(self.clique_range(i).collect())
    }

    /// Base vertex owning inflated vertex `idx`.
    pub fn clique_of(&self, idx: usize) -> usize {
        self.vertices[idx].owner
    }

    pub fn blue_index(&self, idx: usize) -> usize {
        self.blue[idx]
    }

    pub fn blue_partner(&self, v: InflatedVertex) -> Result<InflatedVertex> {
        match self.index_of(v) {
            Some(idx) => Ok(self.vertices[self.blue[idx]]),
            None => input(format!("({}, {}) is not a vertex of the inflation", v.owner, v.partner)),
        }
    }

    /// Index of the named vertex; panics when `(owner, partner)` is not a base edge.
    pub fn idx(&self, owner: usize, partner: usize) -> usize {
        self.index_of(InflatedVertex { owner, partner })
            .unwrap_or_else(|| panic!("({owner}, {partner}) is not an inflated vertex"))
    }

    /// Vertex pairs of a set, 0-based.
    pub fn pairs(&self, set: &VertexSet) -> Vec<InflatedVertex> {
        set.iter().map(|i| self.vertices[i]).collect()
    }

    /// Sidecar lines `v <index> <owner> <partner>`, all 1-based.
    pub fn format_vertex_map(&self) -> String {
        let mut out = String::new();
        for (i, v) in self.vertices.iter().enumerate() {
            writeln!(out, "v {} {} {}", i + 1, v.owner + 1, v.partner + 1).unwrap();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, complete_graph, cycle_graph, petersen_graph};
    use proptest::prelude::*;

    #[test]
    fn triangle_becomes_hexagon() {
        let gi = inflate(&complete_graph(3).unwrap()).unwrap();
        assert_eq!(gi.order(), 6);
        assert_eq!(gi.graph().size(), 6);
        assert!(gi.graph().degrees().iter().all(|&d| d == 2));
        assert!(gi.graph().is_connected());
    }

    #[test]
    fn petersen_inflation() {
        let gi = inflate(&petersen_graph(5, 2).unwrap()).unwrap();
        assert_eq!(gi.order(), 30);
        assert_eq!(gi.graph().size(), 15 + 10 * 3);
    }

    #[test]
    fn star_keeps_pendant_points() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let gi = inflate(&star).unwrap();
        assert_eq!(gi.order(), 6);
        assert_eq!(gi.red_clique(0).unwrap().len(), 3);
        for leaf in 1..4 {
            assert_eq!(gi.red_clique(leaf).unwrap().len(), 1);
        }
    }

    #[test]
    fn isolated_vertex_rejected() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(inflate(&g).is_err());
    }

    #[test]
    fn cliques_and_partners() {
        let gi = inflate(&complete_graph(4).unwrap()).unwrap();
        let x0 = gi.red_clique(0).unwrap();
        assert_eq!(
            gi.pairs(&x0),
            vec![
                InflatedVertex { owner: 0, partner: 1 },
                InflatedVertex { owner: 0, partner: 2 },
                InflatedVertex { owner: 0, partner: 3 },
            ]
        );
        assert!(gi.red_clique(4).is_err());
        let v = InflatedVertex { owner: 0, partner: 1 };
        assert_eq!(gi.blue_partner(v).unwrap(), InflatedVertex { owner: 1, partner: 0 });
        assert!(gi.blue_partner(InflatedVertex { owner: 0, partner: 0 }).is_err());

        let c4 = inflate(&cycle_graph(4).unwrap()).unwrap();
        assert!((0..4).all(|i| c4.red_clique(i).unwrap().len() == 2));
    }

    #[test]
    fn partner_involution_on_k5() {
        let gi = inflate(&complete_graph(5).unwrap()).unwrap();
        for &v in gi.vertices() {
            let p = gi.blue_partner(v).unwrap();
            assert_eq!(gi.blue_partner(p).unwrap(), v);
            assert_ne!(p.owner, v.owner);
        }
    }

    #[test]
    fn vertex_map_is_one_based() {
        let gi = inflate(&complete_bipartite(1, 2).unwrap()).unwrap();
        assert_eq!(gi.format_vertex_map(), "v 1 1 2\nv 2 1 3\nv 3 2 1\nv 4 3 1\n");
    }

    fn claw_free(h: &Graph) -> bool {
        (0..h.order()).all(|v| {
            let nb = h.neighbors(v);
            nb.iter().enumerate().all(|(i, &a)| {
                nb[i + 1..].iter().enumerate().all(|(j, &b)| {
                    nb[i + 1 + j + 1..].iter().all(|&c| h.has_edge(a, b) || h.has_edge(a, c) || h.has_edge(b, c))
                })
            })
        })
    }

    proptest! {
        #[test]
        fn structural_invariants(n in 2usize..9, mask in any::<u64>()) {
            let mut pairs = Vec::new();
            let mut bit = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask >> bit & 1 == 1 {
                        pairs.push((u, v));
                    }
                    bit += 1;
                }
            }
            let g = Graph::from_edges(n, &pairs).unwrap();
            prop_assume!(g.min_degree() >= 1);
            let gi = inflate(&g).unwrap();
            let h = gi.graph();
            prop_assert_eq!(gi.order(), 2 * g.size());
            prop_assert_eq!(h.min_degree(), g.min_degree());
            prop_assert_eq!(h.max_degree(), g.max_degree());
            for idx in 0..gi.order() {
                let p = gi.blue_index(idx);
                prop_assert_ne!(p, idx);
                prop_assert_eq!(gi.blue_index(p), idx);
                prop_assert!(h.has_edge(idx, p));
                prop_assert_eq!(gi.clique_range(gi.clique_of(idx)).len(), g.degree(gi.clique_of(idx)));
            }
            prop_assert!(claw_free(h));
            prop_assert_eq!(inflate(&g).unwrap(), gi);
        }
    }
}
