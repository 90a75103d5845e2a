//! Simple undirected graphs over dense vertex ids `0..n`.

mod cuts;
mod family;
mod generators;
pub mod io;
mod matching;

pub use cuts::{cut_elements, v_components, CutElements, VComponentSplit};
pub use family::Family;
pub(crate) use generators::normalize_petersen_offset;
pub use generators::{
    complete_bipartite, complete_graph, complete_multipartite, cycle_graph, harary_graph, petersen_graph,
};
pub use matching::{maximum_matching, maximum_matching_with_cap, Matching, MATCHING_CAP};

use crate::error::{input, Result};

/// An unordered edge stored with `u < v`.
pub type Edge = (usize, usize);

#[inline]
pub(crate) fn norm(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, dropping duplicate pairs.
    pub fn from_edges(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= n || v >= n {
                return input(format!("edge ({u},{v}) has an endpoint outside 0..{n}"));
            }
            if u == v {
                return input(format!("edge ({u},{v}) is a loop"));
            }
            edges.push(norm(u, v));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list, each edge as `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&norm(u, v)).ok()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0, None).len() == self.n
    }

    /// Vertices reachable from `start`, optionally pretending `removed` is absent.
    pub(crate) fn component_of(&self, start: usize, removed: Option<usize>) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        if let Some(r) = removed {
            seen[r] = true;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut out = Vec::new();
        while let Some(v) = stack.pop() {
            out.push(v);
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Subgraph induced by `vertices`, relabelled `0..len` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let pairs: Vec<Edge> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        Graph::from_edges(vertices.len(), &pairs).expect("induced subgraph of a valid graph")
    }

    /// Disjoint union of `self` and `other` plus the extra `bridges`, where
    /// `other`'s ids are shifted by `self.order()`.
    pub fn join(&self, other: &Graph, bridges: &[(usize, usize)]) -> Result<Graph> {
        let shift = self.n;
        let mut pairs: Vec<Edge> = self.edges.clone();
        pairs.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        pairs.extend(bridges.iter().map(|&(u, v)| (u, v + shift)));
        Graph::from_edges(self.n + other.n, &pairs)
    }
}

/// Free-function form of [`Graph::from_edges`].
pub fn graph_from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Graph> {
    Graph::from_edges(n, pairs)
}
