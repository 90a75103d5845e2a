use super::{norm, Edge, Graph};
use crate::error::{Error, Result};

/// Default vertex cap for [`maximum_matching`].
pub const MATCHING_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    /// Checks that every pair is an edge of `host` and no vertex repeats.
    pub fn new(host: &Graph, pairs: &[(usize, usize)]) -> Result<Matching> {
        let mut used = vec![false; host.order()];
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if !host.has_edge(u, v) {
                return Err(Error::Input(format!("({u},{v}) is not an edge of the host")));
            }
            if used[u] || used[v] {
                return Err(Error::Input(format!("({u},{v}) shares a vertex with another matching edge")));
            }
            used[u] = true;
            used[v] = true;
            edges.push(norm(u, v));
        }
        edges.sort_unstable();
        Ok(Matching { edges })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn saturates(&self, v: usize) -> bool {
        self.edges.iter().any(|&(a, b)| a == v || b == v)
    }

    /// The vertices left uncovered in a host of order `n`.
    pub fn unsaturated(&self, n: usize) -> Vec<usize> {
        (0..n).filter(|&v| !self.saturates(v)).collect()
    }

    pub fn is_perfect(&self, n: usize) -> bool {
        2 * self.len() == n
    }

    pub fn is_near_perfect(&self, n: usize) -> bool {
        n % 2 == 1 && 2 * self.len() + 1 == n
    }
}

/// Maximum matching by exhaustive backtracking, capped at [`MATCHING_CAP`] vertices.
pub fn maximum_matching(g: &Graph) -> Result<Matching> {
    maximum_matching_with_cap(g, MATCHING_CAP)
}

pub fn maximum_matching_with_cap(g: &Graph, cap: usize) -> Result<Matching> {
    let n = g.order();
    if n > cap {
        return Err(Error::Capacity(format!(
            "exact matching search is capped at {cap} vertices (got {n}); \
             use the family constructions for larger graphs"
        )));
    }
    let mut search = Search { g, mate: vec![None; n], current: Vec::new(), best: Vec::new() };
    search.run(0, n);
    Ok(Matching::new(g, &search.best).expect("search yields a matching"))
}

struct Search<'a> {
    g: &'a Graph,
    mate: Vec<Option<usize>>,
    current: Vec<Edge>,
    best: Vec<Edge>,
}

impl Search<'_> {
    /// `free` counts vertices `>= v` that are still unmatched.
    fn run(&mut self, v: usize, free: usize) {
        let n = self.g.order();
        if self.current.len() + free / 2 <= self.best.len() {
            return;
        }
        if v == n {
            self.best = self.current.clone();
            return;
        }
        if self.mate[v].is_some() {
            self.run(v + 1, free);
            return;
        }
        for &u in self.g.neighbors(v) {
            if u > v && self.mate[u].is_none() {
                self.mate[v] = Some(u);
                self.mate[u] = Some(v);
                self.current.push((v, u));
                self.run(v + 1, free - 2);
                self.current.pop();
                self.mate[v] = None;
                self.mate[u] = None;
            }
        }
        self.run(v + 1, free - 1);
    }
}
