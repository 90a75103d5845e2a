use crate::error::{input, Error, Result};
use crate::graph::{norm, Edge, Graph};

/// Default vertex cap for the exhaustive 2-factor and certificate searches.
pub const DECOMPOSITION_CAP: usize = 12;

/// A spanning 2-regular subgraph, stored as its cycles.
///
/// Each cycle starts at its smallest vertex and continues towards the
/// smaller of that vertex's two cycle neighbours; cycles are sorted by their
/// first vertex. Two factors with the same edge set therefore compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoFactor {
    cycles: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl TwoFactor {
    /// Validates that `edges` give every vertex of `host` degree exactly 2.
    pub fn from_edges(host: &Graph, edges: &[Edge]) -> Result<TwoFactor> {
        let n = host.order();
        let mut nbrs: Vec<Vec<usize>> = vec![Vec::with_capacity(2); n];
        let mut list: Vec<Edge> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if !host.has_edge(u, v) {
                return input(format!("({u},{v}) is not an edge of the host"));
            }
            list.push(norm(u, v));
        }
        list.sort_unstable();
        list.dedup();
        for &(u, v) in &list {
            nbrs[u].push(v);
            nbrs[v].push(u);
        }
        if let Some(v) = (0..n).find(|&v| nbrs[v].len() != 2) {
            return input(format!("vertex {v} has degree {} in the factor, expected 2", nbrs[v].len()));
        }

        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let (mut prev, mut cur) = (start, nbrs[start][0].min(nbrs[start][1]));
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                let next = if nbrs[cur][0] == prev { nbrs[cur][1] } else { nbrs[cur][0] };
                prev = cur;
                cur = next;
            }
            cycles.push(cycle);
        }
        Ok(TwoFactor { cycles, edges: list })
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Edges sorted with `u < v`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The two cycle neighbours of every vertex, indexed by vertex.
    pub fn neighbour_pairs(&self, n: usize) -> Vec<(usize, usize)> {
        let mut out = vec![(usize::MAX, usize::MAX); n];
        for cycle in &self.cycles {
            let len = cycle.len();
            for (i, &v) in cycle.iter().enumerate() {
                out[v] = (cycle[(i + len - 1) % len], cycle[(i + 1) % len]);
            }
        }
        out
    }

    pub fn is_edge_disjoint(&self, other: &TwoFactor) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.edges.len() && j < other.edges.len() {
            match self.edges[i].cmp(&other.edges[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }
}

pub(crate) fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.order() > cap {
        return Err(Error::Capacity(format!(
            "exhaustive decomposition search is capped at {cap} vertices, got {}",
            g.order()
        )));
    }
    Ok(())
}

/// Some 2-factor of `g` that uses none of the `forbidden` edges.
pub fn find_two_factor(g: &Graph, forbidden: &[Edge]) -> Result<Option<TwoFactor>> {
    find_two_factor_with_cap(g, forbidden, DECOMPOSITION_CAP)
}

pub fn find_two_factor_with_cap(g: &Graph, forbidden: &[Edge], cap: usize) -> Result<Option<TwoFactor>> {
    check_cap(g, cap)?;
    let mut banned = vec![false; g.size()];
    for &(u, v) in forbidden {
        if let Some(i) = g.edge_index(u, v) {
            banned[i] = true;
        }
    }
    let allowed: Vec<usize> = (0..g.size()).filter(|&i| !banned[i]).collect();
    let mut found = None;
    for_each_two_factor(g, &allowed, &mut |chosen| {
        found = Some(chosen.to_vec());
        true
    });
    Ok(found.map(|ids| factor_from_ids(g, &ids)))
}

pub(crate) fn factor_from_ids(g: &Graph, ids: &[usize]) -> TwoFactor {
    let edges: Vec<Edge> = ids.iter().map(|&i| g.edges()[i]).collect();
    TwoFactor::from_edges(g, &edges).expect("search yields 2-regular spanning subgraphs")
}

/// Calls `visit` with the edge indices of every 2-factor of `g` built from
/// `allowed` (ascending edge indices) until it returns `true`. Returns
/// whether the enumeration was stopped early.
pub(crate) fn for_each_two_factor(g: &Graph, allowed: &[usize], visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    let n = g.order();
    let mut avail = vec![0usize; n];
    for &i in allowed {
        let (u, v) = g.edges()[i];
        avail[u] += 1;
        avail[v] += 1;
    }
    if avail.iter().any(|&a| a < 2) {
        return false;
    }
    let mut state = FactorSearch { g, allowed, deg: vec![0; n], avail, chosen: Vec::with_capacity(n) };
    state.rec(0, visit)
}

struct FactorSearch<'a> {
    g: &'a Graph,
    allowed: &'a [usize],
    deg: Vec<u8>,
    /// Undecided allowed edges still incident to each vertex.
    avail: Vec<usize>,
    chosen: Vec<usize>,
}

impl FactorSearch<'_> {
    fn rec(&mut self, pos: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if self.chosen.len() == self.g.order() {
            // n edges with every degree at most 2 means every degree is 2
            return visit(&self.chosen);
        }
        if pos == self.allowed.len() {
            return false;
        }
        let id = self.allowed[pos];
        let (u, v) = self.g.edges()[id];
        self.avail[u] -= 1;
        self.avail[v] -= 1;

        let mut stop = false;
        if self.deg[u] < 2 && self.deg[v] < 2 {
            self.deg[u] += 1;
            self.deg[v] += 1;
            self.chosen.push(id);
            stop = self.rec(pos + 1, visit);
            self.chosen.pop();
            self.deg[u] -= 1;
            self.deg[v] -= 1;
        }
        if !stop && self.can_skip(u) && self.can_skip(v) {
            stop = self.rec(pos + 1, visit);
        }

        self.avail[u] += 1;
        self.avail[v] += 1;
        stop
    }

    fn can_skip(&self, v: usize) -> bool {
        self.deg[v] as usize + self.avail[v] >= 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, complete_graph, cycle_graph};

    fn count_factors(g: &Graph) -> usize {
        let all: Vec<usize> = (0..g.size()).collect();
        let mut count = 0;
        for_each_two_factor(g, &all, &mut |_| {
            count += 1;
            false
        });
        count
    }

    #[test]
    fn cycle_is_its_own_factor() {
        let c5 = cycle_graph(5).unwrap();
        let f = find_two_factor(&c5, &[]).unwrap().unwrap();
        assert_eq!(f.cycles(), &[vec![0, 1, 2, 3, 4]]);
        assert_eq!(f.edges(), c5.edges());
    }

    #[test]
    fn k4_gives_a_hamiltonian_square() {
        let f = find_two_factor(&complete_graph(4).unwrap(), &[]).unwrap().unwrap();
        assert_eq!(f.cycles().len(), 1);
        assert_eq!(f.cycles()[0].len(), 4);
    }

    #[test]
    fn star_has_none() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(find_two_factor(&star, &[]).unwrap(), None);
    }

    #[test]
    fn forbidden_edges_are_avoided() {
        let k4 = complete_graph(4).unwrap();
        let f = find_two_factor(&k4, &[(0, 1), (2, 3)]).unwrap().unwrap();
        assert_eq!(f.edges(), &[(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(find_two_factor(&k4, &[(0, 1), (0, 2)]).unwrap(), None);
    }

    #[test]
    fn counts_match_known_values() {
        // K_4: 3 Hamiltonian squares; K_5: 12 Hamiltonian cycles, no 2+3 split;
        // K_6: 60 hexagons plus 10 pairs of triangles
        assert_eq!(count_factors(&complete_graph(4).unwrap()), 3);
        assert_eq!(count_factors(&complete_graph(5).unwrap()), 12);
        assert_eq!(count_factors(&complete_graph(6).unwrap()), 70);
        // K_{3,3}: 6 hexagons
        assert_eq!(count_factors(&complete_bipartite(3, 3).unwrap()), 6);
    }

    #[test]
    fn union_of_two_perfect_matchings_is_a_factor() {
        let g = complete_bipartite(3, 3).unwrap();
        let m0 = [(0, 3), (1, 4), (2, 5)];
        let m1 = [(0, 4), (1, 5), (2, 3)];
        let edges: Vec<Edge> = m0.iter().chain(m1.iter()).copied().collect();
        let f = TwoFactor::from_edges(&g, &edges).unwrap();
        assert_eq!(f.cycles(), &[vec![0, 3, 2, 5, 1, 4]]);
    }

    #[test]
    fn rejects_non_factors() {
        let k4 = complete_graph(4).unwrap();
        assert!(TwoFactor::from_edges(&k4, &[(0, 1), (1, 2), (2, 0)]).is_err());
        assert!(TwoFactor::from_edges(&cycle_graph(4).unwrap(), &[(0, 2)]).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let g = cycle_graph(13).unwrap();
        assert!(matches!(find_two_factor(&g, &[]), Err(Error::Capacity(_))));
        assert!(find_two_factor_with_cap(&g, &[], 13).unwrap().is_some());
    }
}
