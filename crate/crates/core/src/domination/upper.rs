use super::{check_k, is_ktds};
use crate::error::Result;
use crate::inflation::InflatedGraph;
use crate::vertex_set::VertexSet;

/// A kTDS of `G_I` built clique by clique.
///
/// The hub `x_1` is the highest-degree base vertex (smallest id on ties). It
/// keeps exactly `k` members `x_1 x_j`, one towards each of `k` chosen
/// neighbours, and every other clique keeps `k + 1` members including
/// `x_j x_1` where applicable. When `delta >= k + 1` this is exactly the
/// classical `n (k + 1) - 1` set.
///
/// Cliques of size exactly `k` cannot hold `k + 1` members; they are taken
/// whole and their blue partners become mandatory in the neighbouring
/// cliques, so the size then depends on the degree profile.
pub fn generic_upper_set(gi: &InflatedGraph, k: usize) -> Result<VertexSet> {
    let g = gi.base();
    check_k(g, k)?;
    let n = g.order();
    let hub = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).expect("non-empty graph");

    let mut chosen = vec![false; gi.order()];
    let mut required = vec![false; gi.order()];
    let small = |i: usize| g.degree(i) == k;

    for i in (0..n).filter(|&i| small(i)) {
        for v in gi.clique_range(i) {
            chosen[v] = true;
            required[gi.blue_index(v)] = true;
        }
    }

    let hub_range = gi.clique_range(hub);
    let hub_required = hub_range.clone().filter(|&v| required[v]).count();
    let hub_tight = !small(hub) && hub_required <= k;
    if hub_tight {
        let mut members: Vec<usize> = hub_range.clone().filter(|&v| required[v]).collect();
        let mut rest: Vec<usize> = hub_range.clone().filter(|&v| !required[v]).collect();
        // partners inside whole cliques cost nothing; otherwise prefer high-degree partners
        rest.sort_by_key(|&v| {
            let p = gi.clique_of(gi.blue_index(v));
            (!small(p), std::cmp::Reverse(g.degree(p)), p)
        });
        members.extend(rest.into_iter().take(k - hub_required));
        for v in members {
            chosen[v] = true;
            required[gi.blue_index(v)] = true;
        }
    }

    for i in (0..n).filter(|&i| !small(i) && !(hub_tight && i == hub)) {
        let range = gi.clique_range(i);
        let mut count = 0;
        for v in range.clone().filter(|&v| required[v]) {
            chosen[v] = true;
            count += 1;
        }
        for v in range {
            if count > k {
                break;
            }
            if !chosen[v] {
                chosen[v] = true;
                count += 1;
            }
        }
    }

    let set: VertexSet = (0..gi.order()).filter(|&v| chosen[v]).collect();
    assert!(is_ktds(gi.graph(), &set, k)?, "generic construction must dominate");
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, complete_graph, cycle_graph, petersen_graph};
    use crate::inflation::inflate;

    fn check(gi: &InflatedGraph, k: usize) -> usize {
        let s = generic_upper_set(gi, k).unwrap();
        assert!(is_ktds(gi.graph(), &s, k).unwrap());
        s.len()
    }

    #[test]
    fn classical_size_when_delta_exceeds_k() {
        assert_eq!(check(&inflate(&complete_graph(4).unwrap()).unwrap(), 2), 11);
        assert_eq!(check(&inflate(&complete_graph(5).unwrap()).unwrap(), 3), 19);
        assert_eq!(check(&inflate(&complete_graph(6).unwrap()).unwrap(), 4), 29);
        assert_eq!(check(&inflate(&petersen_graph(5, 2).unwrap()).unwrap(), 2), 29);
    }

    #[test]
    fn hub_keeps_k_members() {
        let gi = inflate(&complete_graph(5).unwrap()).unwrap();
        let s = generic_upper_set(&gi, 2).unwrap();
        let in_hub = s.iter().filter(|&v| gi.clique_of(v) == 0).count();
        assert_eq!(in_hub, 2);
        for v in s.iter().filter(|&v| gi.clique_of(v) == 0) {
            assert!(s.contains(gi.blue_index(v)));
        }
    }

    #[test]
    fn regular_with_k_equal_delta_takes_everything() {
        // C_5 inflated has only 10 vertices, fewer than n(k+1)-1 = 14
        assert_eq!(check(&inflate(&cycle_graph(5).unwrap()).unwrap(), 2), 10);
        assert_eq!(check(&inflate(&complete_graph(5).unwrap()).unwrap(), 4), 20);
    }

    #[test]
    fn forced_partners_can_exceed_the_classical_size() {
        let g = complete_bipartite(2, 6).unwrap();
        let gi = inflate(&g).unwrap();
        assert_eq!(check(&gi, 2), 24);
        assert!(24 > g.order() * 3 - 1);
    }
}
