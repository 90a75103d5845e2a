use serde::{Deserialize, Serialize};

use super::factor::{check_cap, factor_from_ids, for_each_two_factor, TwoFactor, DECOMPOSITION_CAP};
use crate::domination::{check_k, is_ktds};
use crate::error::{input, Result};
use crate::graph::{maximum_matching_with_cap, Edge, Graph, Matching};
use crate::inflation::InflatedGraph;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CertificateKind {
    /// `k/2` edge-disjoint 2-factors, `k` even.
    #[serde(rename = "HLD")]
    Hld,
    /// `(k-1)/2` edge-disjoint 2-factors plus a disjoint perfect matching.
    #[serde(rename = "HLPM")]
    Hlpm,
    /// As [`CertificateKind::Hlpm`] but with a matching of size `(n-1)/2`, `n` odd.
    #[serde(rename = "HLMM")]
    Hlmm,
}

impl CertificateKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CertificateKind::Hld => "HLD",
            CertificateKind::Hlpm => "HLPM",
            CertificateKind::Hlmm => "HLMM",
        }
    }
}

/// Edge-disjoint 2-factors of a graph, optionally with a matching that
/// avoids every factor edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HLCertificate {
    pub kind: CertificateKind,
    pub factors: Vec<TwoFactor>,
    pub matching: Option<Matching>,
    /// The vertex the matching misses (HLMM only).
    pub unsaturated: Option<usize>,
    pub host: Graph,
}

impl HLCertificate {
    /// Checks the structural invariants against `host`.
    pub fn validate(&self) -> Result<()> {
        let n = self.host.order();
        for (i, f) in self.factors.iter().enumerate() {
            TwoFactor::from_edges(&self.host, f.edges())?;
            for g in &self.factors[i + 1..] {
                if !f.is_edge_disjoint(g) {
                    return input("certificate factors share an edge");
                }
            }
        }
        match (self.kind, &self.matching) {
            (CertificateKind::Hld, None) => {}
            (CertificateKind::Hld, Some(_)) => return input("an HLD certificate carries no matching"),
            (_, None) => return input("certificate kind requires a matching"),
            (kind, Some(m)) => {
                Matching::new(&self.host, m.edges())?;
                if self.factors.iter().any(|f| m.edges().iter().any(|e| f.edges().binary_search(e).is_ok())) {
                    return input("matching shares an edge with a factor");
                }
                let ok = match kind {
                    CertificateKind::Hlpm => m.is_perfect(n),
                    _ => m.is_near_perfect(n) && self.unsaturated.is_some_and(|u| u < n && !m.saturates(u)),
                };
                if !ok {
                    return input(format!("matching of size {} does not fit a {} certificate", m.len(), kind.as_str()));
                }
            }
        }
        Ok(())
    }

    /// The `k` this certificate witnesses.
    pub fn k(&self) -> usize {
        2 * self.factors.len() + usize::from(self.kind != CertificateKind::Hld)
    }
}

/// Searches for the certificate matching the parity of `k`; `None` means
/// none exists (the search is exhaustive).
pub fn find_certificate(g: &Graph, k: usize) -> Result<Option<HLCertificate>> {
    find_certificate_with_cap(g, k, DECOMPOSITION_CAP)
}

pub fn find_certificate_with_cap(g: &Graph, k: usize, cap: usize) -> Result<Option<HLCertificate>> {
    check_k(g, k)?;
    check_cap(g, cap)?;
    let mut search = CertSearch { g, k, used: vec![false; g.size()], stack: Vec::new(), found: None };
    search.rec(None);
    Ok(search.found)
}

struct CertSearch<'a> {
    g: &'a Graph,
    k: usize,
    used: Vec<bool>,
    stack: Vec<Vec<usize>>,
    found: Option<HLCertificate>,
}

impl CertSearch<'_> {
    /// Factors are produced with increasing smallest edge index, so every
    /// unordered family of factors is visited once.
    fn rec(&mut self, min_edge: Option<usize>) -> bool {
        if self.stack.len() == self.k / 2 {
            return self.finish();
        }
        let lo = min_edge.map_or(0, |m| m + 1);
        let allowed: Vec<usize> = (lo..self.g.size()).filter(|&i| !self.used[i]).collect();
        let g = self.g;
        for_each_two_factor(g, &allowed, &mut |ids| {
            for &i in ids {
                self.used[i] = true;
            }
            self.stack.push(ids.to_vec());
            let done = self.rec(Some(ids[0]));
            self.stack.pop();
            for &i in ids {
                self.used[i] = false;
            }
            done
        })
    }

    fn finish(&mut self) -> bool {
        let g = self.g;
        let n = g.order();
        let factors = || self.stack.iter().map(|ids| factor_from_ids(g, ids)).collect::<Vec<_>>();
        if self.k.is_multiple_of(2) {
            self.found = Some(HLCertificate {
                kind: CertificateKind::Hld,
                factors: factors(),
                matching: None,
                unsaturated: None,
                host: g.clone(),
            });
            return true;
        }

        let rest: Vec<Edge> = (0..g.size()).filter(|&i| !self.used[i]).map(|i| g.edges()[i]).collect();
        if n.is_multiple_of(2) {
            let remaining = Graph::from_edges(n, &rest).expect("subgraph of a valid graph");
            let m = maximum_matching_with_cap(&remaining, n).expect("cap covers the host");
            if m.is_perfect(n) {
                let matching = Matching::new(g, m.edges()).expect("matching of a subgraph");
                self.found = Some(HLCertificate {
                    kind: CertificateKind::Hlpm,
                    factors: factors(),
                    matching: Some(matching),
                    unsaturated: None,
                    host: g.clone(),
                });
                return true;
            }
            return false;
        }

        // odd order: try every vertex as the unmatched one, roomier cliques first
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&u| (g.degree(u) < self.k + 1, u));
        for u in order {
            let keep: Vec<Edge> = rest.iter().copied().filter(|&(a, b)| a != u && b != u).collect();
            let remaining = Graph::from_edges(n, &keep).expect("subgraph of a valid graph");
            let m = maximum_matching_with_cap(&remaining, n).expect("cap covers the host");
            if 2 * m.len() + 1 == n {
                let matching = Matching::new(g, m.edges()).expect("matching of a subgraph");
                self.found = Some(HLCertificate {
                    kind: CertificateKind::Hlmm,
                    factors: factors(),
                    matching: Some(matching),
                    unsaturated: Some(u),
                    host: g.clone(),
                });
                return true;
            }
        }
        false
    }
}

/// The kTDS of `G_I` read off a certificate: both cycle neighbours in every
/// clique for each factor, both ends of every blue edge over a matching
/// edge, and for HLMM two extra vertices in the unmatched vertex's clique.
///
/// Sizes are `n k` for HLD and HLPM and `n k + 1` for HLMM. When the
/// unmatched clique has only one vertex left (its base degree is `k`) that
/// vertex is taken together with its blue partner, which keeps the size at
/// `n k + 1`.
pub fn ktds_from_certificate(gi: &InflatedGraph, cert: &HLCertificate, k: usize) -> Result<VertexSet> {
    if cert.host != *gi.base() {
        return input("certificate host differs from the inflated graph's base");
    }
    cert.validate()?;
    let even = cert.kind == CertificateKind::Hld;
    if k.is_multiple_of(2) != even || cert.k() != k {
        return input(format!(
            "a {} certificate with {} factors does not witness k = {k}",
            cert.kind.as_str(),
            cert.factors.len()
        ));
    }
    let n = cert.host.order();
    let mut set = VertexSet::new();
    for f in &cert.factors {
        for (v, (a, b)) in f.neighbour_pairs(n).into_iter().enumerate() {
            set.insert(gi.idx(v, a));
            set.insert(gi.idx(v, b));
        }
    }
    if let Some(m) = &cert.matching {
        for &(u, v) in m.edges() {
            set.insert(gi.idx(u, v));
            set.insert(gi.idx(v, u));
        }
    }
    let mut expected = n * k;
    if cert.kind == CertificateKind::Hlmm {
        let u = cert.unsaturated.expect("validated");
        let free: Vec<usize> = gi.clique_range(u).filter(|&x| !set.contains(x)).collect();
        let (alpha, beta) = match free[..] {
            [a, b, ..] => (a, b),
            [a] => (a, gi.blue_index(a)),
            [] => unreachable!("the unmatched clique keeps at least one free vertex"),
        };
        set.insert(alpha);
        set.insert(beta);
        expected += 1;
    }
    assert_eq!(set.len(), expected, "certificate picks must be distinct");
    assert!(is_ktds(gi.graph(), &set, k)?, "certificate construction must dominate");
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::solve_inflated;
    use crate::graph::{complete_bipartite, complete_graph, cycle_graph, petersen_graph};
    use crate::inflation::inflate;

    fn cert(g: &Graph, k: usize) -> Option<HLCertificate> {
        let c = find_certificate(g, k).unwrap();
        if let Some(c) = &c {
            c.validate().unwrap();
            assert_eq!(c.k(), k);
        }
        c
    }

    #[test]
    fn k5_even_k_has_two_hamiltonian_cycles() {
        let g = complete_graph(5).unwrap();
        let c = cert(&g, 4).unwrap();
        assert_eq!(c.kind, CertificateKind::Hld);
        assert_eq!(c.factors.len(), 2);
        assert!(c.factors.iter().all(|f| f.cycles().len() == 1));
        let s = ktds_from_certificate(&inflate(&g).unwrap(), &c, 4).unwrap();
        assert_eq!(s.len(), 20);
    }

    #[test]
    fn k4_square_plus_matching() {
        let g = complete_graph(4).unwrap();
        let c = cert(&g, 3).unwrap();
        assert_eq!(c.kind, CertificateKind::Hlpm);
        assert_eq!(c.matching.as_ref().unwrap().len(), 2);
        let s = ktds_from_certificate(&inflate(&g).unwrap(), &c, 3).unwrap();
        assert_eq!(s.len(), 12);
    }

    #[test]
    fn k5_odd_k_needs_the_near_perfect_variant() {
        let g = complete_graph(5).unwrap();
        let c = cert(&g, 3).unwrap();
        assert_eq!(c.kind, CertificateKind::Hlmm);
        assert_eq!(c.matching.as_ref().unwrap().len(), 2);
        let s = ktds_from_certificate(&inflate(&g).unwrap(), &c, 3).unwrap();
        assert_eq!(s.len(), 16);
    }

    #[test]
    fn k_above_min_degree_is_rejected() {
        assert!(find_certificate(&complete_graph(5).unwrap(), 5).is_err());
    }

    #[test]
    fn petersen_outer_and_inner_cycles() {
        let g = petersen_graph(5, 2).unwrap();
        let c = cert(&g, 2).unwrap();
        assert_eq!(c.kind, CertificateKind::Hld);
        let gi = inflate(&g).unwrap();
        assert_eq!(ktds_from_certificate(&gi, &c, 2).unwrap().len(), 20);
        // the Petersen graph itself is not Hamiltonian
        assert!(c.factors[0].cycles().iter().all(|cy| cy.len() == 5));
    }

    #[test]
    fn unbalanced_bipartite_has_no_factor() {
        assert!(cert(&complete_bipartite(2, 3).unwrap(), 2).is_none());
        assert!(cert(&complete_bipartite(3, 4).unwrap(), 3).is_none());
    }

    #[test]
    fn roomy_unmatched_clique_takes_two_extras() {
        let g = complete_graph(5).unwrap();
        let factor = TwoFactor::from_edges(&g, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let matching = Matching::new(&g, &[(0, 2), (1, 3)]).unwrap();
        let c = HLCertificate {
            kind: CertificateKind::Hlmm,
            factors: vec![factor],
            matching: Some(matching),
            unsaturated: Some(4),
            host: g.clone(),
        };
        let gi = inflate(&g).unwrap();
        let s = ktds_from_certificate(&gi, &c, 3).unwrap();
        assert_eq!(s.len(), 16);
        assert_eq!(s.iter().filter(|&v| gi.clique_of(v) == 4).count(), 4);
        // the two lexicographically least free vertices: towards 1 and 2
        assert!(s.contains(gi.idx(4, 1)) && s.contains(gi.idx(4, 2)));
    }

    #[test]
    fn fallback_when_unmatched_clique_is_small() {
        // degree-3 unmatched vertex with k = 3: the one free vertex and its partner
        let g =
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (1, 3), (0, 3), (1, 4)]).unwrap();
        assert_eq!(g.degree(2), 3);
        let factor = TwoFactor::from_edges(&g, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let matching = Matching::new(&g, &[(0, 3), (1, 4)]).unwrap();
        let c = HLCertificate {
            kind: CertificateKind::Hlmm,
            factors: vec![factor],
            matching: Some(matching),
            unsaturated: Some(2),
            host: g.clone(),
        };
        let gi = inflate(&g).unwrap();
        let s = ktds_from_certificate(&gi, &c, 3).unwrap();
        assert_eq!(s.len(), 16);
        assert!(s.contains(gi.idx(2, 0)) && s.contains(gi.idx(0, 2)));
        assert_eq!(solve_inflated(&g, 3).unwrap().gamma, 16);
    }

    #[test]
    fn parity_mismatch_is_an_input_error() {
        let g = complete_graph(4).unwrap();
        let c = cert(&g, 2).unwrap();
        assert!(ktds_from_certificate(&inflate(&g).unwrap(), &c, 3).is_err());
        let other = cycle_graph(4).unwrap();
        assert!(ktds_from_certificate(&inflate(&other).unwrap(), &c, 2).is_err());
    }
}
