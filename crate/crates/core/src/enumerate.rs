//! Small graphs up to isomorphism.
//!
//! Graphs with minimum degree at least `d` on `n` vertices are grown from
//! graphs with minimum degree at least `d - 1` on `n - 1` vertices by adding
//! one vertex with every possible neighbourhood, then reduced to a canonical
//! edge mask. Deleting any vertex of a graph in the target class lands in
//! the source class, so nothing is missed.

use std::collections::BTreeMap;

use crate::error::{input, Result};
use crate::graph::Graph;

/// Largest order handled; canonical masks index pairs in a `u64`.
pub const MAX_ENUM_ORDER: usize = 8;

/// Connected graphs on exactly `n` vertices with minimum degree at least
/// `min_degree`, one per isomorphism class, ordered by size then canonical mask.
pub fn connected_graphs(n: usize, min_degree: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUM_ORDER {
        return input(format!("enumeration supports 1..={MAX_ENUM_ORDER} vertices, got {n}"));
    }
    let mut out: Vec<(usize, u64, Graph)> = classes(n, min_degree)
        .into_iter()
        .map(|(mask, g)| (g.size(), mask, g))
        .filter(|(_, _, g)| g.is_connected())
        .collect();
    out.sort_by_key(|&(m, mask, _)| (m, mask));
    Ok(out.into_iter().map(|(_, _, g)| g).collect())
}

/// [`connected_graphs`] for every order in `lo..=hi`.
pub fn connected_graphs_upto(lo: usize, hi: usize, min_degree: usize) -> Result<Vec<Graph>> {
    let mut all = Vec::new();
    for n in lo..=hi {
        all.extend(connected_graphs(n, min_degree)?);
    }
    Ok(all)
}

fn classes(n: usize, d: usize) -> BTreeMap<u64, Graph> {
    let mut out = BTreeMap::new();
    if n == 1 {
        if d == 0 {
            let g = Graph::from_edges(1, &[]).expect("single vertex");
            out.insert(0, g);
        }
        return out;
    }
    let last = n - 1;
    for parent in classes(n - 1, d.saturating_sub(1)).into_values() {
        for subset in 0u32..1 << last {
            if (subset.count_ones() as usize) < d {
                continue;
            }
            let mut pairs: Vec<(usize, usize)> = parent.edges().to_vec();
            pairs.extend((0..last).filter(|&v| subset >> v & 1 == 1).map(|v| (v, last)));
            let g = Graph::from_edges(n, &pairs).expect("extension of a valid graph");
            if g.min_degree() >= d {
                out.entry(canonical_mask(&g)).or_insert(g);
            }
        }
    }
    out
}

/// Smallest edge mask over all relabellings that list vertices in order of
/// the invariant (degree, sorted neighbour degrees). Isomorphic graphs get
/// the same mask, and the invariant ordering only limits which labellings
/// are tried.
pub fn canonical_mask(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n <= MAX_ENUM_ORDER, "canonical masks cover at most {MAX_ENUM_ORDER} vertices");
    let invariant: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut around: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            around.sort_unstable();
            (g.degree(v), around)
        })
        .collect();
    let mut slots: Vec<usize> = (0..n).collect();
    slots.sort_by(|&a, &b| invariant[a].cmp(&invariant[b]));
    let targets: Vec<&(usize, Vec<usize>)> = slots.iter().map(|&v| &invariant[v]).collect();

    let mut best = u64::MAX;
    let mut label = vec![usize::MAX; n];
    let mut used = vec![false; n];
    place(g, &invariant, &targets, 0, &mut label, &mut used, &mut best);
    best
}

fn place(
    g: &Graph,
    invariant: &[(usize, Vec<usize>)],
    targets: &[&(usize, Vec<usize>)],
    pos: usize,
    label: &mut [usize],
    used: &mut [bool],
    best: &mut u64,
) {
    let n = g.order();
    if pos == n {
        let mask = g.edges().iter().fold(0u64, |acc, &(u, v)| {
            let (a, b) = (label[u].min(label[v]), label[u].max(label[v]));
            acc | 1 << (a * n + b)
        });
        *best = (*best).min(mask);
        return;
    }
    for v in 0..n {
        if !used[v] && invariant[v] == *targets[pos] {
            used[v] = true;
            label[v] = pos;
            place(g, invariant, targets, pos + 1, label, used, best);
            used[v] = false;
        }
    }
}
