use super::{Method, SolveResult};
use crate::error::{input, Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Default vertex cap for [`brute_force_min_ktds`].
pub const BRUTE_FORCE_CAP: usize = 20;

/// Exact minimum kTDS of an arbitrary graph by exhaustive enumeration.
///
/// Subsets are visited by size, and within a size in lexicographic order of
/// their sorted member lists, so the witness is the lexicographically least
/// optimum. Works for any `k >= 1`; independent of the inflation structure.
pub fn brute_force_min_ktds(host: &Graph, k: usize) -> Result<SolveResult> {
    brute_force_min_ktds_with_cap(host, k, BRUTE_FORCE_CAP)
}

pub fn brute_force_min_ktds_with_cap(host: &Graph, k: usize, cap: usize) -> Result<SolveResult> {
    if k == 0 {
        return input("k must be at least 1");
    }
    let n = host.order();
    if n > cap.min(64) {
        return Err(Error::Capacity(format!("brute force is capped at {} vertices, got {n}", cap.min(64))));
    }
    if host.min_degree() < k {
        return Err(Error::Infeasible(format!("minimum degree {} is below k = {k}", host.min_degree())));
    }
    let nbr: Vec<u64> = (0..n).map(|v| host.neighbors(v).iter().fold(0u64, |acc, &w| acc | 1 << w)).collect();
    let dominates = |mask: u64| nbr.iter().all(|&m| (m & mask).count_ones() as usize >= k);

    let mut checked = 0u64;
    for size in k..=n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            checked += 1;
            let mask = combo.iter().fold(0u64, |acc, &v| acc | 1 << v);
            if dominates(mask) {
                return Ok(SolveResult {
                    gamma: size,
                    witness: combo.iter().copied().collect::<VertexSet>(),
                    method: Method::BruteForce,
                    nodes_explored: checked,
                });
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set dominates once min degree >= k")
}

/// Advances `combo` to the next `len`-subset of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let len = combo.len();
    let mut i = len;
    while i > 0 {
        i -= 1;
        if combo[i] < n - len + i {
            combo[i] += 1;
            for j in i + 1..len {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
