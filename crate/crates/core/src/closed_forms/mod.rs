//! Closed-form values of `gamma_{x k, t}(G_I)` for named families, explicit
//! sets that attain them, and bounds for graphs glued at a cut edge or a
//! cut vertex.

mod construct;

pub use construct::construct_family_ktds;

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};
use crate::graph::{normalize_petersen_offset, Family};

pub fn gamma_complete(n: usize, k: usize) -> Result<usize> {
    if k < 2 || k >= n {
        return input(format!("complete graph formula needs 2 <= k < n, got n = {n}, k = {k}"));
    }
    Ok(n * k + usize::from(n % 2 == 1 && k % 2 == 1))
}

/// `K_n` and `K_m` joined by a single edge.
pub fn gamma_complete_cutedge(n: usize, m: usize, k: usize) -> Result<usize> {
    if !(2 <= k && k < n && n <= m) {
        return input(format!("cut-edge formula needs 2 <= k < n <= m, got n = {n}, m = {m}, k = {k}"));
    }
    Ok(k * (n + m) + usize::from(k % 2 == 1 && n % 2 != m % 2))
}

/// Generalized Petersen graphs with `k = 2`, as published: `4n + 2` when the
/// offset is `n/2` and odd, `4n` otherwise.
///
/// The `4n + 2` branch does not survive exact search: for `m = n/2` the
/// degree-2 inner vertices force the paths `a_i b_i b_{i+m} a_{i+m}`, and an
/// outer perfect matching closes them into a 2-factor, so the true value is
/// `4n` there as well. The published value is kept for comparison.
pub fn gamma_gpg_k2(n: usize, m: usize) -> Result<usize> {
    if n < 3 {
        return input(format!("generalized Petersen graph needs n >= 3, got {n}"));
    }
    let m = normalize_petersen_offset(n, m)?;
    Ok(if 2 * m == n && m % 2 == 1 { 4 * n + 2 } else { 4 * n })
}

/// Harary graph `H_{m,n}`. For odd `m` and odd `n` the graph is not regular
/// and the value is a conjecture to be checked against the solver.
pub fn gamma_harary(m: usize, n: usize, k: usize) -> Result<usize> {
    if !(2 <= k && k <= m && m < n) {
        return input(format!("Harary formula needs 2 <= k <= m < n, got m = {m}, n = {n}, k = {k}"));
    }
    Ok(n * k + usize::from(n % 2 == 1 && k % 2 == 1))
}

/// `2pk + (q - p)(k + 1)` for `K_{p,q}` with `p <= q`.
///
/// Proven for `k < p`, and for `k <= p` when `p = q`. It is also evaluated
/// for `k = p < q`, where it undershoots: every clique on the small side is
/// then tight and forces all `2pq` vertices.
pub fn gamma_complete_bipartite(p: usize, q: usize, k: usize) -> Result<usize> {
    let (p, q) = (p.min(q), p.max(q));
    if k < 2 || k > p {
        return input(format!("bipartite formula needs 2 <= k <= min(p, q), got p = {p}, q = {q}, k = {k}"));
    }
    Ok(2 * p * k + (q - p) * (k + 1))
}

/// Largest sum of a subset of `sizes` that is at most half the total, and
/// the indices of one such subset (the first found in index order).
pub fn half_split(sizes: &[usize]) -> (usize, Vec<usize>) {
    let n: usize = sizes.iter().sum();
    let limit = n / 2;
    // reach[s] = index of the part that first reached sum s, plus one
    let mut reach = vec![0usize; limit + 1];
    let mut seen = vec![false; limit + 1];
    seen[0] = true;
    for (i, &s) in sizes.iter().enumerate() {
        for total in (s..=limit).rev() {
            if !seen[total] && seen[total - s] && reach[total - s] <= i {
                seen[total] = true;
                reach[total] = i + 1;
            }
        }
    }
    let best = (0..=limit).rev().find(|&t| seen[t]).unwrap_or(0);
    let mut parts = Vec::new();
    let mut t = best;
    while t > 0 {
        let i = reach[t] - 1;
        parts.push(i);
        t -= sizes[i];
    }
    parts.reverse();
    (best, parts)
}

/// Upper bound `n(k+1) - 2n'` for complete multipartite graphs, where `n'`
/// is the largest union of parts covering at most half the vertices.
///
/// Needs `k < n'`; `k = n'` is accepted when `2n' = n`, since the balanced
/// bipartite subgraph then spans the graph.
pub fn upper_multipartite(sizes: &[usize], k: usize) -> Result<usize> {
    if sizes.len() < 2 || sizes.contains(&0) {
        return input("a complete multipartite graph needs at least two non-empty parts");
    }
    let n: usize = sizes.iter().sum();
    let (half, _) = half_split(sizes);
    if k < 2 || k > half || (k == half && 2 * half != n) {
        return input(format!("multipartite bound needs 2 <= k < n' = {half}, got k = {k}"));
    }
    Ok(n * (k + 1) - 2 * half)
}

/// A family's closed form: exact, or an upper bound only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaValue {
    pub value: usize,
    pub exact: bool,
    pub basis: &'static str,
}

/// Dispatches to the formula for `family`.
pub fn family_formula(family: &Family, k: usize) -> Result<FormulaValue> {
    let exact = |value, basis| Ok(FormulaValue { value, exact: true, basis });
    match family {
        Family::Complete { n } => exact(gamma_complete(*n, k)?, "complete"),
        Family::Bipartite { p, q } => exact(gamma_complete_bipartite(*p, *q, k)?, "complete_bipartite"),
        Family::Multipartite { sizes } => {
            Ok(FormulaValue { value: upper_multipartite(sizes, k)?, exact: false, basis: "multipartite_upper" })
        }
        Family::Harary { m, n } => exact(gamma_harary(*m, *n, k)?, "harary"),
        Family::Petersen { n, m } if k == 2 => exact(gamma_gpg_k2(*n, *m)?, "gpg_k2"),
        Family::Petersen { .. } => {
            Err(crate::Error::Unsupported("generalized Petersen formula covers k = 2 only; use solve".into()))
        }
        Family::Cycle { n } if k == 2 => exact(2 * n, "cycle"),
        Family::Cycle { .. } => Err(crate::Error::Infeasible("a cycle has minimum degree 2".into())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CompositionBasis {
    /// Cut edge, `k <= min degree`.
    T11,
    /// Cut edge, `k <` both minimum degrees.
    T12,
    /// Cut vertex.
    T15,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionBound {
    pub lower: usize,
    pub upper: usize,
    pub basis: CompositionBasis,
}

/// Interval for a graph `F` made of `G` and `H` joined by a cut edge, given
/// the two parts' values. `strict` means `k` is below both minimum degrees.
pub fn cutedge_bounds(g_gamma: usize, h_gamma: usize, k: usize, strict: bool) -> CompositionBound {
    let sum = g_gamma + h_gamma;
    let (drop, basis) = if strict { (2, CompositionBasis::T12) } else { (k, CompositionBasis::T11) };
    CompositionBound { lower: sum.saturating_sub(drop), upper: sum, basis }
}

/// Interval for a graph with a cut vertex whose v-components have the given values.
pub fn cutvertex_bounds(gammas: &[usize], k: usize) -> Result<CompositionBound> {
    if gammas.len() < 2 {
        return input(format!("a cut vertex has at least two v-components, got {}", gammas.len()));
    }
    if k < 2 {
        return input(format!("k must be at least 2 here, got {k}"));
    }
    let sum: usize = gammas.iter().sum();
    let lower = (sum + k).saturating_sub(gammas.len() * (k + 1));
    Ok(CompositionBound { lower, upper: sum, basis: CompositionBasis::T15 })
}
