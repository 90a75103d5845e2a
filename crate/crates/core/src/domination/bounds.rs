use serde::{Deserialize, Serialize};

use super::check_k;
use crate::error::Result;
use crate::graph::Graph;

/// Where a bound on `gamma_{x k, t}(G_I)` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundSource {
    /// Every red clique holds at least `k` members: `n k`.
    #[serde(rename = "nk")]
    CliqueMinimum,
    /// Degree-counting bound on the inflation: `ceil(2 k m / Delta)`.
    #[serde(rename = "kn_over_delta")]
    DegreeCount,
    /// Generic construction: `n (k + 1) - 1`.
    #[serde(rename = "n(k+1)-1")]
    Generic,
    /// With `k = delta`: `n (delta + 1) - l`, `l` the number of minimum-degree vertices.
    #[serde(rename = "delta_refinement")]
    DeltaRefinement,
}

impl BoundSource {
    pub fn tag(self) -> &'static str {
        match self {
            BoundSource::CliqueMinimum => "nk",
            BoundSource::DegreeCount => "kn_over_delta",
            BoundSource::Generic => "n(k+1)-1",
            BoundSource::DeltaRefinement => "delta_refinement",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub value: usize,
    pub source: BoundSource,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub lower: Vec<BoundEntry>,
    pub upper: Vec<BoundEntry>,
    pub best_lower: usize,
    pub best_upper: usize,
}

/// Closed-form bounds on `gamma_{x k, t}(G_I)` for `2 <= k <= delta(G)`.
///
/// These are the published bounds. The upper ones are not guaranteed when
/// `k = delta`: minimum-degree cliques force their blue partners, and a
/// vertex with many such neighbours can push gamma past `n (k + 1) - 1`
/// (e.g. `K_{2,6}` with `k = 2` has gamma 24 against a bound of 23). Callers
/// that hold an exact value should cross-check rather than trust them.
pub fn bounds(g: &Graph, k: usize) -> Result<BoundsReport> {
    check_k(g, k)?;
    let n = g.order();
    let m = g.size();
    let delta = g.min_degree();
    let big_delta = g.max_degree();

    let lower = vec![
        BoundEntry { value: n * k, source: BoundSource::CliqueMinimum },
        BoundEntry { value: (2 * k * m).div_ceil(big_delta), source: BoundSource::DegreeCount },
    ];
    let mut upper = vec![BoundEntry { value: n * (k + 1) - 1, source: BoundSource::Generic }];
    if k == delta {
        let ell = g.degrees().iter().filter(|&&d| d == delta).count();
        upper.push(BoundEntry { value: n * (delta + 1) - ell, source: BoundSource::DeltaRefinement });
    }
    let best_lower = lower.iter().map(|b| b.value).max().unwrap();
    let best_upper = upper.iter().map(|b| b.value).min().unwrap();
    Ok(BoundsReport { lower, upper, best_lower, best_upper })
}
