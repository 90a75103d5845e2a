//! Machine-readable reports for the command line, with 1-based vertex ids.
//!
//! JSON is emitted in canonical form (keys sorted, compact), so parsing a
//! report and serializing it again reproduces the same bytes.

use serde::{Deserialize, Serialize};

use crate::check::Discrepancy;
use crate::closed_forms::family_formula;
use crate::decomposition::{predict_gamma_with_cap, GammaPrediction, HLCertificate};
use crate::domination::{
    bounds, brute_force_min_ktds, check_k, solve, BoundsReport, Method, SolveResult, SolverConfig,
};
use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::inflation::inflate;

/// Serializes `value` with sorted keys and no whitespace.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    let tree = serde_json::to_value(value).expect("reports serialize");
    serde_json::to_string(&tree).expect("values serialize")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub input: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub bounds: BoundsReport,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub prediction: Option<GammaPrediction>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gamma: Option<usize>,
    /// Best interval known when the search budget ran out.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub interval: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub method: Option<Method>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<[usize; 2]>>,
    pub nodes: u64,
    pub discrepancies: Vec<Discrepancy>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOptions {
    pub solver: SolverConfig,
    pub cap: usize,
    /// Use brute force on the inflation instead of the clique search.
    pub oracle: bool,
}

/// Bounds, certificate prediction and exact value for one instance, with
/// every published claim that applies cross-checked against the result.
pub fn solve_report(
    input: &str,
    g: &Graph,
    family: Option<&Family>,
    k: usize,
    opts: &SolveOptions,
) -> Result<RunReport> {
    check_k(g, k)?;
    let gi = inflate(g)?;
    let bounds = bounds(g, k)?;
    let prediction = match predict_gamma_with_cap(g, k, opts.cap) {
        Ok(p) => Some(p),
        Err(Error::Capacity(_)) => None,
        Err(e) => return Err(e),
    };
    let mut report = RunReport {
        input: input.to_string(),
        n: g.order(),
        m: g.size(),
        k,
        bounds,
        prediction,
        gamma: None,
        interval: None,
        method: None,
        witness: None,
        nodes: 0,
        discrepancies: Vec::new(),
    };

    let solved = if opts.oracle { brute_force_min_ktds(gi.graph(), k) } else { solve(&gi, k, &opts.solver) };
    let SolveResult { gamma, witness, method, nodes_explored } = match solved {
        Ok(r) => r,
        Err(Error::Budget { lower, upper, nodes }) => {
            report.interval = Some([lower, upper]);
            report.nodes = nodes;
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    report.gamma = Some(gamma);
    report.method = Some(method);
    report.nodes = nodes_explored;
    report.witness = Some(gi.pairs(&witness).into_iter().map(|v| [v.owner + 1, v.partner + 1]).collect());

    let mut flag = |claim: String, expected: String| {
        report.discrepancies.push(Discrepancy {
            instance: input.to_string(),
            claim,
            expected,
            observed: gamma.to_string(),
        })
    };
    for b in &report.bounds.lower {
        if gamma < b.value {
            flag(format!("lower bound {}", b.source.tag()), format!(">= {}", b.value));
        }
    }
    for b in &report.bounds.upper {
        if gamma > b.value {
            flag(format!("upper bound {}", b.source.tag()), format!("<= {}", b.value));
        }
    }
    if let Some(p) = &report.prediction {
        if !p.value.contains(gamma) {
            flag(format!("certificate prediction ({:?})", p.basis), prediction_text(p));
        }
    }
    if let Some(f) = family {
        match family_formula(f, k) {
            Ok(v) if v.exact && v.value != gamma => flag(format!("closed form {}", v.basis), v.value.to_string()),
            Ok(v) if !v.exact && gamma > v.value => {
                flag(format!("closed-form bound {}", v.basis), format!("<= {}", v.value))
            }
            _ => {}
        }
    }
    Ok(report)
}

pub fn prediction_text(p: &GammaPrediction) -> String {
    match p.value {
        crate::decomposition::GammaValue::Exact(v) => v.to_string(),
        crate::decomposition::GammaValue::Interval(lo, hi) => format!("[{lo}, {hi}]"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub input: String,
    pub k: usize,
    /// `HLD`, `HLPM`, `HLMM`, or absent when no certificate exists.
    pub kind: Option<String>,
    pub factors: Vec<Vec<Vec<usize>>>,
    pub matching: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub unsaturated: Option<usize>,
    pub gamma_prediction: GammaPrediction,
}

pub fn decompose_report(input: &str, g: &Graph, k: usize, cap: usize) -> Result<DecomposeReport> {
    let prediction = predict_gamma_with_cap(g, k, cap)?;
    let cert: Option<&HLCertificate> = prediction.certificate.as_ref();
    let one = |v: &usize| v + 1;
    Ok(DecomposeReport {
        input: input.to_string(),
        k,
        kind: cert.map(|c| c.kind.as_str().to_string()),
        factors: cert
            .map(|c| {
                c.factors.iter().map(|f| f.cycles().iter().map(|cy| cy.iter().map(one).collect()).collect()).collect()
            })
            .unwrap_or_default(),
        matching: cert
            .and_then(|c| c.matching.as_ref())
            .map(|m| m.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect())
            .unwrap_or_default(),
        unsaturated: cert.and_then(|c| c.unsaturated).map(|u| u + 1),
        gamma_prediction: prediction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    fn opts() -> SolveOptions {
        SolveOptions { solver: SolverConfig::default(), cap: 12, oracle: false }
    }

    #[test]
    fn k5_report() {
        let fam: Family = "kn:5".parse().unwrap();
        let g = fam.build().unwrap();
        let r = solve_report("kn:5", &g, Some(&fam), 3, &opts()).unwrap();
        assert_eq!(r.gamma, Some(16));
        assert!(r.discrepancies.is_empty());
        assert_eq!(r.witness.as_ref().unwrap().len(), 16);
        assert!(r.witness.unwrap().iter().all(|&[a, b]| a >= 1 && b >= 1 && a != b));
    }

    #[test]
    fn json_round_trips_byte_for_byte() {
        let fam: Family = "kpq:2,3".parse().unwrap();
        let r = solve_report("kpq:2,3", &fam.build().unwrap(), Some(&fam), 2, &opts()).unwrap();
        assert!(!r.discrepancies.is_empty());
        let text = canonical_json(&r);
        let back: RunReport = serde_json::from_str(&text).unwrap();
        assert_eq!(canonical_json(&back), text);
        let raw: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&raw).unwrap(), text);
    }

    #[test]
    fn budget_degrades_to_interval() {
        let g = complete_graph(6).unwrap();
        let mut o = opts();
        o.solver.max_nodes = 1;
        let r = solve_report("kn:6", &g, None, 3, &o).unwrap();
        assert_eq!(r.gamma, None);
        let [lo, hi] = r.interval.unwrap();
        assert!(lo <= 18 && 18 <= hi);
    }

    #[test]
    fn oracle_route() {
        let g = complete_graph(4).unwrap();
        let mut o = opts();
        o.oracle = true;
        let r = solve_report("kn:4", &g, None, 2, &o).unwrap();
        assert_eq!((r.gamma, r.method), (Some(8), Some(Method::BruteForce)));
    }

    #[test]
    fn decompose_shape() {
        let g = complete_graph(4).unwrap();
        let r = decompose_report("kn:4", &g, 3, 12).unwrap();
        assert_eq!(r.kind.as_deref(), Some("HLPM"));
        assert_eq!(r.factors.len(), 1);
        assert_eq!(r.matching.len(), 2);
        let text = canonical_json(&r);
        assert!(text.contains(r#""gamma_prediction":{"basis":"T5","value":12}"#));
    }
}
