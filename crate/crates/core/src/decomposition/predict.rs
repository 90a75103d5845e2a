use serde::{Deserialize, Serialize};

use super::certificate::{find_certificate_with_cap, CertificateKind, HLCertificate};
use super::factor::DECOMPOSITION_CAP;
use crate::domination::{bounds, check_k, generic_upper_set};
use crate::error::Result;
use crate::graph::Graph;
use crate::inflation::inflate;

/// Which result a prediction rests on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    /// Generic bounds only.
    T1,
    /// Even `k`, edge-disjoint 2-factors.
    T4,
    /// Odd `k`, 2-factors plus a perfect matching.
    T5,
    /// No certificate of the right parity: strictly above `n k`.
    T7,
    /// Odd `k` and `n`, 2-factors plus a near-perfect matching.
    T8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GammaValue {
    #[serde(rename = "value")]
    Exact(usize),
    #[serde(rename = "interval")]
    Interval(usize, usize),
}

impl GammaValue {
    pub fn contains(self, gamma: usize) -> bool {
        match self {
            GammaValue::Exact(v) => v == gamma,
            GammaValue::Interval(lo, hi) => lo <= gamma && gamma <= hi,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaPrediction {
    #[serde(flatten)]
    pub value: GammaValue,
    pub basis: Basis,
    #[serde(skip)]
    pub certificate: Option<HLCertificate>,
}

/// Predicts `gamma_{x k, t}(G_I)` from a certificate search, without
/// running the exact solver.
pub fn predict_gamma(g: &Graph, k: usize) -> Result<GammaPrediction> {
    predict_gamma_with_cap(g, k, DECOMPOSITION_CAP)
}

/// As [`predict_gamma`]; graphs above `cap` vertices get the bounds interval.
///
/// The upper end of every interval is the size of the explicit set from
/// [`generic_upper_set`], which always verifies, rather than the published
/// upper bounds, which can undershoot when `k` equals the minimum degree.
pub fn predict_gamma_with_cap(g: &Graph, k: usize, cap: usize) -> Result<GammaPrediction> {
    check_k(g, k)?;
    let nk = g.order() * k;
    let report = bounds(g, k)?;
    let upper = || -> Result<usize> { Ok(generic_upper_set(&inflate(g)?, k)?.len()) };

    if g.order() > cap {
        let value = GammaValue::Interval(report.best_lower, upper()?);
        return Ok(GammaPrediction { value, basis: Basis::T1, certificate: None });
    }
    match find_certificate_with_cap(g, k, cap)? {
        Some(cert) => {
            let (value, basis) = match cert.kind {
                CertificateKind::Hld => (nk, Basis::T4),
                CertificateKind::Hlpm => (nk, Basis::T5),
                CertificateKind::Hlmm => (nk + 1, Basis::T8),
            };
            Ok(GammaPrediction { value: GammaValue::Exact(value), basis, certificate: Some(cert) })
        }
        None => {
            let lo = (nk + 1).max(report.best_lower);
            let hi = upper()?;
            let value = if hi < lo { GammaValue::Exact(hi) } else { GammaValue::Interval(lo, hi) };
            let basis = if hi < lo { Basis::T1 } else { Basis::T7 };
            Ok(GammaPrediction { value, basis, certificate: None })
        }
    }
}
