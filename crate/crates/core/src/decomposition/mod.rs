//! Edge-disjoint 2-factor decompositions of the base graph and the kTDS
//! constructions they certify.
//!
//! `gamma_{x k, t}(G_I) = n k` exactly when `G` has `k/2` edge-disjoint
//! 2-factors (k even) or `(k-1)/2` of them plus a perfect matching avoiding
//! their edges (k odd). For odd `n` and odd `k` the analogous statement with
//! a matching of size `(n-1)/2` gives `n k + 1`.

mod certificate;
mod factor;
mod predict;

pub use certificate::{
    find_certificate, find_certificate_with_cap, ktds_from_certificate, CertificateKind, HLCertificate,
};
pub use factor::{find_two_factor, find_two_factor_with_cap, TwoFactor, DECOMPOSITION_CAP};
pub use predict::{predict_gamma, predict_gamma_with_cap, Basis, GammaPrediction, GammaValue};
