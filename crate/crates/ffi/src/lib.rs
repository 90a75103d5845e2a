//! C ABI over `inflata`.
//!
//! Graphs cross the boundary as opaque `InflataGraph` handles. Every fallible
//! call returns an `InflataStatus`; on failure the message is available from
//! [`inflata_last_error`] on the same thread until the next failing call.
//! Vertex ids are 0-based here, unlike the 1-based command-line formats.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use inflata::closed_forms::family_formula;
use inflata::decomposition::{predict_gamma_with_cap, Basis, GammaValue};
use inflata::domination::{bounds, solve, SolverConfig};
use inflata::{inflate, Error, Family, Graph};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InflataStatus {
    Ok = 0,
    InvalidInput = 1,
    Parse = 2,
    Infeasible = 3,
    Capacity = 4,
    /// The search budget ran out; the interval outputs are still filled in.
    Budget = 5,
    Unsupported = 6,
    Io = 7,
    NullPointer = 8,
    Panic = 9,
}

/// Which argument backs a prediction.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InflataBasis {
    Generic = 1,
    EvenFactors = 4,
    FactorsPerfectMatching = 5,
    ParityGap = 7,
    FactorsNearPerfectMatching = 8,
}

/// A predicted value: exact when `lower == upper`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InflataPrediction {
    pub lower: usize,
    pub upper: usize,
    pub basis: InflataBasis,
}

/// Opaque graph handle.
pub struct InflataGraph {
    graph: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn remember(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> InflataStatus {
    match e {
        Error::Input(_) => InflataStatus::InvalidInput,
        Error::Parse { .. } => InflataStatus::Parse,
        Error::Infeasible(_) => InflataStatus::Infeasible,
        Error::Capacity(_) => InflataStatus::Capacity,
        Error::Budget { .. } => InflataStatus::Budget,
        Error::Unsupported(_) => InflataStatus::Unsupported,
        Error::Io(_) => InflataStatus::Io,
    }
}

/// Runs `body`, turning errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), Error>) -> InflataStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => InflataStatus::Ok,
        Ok(Err(e)) => {
            let status = status_of(&e);
            remember(e.to_string());
            status
        }
        Err(_) => {
            remember("internal panic".to_string());
            InflataStatus::Panic
        }
    }
}

fn null(what: &str) -> InflataStatus {
    remember(format!("null pointer: {what}"));
    InflataStatus::NullPointer
}

/// # Safety
/// `s` must be a valid NUL-terminated string.
unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Error> {
    CStr::from_ptr(s).to_str().map_err(|e| Error::Input(format!("not UTF-8: {e}")))
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn inflata_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`u0, v0, u1, v1, ...`).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (it may be NULL
/// when `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn inflata_graph_new(
    n: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut InflataGraph,
) -> InflataStatus {
    if out.is_null() {
        return null("out");
    }
    if edges.is_null() && edge_count > 0 {
        return null("edges");
    }
    guard(|| {
        let flat = if edge_count == 0 { &[][..] } else { std::slice::from_raw_parts(edges, 2 * edge_count) };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize)).collect();
        let graph = Graph::from_edges(n, &pairs)?;
        *out = Box::into_raw(Box::new(InflataGraph { graph }));
        Ok(())
    })
}

/// Builds a graph from a family shorthand such as `kn:5` or `gpg:5,2`.
///
/// # Safety
/// `shorthand` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn inflata_graph_from_family(
    shorthand: *const c_char,
    out: *mut *mut InflataGraph,
) -> InflataStatus {
    if shorthand.is_null() {
        return null("shorthand");
    }
    if out.is_null() {
        return null("out");
    }
    guard(|| {
        let family: Family = text(shorthand)?.parse()?;
        *out = Box::into_raw(Box::new(InflataGraph { graph: family.build()? }));
        Ok(())
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `g` must come from one of the constructors and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn inflata_graph_free(g: *mut InflataGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn inflata_graph_order(g: *const InflataGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.order())
}

/// Number of edges, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn inflata_graph_size(g: *const InflataGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.size())
}

/// Exact minimum size of a k-tuple total dominating set of the inflation.
///
/// `max_nodes` of 0 selects the default budget. On `INFLATA_STATUS_BUDGET`
/// the value lies in `[*lower, *upper]`; on success both equal the answer.
///
/// # Safety
/// `g` must be a live handle; `lower` and `upper` writable.
#[no_mangle]
pub unsafe extern "C" fn inflata_solve(
    g: *const InflataGraph,
    k: usize,
    max_nodes: u64,
    lower: *mut usize,
    upper: *mut usize,
) -> InflataStatus {
    let Some(h) = g.as_ref() else { return null("graph") };
    if lower.is_null() || upper.is_null() {
        return null("lower/upper");
    }
    guard(|| {
        let mut cfg = SolverConfig::default();
        if max_nodes > 0 {
            cfg.max_nodes = max_nodes;
        }
        let gi = inflate(&h.graph)?;
        match solve(&gi, k, &cfg) {
            Ok(r) => {
                *lower = r.gamma;
                *upper = r.gamma;
                Ok(())
            }
            Err(e @ Error::Budget { lower: lo, upper: hi, .. }) => {
                *lower = lo;
                *upper = hi;
                Err(e)
            }
            Err(e) => Err(e),
        }
    })
}

/// Best closed-form bounds from the degree profile.
///
/// # Safety
/// `g` must be a live handle; `lower` and `upper` writable.
#[no_mangle]
pub unsafe extern "C" fn inflata_bounds(
    g: *const InflataGraph,
    k: usize,
    lower: *mut usize,
    upper: *mut usize,
) -> InflataStatus {
    let Some(h) = g.as_ref() else { return null("graph") };
    if lower.is_null() || upper.is_null() {
        return null("lower/upper");
    }
    guard(|| {
        let b = bounds(&h.graph, k)?;
        *lower = b.best_lower;
        *upper = b.best_upper;
        Ok(())
    })
}

/// Prediction from a factor/matching certificate search. `cap` limits the
/// order of graphs searched exhaustively.
///
/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn inflata_predict(
    g: *const InflataGraph,
    k: usize,
    cap: usize,
    out: *mut InflataPrediction,
) -> InflataStatus {
    let Some(h) = g.as_ref() else { return null("graph") };
    if out.is_null() {
        return null("out");
    }
    guard(|| {
        let p = predict_gamma_with_cap(&h.graph, k, cap)?;
        let (lower, upper) = match p.value {
            GammaValue::Exact(v) => (v, v),
            GammaValue::Interval(lo, hi) => (lo, hi),
        };
        let basis = match p.basis {
            Basis::T1 => InflataBasis::Generic,
            Basis::T4 => InflataBasis::EvenFactors,
            Basis::T5 => InflataBasis::FactorsPerfectMatching,
            Basis::T7 => InflataBasis::ParityGap,
            Basis::T8 => InflataBasis::FactorsNearPerfectMatching,
        };
        *out = InflataPrediction { lower, upper, basis };
        Ok(())
    })
}

/// Closed-form value for a family shorthand. `*exact` is set to 0 when the
/// value is only an upper bound.
///
/// # Safety
/// `shorthand` must be NUL-terminated; `value` and `exact` writable.
#[no_mangle]
pub unsafe extern "C" fn inflata_family_formula(
    shorthand: *const c_char,
    k: usize,
    value: *mut usize,
    exact: *mut bool,
) -> InflataStatus {
    if shorthand.is_null() {
        return null("shorthand");
    }
    if value.is_null() || exact.is_null() {
        return null("value/exact");
    }
    guard(|| {
        let family: Family = text(shorthand)?.parse()?;
        let f = family_formula(&family, k)?;
        *value = f.value;
        *exact = f.exact;
        Ok(())
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn inflata_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
