//! C ABI over `srgint`.
//!
//! Handles are opaque and owned by the caller once returned; release them
//! with the matching `*_free`. Every fallible call returns an [`SrgintStatus`]
//! and leaves a message for [`srgint_last_error`] on failure. Strings returned
//! by the library are released with [`srgint_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use srgint::certify::{verify_certificate, Certificate};
use srgint::graph::{graph6_encode, is_srg, Graph};
use srgint::search::{find_representation, SearchOutcome};
use srgint::{registry, report, Error};

/// Result of a library call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SrgintStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Precondition = 4,
    UnknownName = 5,
    Failed = 6,
    Panic = 7,
}

/// Outcome of [`srgint_search`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SrgintOutcome {
    Found = 0,
    Unsat = 1,
    Unknown = 2,
}

/// `(v, k, lambda, mu)`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SrgintParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

/// Opaque graph handle.
pub struct SrgintGraph(Graph);

/// Opaque certificate handle.
pub struct SrgintCertificate(Certificate);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SrgintStatus {
    match e {
        Error::Graph6 { .. } | Error::Parse { .. } | Error::Json(_) => SrgintStatus::Parse,
        Error::UnknownName(_) => SrgintStatus::UnknownName,
        Error::Precondition(_) | Error::DimensionMismatch(_) => SrgintStatus::Precondition,
        _ => SrgintStatus::Failed,
    }
}

/// Runs `f`, turning errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), (SrgintStatus, String)>) -> SrgintStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SrgintStatus::Ok,
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("panic inside srgint".into());
            SrgintStatus::Panic
        }
    }
}

fn lib(e: Error) -> (SrgintStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (SrgintStatus, String) {
    (SrgintStatus::NullPointer, format!("{what} is null"))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, (SrgintStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| (SrgintStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (SrgintStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .unwrap_or_default()
        .into_raw()
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn srgint_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn srgint_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a graph from a registry name such as `"petersen"` or `"triangular:6"`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn srgint_graph_build(
    name: *const c_char,
    out: *mut *mut SrgintGraph,
) -> SrgintStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let g = registry::build_graph(text(name, "name")?).map_err(lib)?;
        *out = Box::into_raw(Box::new(SrgintGraph(g)));
        Ok(())
    })
}

/// Parses a graph from graph6 or JSON text.
///
/// # Safety
/// `source` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn srgint_graph_parse(
    source: *const c_char,
    out: *mut *mut SrgintGraph,
) -> SrgintStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let g = Graph::parse_any(text(source, "source")?).map_err(lib)?;
        *out = Box::into_raw(Box::new(SrgintGraph(g)));
        Ok(())
    })
}

/// # Safety
/// `g` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn srgint_graph_free(g: *mut SrgintGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices; 0 for null.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn srgint_graph_order(g: *const SrgintGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// graph6 encoding of `g`, or null on error.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn srgint_graph_to_graph6(g: *const SrgintGraph) -> *mut c_char {
    match g.as_ref() {
        Some(g) => into_c_string(graph6_encode(&g.0)),
        None => {
            set_error("graph is null".into());
            ptr::null_mut()
        }
    }
}

/// Writes the parameters to `params` and sets `*is_srg`; when the graph is
/// not strongly regular `params` is left untouched.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn srgint_graph_srg_params(
    g: *const SrgintGraph,
    is_srg_out: *mut bool,
    params: *mut SrgintParams,
) -> SrgintStatus {
    guard(|| {
        let g = deref(g, "graph")?;
        if is_srg_out.is_null() || params.is_null() {
            return Err(null("out"));
        }
        match is_srg(&g.0) {
            Some(p) => {
                *params = SrgintParams {
                    v: p.v,
                    k: p.k,
                    lambda: p.lambda,
                    mu: p.mu,
                };
                *is_srg_out = true;
            }
            None => *is_srg_out = false,
        }
        Ok(())
    })
}

/// JSON strong-regularity report for `g`, or null on error.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn srgint_graph_report_json(g: *const SrgintGraph) -> *mut c_char {
    let Some(g) = g.as_ref() else {
        set_error("graph is null".into());
        return ptr::null_mut();
    };
    match serde_json::to_string(&report::srg_report(&g.0)) {
        Ok(s) => into_c_string(s),
        Err(e) => {
            set_error(e.to_string());
            ptr::null_mut()
        }
    }
}

/// Parses a certificate from its text form.
///
/// # Safety
/// `source` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn srgint_certificate_parse(
    source: *const c_char,
    out: *mut *mut SrgintCertificate,
) -> SrgintStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let c = Certificate::from_text(text(source, "source")?).map_err(lib)?;
        *out = Box::into_raw(Box::new(SrgintCertificate(c)));
        Ok(())
    })
}

/// # Safety
/// `c` must come from this library and not be freed twice. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn srgint_certificate_free(c: *mut SrgintCertificate) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Text form of `c`, or null on error.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn srgint_certificate_to_text(c: *const SrgintCertificate) -> *mut c_char {
    match c.as_ref() {
        Some(c) => into_c_string(c.0.to_text()),
        None => {
            set_error("certificate is null".into());
            ptr::null_mut()
        }
    }
}

/// Checks `N^T N = s(A + tI)`; `*accepted` receives the verdict.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn srgint_certificate_verify(
    g: *const SrgintGraph,
    c: *const SrgintCertificate,
    accepted: *mut bool,
) -> SrgintStatus {
    guard(|| {
        let g = deref(g, "graph")?;
        let c = deref(c, "certificate")?;
        if accepted.is_null() {
            return Err(null("accepted"));
        }
        *accepted = verify_certificate(&g.0, &c.0).map_err(lib)?.accepted;
        Ok(())
    })
}

/// Searches for a certificate with the given scale and shift under a node
/// budget. On `FOUND`, `*certificate` receives a new handle when non-null;
/// otherwise it is set to null.
///
/// # Safety
/// `g` and `outcome` must be valid; `certificate` may be null.
#[no_mangle]
pub unsafe extern "C" fn srgint_search(
    g: *const SrgintGraph,
    s: i64,
    t: i64,
    budget: u64,
    outcome: *mut SrgintOutcome,
    certificate: *mut *mut SrgintCertificate,
) -> SrgintStatus {
    guard(|| {
        let g = deref(g, "graph")?;
        if outcome.is_null() {
            return Err(null("outcome"));
        }
        if !certificate.is_null() {
            *certificate = ptr::null_mut();
        }
        let result = find_representation(&g.0, s, t, None, budget).map_err(lib)?;
        *outcome = match result.outcome {
            SearchOutcome::Found(c) => {
                if !certificate.is_null() {
                    *certificate = Box::into_raw(Box::new(SrgintCertificate(c)));
                }
                SrgintOutcome::Found
            }
            SearchOutcome::Unsat => SrgintOutcome::Unsat,
            SearchOutcome::Unknown => SrgintOutcome::Unknown,
        };
        Ok(())
    })
}
