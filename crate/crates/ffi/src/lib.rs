//! C ABI over the `prochoose` deciders.
//!
//! Graphs and verdicts are opaque heap handles owned by the caller and
//! released with the matching `*_free`. Every fallible call returns a
//! [`PcStatus`]; on failure [`pc_last_error`] describes what went wrong on
//! the calling thread. Strings returned by the library are freed with
//! [`pc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use prochoose::choose::{self, ChoiceMode, DecideOptions, Status, Verdict};
use prochoose::io;
use prochoose::Graph;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    Panic = 5,
}

/// Values accepted by the `mode` argument of [`pc_decide`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PcMode {
    List = 0,
    EquitableList = 1,
    Proportional = 2,
}

/// Outcome of a decision. Numbering matches the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PcVerdictStatus {
    Choosable = 0,
    NotChoosable = 1,
    Unknown = 2,
}

/// Opaque graph handle.
pub struct PcGraph {
    graph: Graph,
}

/// Opaque verdict handle; remembers the instance it was computed for.
pub struct PcVerdict {
    verdict: Verdict,
    graph: Graph,
    k: usize,
    mode: ChoiceMode,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: PcStatus, msg: impl Into<String>) -> PcStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> PcStatus) -> PcStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(PcStatus::Panic, "internal panic"))
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, PcStatus> {
    if text.is_null() {
        return Err(fail(PcStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(text).to_str().map_err(|_| fail(PcStatus::InvalidUtf8, "string is not UTF-8"))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

fn mode_from(code: u32) -> Option<ChoiceMode> {
    match code {
        0 => Some(ChoiceMode::List),
        1 => Some(ChoiceMode::EquitableList),
        2 => Some(ChoiceMode::Proportional),
        _ => None,
    }
}

/// Message for the most recent failure on this thread, or NULL. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn pc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses the text graph format ("n m" header, then "u v" lines).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_parse(text: *const c_char, out: *mut *mut PcGraph) -> PcStatus {
    guard(|| {
        if out.is_null() {
            return fail(PcStatus::NullPointer, "null output pointer");
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match io::parse_graph(text) {
            Ok(graph) => {
                *out = Box::into_raw(Box::new(PcGraph { graph }));
                PcStatus::Ok
            }
            Err(e) => fail(PcStatus::ParseError, e.to_string()),
        }
    })
}

/// Decodes a graph6 string.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_from_graph6(text: *const c_char, out: *mut *mut PcGraph) -> PcStatus {
    guard(|| {
        if out.is_null() {
            return fail(PcStatus::NullPointer, "null output pointer");
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match io::parse_graph6(text) {
            Ok(graph) => {
                *out = Box::into_raw(Box::new(PcGraph { graph }));
                PcStatus::Ok
            }
            Err(e) => fail(PcStatus::ParseError, e.to_string()),
        }
    })
}

/// Builds a graph from `edge_count` pairs stored flat in `edges`
/// (`u0, v0, u1, v1, ...`).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (it may be NULL
/// when `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_from_edges(
    vertex_count: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut PcGraph,
) -> PcStatus {
    guard(|| {
        if out.is_null() || (edges.is_null() && edge_count > 0) {
            return fail(PcStatus::NullPointer, "null pointer");
        }
        let flat: &[u32] = if edge_count == 0 { &[] } else { std::slice::from_raw_parts(edges, 2 * edge_count) };
        let pairs = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize));
        match Graph::from_edges(vertex_count, pairs) {
            Ok(graph) => {
                *out = Box::into_raw(Box::new(PcGraph { graph }));
                PcStatus::Ok
            }
            Err(e) => fail(PcStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// # Safety
/// `g` must be a live handle from this library, or NULL.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_vertex_count(g: *const PcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.vertex_count())
}

/// # Safety
/// `g` must be a live handle from this library, or NULL.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_edge_count(g: *const PcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.edge_count())
}

/// # Safety
/// `g` must be a handle from this library not yet freed, or NULL.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_free(g: *mut PcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Decides whether `g` is k-choosable in the given [`PcMode`]. A `budget`
/// of 0 means unlimited; `threads` of 0 is treated as 1.
///
/// # Safety
/// `g` must be a live graph handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pc_decide(
    g: *const PcGraph,
    k: u32,
    mode: u32,
    budget: u64,
    threads: u32,
    out: *mut *mut PcVerdict,
) -> PcStatus {
    guard(|| {
        let Some(g) = g.as_ref() else {
            return fail(PcStatus::NullPointer, "null graph");
        };
        if out.is_null() {
            return fail(PcStatus::NullPointer, "null output pointer");
        }
        if k == 0 {
            return fail(PcStatus::InvalidArgument, "k must be at least 1");
        }
        let Some(mode) = mode_from(mode) else {
            return fail(PcStatus::InvalidArgument, format!("unknown mode {mode}"));
        };
        let options = DecideOptions {
            budget: (budget > 0).then_some(budget),
            threads: threads.max(1) as usize,
            ..DecideOptions::default()
        };
        let verdict = choose::decide(&g.graph, k as usize, mode, &options);
        *out = Box::into_raw(Box::new(PcVerdict { verdict, graph: g.graph.clone(), k: k as usize, mode }));
        PcStatus::Ok
    })
}

/// # Safety
/// `v` must be a live verdict handle.
#[no_mangle]
pub unsafe extern "C" fn pc_verdict_status(v: *const PcVerdict) -> PcVerdictStatus {
    match v.as_ref().map(|v| v.verdict.status) {
        Some(Status::Choosable) => PcVerdictStatus::Choosable,
        Some(Status::NotChoosable) => PcVerdictStatus::NotChoosable,
        Some(Status::Unknown) | None => PcVerdictStatus::Unknown,
    }
}

/// # Safety
/// `v` must be a live verdict handle, or NULL.
#[no_mangle]
pub unsafe extern "C" fn pc_verdict_assignments_checked(v: *const PcVerdict) -> u64 {
    v.as_ref().map_or(0, |v| v.verdict.assignments_checked)
}

/// Color `index` (0-based, ascending) of the witness list at `vertex`, or 0
/// when there is no witness or the position is out of range. Colors
/// themselves start at 1.
///
/// # Safety
/// `v` must be a live verdict handle, or NULL.
#[no_mangle]
pub unsafe extern "C" fn pc_verdict_witness_color(v: *const PcVerdict, vertex: usize, index: usize) -> u32 {
    v.as_ref()
        .and_then(|v| v.verdict.witness.as_ref())
        .and_then(|w| w.lists().get(vertex))
        .and_then(|l| l.get(index))
        .copied()
        .unwrap_or(0)
}

/// The verdict as a JSON document. Free with [`pc_string_free`].
///
/// # Safety
/// `v` must be a live verdict handle, or NULL.
#[no_mangle]
pub unsafe extern "C" fn pc_verdict_to_json(v: *const PcVerdict) -> *mut c_char {
    let Some(v) = v.as_ref() else { return ptr::null_mut() };
    let certificate = choose::make_certificate(&v.verdict, &v.graph, v.k, v.mode).ok();
    let doc = io::ReportDocument::new(io::Report::Decision(io::Decision {
        graph_name: "ffi".into(),
        graph: v.graph.to_raw(),
        k: v.k,
        mode: v.mode,
        verdict: v.verdict.clone(),
        certificate,
    }));
    into_c_string(doc.to_json())
}

/// Certificate JSON for a refutation, or NULL for any other status. Free
/// with [`pc_string_free`].
///
/// # Safety
/// `v` must be a live verdict handle, or NULL.
#[no_mangle]
pub unsafe extern "C" fn pc_verdict_certificate_json(v: *const PcVerdict) -> *mut c_char {
    let Some(v) = v.as_ref() else { return ptr::null_mut() };
    choose::make_certificate(&v.verdict, &v.graph, v.k, v.mode)
        .map_or(ptr::null_mut(), |c| into_c_string(io::certificate_to_json(&c)))
}

/// # Safety
/// `v` must be a handle from this library not yet freed, or NULL.
#[no_mangle]
pub unsafe extern "C" fn pc_verdict_free(v: *mut PcVerdict) {
    if !v.is_null() {
        drop(Box::from_raw(v));
    }
}

/// Independently re-checks a certificate. `*valid` is set to whether the
/// certificate holds; malformed JSON is a [`PcStatus::ParseError`].
///
/// # Safety
/// `json` must be a NUL-terminated string and `valid` writable.
#[no_mangle]
pub unsafe extern "C" fn pc_certificate_verify(json: *const c_char, valid: *mut bool) -> PcStatus {
    guard(|| {
        if valid.is_null() {
            return fail(PcStatus::NullPointer, "null output pointer");
        }
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match io::certificate_from_json(text) {
            Ok(cert) => {
                *valid = choose::verify_certificate(&cert);
                PcStatus::Ok
            }
            Err(e) => fail(PcStatus::ParseError, e.to_string()),
        }
    })
}

/// Proportional choice number. `k_max` of 0 uses the default cap. On return
/// `*lower` holds the best lower bound and `*exact` the exact value, or 0 if
/// it was not settled within the cap.
///
/// # Safety
/// `g` must be a live graph handle; `lower` and `exact` writable.
#[no_mangle]
pub unsafe extern "C" fn pc_chi_pc(
    g: *const PcGraph,
    k_max: u32,
    threads: u32,
    lower: *mut u32,
    exact: *mut u32,
) -> PcStatus {
    guard(|| {
        let Some(g) = g.as_ref() else {
            return fail(PcStatus::NullPointer, "null graph");
        };
        if lower.is_null() || exact.is_null() {
            return fail(PcStatus::NullPointer, "null output pointer");
        }
        let options = DecideOptions { threads: threads.max(1) as usize, ..DecideOptions::default() };
        let report = choose::chi_pc(&g.graph, "ffi", (k_max > 0).then_some(k_max as usize), &options);
        *lower = report.lower_bound.value as u32;
        *exact = report.exact.unwrap_or(0) as u32;
        PcStatus::Ok
    })
}

/// # Safety
/// `s` must be a string returned by this library not yet freed, or NULL.
#[no_mangle]
pub unsafe extern "C" fn pc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
