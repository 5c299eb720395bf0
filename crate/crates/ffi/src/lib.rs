//! C ABI over `cppt-core`.
//!
//! Graphs cross the boundary as opaque [`CpptGraph`] handles and as the same
//! JSON documents the CLI reads and writes. Every fallible call returns a
//! [`CpptStatus`]; the message of the last failure on the calling thread is
//! available from [`cppt_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use cppt::canon;
use cppt::fixtures;
use cppt::io;
use cppt::lab::Mode;
use cppt::{Cppt, Edge};

/// Opaque graph handle.
pub struct CpptGraph(Cppt);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CpptStatus {
    Ok = 0,
    NullPointer = 1,
    /// Input string is not UTF-8.
    Utf8 = 2,
    /// Malformed document.
    Parse = 3,
    /// Graph violates an axiom.
    Invalid = 4,
    /// Flip not possible.
    Flip = 5,
    /// Sequence construction failed.
    Canon = 6,
    /// Argument out of range.
    Argument = 7,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: CpptStatus, msg: impl ToString) -> CpptStatus {
    let c = CString::new(msg.to_string().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
    status
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, CpptStatus> {
    if s.is_null() {
        return Err(fail(CpptStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|e| fail(CpptStatus::Utf8, e))
}

unsafe fn put_graph(out: *mut *mut CpptGraph, t: Cppt) -> CpptStatus {
    *out = Box::into_raw(Box::new(CpptGraph(t)));
    CpptStatus::Ok
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next failing call on the same thread; do not free.
#[no_mangle]
pub extern "C" fn cppt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses a graph document. The graph is not validated; see
/// [`cppt_graph_is_valid`].
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cppt_graph_from_json(json: *const c_char, out: *mut *mut CpptGraph) -> CpptStatus {
    if out.is_null() {
        return fail(CpptStatus::NullPointer, "null out pointer");
    }
    let s = match read_str(json) {
        Ok(s) => s,
        Err(st) => return st,
    };
    match io::read_graph(s) {
        Ok(t) => put_graph(out, t),
        Err(e) => fail(CpptStatus::Parse, e),
    }
}

/// The canonical graph on `n >= 3` vertices.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cppt_graph_canonical(n: usize, out: *mut *mut CpptGraph) -> CpptStatus {
    if out.is_null() {
        return fail(CpptStatus::NullPointer, "null out pointer");
    }
    if !(3..=10_000).contains(&n) {
        return fail(CpptStatus::Argument, format!("n = {n} out of range"));
    }
    put_graph(out, fixtures::canonical(n))
}

/// # Safety
/// `g` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cppt_graph_free(g: *mut CpptGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Serializes a graph; free the result with [`cppt_string_free`].
/// Returns NULL for a NULL handle.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cppt_graph_to_json(g: *const CpptGraph) -> *mut c_char {
    match g.as_ref() {
        Some(g) => into_c_string(io::write_graph(&g.0)),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `s` must be NULL or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cppt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Vertex count, 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cppt_graph_vertex_count(g: *const CpptGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Edge count, 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cppt_graph_edge_count(g: *const CpptGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.edge_count())
}

/// `Ok` if every axiom holds, `Invalid` (with the violations as the error
/// message) otherwise.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cppt_graph_is_valid(g: *const CpptGraph) -> CpptStatus {
    let Some(g) = g.as_ref() else {
        return fail(CpptStatus::NullPointer, "null graph");
    };
    let r = g.0.validate();
    if r.valid {
        CpptStatus::Ok
    } else {
        fail(CpptStatus::Invalid, format!("{:?}", r.violations))
    }
}

/// Flips edge `u v` into `a b`, writing a new handle to `out`. The input is
/// left unchanged.
///
/// # Safety
/// `g` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cppt_graph_flip(
    g: *const CpptGraph,
    u: usize,
    v: usize,
    a: usize,
    b: usize,
    out: *mut *mut CpptGraph,
) -> CpptStatus {
    let (Some(g), false) = (g.as_ref(), out.is_null()) else {
        return fail(CpptStatus::NullPointer, "null argument");
    };
    match g.0.flip(Edge::new(u, v), Edge::new(a, b)) {
        Ok(t) => put_graph(out, t),
        Err(e) => fail(CpptStatus::Flip, e),
    }
}

/// Flip sequence from `a` to `b` as a sequence document; `labeled = false`
/// accepts any interior relabeling of `b`. Free the result with
/// [`cppt_string_free`]. `len`, if not NULL, receives the number of flips.
///
/// # Safety
/// `a` and `b` must be live handles, `out` writable, `len` NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn cppt_flip_sequence(
    a: *const CpptGraph,
    b: *const CpptGraph,
    labeled: bool,
    out: *mut *mut c_char,
    len: *mut usize,
) -> CpptStatus {
    let (Some(a), Some(b), false) = (a.as_ref(), b.as_ref(), out.is_null()) else {
        return fail(CpptStatus::NullPointer, "null argument");
    };
    let mode = if labeled { Mode::Labeled } else { Mode::Unlabeled };
    match canon::flip_sequence(&a.0, &b.0, mode) {
        Ok(seq) => {
            if let Some(l) = len.as_mut() {
                *l = seq.len();
            }
            *out = into_c_string(io::write_sequence(&seq));
            CpptStatus::Ok
        }
        Err(e) => fail(CpptStatus::Canon, e),
    }
}

/// Replays a sequence document, validating every intermediate graph, and
/// writes the endpoint to `out`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cppt_sequence_verify(json: *const c_char, out: *mut *mut CpptGraph) -> CpptStatus {
    if out.is_null() {
        return fail(CpptStatus::NullPointer, "null out pointer");
    }
    let s = match read_str(json) {
        Ok(s) => s,
        Err(st) => return st,
    };
    let seq = match io::read_sequence(s) {
        Ok(seq) => seq,
        Err(e) => return fail(CpptStatus::Parse, e),
    };
    match seq.verify() {
        Ok(t) => put_graph(out, t),
        Err(e) => fail(CpptStatus::Invalid, e),
    }
}
