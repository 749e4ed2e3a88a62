//! C ABI over the `crgames` solver.
//!
//! Graphs are opaque [`CrgGraph`] handles built from graph6 or an edge list
//! and released with [`crg_graph_free`]. Every fallible call returns a
//! [`CrgStatus`]; on failure the message is available from
//! [`crg_last_error_message`] on the same thread until the next failing call.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use crgames::game::{self, GameConfig, Objective, Variant};
use crgames::graph::{emit_graph6, parse_graph6};
use crgames::{Error, Graph};

/// Opaque graph handle.
pub struct CrgGraph(Graph);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Graph6 = 3,
    Disconnected = 4,
    /// A size or state-space guard refused the request.
    ResourceGuard = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrgObjective {
    Capture = 0,
    Trap = 1,
    Confine = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrgVariant {
    AllActive = 0,
    OneActive = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct CrgSolveResult {
    pub cops_win: bool,
    /// Optimal cop turns from the best placement, or -1 when the robber wins.
    pub optimal_rounds: i32,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> CrgStatus {
    match e {
        Error::Graph6(_) => CrgStatus::Graph6,
        Error::Disconnected => CrgStatus::Disconnected,
        Error::StateSpaceGuard { .. }
        | Error::OrderLimit { .. }
        | Error::TooManyCops(_)
        | Error::TooManyVertices(_)
        | Error::NumberAboveLimit(_) => CrgStatus::ResourceGuard,
        _ => CrgStatus::InvalidArgument,
    }
}

/// Runs `f`, converting errors and panics into a status plus last-error text.
fn guarded(f: impl FnOnce() -> Result<(), (CrgStatus, String)>) -> CrgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CrgStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            CrgStatus::Panic
        }
    }
}

fn lift(e: Error) -> (CrgStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (CrgStatus, String) {
    (CrgStatus::NullPointer, format!("{what} is null"))
}

unsafe fn graph_ref<'a>(g: *const CrgGraph) -> Result<&'a Graph, (CrgStatus, String)> {
    g.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

fn boxed(g: Graph) -> *mut CrgGraph {
    Box::into_raw(Box::new(CrgGraph(g)))
}

/// Parses one graph6 string.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn crg_graph_from_graph6(text: *const c_char, out: *mut *mut CrgGraph) -> CrgStatus {
    guarded(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let s =
            CStr::from_ptr(text).to_str().map_err(|_| (CrgStatus::Graph6, "graph6 text is not UTF-8".to_string()))?;
        let g = parse_graph6(s.trim()).map_err(lift)?;
        *out = boxed(g);
        Ok(())
    })
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in `edges`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` values (or may be null when
/// `edge_count` is 0) and `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn crg_graph_from_edges(
    n: u32,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut CrgGraph,
) -> CrgStatus {
    guarded(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let flat: &[u32] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize)).collect();
        let g = Graph::from_edges(n as usize, &pairs).map_err(lift)?;
        *out = boxed(g);
        Ok(())
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn crg_graph_free(g: *mut CrgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn crg_graph_order(g: *const CrgGraph) -> u32 {
    g.as_ref().map_or(0, |g| g.0.order() as u32)
}

/// Writes a newly allocated graph6 string to `out`; free it with [`crg_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn crg_graph_to_graph6(g: *const CrgGraph, out: *mut *mut c_char) -> CrgStatus {
    guarded(|| {
        let g = graph_ref(g)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = CString::new(emit_graph6(g)).expect("graph6 is printable ASCII").into_raw();
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn crg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Solves the game with `cops` cops.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn crg_solve(
    g: *const CrgGraph,
    cops: u32,
    objective: CrgObjective,
    variant: CrgVariant,
    out: *mut CrgSolveResult,
) -> CrgStatus {
    guarded(|| {
        let g = graph_ref(g)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let objective = match objective {
            CrgObjective::Capture => Objective::Capture,
            CrgObjective::Trap => Objective::Trap,
            CrgObjective::Confine => Objective::Confine,
        };
        let variant = match variant {
            CrgVariant::AllActive => Variant::AllActive,
            CrgVariant::OneActive => Variant::OneActive,
        };
        let cfg = GameConfig::new(cops as usize, objective, variant).map_err(lift)?;
        let o = game::solve(g, cfg).map_err(lift)?;
        *out = CrgSolveResult { cops_win: o.cops_win, optimal_rounds: o.optimal_rounds.map_or(-1, |r| r as i32) };
        Ok(())
    })
}

unsafe fn number(g: *const CrgGraph, out: *mut u32, f: fn(&Graph) -> crgames::Result<usize>) -> CrgStatus {
    guarded(|| {
        let g = graph_ref(g)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = f(g).map_err(lift)? as u32;
        Ok(())
    })
}

/// Cop number.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn crg_cop_number(g: *const CrgGraph, out: *mut u32) -> CrgStatus {
    number(g, out, game::cop_number)
}

/// Trapping cop number.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn crg_trapping_cop_number(g: *const CrgGraph, out: *mut u32) -> CrgStatus {
    number(g, out, game::trapping_cop_number)
}

/// Confining cop number.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn crg_confining_cop_number(g: *const CrgGraph, out: *mut u32) -> CrgStatus {
    number(g, out, game::confining_cop_number)
}

/// Message of the last failing call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn crg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn crg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
