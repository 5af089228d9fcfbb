//! C ABI for the planiso library.
//!
//! Graphs are opaque `PlanisoGraph` handles created by
//! [`planiso_graph_parse`], [`planiso_graph_from_edges`] or
//! [`planiso_gen_triangulation`] and released with [`planiso_graph_free`].
//! Every fallible call returns a [`PlanisoStatus`]; on failure a message is
//! available from [`planiso_last_error`] on the same thread. Strings returned
//! by the library are released with [`planiso_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use planiso::{Error, Graph};

/// Status codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlanisoStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidGraph = 4,
    NotPlanar = 5,
    NotThreeConnected = 6,
    ResourceLimit = 7,
    Internal = 8,
}

/// Opaque graph handle.
pub struct PlanisoGraph {
    graph: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> PlanisoStatus {
    match e {
        Error::Parse { .. } => PlanisoStatus::ParseError,
        Error::NotPlanar | Error::NotPlanarEmbedding => PlanisoStatus::NotPlanar,
        Error::NotThreeConnected | Error::NotConnected => PlanisoStatus::NotThreeConnected,
        Error::Timeout { .. } | Error::InfeasibleSize { .. } => PlanisoStatus::ResourceLimit,
        _ => PlanisoStatus::InvalidGraph,
    }
}

/// Runs `f`, converting errors and panics into a status plus message.
fn guard(f: impl FnOnce() -> Result<(), (PlanisoStatus, String)>) -> PlanisoStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            PlanisoStatus::Ok
        }
        Ok(Err((status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            PlanisoStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (PlanisoStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (PlanisoStatus, String) {
    (PlanisoStatus::NullArgument, format!("{what} is null"))
}

unsafe fn graph_ref<'a>(g: *const PlanisoGraph, what: &str) -> Result<&'a Graph, (PlanisoStatus, String)> {
    // SAFETY: caller passes a handle obtained from this library or null.
    unsafe { g.as_ref() }.map(|h| &h.graph).ok_or_else(|| null(what))
}

fn emit_graph(graph: Graph, out: *mut *mut PlanisoGraph) -> Result<(), (PlanisoStatus, String)> {
    if out.is_null() {
        return Err(null("out"));
    }
    // SAFETY: `out` is non-null and points to writable storage per the API contract.
    unsafe { *out = Box::into_raw(Box::new(PlanisoGraph { graph })) };
    Ok(())
}

/// Message for the last failed call on this thread. Valid until the next
/// call into the library on this thread; never null.
#[no_mangle]
pub extern "C" fn planiso_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a graph in the text file format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn planiso_graph_parse(
    text: *const c_char,
    out: *mut *mut PlanisoGraph,
) -> PlanisoStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        // SAFETY: non-null NUL-terminated string per the contract.
        let text = unsafe { CStr::from_ptr(text) }
            .to_str()
            .map_err(|e| (PlanisoStatus::InvalidUtf8, e.to_string()))?;
        let file = planiso::format::parse_graph_file(text).map_err(lib_err)?;
        emit_graph(file.graph, out)
    })
}

/// Builds a graph on `n` vertices from `m` edges given as `2m` endpoints.
///
/// # Safety
/// `endpoints` must point to `2 * m` values (may be null when `m == 0`);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn planiso_graph_from_edges(
    n: usize,
    endpoints: *const u32,
    m: usize,
    out: *mut *mut PlanisoGraph,
) -> PlanisoStatus {
    guard(|| {
        let flat: &[u32] = if m == 0 {
            &[]
        } else if endpoints.is_null() {
            return Err(null("endpoints"));
        } else {
            // SAFETY: caller guarantees 2m readable values.
            unsafe { std::slice::from_raw_parts(endpoints, 2 * m) }
        };
        let edges = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize));
        emit_graph(Graph::new(n, edges).map_err(lib_err)?, out)
    })
}

/// Seeded stacked triangulation on `n >= 4` vertices.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn planiso_gen_triangulation(
    n: usize,
    seed: u64,
    out: *mut *mut PlanisoGraph,
) -> PlanisoStatus {
    guard(|| {
        if n < 4 {
            return Err((PlanisoStatus::InvalidGraph, "n must be at least 4".into()));
        }
        emit_graph(planiso::corpus::gen_triangulation(n, seed), out)
    })
}

/// Releases a graph handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn planiso_graph_free(g: *mut PlanisoGraph) {
    if !g.is_null() {
        // SAFETY: handle was created by Box::into_raw in this crate.
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn planiso_graph_vertex_count(g: *const PlanisoGraph) -> usize {
    // SAFETY: see function contract.
    unsafe { g.as_ref() }.map_or(0, |h| h.graph.n())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn planiso_graph_edge_count(g: *const PlanisoGraph) -> usize {
    // SAFETY: see function contract.
    unsafe { g.as_ref() }.map_or(0, |h| h.graph.m())
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn planiso_is_planar(g: *const PlanisoGraph, out: *mut bool) -> PlanisoStatus {
    guard(|| {
        // SAFETY: see function contract.
        let graph = unsafe { graph_ref(g, "graph") }?;
        let planar = planiso::embed::is_planar(graph).map_err(lib_err)?;
        // SAFETY: see function contract.
        *unsafe { out.as_mut() }.ok_or_else(|| null("out"))? = planar;
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn planiso_is_3_connected(g: *const PlanisoGraph, out: *mut bool) -> PlanisoStatus {
    guard(|| {
        // SAFETY: see function contract.
        let graph = unsafe { graph_ref(g, "graph") }?;
        // SAFETY: see function contract.
        *unsafe { out.as_mut() }.ok_or_else(|| null("out"))? = planiso::is_3_connected(graph);
        Ok(())
    })
}

/// Writes the contracted code (or the expanded code when `colored`) as a
/// newly allocated string to `out`.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn planiso_canon(
    g: *const PlanisoGraph,
    seed: u64,
    colored: bool,
    out: *mut *mut c_char,
) -> PlanisoStatus {
    guard(|| {
        // SAFETY: see function contract.
        let graph = unsafe { graph_ref(g, "graph") }?;
        if out.is_null() {
            return Err(null("out"));
        }
        let code = planiso::iso::canonical_code(graph, seed).map_err(lib_err)?;
        let text = if colored { code.colored } else { code.contracted }.serialize();
        let c = CString::new(text).map_err(|e| (PlanisoStatus::Internal, e.to_string()))?;
        // SAFETY: checked non-null above.
        unsafe { *out = c.into_raw() };
        Ok(())
    })
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn planiso_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: string was created by CString::into_raw in this crate.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Decides isomorphism. If `mapping` is non-null and the graphs are
/// isomorphic, `mapping[v]` receives the image of vertex `v` of `g1`; it must
/// have room for `vertex_count(g1)` entries.
///
/// # Safety
/// `g1`, `g2` must be live handles; `out` must be writable; `mapping` must be
/// null or large enough.
#[no_mangle]
pub unsafe extern "C" fn planiso_isomorphic(
    g1: *const PlanisoGraph,
    g2: *const PlanisoGraph,
    seed: u64,
    out: *mut bool,
    mapping: *mut u32,
) -> PlanisoStatus {
    guard(|| {
        // SAFETY: see function contract.
        let (a, b) = unsafe { (graph_ref(g1, "g1")?, graph_ref(g2, "g2")?) };
        // SAFETY: see function contract.
        let out = unsafe { out.as_mut() }.ok_or_else(|| null("out"))?;
        let r = planiso::isomorphic(a, b, seed).map_err(lib_err)?;
        *out = r.is_isomorphic();
        if let (Some(m), false) = (r.mapping.as_ref(), mapping.is_null()) {
            // SAFETY: caller guarantees room for n entries.
            let dst = unsafe { std::slice::from_raw_parts_mut(mapping, m.len()) };
            for (d, &v) in dst.iter_mut().zip(m) {
                *d = v as u32;
            }
        }
        Ok(())
    })
}
