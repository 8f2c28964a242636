//! C interface to `vtis-core`.
//!
//! Graphs are opaque handles created from a spec string and released with
//! [`vtis_graph_free`]. Every fallible call returns a [`VtisStatus`] whose
//! numeric values match the command-line exit codes; after a failure,
//! [`vtis_last_error_message`] describes it. Structured results are returned
//! as JSON strings owned by the caller and released with
//! [`vtis_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use vtis_core::mis::{self, Primitivity, SearchLimits};
use vtis_core::{spec, symmetry, theorem, Error, Graph};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VtisStatus {
    Ok = 0,
    /// Malformed spec, bad argument or unreadable file.
    Argument = 2,
    /// A search budget was exhausted.
    Resource = 3,
    /// A checked prediction disagreed with an exact computation.
    Verification = 4,
    /// A required pointer argument was null.
    NullPointer = 5,
    /// The library panicked; this is a bug.
    Panic = 6,
}

/// Tri-state answer of [`vtis_primitivity`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VtisPrimitivity {
    Primitive = 0,
    Imprimitive = 1,
    Unknown = 2,
}

/// Opaque graph handle.
pub struct VtisGraph {
    graph: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("interior nuls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> VtisStatus {
    match e.exit_code() {
        3 => VtisStatus::Resource,
        4 => VtisStatus::Verification,
        _ => VtisStatus::Argument,
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), Error>) -> VtisStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => VtisStatus::Ok,
        Ok(Err(e)) => {
            set_last_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_last_error("internal panic".to_string());
            VtisStatus::Panic
        }
    }
}

fn null_pointer(what: &str) -> VtisStatus {
    set_last_error(format!("{what} is null"));
    VtisStatus::NullPointer
}

fn limits(budget: u64) -> SearchLimits {
    if budget == 0 {
        SearchLimits::default()
    } else {
        SearchLimits::with_node_budget(budget)
    }
}

fn json_out(value: &impl serde::Serialize, out: *mut *mut c_char) {
    let text = serde_json::to_string(value).expect("reports serialize");
    let c = CString::new(text).expect("json has no interior nuls");
    // SAFETY: callers check `out` for null before running the body.
    unsafe { *out = c.into_raw() };
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Error> {
    // SAFETY: the caller passes a valid nul-terminated string.
    unsafe { CStr::from_ptr(s) }
        .to_str()
        .map_err(|_| Error::argument("string is not valid UTF-8"))
}

/// Parses and evaluates a graph spec such as `"product(perm(3),circ(2,5))"`.
/// On success `*out` receives a handle to release with [`vtis_graph_free`].
///
/// # Safety
/// `spec` must be a nul-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn vtis_graph_from_spec(
    spec: *const c_char,
    out: *mut *mut VtisGraph,
) -> VtisStatus {
    if spec.is_null() {
        return null_pointer("spec");
    }
    if out.is_null() {
        return null_pointer("out");
    }
    guard(|| {
        let graph = spec::graph_from_spec(unsafe { read_str(spec) }?)?;
        unsafe { *out = Box::into_raw(Box::new(VtisGraph { graph })) };
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `graph` must come from [`vtis_graph_from_spec`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn vtis_graph_free(graph: *mut VtisGraph) {
    if !graph.is_null() {
        drop(unsafe { Box::from_raw(graph) });
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn vtis_graph_vertex_count(graph: *const VtisGraph) -> usize {
    unsafe { graph.as_ref() }.map_or(0, |g| g.graph.n())
}

/// Number of edges, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn vtis_graph_edge_count(graph: *const VtisGraph) -> usize {
    unsafe { graph.as_ref() }.map_or(0, |g| g.graph.edge_count())
}

/// Independence number. A `budget` of 0 selects the default node budget.
///
/// # Safety
/// `graph` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn vtis_alpha(
    graph: *const VtisGraph,
    budget: u64,
    out: *mut usize,
) -> VtisStatus {
    let Some(g) = (unsafe { graph.as_ref() }) else {
        return null_pointer("graph");
    };
    if out.is_null() {
        return null_pointer("out");
    }
    guard(|| {
        let alpha = mis::independence_number(&g.graph, &limits(budget))?;
        unsafe { *out = alpha };
        Ok(())
    })
}

/// Vertex-transitivity, from the constructor certificate or by search.
///
/// # Safety
/// `graph` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn vtis_is_vertex_transitive(
    graph: *const VtisGraph,
    out: *mut bool,
) -> VtisStatus {
    let Some(g) = (unsafe { graph.as_ref() }) else {
        return null_pointer("graph");
    };
    if out.is_null() {
        return null_pointer("out");
    }
    guard(|| {
        let vt = symmetry::is_vertex_transitive(&g.graph)?;
        unsafe { *out = vt };
        Ok(())
    })
}

/// IS-primitivity of a vertex-transitive graph. An exhausted budget yields
/// [`VtisPrimitivity::Unknown`] with status `Ok`.
///
/// # Safety
/// `graph` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn vtis_primitivity(
    graph: *const VtisGraph,
    budget: u64,
    out: *mut VtisPrimitivity,
) -> VtisStatus {
    let Some(g) = (unsafe { graph.as_ref() }) else {
        return null_pointer("graph");
    };
    if out.is_null() {
        return null_pointer("out");
    }
    guard(|| {
        let p = match mis::is_is_primitive(&g.graph, &limits(budget))? {
            Primitivity::Primitive => VtisPrimitivity::Primitive,
            Primitivity::Imprimitive { .. } => VtisPrimitivity::Imprimitive,
            Primitivity::Unknown { .. } => VtisPrimitivity::Unknown,
        };
        unsafe { *out = p };
        Ok(())
    })
}

/// All maximum independent sets as `{"alpha":..,"count":..,"sets":[[..],..]}`.
///
/// # Safety
/// `graph` must be a live handle and `out` a writable pointer. The string
/// written to `*out` must be released with [`vtis_string_free`].
#[no_mangle]
pub unsafe extern "C" fn vtis_mis_json(
    graph: *const VtisGraph,
    budget: u64,
    out: *mut *mut c_char,
) -> VtisStatus {
    let Some(g) = (unsafe { graph.as_ref() }) else {
        return null_pointer("graph");
    };
    if out.is_null() {
        return null_pointer("out");
    }
    guard(|| {
        let family = mis::enumerate_maximum_independent_sets(&g.graph, &limits(budget))?;
        json_out(&family, out);
        Ok(())
    })
}

/// Normality classification of `g × h` as JSON.
///
/// # Safety
/// `g` and `h` must be live handles and `out` a writable pointer. The
/// string written to `*out` must be released with [`vtis_string_free`].
#[no_mangle]
pub unsafe extern "C" fn vtis_check_normal_json(
    g: *const VtisGraph,
    h: *const VtisGraph,
    budget: u64,
    out: *mut *mut c_char,
) -> VtisStatus {
    let (Some(g), Some(h)) = (unsafe { g.as_ref() }, unsafe { h.as_ref() }) else {
        return null_pointer("graph");
    };
    if out.is_null() {
        return null_pointer("out");
    }
    guard(|| {
        let c = theorem::classify_product(&g.graph, &h.graph, &limits(budget))?;
        json_out(&c, out);
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn vtis_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Message for the most recent failure on the calling thread, or null.
/// The pointer stays valid until the next failing call on that thread.
#[no_mangle]
pub extern "C" fn vtis_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
