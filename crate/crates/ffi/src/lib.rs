//! C interface to geohull.
//!
//! Graphs and sampled subgraphs are opaque handles released with their
//! `*_free` function. Vertex sets cross the boundary as byte masks of
//! length `n` (nonzero = member). Every fallible call returns a
//! [`GhStatus`]; on failure `gh_last_error` describes the cause until the
//! next call on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use geohull::bbtree::BbTree;
use geohull::core_periphery::{approximate_core, exact_core, jaccard, CoreConfig, CoreResult};
use geohull::exact::closure_exact;
use geohull::graph::{largest_component, read_edge_list_file};
use geohull::hull::{approximate_closure, EnsembleConfig};
use geohull::op_closure::PreparedOuterplanar;
use geohull::sampler::{sample_outerplanar, OuterplanarGraph};
use geohull::{Error, Graph, VertexSet};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GhStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    Io = 3,
    VertexOutOfRange = 4,
    UnknownLabel = 5,
    NotConnected = 6,
    NotOuterplanar = 7,
    InvalidArgument = 8,
    NoFixedPoint = 9,
    Panic = 10,
}

impl From<&Error> for GhStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse { .. } => GhStatus::Parse,
            Error::Io { .. } => GhStatus::Io,
            Error::VertexOutOfRange { .. } => GhStatus::VertexOutOfRange,
            Error::UnknownLabel(_) => GhStatus::UnknownLabel,
            Error::NotConnected { .. } => GhStatus::NotConnected,
            Error::NotOuterplanar(_) => GhStatus::NotOuterplanar,
            Error::InvalidArgument(_) => GhStatus::InvalidArgument,
            Error::NoFixedPoint { .. } => GhStatus::NoFixedPoint,
        }
    }
}

/// Opaque undirected graph.
pub struct GhGraph {
    graph: Graph,
}

/// Opaque sampled outerplanar spanning subgraph, ready for closures.
pub struct GhOuterplanar {
    sample: OuterplanarGraph,
    prepared: PreparedOuterplanar,
    face_number: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(GhStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(GhStatus::from(&e), format!("{}: {e}", e.kind()))
    }
}

fn null(what: &str) -> Failure {
    Failure(GhStatus::NullPointer, format!("null pointer: {what}"))
}

fn invalid(msg: String) -> Failure {
    Failure(GhStatus::InvalidArgument, format!("invalid-argument: {msg}"))
}

/// Runs `body`, turning errors and panics into a status code.
fn guard<F: FnOnce() -> Result<(), Failure>>(body: F) -> GhStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => GhStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            GhStatus::Panic
        }
    }
}

unsafe fn graph_ref<'a>(g: *const GhGraph) -> Result<&'a Graph, Failure> {
    g.as_ref().map(|g| &g.graph).ok_or_else(|| null("graph"))
}

unsafe fn read_mask(n: usize, mask: *const u8) -> Result<VertexSet, Failure> {
    if mask.is_null() {
        return Err(null("input mask"));
    }
    let bytes = std::slice::from_raw_parts(mask, n);
    Ok(VertexSet::from_iter(n, (0..n).filter(|&v| bytes[v] != 0)))
}

unsafe fn write_mask(set: &VertexSet, out: *mut u8) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output mask"));
    }
    let bytes = std::slice::from_raw_parts_mut(out, set.universe());
    bytes.fill(0);
    for v in set.iter() {
        bytes[v] = 1;
    }
    Ok(())
}

fn boxed<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    unsafe { *out = Box::into_raw(Box::new(value)) };
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next call.
#[no_mangle]
pub extern "C" fn gh_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, static string.
#[no_mangle]
pub extern "C" fn gh_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Builds a graph on vertices `0..n` from `m` pairs stored flat in
/// `edges` (`2*m` entries). Loops and repeated pairs are dropped.
///
/// # Safety
/// `edges` must point to `2*m` readable values (may be NULL if `m` is 0);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gh_graph_from_edges(n: usize, edges: *const u32, m: usize, out: *mut *mut GhGraph) -> GhStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        if m > 0 && edges.is_null() {
            return Err(null("edges"));
        }
        let flat = if m == 0 { &[][..] } else { std::slice::from_raw_parts(edges, 2 * m) };
        if let Some(&v) = flat.iter().find(|&&v| v as usize >= n) {
            return Err(Error::VertexOutOfRange { vertex: v as usize, n }.into());
        }
        let graph = Graph::from_edges(n, flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize)));
        boxed(out, GhGraph { graph })
    })
}

/// Reads a whitespace-separated edge list ('#' starts a comment line).
/// With `largest_only` set, keeps the largest connected component.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gh_graph_read(path: *const c_char, largest_only: bool, out: *mut *mut GhGraph) -> GhStatus {
    guard(|| {
        if path.is_null() || out.is_null() {
            return Err(null("path or out"));
        }
        let path = CStr::from_ptr(path)
            .to_str()
            .map_err(|_| invalid("path is not UTF-8".into()))?;
        let mut graph = read_edge_list_file(Path::new(path))?;
        if largest_only {
            graph = largest_component(&graph);
        }
        boxed(out, GhGraph { graph })
    })
}

/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn gh_graph_free(g: *mut GhGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle or NULL (returns 0).
#[no_mangle]
pub unsafe extern "C" fn gh_graph_vertex_count(g: *const GhGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.n())
}

/// # Safety
/// `g` must be a live handle or NULL (returns 0).
#[no_mangle]
pub unsafe extern "C" fn gh_graph_edge_count(g: *const GhGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.m())
}

/// Original label of dense vertex `v`.
///
/// # Safety
/// `g` must be a live handle, `label` writable.
#[no_mangle]
pub unsafe extern "C" fn gh_graph_label(g: *const GhGraph, v: usize, label: *mut u64) -> GhStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        graph.check_vertex(v)?;
        if label.is_null() {
            return Err(null("label"));
        }
        *label = graph.label(v);
        Ok(())
    })
}

/// Geodesic closure of the vertices marked in `in_mask`, written to
/// `out_mask`. Both masks have `n` bytes.
///
/// # Safety
/// `g` must be a live handle; masks must span `n` bytes.
#[no_mangle]
pub unsafe extern "C" fn gh_closure_exact(g: *const GhGraph, in_mask: *const u8, out_mask: *mut u8) -> GhStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        let x = read_mask(graph.n(), in_mask)?;
        write_mask(&closure_exact(graph, &x), out_mask)
    })
}

/// Vertices lying in the closure within at least `threshold` percent of
/// `num_subgraphs` sampled outerplanar subgraphs.
///
/// # Safety
/// As for [`gh_closure_exact`].
#[no_mangle]
pub unsafe extern "C" fn gh_closure_approx(
    g: *const GhGraph,
    in_mask: *const u8,
    num_subgraphs: usize,
    threshold: f64,
    seed: u64,
    out_mask: *mut u8,
) -> GhStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        let x = read_mask(graph.n(), in_mask)?;
        let config = EnsembleConfig {
            num_subgraphs,
            threshold,
            seed,
        };
        write_mask(&approximate_closure(graph, &x, &config)?, out_mask)
    })
}

/// Samples an outerplanar spanning subgraph of a connected graph.
///
/// # Safety
/// `g` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gh_sample_outerplanar(g: *const GhGraph, seed: u64, out: *mut *mut GhOuterplanar) -> GhStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let sample = sample_outerplanar(graph, seed)?;
        let prepared = PreparedOuterplanar::new(sample.graph())?;
        let face_number = BbTree::build(sample.graph())?.face_number();
        boxed(
            out,
            GhOuterplanar {
                sample,
                prepared,
                face_number,
            },
        )
    })
}

/// # Safety
/// `h` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn gh_outerplanar_free(h: *mut GhOuterplanar) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle or NULL (returns 0).
#[no_mangle]
pub unsafe extern "C" fn gh_outerplanar_edge_count(h: *const GhOuterplanar) -> usize {
    h.as_ref().map_or(0, |h| h.sample.m())
}

/// Maximum number of interior faces over the blocks.
///
/// # Safety
/// `h` must be a live handle or NULL (returns 0).
#[no_mangle]
pub unsafe extern "C" fn gh_outerplanar_face_number(h: *const GhOuterplanar) -> usize {
    h.as_ref().map_or(0, |h| h.face_number)
}

/// Closure inside the sampled subgraph.
///
/// # Safety
/// `h` must be a live handle; masks must span `n` bytes.
#[no_mangle]
pub unsafe extern "C" fn gh_outerplanar_closure(h: *const GhOuterplanar, in_mask: *const u8, out_mask: *mut u8) -> GhStatus {
    guard(|| {
        let h = h.as_ref().ok_or_else(|| null("subgraph"))?;
        let x = read_mask(h.sample.n(), in_mask)?;
        write_mask(&h.prepared.closure(&x), out_mask)
    })
}

/// Core settings. `gh_core_config_default` fills in the usual values.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct GhCoreConfig {
    pub k: usize,
    pub l: usize,
    pub num_subgraphs: usize,
    pub threshold: f64,
    pub max_iterations: usize,
    pub seed: u64,
}

#[no_mangle]
pub extern "C" fn gh_core_config_default() -> GhCoreConfig {
    let c = CoreConfig::default();
    GhCoreConfig {
        k: c.k,
        l: c.l,
        num_subgraphs: c.ensemble.num_subgraphs,
        threshold: c.ensemble.threshold,
        max_iterations: c.max_iterations,
        seed: c.seed,
    }
}

fn core_config(c: &GhCoreConfig) -> CoreConfig {
    let mut config = CoreConfig::with_seed(c.seed);
    config.k = c.k;
    config.l = c.l;
    config.max_iterations = c.max_iterations;
    config.ensemble.num_subgraphs = c.num_subgraphs;
    config.ensemble.threshold = c.threshold;
    config
}

unsafe fn run_core(
    g: *const GhGraph,
    config: *const GhCoreConfig,
    out_mask: *mut u8,
    iterations: *mut usize,
    f: fn(&Graph, &CoreConfig) -> geohull::Result<CoreResult>,
) -> GhStatus {
    guard(|| {
        let graph = graph_ref(g)?;
        let config = config.as_ref().ok_or_else(|| null("config"))?;
        let res = f(graph, &core_config(config))?;
        write_mask(&res.core, out_mask)?;
        if !iterations.is_null() {
            *iterations = res.iterations;
        }
        Ok(())
    })
}

/// Core from exact closures. `iterations` may be NULL.
///
/// # Safety
/// `g` and `config` must be valid; `out_mask` must span `n` bytes.
#[no_mangle]
pub unsafe extern "C" fn gh_core_exact(
    g: *const GhGraph,
    config: *const GhCoreConfig,
    out_mask: *mut u8,
    iterations: *mut usize,
) -> GhStatus {
    run_core(g, config, out_mask, iterations, exact_core)
}

/// Core from ensemble-approximated closures. `iterations` may be NULL.
///
/// # Safety
/// As for [`gh_core_exact`].
#[no_mangle]
pub unsafe extern "C" fn gh_core_approx(
    g: *const GhGraph,
    config: *const GhCoreConfig,
    out_mask: *mut u8,
    iterations: *mut usize,
) -> GhStatus {
    run_core(g, config, out_mask, iterations, approximate_core)
}

/// Jaccard similarity of two masks of length `n` (1 for two empty sets).
///
/// # Safety
/// Masks must span `n` bytes; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gh_jaccard(a: *const u8, b: *const u8, n: usize, out: *mut f64) -> GhStatus {
    guard(|| {
        let (a, b) = (read_mask(n, a)?, read_mask(n, b)?);
        if out.is_null() {
            return Err(null("out"));
        }
        *out = jaccard(&a, &b);
        Ok(())
    })
}
