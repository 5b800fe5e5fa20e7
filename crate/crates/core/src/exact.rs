//! Exact geodesic intervals and closures on arbitrary connected graphs.

use std::collections::VecDeque;

use crate::bfs::{bfs_distances, Bfs, INFINITY};
use crate::error::Result;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// All vertices on some shortest `u`-`v` path, from two BFS passes.
pub fn geodesic_interval(graph: &Graph, u: usize, v: usize) -> Result<VertexSet> {
    graph.check_vertex(u)?;
    graph.check_vertex(v)?;
    let du = bfs_distances(graph, u);
    let dv = bfs_distances(graph, v);
    let mut out = VertexSet::new(graph.n());
    let total = du.dist[v];
    if total == INFINITY {
        return Ok(out);
    }
    for x in 0..graph.n() {
        let (a, b) = (du.dist[x], dv.dist[x]);
        if a != INFINITY && b != INFINITY && a + b == total {
            out.insert(x);
        }
    }
    Ok(out)
}

/// Smallest geodesically closed superset of `x`, in `O(nm)`.
///
/// Every member `u` of the growing set is processed once, FIFO: one BFS
/// from `u`, then the union of `I(u, v)` over all current members `v` is
/// added.
pub fn closure_exact(graph: &Graph, x: &VertexSet) -> VertexSet {
    let n = graph.n();
    let mut closed = x.clone();
    if closed.len() <= 1 {
        return closed;
    }
    let mut bfs = Bfs::new(n);
    let mut queue: VecDeque<usize> = closed.iter().collect();
    let mut queued = closed.clone();
    while let Some(u) = queue.pop_front() {
        if closed.len() == n {
            break;
        }
        bfs.run(graph, u);
        let snapshot = closed.clone();
        bfs.collect_geodesics(graph, |t| snapshot.contains(t), &mut closed);
        for v in closed.iter() {
            if queued.insert(v) {
                queue.push_back(v);
            }
        }
    }
    closed
}
