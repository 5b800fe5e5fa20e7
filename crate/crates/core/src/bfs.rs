//! Breadth-first search primitives.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Distance sentinel for unreachable vertices.
pub const INFINITY: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceField {
    pub source: usize,
    pub dist: Vec<u32>,
}

impl DistanceField {
    pub fn get(&self, v: usize) -> Option<u32> {
        let d = self.dist[v];
        (d != INFINITY).then_some(d)
    }
}

/// Single-source hop distances. Panics if `source >= n`.
pub fn bfs_distances(graph: &Graph, source: usize) -> DistanceField {
    let mut scratch = Bfs::new(graph.n());
    scratch.run(graph, source);
    DistanceField {
        source,
        dist: scratch.dist,
    }
}

/// Reusable BFS buffers. After [`Bfs::run`], `order` lists the reached
/// vertices in non-decreasing distance and `dist` holds hop distances
/// (only entries of reached vertices are meaningful).
pub struct Bfs {
    pub dist: Vec<u32>,
    pub order: Vec<u32>,
    on_path: Vec<bool>,
}

impl Bfs {
    pub fn new(n: usize) -> Self {
        Self {
            dist: vec![INFINITY; n],
            order: Vec::with_capacity(n),
            on_path: vec![false; n],
        }
    }

    pub fn run(&mut self, graph: &Graph, source: usize) {
        for &v in &self.order {
            self.dist[v as usize] = INFINITY;
        }
        self.order.clear();
        self.dist[source] = 0;
        self.order.push(source as u32);
        let mut head = 0;
        while head < self.order.len() {
            let u = self.order[head] as usize;
            head += 1;
            let next = self.dist[u] + 1;
            for &w in graph.neighbors(u) {
                if self.dist[w as usize] == INFINITY {
                    self.dist[w as usize] = next;
                    self.order.push(w);
                }
            }
        }
    }

    /// After `run(graph, s)`, inserts into `out` every vertex lying on some
    /// shortest path from `s` to a vertex `t` with `is_target(t)`, i.e.
    /// the union of the intervals `I(s, t)`. Returns the number of newly
    /// inserted vertices.
    ///
    /// Sweeps the BFS order backwards: a vertex is on such a path iff it is
    /// a target or has a neighbor one level deeper that is.
    pub fn collect_geodesics<F>(&mut self, graph: &Graph, is_target: F, out: &mut VertexSet) -> usize
    where
        F: Fn(usize) -> bool,
    {
        let mut added = 0;
        for i in (0..self.order.len()).rev() {
            let x = self.order[i] as usize;
            let mut on = is_target(x);
            if !on {
                let deeper = self.dist[x] + 1;
                on = graph
                    .neighbors(x)
                    .iter()
                    .any(|&y| self.dist[y as usize] == deeper && self.on_path[y as usize]);
            }
            self.on_path[x] = on;
            if on && out.insert(x) {
                added += 1;
            }
        }
        for &v in &self.order {
            self.on_path[v as usize] = false;
        }
        added
    }
}
