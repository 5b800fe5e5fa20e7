//! Random near-maximal outerplanar spanning subgraphs in `O(m)` time.
//!
//! A DFS tree is decomposed into its ordered DFS paths. Each path is walked
//! from its branch vertex towards its leaf, and at every vertex the back
//! edges to its ancestors are offered either all to the left or all to the
//! right of the current root path. Per-vertex bookkeeping decides validity
//! in constant time:
//!
//! * `reach(v)`: the sides from which `v` is still reachable,
//! * `σ_L(v)`, `σ_R(v)`: whether a left/right back edge spans `v`,
//! * `↑_L(v)`, `↑_R(v)`: the smallest depth a new left/right back edge
//!   leaving `v` may end at.
//!
//! Vertices on the current root path that are reachable from both sides are
//! kept on a stack; accepting an edge pops exactly the vertices whose
//! bookkeeping changes, so the total work is linear in `m`.

mod dfs;
mod outerplanar;

pub use dfs::{DfsOrder, DfsPath, DfsTree};
pub use outerplanar::{EdgeTag, OuterplanarGraph};

use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    #[inline]
    fn index(self) -> usize {
        match self {
            Side::Left => 0,
            Side::Right => 1,
        }
    }

    #[inline]
    fn bit(self) -> u8 {
        1 << self.index()
    }

    #[inline]
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

const BOTH: u8 = 0b11;

/// Operation counts of the reachability stack.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StackStats {
    pub pushes: u64,
    pub pops: u64,
}

/// DFS tree, its path decomposition, and the per-vertex sampler state.
#[derive(Clone, Debug)]
pub struct DfsState {
    pub tree: DfsTree,
    pub paths: Vec<DfsPath>,
    reach: Vec<u8>,
    sigma: Vec<u8>,
    up: [Vec<u32>; 2],
    /// Vertices of the current root path reachable from both sides, by
    /// increasing depth.
    stack: Vec<u32>,
    stats: StackStats,
}

impl DfsState {
    fn new(tree: DfsTree) -> Self {
        let n = tree.n();
        let paths = dfs::decompose_paths(&tree);
        DfsState {
            tree,
            paths,
            reach: vec![BOTH; n],
            sigma: vec![0; n],
            up: [vec![0; n], vec![0; n]],
            stack: Vec::with_capacity(n),
            stats: StackStats::default(),
        }
    }

    pub fn reach(&self, v: usize, side: Side) -> bool {
        self.reach[v] & side.bit() != 0
    }

    pub fn sigma(&self, v: usize, side: Side) -> bool {
        self.sigma[v] & side.bit() != 0
    }

    pub fn up(&self, v: usize, side: Side) -> u32 {
        self.up[side.index()][v]
    }

    pub fn stack_stats(&self) -> StackStats {
        self.stats
    }

    fn push(&mut self, v: usize) {
        self.stack.push(v as u32);
        self.stats.pushes += 1;
    }

    /// Lines 7-10 for the branch vertex of a new path: reset its
    /// reachability and restrict `↑` when a back edge already spans it.
    /// The stack is cut back to the new root path.
    pub fn begin_path(&mut self, start: usize) {
        let depth = self.tree.depth[start];
        self.reach[start] = BOTH;
        for side in [Side::Left, Side::Right] {
            let i = side.index();
            self.up[i][start] = if self.sigma(start, side) || start == self.tree.root {
                depth
            } else {
                self.up[i][self.tree.parent[start] as usize]
            };
        }
        while let Some(&top) = self.stack.last() {
            if self.tree.depth[top as usize] <= depth {
                break;
            }
            self.stack.pop();
            self.stats.pops += 1;
        }
        if self.stack.last() != Some(&(start as u32)) {
            self.push(start);
        }
    }

    /// Lines 12-13 for a non-branch vertex of the current path.
    pub fn enter_vertex(&mut self, v: usize) {
        let p = self.tree.parent[v] as usize;
        self.reach[v] = BOTH;
        self.up[0][v] = self.up[0][p];
        self.up[1][v] = self.up[1][p];
        self.push(v);
    }

    /// Chooses the back edges `(v, w)` (all `w ≺ v` on the current root
    /// path) to add to one side. An edge is valid for side `δ` iff `δ ∈
    /// reach(w)` and `↑_δ(v) ≤ d(w)`; the larger valid set wins, left on
    /// ties. Returns `(E_L, E_R)` as lists of ancestors `w`; at most one
    /// is non-empty.
    ///
    /// `v` must be the last vertex passed to [`DfsState::enter_vertex`].
    pub fn add_edges(&mut self, v: usize, candidates: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let mut valid: [Vec<u32>; 2] = [Vec::new(), Vec::new()];
        for side in [Side::Left, Side::Right] {
            let i = side.index();
            for &w in candidates {
                debug_assert!(self.tree.precedes(w as usize, v));
                debug_assert!(self.tree.depth[v] >= self.tree.depth[w as usize] + 2);
                if self.reach(w as usize, side) && self.up[i][v] <= self.tree.depth[w as usize] {
                    valid[i].push(w);
                }
            }
        }
        let chosen = if valid[1].len() > valid[0].len() {
            Side::Right
        } else {
            Side::Left
        };
        let [left, right] = valid;
        let (accepted, _) = match chosen {
            Side::Left => (left, right),
            Side::Right => (right, left),
        };
        if !accepted.is_empty() {
            self.accept(v, chosen, &accepted);
        }
        match chosen {
            Side::Left => (accepted, Vec::new()),
            Side::Right => (Vec::new(), accepted),
        }
    }

    /// Lines 8-14: after adding `accepted` on `side`, no edge from `v` may
    /// use the other side above `p(v)`, and every vertex strictly inside a
    /// new edge loses `side`.
    fn accept(&mut self, v: usize, side: Side, accepted: &[u32]) {
        let other = side.other().index();
        let p = self.tree.parent[v] as usize;
        self.up[other][v] = self.tree.depth[p];

        let top_depth = accepted
            .iter()
            .map(|&w| self.tree.depth[w as usize])
            .min()
            .expect("accepted is non-empty");
        let current = self.stack.pop();
        debug_assert_eq!(current, Some(v as u32));
        while let Some(&x) = self.stack.last() {
            let x = x as usize;
            if self.tree.depth[x] <= top_depth {
                break;
            }
            self.stack.pop();
            self.stats.pops += 1;
            self.reach[x] &= !side.bit();
            self.up[other][x] = self.tree.depth[x];
            self.sigma[x] |= side.bit();
        }
        self.stack.push(v as u32);
    }
}

/// DFS tree with a seed-chosen root and seed-shuffled neighbor order,
/// decomposed into DFS paths.
pub fn dfs_decompose(graph: &Graph, seed: u64) -> Result<DfsState> {
    dfs_decompose_with(graph, DfsOrder::Shuffled { seed })
}

pub fn dfs_decompose_with(graph: &Graph, order: DfsOrder) -> Result<DfsState> {
    Ok(DfsState::new(dfs::build_tree(graph, order)?))
}

/// Back edges from `v` to its proper ancestors other than its parent.
pub fn candidate_back_edges(graph: &Graph, tree: &DfsTree, v: usize, out: &mut Vec<u32>) {
    out.clear();
    let parent = tree.parent[v];
    for &w in graph.neighbors(v) {
        if w != parent && tree.pre[w as usize] < tree.pre[v] {
            debug_assert!(tree.precedes(w as usize, v), "cross edge in DFS tree");
            out.push(w);
        }
    }
}

/// Runs the path loop over a prepared state and returns the subgraph.
pub fn run_sampler(graph: &Graph, mut state: DfsState) -> (OuterplanarGraph, StackStats) {
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut candidates = Vec::new();
    let paths = std::mem::take(&mut state.paths);
    for path in &paths {
        state.begin_path(path.start as usize);
        for rank in path.ranks.0..path.ranks.1 {
            let v = state.tree.preorder[rank as usize] as usize;
            state.enter_vertex(v);
            candidate_back_edges(graph, &state.tree, v, &mut candidates);
            if candidates.is_empty() {
                continue;
            }
            let (l, r) = state.add_edges(v, &candidates);
            left.extend(l.into_iter().map(|w| (v as u32, w)));
            right.extend(r.into_iter().map(|w| (v as u32, w)));
        }
    }
    state.paths = paths;
    let stats = state.stats;
    (
        OuterplanarGraph::from_parts(graph.labels().to_vec(), state.tree, left, right),
        stats,
    )
}

/// Random spanning outerplanar subgraph of a connected graph; deterministic
/// in `(graph, seed)`.
pub fn sample_outerplanar(graph: &Graph, seed: u64) -> Result<OuterplanarGraph> {
    Ok(sample_outerplanar_with_stats(graph, DfsOrder::Shuffled { seed })?.0)
}

pub fn sample_outerplanar_with_stats(
    graph: &Graph,
    order: DfsOrder,
) -> Result<(OuterplanarGraph, StackStats)> {
    let state = dfs_decompose_with(graph, order)?;
    Ok(run_sampler(graph, state))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_candidate_set_changes_nothing() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]);
        let mut s = dfs_decompose_with(&g, DfsOrder::Sorted { root: 0 }).unwrap();
        s.begin_path(0);
        s.enter_vertex(1);
        s.enter_vertex(2);
        let before = (s.reach.clone(), s.sigma.clone(), s.up.clone());
        assert_eq!(s.add_edges(2, &[]), (vec![], vec![]));
        assert_eq!(before, (s.reach.clone(), s.sigma.clone(), s.up.clone()));
    }

    #[test]
    fn single_candidate_on_fresh_path_goes_left() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]);
        let mut s = dfs_decompose_with(&g, DfsOrder::Sorted { root: 0 }).unwrap();
        s.begin_path(0);
        s.enter_vertex(1);
        s.enter_vertex(2);
        let (l, r) = s.add_edges(2, &[0]);
        assert_eq!((l, r), (vec![0], vec![]));
        assert!(!s.reach(1, Side::Left));
        assert!(s.reach(1, Side::Right));
        assert!(s.sigma(1, Side::Left));
        assert_eq!(s.up(1, Side::Right), 1);
        assert_eq!(s.up(2, Side::Right), 1);
    }

    /// Two DFS paths `[0, 1, 2, 3, 4]` and `[2, 5, 6]`; the left edge
    /// `(3, 0)` from the first path spans 1 and 2. From `6`, the candidates
    /// `1` and `2` are both valid on the right, only `2` on the left.
    #[test]
    fn second_path_prefers_larger_right_set() {
        let g = Graph::from_edges(
            7,
            [(0, 1), (1, 2), (2, 3), (3, 4), (3, 0), (2, 5), (5, 6), (6, 1), (6, 2)],
        );
        let mut s = dfs_decompose_with(&g, DfsOrder::Sorted { root: 0 }).unwrap();
        let paths: Vec<Vec<usize>> = s
            .paths
            .iter()
            .map(|p| p.vertices(&s.tree).collect())
            .collect();
        assert_eq!(paths, vec![vec![0, 1, 2, 3, 4], vec![2, 5, 6]]);

        s.begin_path(0);
        for v in [1, 2] {
            s.enter_vertex(v);
        }
        s.enter_vertex(3);
        assert_eq!(s.add_edges(3, &[0]), (vec![0], vec![]));
        s.enter_vertex(4);

        s.begin_path(2);
        // Row "r": untouched.
        assert!(s.reach(0, Side::Left) && s.reach(0, Side::Right));
        // Row 1: spanned from the left on the first path.
        assert!(!s.reach(1, Side::Left) && s.sigma(1, Side::Left));
        // Row 2 is the new branch vertex: reach reset, ↑_L pinned to its depth.
        assert!(s.reach(2, Side::Left) && s.reach(2, Side::Right));
        assert_eq!((s.up(2, Side::Left), s.up(2, Side::Right)), (2, 1));

        s.enter_vertex(5);
        assert_eq!((s.up(5, Side::Left), s.up(5, Side::Right)), (2, 1));
        s.enter_vertex(6);
        let (l, mut r) = s.add_edges(6, &[1, 2]);
        r.sort_unstable();
        assert_eq!((l, r), (vec![], vec![1, 2]));

        for x in [2, 5] {
            assert!(s.reach(x, Side::Left) && !s.reach(x, Side::Right));
            assert!(s.sigma(x, Side::Right));
            assert_eq!(s.up(x, Side::Left), s.tree.depth[x]);
        }
        assert!(s.sigma(2, Side::Left) && !s.sigma(5, Side::Left));
        assert_eq!((s.up(6, Side::Left), s.up(6, Side::Right)), (3, 1));
    }
}
