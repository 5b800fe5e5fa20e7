use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::random::rng;

pub(crate) const NO_PARENT: u32 = u32::MAX;

/// Rooted ordered DFS tree. Ancestor tests run in constant time through
/// pre-order intervals: `x` is an ancestor of `y` (or `y` itself) iff
/// `pre[x] <= pre[y] <= last[x]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DfsTree {
    pub root: usize,
    pub parent: Vec<u32>,
    pub depth: Vec<u32>,
    /// Pre-order rank of each vertex.
    pub pre: Vec<u32>,
    /// Largest pre-order rank inside the subtree of each vertex.
    pub last: Vec<u32>,
    /// Vertices by pre-order rank.
    pub preorder: Vec<u32>,
}

impl DfsTree {
    /// `x ⪯ y`: the root path of `y` contains `x`.
    #[inline]
    pub fn precedes_eq(&self, x: usize, y: usize) -> bool {
        self.pre[x] <= self.pre[y] && self.pre[y] <= self.last[x]
    }

    /// `x ≺ y`.
    #[inline]
    pub fn precedes(&self, x: usize, y: usize) -> bool {
        x != y && self.precedes_eq(x, y)
    }

    #[inline]
    pub fn parent(&self, v: usize) -> Option<usize> {
        let p = self.parent[v];
        (p != NO_PARENT).then_some(p as usize)
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    /// Depth-first traversal from `root`. With `order = None` neighbors are
    /// visited in increasing id order; otherwise each neighbor list is
    /// shuffled with the given RNG first.
    pub(crate) fn build<R: Rng>(graph: &Graph, root: usize, shuffle: Option<&mut R>) -> Self {
        let n = graph.n();
        let mut adjacency: Vec<u32> = Vec::with_capacity(2 * graph.m());
        let mut start = Vec::with_capacity(n + 1);
        for v in 0..n {
            start.push(adjacency.len());
            adjacency.extend_from_slice(graph.neighbors(v));
        }
        start.push(adjacency.len());
        if let Some(rng) = shuffle {
            for v in 0..n {
                adjacency[start[v]..start[v + 1]].shuffle(rng);
            }
        }

        let mut parent = vec![NO_PARENT; n];
        let mut depth = vec![0u32; n];
        let mut pre = vec![u32::MAX; n];
        let mut last = vec![0u32; n];
        let mut preorder = Vec::with_capacity(n);
        let mut cursor = start.clone();

        pre[root] = 0;
        preorder.push(root as u32);
        let mut stack = vec![root];
        while let Some(&v) = stack.last() {
            if cursor[v] < start[v + 1] {
                let w = adjacency[cursor[v]] as usize;
                cursor[v] += 1;
                if pre[w] == u32::MAX {
                    pre[w] = preorder.len() as u32;
                    preorder.push(w as u32);
                    parent[w] = v as u32;
                    depth[w] = depth[v] + 1;
                    stack.push(w);
                }
            } else {
                last[v] = preorder.len() as u32 - 1;
                stack.pop();
            }
        }
        DfsTree {
            root,
            parent,
            depth,
            pre,
            last,
            preorder,
        }
    }

    /// Rebuilds a tree from parent pointers, visiting children in
    /// increasing id order.
    pub(crate) fn from_parents(root: usize, parent: Vec<u32>) -> Result<Self> {
        let n = parent.len();
        let mut children: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (v, &p) in parent.iter().enumerate() {
            if v == root {
                continue;
            }
            if p == NO_PARENT {
                return Err(Error::InvalidArgument(format!(
                    "tree edges do not span vertex {v}"
                )));
            }
            children[p as usize].push(v as u32);
        }
        let mut depth = vec![0u32; n];
        let mut pre = vec![u32::MAX; n];
        let mut last = vec![0u32; n];
        let mut preorder = Vec::with_capacity(n);
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        pre[root] = 0;
        preorder.push(root as u32);
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next < children[v].len() {
                let c = children[v][*next] as usize;
                *next += 1;
                pre[c] = preorder.len() as u32;
                preorder.push(c as u32);
                depth[c] = depth[v] + 1;
                stack.push((c, 0));
            } else {
                last[v] = preorder.len() as u32 - 1;
                stack.pop();
            }
        }
        if preorder.len() != n {
            return Err(Error::InvalidArgument(
                "tree edges contain a cycle or do not reach every vertex".into(),
            ));
        }
        Ok(DfsTree {
            root,
            parent,
            depth,
            pre,
            last,
            preorder,
        })
    }
}

/// One DFS path `P_i = [r_i, v_2, ..., l_i]`. Apart from `r_i`, its
/// vertices are consecutive in pre-order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DfsPath {
    /// Branch vertex `r_i`; lies on an earlier path unless `i = 1`.
    pub start: u32,
    /// Pre-order ranks of `v_2..=l_i`.
    pub ranks: (u32, u32),
}

impl DfsPath {
    pub fn vertices<'a>(&self, tree: &'a DfsTree) -> impl Iterator<Item = usize> + 'a {
        let (lo, hi) = self.ranks;
        std::iter::once(self.start as usize)
            .chain(tree.preorder[lo as usize..hi as usize].iter().map(|&v| v as usize))
    }

    pub fn len(&self) -> usize {
        1 + (self.ranks.1 - self.ranks.0) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Splits the pre-order into DFS paths: a vertex opens a new path iff it
/// is not the first child of its parent.
pub(crate) fn decompose_paths(tree: &DfsTree) -> Vec<DfsPath> {
    let n = tree.n();
    let mut paths = Vec::new();
    let mut current = DfsPath {
        start: tree.root as u32,
        ranks: (1, 1),
    };
    for rank in 1..n {
        let v = tree.preorder[rank] as usize;
        let p = tree.parent[v] as usize;
        if tree.pre[p] + 1 != rank as u32 {
            paths.push(current);
            current = DfsPath {
                start: p as u32,
                ranks: (rank as u32, rank as u32 + 1),
            };
        } else {
            current.ranks.1 = rank as u32 + 1;
        }
    }
    paths.push(current);
    paths
}

/// How the DFS chooses its root and neighbor order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DfsOrder {
    /// Random root, seed-shuffled neighbor lists.
    Shuffled { seed: u64 },
    /// Fixed root, neighbors in increasing id order.
    Sorted { root: usize },
}

pub(crate) fn build_tree(graph: &Graph, order: DfsOrder) -> Result<DfsTree> {
    if graph.n() == 0 {
        return Err(Error::InvalidArgument("graph has no vertices".into()));
    }
    graph.ensure_connected()?;
    Ok(match order {
        DfsOrder::Shuffled { seed } => {
            let mut rng = rng(seed);
            let root = rng.gen_range(0..graph.n());
            DfsTree::build(graph, root, Some(&mut rng))
        }
        DfsOrder::Sorted { root } => {
            graph.check_vertex(root)?;
            DfsTree::build::<rand_chacha::ChaCha8Rng>(graph, root, None)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(graph: &Graph, root: usize) -> DfsTree {
        build_tree(graph, DfsOrder::Sorted { root }).unwrap()
    }

    fn path_lists(tree: &DfsTree) -> Vec<Vec<usize>> {
        decompose_paths(tree)
            .iter()
            .map(|p| p.vertices(tree).collect())
            .collect()
    }

    #[test]
    fn path_graph_from_endpoint_is_one_path() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let t = sorted(&g, 0);
        assert_eq!(path_lists(&t), vec![vec![0, 1, 2, 3]]);
        assert_eq!(t.depth, vec![0, 1, 2, 3]);
    }

    #[test]
    fn star_from_center_has_one_path_per_leaf() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        let t = sorted(&g, 0);
        let paths = decompose_paths(&t);
        assert_eq!(paths.len(), 3);
        assert!(paths.iter().all(|p| p.start == 0));
        assert_eq!(path_lists(&t), vec![vec![0, 1], vec![0, 2], vec![0, 3]]);
    }

    #[test]
    fn ancestor_intervals() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 3), (3, 4)]);
        let t = sorted(&g, 0);
        assert!(t.precedes(0, 2));
        assert!(t.precedes_eq(2, 2));
        assert!(!t.precedes(2, 2));
        assert!(!t.precedes_eq(1, 4));
        assert!(!t.precedes_eq(2, 1));
    }

    #[test]
    fn single_vertex_tree() {
        let g = Graph::from_edges(1, []);
        let t = sorted(&g, 0);
        let paths = decompose_paths(&t);
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].len(), 1);
    }

    #[test]
    fn rejects_disconnected() {
        let g = Graph::from_edges(3, [(0, 1)]);
        assert!(matches!(
            build_tree(&g, DfsOrder::Shuffled { seed: 1 }),
            Err(Error::NotConnected { components: 2 })
        ));
    }

    #[test]
    fn rebuild_from_parents_matches() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (1, 3), (0, 4), (4, 5), (5, 2)]);
        let t = sorted(&g, 0);
        let again = DfsTree::from_parents(0, t.parent.clone()).unwrap();
        assert_eq!(again.depth, t.depth);
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(again.precedes_eq(x, y), t.precedes_eq(x, y));
            }
        }
    }
}
