//! Geodesic closure on outerplanar graphs in `O(n·f)` time, `f` the face
//! number: closure in the block-and-bridge tree, then one generator-set
//! closure per block.

use crate::bbtree::{BbNode, BbTree};
use crate::bfs::Bfs;
use crate::block::Block;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Closure `τ` of `x` in a tree: repeatedly strips leaves (and isolated
/// nodes) outside `x`. The empty set is closed.
pub fn tree_closure(tree: &Graph, x: &VertexSet) -> VertexSet {
    let n = tree.n();
    if x.is_empty() {
        return VertexSet::new(n);
    }
    let mut alive = VertexSet::full(n);
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut queue: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1 && !x.contains(v)).collect();
    while let Some(v) = queue.pop() {
        if !alive.remove(v) {
            continue;
        }
        for &w in tree.neighbors(v) {
            let w = w as usize;
            if alive.contains(w) {
                degree[w] -= 1;
                if degree[w] <= 1 && !x.contains(w) {
                    queue.push(w);
                }
            }
        }
    }
    alive
}

/// Generator set `G_X ⊆ X ∩ V(B)` with the same closure in `B`, at most
/// three vertices per interior face. `x` is over global ids; the result is
/// sorted global ids.
///
/// Per face, `w` is the smallest id of `X ∩ V(F)` and distances are taken
/// along the face cycle; argmax ties go to the smallest id.
pub fn generator_set(block: &Block, x: &VertexSet) -> Vec<u32> {
    let mut out = Vec::new();
    let mut members: Vec<usize> = Vec::new();
    for face in &block.faces {
        members.clear();
        members.extend((0..face.len()).filter(|&p| x.contains(face.boundary[p] as usize)));
        if members.is_empty() {
            continue;
        }
        let id = |p: usize| face.boundary[p];
        let w = *members.iter().min_by_key(|&&p| id(p)).unwrap();
        let farthest = |candidates: &mut dyn Iterator<Item = usize>| {
            candidates
                .max_by(|&a, &b| {
                    face.cycle_distance(a, w)
                        .cmp(&face.cycle_distance(b, w))
                        .then(id(b).cmp(&id(a)))
                })
                .unwrap()
        };
        let u = farthest(&mut members.iter().copied());
        let v = farthest(
            &mut members
                .iter()
                .copied()
                .filter(|&p| p == w || !face.arc_contains(u, w, p)),
        );
        out.push(id(u));
        out.push(id(v));
        if !face.arc_contains(u, v, w) {
            out.push(id(w));
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Union of the geodesic intervals between all pairs of `generators`
/// inside the block (global ids in and out, output sorted).
pub fn block_interval_union(block: &Block, generators: &[u32]) -> Vec<u32> {
    let k = block.len();
    let local: Vec<usize> = generators
        .iter()
        .map(|&g| block.local_id(g).expect("generator lies in block"))
        .collect();
    let target = VertexSet::from_iter(k, local.iter().copied());
    let mut bfs = Bfs::new(k);
    let mut found = VertexSet::new(k);
    for &s in &local {
        bfs.run(&block.local, s);
        bfs.collect_geodesics(&block.local, |t| target.contains(t), &mut found);
    }
    found.iter().map(|i| block.vertices[i]).collect()
}

/// Closure `β` of `x ∩ V(B)` inside block `B`.
pub fn block_closure(block: &Block, x: &VertexSet) -> Vec<u32> {
    block_interval_union(block, &generator_set(block, x))
}

/// An outerplanar graph with its BB-tree built, ready for repeated
/// closure queries.
#[derive(Clone, Debug)]
pub struct PreparedOuterplanar {
    n: usize,
    bb: BbTree,
}

impl PreparedOuterplanar {
    /// Fails if the graph is disconnected or not outerplanar.
    pub fn new(graph: &Graph) -> Result<Self> {
        if graph.n() == 0 {
            return Err(Error::InvalidArgument("graph has no vertices".into()));
        }
        graph.ensure_connected()?;
        Ok(PreparedOuterplanar {
            n: graph.n(),
            bb: BbTree::build(graph)?,
        })
    }

    pub fn bb_tree(&self) -> &BbTree {
        &self.bb
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn face_number(&self) -> usize {
        self.bb.face_number()
    }

    /// `ρ(x)`.
    pub fn closure(&self, x: &VertexSet) -> VertexSet {
        assert_eq!(x.universe(), self.n, "vertex set over a different graph");
        if x.len() <= 1 {
            return x.clone();
        }
        let bb = &self.bb;
        let mut seeds = VertexSet::new(bb.nodes.len());
        for v in x.iter() {
            if let Some(node) = bb.node_of_vertex(v) {
                seeds.insert(node);
            }
            for &b in bb.blocks_of(v) {
                seeds.insert(bb.block_node(b as usize));
            }
        }
        let hull = tree_closure(&bb.tree, &seeds);
        let mut out = x.clone();
        let mut touched: Vec<usize> = Vec::new();
        for node in hull.iter() {
            match bb.nodes[node] {
                BbNode::Vertex(v) => {
                    out.insert(v as usize);
                }
                BbNode::Block(b) => touched.push(b as usize),
            }
        }
        for b in touched {
            let block = &bb.blocks[b];
            let inside = block
                .vertices
                .iter()
                .filter(|&&v| out.contains(v as usize))
                .count();
            if inside > 1 {
                for v in block_closure(block, &out) {
                    out.insert(v as usize);
                }
            }
        }
        out
    }
}

/// `ρ(x)` on a connected outerplanar graph.
pub fn outerplanar_closure(graph: &Graph, x: &VertexSet) -> Result<VertexSet> {
    Ok(PreparedOuterplanar::new(graph)?.closure(x))
}

/// Union of `I(u, v)` over all pairs of `x`, one BFS per member. On
/// outerplanar graphs this is already `ρ(x)`.
pub fn closure_naive_outerplanar(graph: &Graph, x: &VertexSet) -> VertexSet {
    let mut out = x.clone();
    let mut bfs = Bfs::new(graph.n());
    for s in x.iter() {
        bfs.run(graph, s);
        bfs.collect_geodesics(graph, |t| x.contains(t), &mut out);
    }
    out
}
