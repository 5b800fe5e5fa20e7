//! Biconnected components and the block-and-bridge tree.
//!
//! The BB-tree of an outerplanar graph replaces every block `B` (a
//! biconnected component with at least three vertices) by a block node
//! `v_B`. A vertex of `B` stays as a tree node, joined to `v_B`, iff it is
//! incident to a bridge or to another block; the remaining vertices of `B`
//! are represented by `v_B` alone. Vertices outside every block are kept
//! and joined by their bridges.

use std::fmt::Write as _;

use crate::block::Block;
use crate::error::Result;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Edge sets of the biconnected components, found with the Hopcroft-Tarjan
/// low-point DFS (iterative). Each edge is `(u, v)` in global ids; a
/// component with a single edge is a bridge.
pub fn biconnected_components(graph: &Graph) -> Vec<Vec<(u32, u32)>> {
    const UNSEEN: u32 = u32::MAX;
    let n = graph.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0u32; n];
    let mut parent = vec![UNSEEN; n];
    let mut cursor = vec![0usize; n];
    let mut edge_stack: Vec<(u32, u32)> = Vec::new();
    let mut components = Vec::new();
    let mut time = 0u32;
    let mut stack: Vec<u32> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        stack.push(root as u32);
        while let Some(&v) = stack.last() {
            let v = v as usize;
            let nbrs = graph.neighbors(v);
            if cursor[v] < nbrs.len() {
                let w = nbrs[cursor[v]] as usize;
                cursor[v] += 1;
                if disc[w] == UNSEEN {
                    parent[w] = v as u32;
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push((v as u32, w as u32));
                    stack.push(w as u32);
                } else if w as u32 != parent[v] && disc[w] < disc[v] {
                    low[v] = low[v].min(disc[w]);
                    edge_stack.push((v as u32, w as u32));
                }
            } else {
                stack.pop();
                let p = parent[v];
                if p == UNSEEN {
                    continue;
                }
                let p = p as usize;
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    let mut comp = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        comp.push(e);
                        if e == (p as u32, v as u32) {
                            break;
                        }
                    }
                    components.push(comp);
                }
            }
        }
    }
    components
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BbNode {
    Vertex(u32),
    Block(u32),
}

/// Block-and-bridge tree of a connected outerplanar graph.
#[derive(Clone, Debug)]
pub struct BbTree {
    pub blocks: Vec<Block>,
    pub bridges: Vec<(u32, u32)>,
    /// Tree node `i` stands for `nodes[i]`; retained vertices come first in
    /// increasing id order, then the block nodes in block order.
    pub nodes: Vec<BbNode>,
    /// The tree itself, on node indices.
    pub tree: Graph,
    node_of_vertex: Vec<u32>,
    /// Blocks containing each vertex, CSR layout.
    block_offsets: Vec<usize>,
    block_ids: Vec<u32>,
}

const NONE: u32 = u32::MAX;

impl BbTree {
    /// Fails with `NotOuterplanar` if some block is not a cycle with
    /// non-crossing chords.
    pub fn build(graph: &Graph) -> Result<BbTree> {
        let n = graph.n();
        let mut blocks = Vec::new();
        let mut bridges = Vec::new();
        for comp in biconnected_components(graph) {
            if comp.len() == 1 {
                let (a, b) = comp[0];
                bridges.push((a.min(b), a.max(b)));
            } else {
                let vertices: Vec<u32> = comp.iter().flat_map(|&(a, b)| [a, b]).collect();
                blocks.push(Block::new(vertices, &comp)?);
            }
        }
        bridges.sort_unstable();
        blocks.sort_by_key(|b| b.vertices[0]);

        let mut count = vec![0usize; n + 1];
        for b in &blocks {
            for &v in &b.vertices {
                count[v as usize] += 1;
            }
        }
        let mut block_offsets = vec![0usize; n + 1];
        for v in 0..n {
            block_offsets[v + 1] = block_offsets[v] + count[v];
        }
        let mut fill = block_offsets.clone();
        let mut block_ids = vec![0u32; block_offsets[n]];
        for (i, b) in blocks.iter().enumerate() {
            for &v in &b.vertices {
                block_ids[fill[v as usize]] = i as u32;
                fill[v as usize] += 1;
            }
        }

        let mut on_bridge = vec![false; n];
        for &(a, b) in &bridges {
            on_bridge[a as usize] = true;
            on_bridge[b as usize] = true;
        }
        let mut nodes = Vec::new();
        let mut node_of_vertex = vec![NONE; n];
        for v in 0..n {
            let in_blocks = block_offsets[v + 1] - block_offsets[v];
            if in_blocks != 1 || on_bridge[v] {
                node_of_vertex[v] = nodes.len() as u32;
                nodes.push(BbNode::Vertex(v as u32));
            }
        }
        let first_block_node = nodes.len();
        nodes.extend((0..blocks.len() as u32).map(BbNode::Block));

        let mut edges: Vec<(usize, usize)> = bridges
            .iter()
            .map(|&(a, b)| (node_of_vertex[a as usize] as usize, node_of_vertex[b as usize] as usize))
            .collect();
        for (i, b) in blocks.iter().enumerate() {
            for &v in &b.vertices {
                let node = node_of_vertex[v as usize];
                if node != NONE {
                    edges.push((node as usize, first_block_node + i));
                }
            }
        }
        let labels = (0..nodes.len() as u64).collect();
        let tree = Graph::from_edges_labelled(labels, edges);
        Ok(BbTree {
            blocks,
            bridges,
            nodes,
            tree,
            node_of_vertex,
            block_offsets,
            block_ids,
        })
    }

    /// Tree node of an original vertex, if it is retained.
    pub fn node_of_vertex(&self, v: usize) -> Option<usize> {
        let node = self.node_of_vertex[v];
        (node != NONE).then_some(node as usize)
    }

    pub fn block_node(&self, block: usize) -> usize {
        self.nodes.len() - self.blocks.len() + block
    }

    /// Indices of the blocks containing `v`.
    pub fn blocks_of(&self, v: usize) -> &[u32] {
        &self.block_ids[self.block_offsets[v]..self.block_offsets[v + 1]]
    }

    /// Vertex set represented by a tree node.
    pub fn gamma(&self, node: usize) -> Vec<u32> {
        match self.nodes[node] {
            BbNode::Vertex(v) => vec![v],
            BbNode::Block(b) => self.blocks[b as usize].vertices.clone(),
        }
    }

    /// Maximum number of interior faces over all blocks (0 for trees).
    pub fn face_number(&self) -> usize {
        self.blocks.iter().map(Block::face_number).max().unwrap_or(0)
    }

    /// Vertices of `graph` with a tree node, as a set.
    pub fn retained_vertices(&self, n: usize) -> VertexSet {
        VertexSet::from_iter(
            n,
            self.nodes.iter().filter_map(|node| match node {
                BbNode::Vertex(v) => Some(*v as usize),
                BbNode::Block(_) => None,
            }),
        )
    }

    /// Diagnostic dump, one block per line: cycle order, then chords.
    pub fn dump(&self, graph: &Graph) -> String {
        let mut out = String::new();
        let label = |v: u32| graph.label(v as usize);
        for (i, b) in self.blocks.iter().enumerate() {
            let cycle: Vec<String> = b.cycle.iter().map(|&v| label(v).to_string()).collect();
            let chords: Vec<String> = b
                .chords
                .iter()
                .map(|&(x, y)| format!("{}-{}", label(b.cycle[x as usize]), label(b.cycle[y as usize])))
                .collect();
            let _ = writeln!(
                out,
                "block {i} faces={} cycle={} chords={}",
                b.face_number(),
                cycle.join(","),
                chords.join(",")
            );
        }
        for &(a, b) in &self.bridges {
            let _ = writeln!(out, "bridge {}-{}", label(a), label(b));
        }
        out
    }
}
