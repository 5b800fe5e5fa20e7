//! Outerplanarity recognition and the greedy maximality measure for
//! sampled subgraphs.

use crate::bbtree::{biconnected_components, BbNode, BbTree};
use crate::block::Block;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Ok iff every biconnected component is a Hamiltonian cycle with
/// non-crossing chords (or a single edge). Works on disconnected graphs.
pub fn check_outerplanar(graph: &Graph) -> Result<()> {
    let n = graph.n();
    if n >= 2 && graph.m() > 2 * n - 3 {
        return Err(Error::NotOuterplanar(format!(
            "{} edges exceed the bound 2n-3 = {}",
            graph.m(),
            2 * n - 3
        )));
    }
    for comp in biconnected_components(graph) {
        if comp.len() > 1 {
            let vertices: Vec<u32> = comp.iter().flat_map(|&(a, b)| [a, b]).collect();
            Block::new(vertices, &comp)?;
        }
    }
    Ok(())
}

pub fn is_outerplanar(graph: &Graph) -> bool {
    check_outerplanar(graph).is_ok()
}

/// Result of greedily extending a subgraph `H ⊆ G` to a maximal
/// outerplanar subgraph.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Maximality {
    /// Edges of `G` that could still be added, one at a time.
    pub missing: usize,
    /// `|E(H)| / (|E(H)| + missing)` in percent.
    pub relative: f64,
}

impl Maximality {
    pub fn is_maximal(&self) -> bool {
        self.missing == 0
    }
}

/// Block structure of the current subgraph, used to reject candidate edges
/// without a full recognition.
struct Shortcut {
    bb: BbTree,
    /// Per block, cycle position of each local id.
    position: Vec<Vec<u32>>,
    /// vertex -> (block, face) pairs
    faces_of: Vec<Vec<(u32, u32)>>,
}

impl Shortcut {
    fn new(graph: &Graph) -> Result<Shortcut> {
        let bb = BbTree::build(graph)?;
        let mut faces_of = vec![Vec::new(); graph.n()];
        let mut position = Vec::with_capacity(bb.blocks.len());
        for (b, block) in bb.blocks.iter().enumerate() {
            let mut pos = vec![0u32; block.len()];
            for (i, &v) in block.cycle.iter().enumerate() {
                pos[block.local_id(v).unwrap()] = i as u32;
            }
            position.push(pos);
            for (f, face) in block.faces.iter().enumerate() {
                for &v in &face.boundary {
                    faces_of[v as usize].push((b as u32, f as u32));
                }
            }
        }
        Ok(Shortcut { bb, position, faces_of })
    }

    fn node(&self, v: usize) -> usize {
        self.bb
            .node_of_vertex(v)
            .unwrap_or_else(|| self.bb.block_node(self.bb.blocks_of(v)[0] as usize))
    }

    fn adjacent_on_cycle(&self, block: usize, x: u32, y: u32) -> bool {
        let b = &self.bb.blocks[block];
        let (i, j) = (
            self.position[block][b.local_id(x).unwrap()],
            self.position[block][b.local_id(y).unwrap()],
        );
        let k = b.len() as u32;
        (i + 1) % k == j || (j + 1) % k == i
    }

    /// False if adding `ab` certainly breaks outerplanarity. Inside one
    /// block the edge must join two vertices of a common face; across
    /// blocks, every block on the tree path must be entered and left
    /// through two vertices adjacent on its cycle.
    fn may_add(&self, a: usize, b: usize) -> bool {
        let (from, to) = (self.node(a), self.node(b));
        let tree = &self.bb.tree;
        let mut prev = vec![u32::MAX; tree.n()];
        prev[from] = from as u32;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                break;
            }
            for &y in tree.neighbors(x) {
                if prev[y as usize] == u32::MAX {
                    prev[y as usize] = x as u32;
                    queue.push_back(y as usize);
                }
            }
        }
        if prev[to] == u32::MAX {
            return true;
        }
        let mut path = vec![to];
        while *path.last().unwrap() != from {
            path.push(prev[*path.last().unwrap()] as usize);
        }
        let vertex_at = |i: usize, end: usize| match path.get(i) {
            Some(&node) => match self.bb.nodes[node] {
                BbNode::Vertex(v) => v,
                BbNode::Block(_) => end as u32,
            },
            None => end as u32,
        };
        for (i, &node) in path.iter().enumerate() {
            let BbNode::Block(block) = self.bb.nodes[node] else { continue };
            // path runs from b to a
            let y = if i == 0 { b as u32 } else { vertex_at(i - 1, b) };
            let x = if i + 1 == path.len() { a as u32 } else { vertex_at(i + 1, a) };
            if x == a as u32 && y == b as u32 {
                let faces = |v: usize| self.faces_of[v].iter().filter(move |f| f.0 == block);
                if !faces(a).any(|fa| faces(b).any(|fb| fa == fb)) {
                    return false;
                }
            } else if !self.adjacent_on_cycle(block as usize, x, y) {
                return false;
            }
        }
        true
    }
}

/// Adds the edges of `G` not in `H`, in increasing `(u, v)` order, whenever
/// the result stays outerplanar. `H` must be an outerplanar subgraph of `G`
/// on the same vertex ids.
pub fn maximality_deficit(g: &Graph, h: &Graph) -> Result<Maximality> {
    if g.n() != h.n() {
        return Err(Error::InvalidArgument(format!(
            "subgraph has {} vertices, graph has {}",
            h.n(),
            g.n()
        )));
    }
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| !g.has_edge(a, b)) {
        return Err(Error::InvalidArgument(format!(
            "edge {}-{} is not in the graph",
            g.label(a),
            g.label(b)
        )));
    }
    check_outerplanar(h)?;
    let base = edges.len();
    let n = g.n();
    let bound = if n >= 2 { 2 * n - 3 } else { 0 };
    let mut current = h.clone();
    let mut shortcut = if current.is_connected() { Some(Shortcut::new(&current)?) } else { None };
    for (a, b) in g.edges() {
        if edges.len() >= bound {
            break;
        }
        if current.has_edge(a, b) || shortcut.as_ref().is_some_and(|s| !s.may_add(a, b)) {
            continue;
        }
        edges.push((a, b));
        let candidate = Graph::from_edges_labelled(g.labels().to_vec(), edges.iter().copied());
        if is_outerplanar(&candidate) {
            shortcut = if candidate.is_connected() { Some(Shortcut::new(&candidate)?) } else { None };
            current = candidate;
        } else {
            edges.pop();
        }
    }
    let missing = edges.len() - base;
    let relative = if base + missing == 0 {
        100.0
    } else {
        100.0 * base as f64 / (base + missing) as f64
    };
    Ok(Maximality { missing, relative })
}
