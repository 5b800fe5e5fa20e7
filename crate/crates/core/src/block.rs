//! Biconnected outerplanar blocks: Hamiltonian cycle recovery, chords and
//! interior faces.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Interior face of a block, as its boundary cycle of global vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub boundary: Vec<u32>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.boundary.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty()
    }

    /// Distance between boundary positions `i` and `j` along the face cycle.
    #[inline]
    pub fn cycle_distance(&self, i: usize, j: usize) -> usize {
        let l = self.len();
        let fwd = (j + l - i) % l;
        fwd.min(l - fwd)
    }

    /// Whether position `p` lies in the closure of positions `{a, b}` on
    /// the face cycle: the whole face when they are antipodal, otherwise
    /// the shorter boundary arc between them.
    #[inline]
    pub fn arc_contains(&self, a: usize, b: usize, p: usize) -> bool {
        let l = self.len();
        let fwd = (b + l - a) % l;
        if 2 * fwd == l {
            return true;
        }
        if fwd < l - fwd {
            (p + l - a) % l <= fwd
        } else {
            (a + l - p) % l <= l - fwd
        }
    }

    fn position(&self, v: u32) -> Result<usize> {
        self.boundary
            .iter()
            .position(|&x| x == v)
            .ok_or_else(|| Error::InvalidArgument(format!("vertex {v} is not on the face")))
    }
}

/// Closure of `{u, w}` inside the face cycle `F`.
pub fn face_closure(face: &Face, u: u32, w: u32) -> Result<Vec<u32>> {
    let a = face.position(u)?;
    let b = face.position(w)?;
    Ok((0..face.len())
        .filter(|&p| face.arc_contains(a, b, p))
        .map(|p| face.boundary[p])
        .collect())
}

/// A biconnected outerplanar component with at least three vertices.
#[derive(Clone, Debug)]
pub struct Block {
    /// Global vertex ids, increasing; local id `i` is `vertices[i]`.
    pub vertices: Vec<u32>,
    /// Hamiltonian cycle, global ids, starting at the smallest vertex.
    pub cycle: Vec<u32>,
    /// Chords as pairs of cycle positions `(i, j)`, `i < j`.
    pub chords: Vec<(u32, u32)>,
    pub faces: Vec<Face>,
    /// The block as a graph on local ids.
    pub local: Graph,
}

impl Block {
    /// Builds a block from its vertex set and edge list (global ids).
    /// Fails with [`Error::NotOuterplanar`] if the edges do not form a
    /// Hamiltonian cycle plus pairwise non-crossing chords.
    pub fn new(mut vertices: Vec<u32>, edges: &[(u32, u32)]) -> Result<Block> {
        vertices.sort_unstable();
        vertices.dedup();
        let k = vertices.len();
        if k < 3 {
            return Err(Error::InvalidArgument("a block needs at least 3 vertices".into()));
        }
        let local_id = |g: u32| vertices.binary_search(&g).expect("edge endpoint in block") as u32;
        let local_edges: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| (local_id(a) as usize, local_id(b) as usize))
            .collect();
        let local = Graph::from_edges(k, local_edges);
        if local.m() > 2 * k - 3 {
            return Err(Error::NotOuterplanar(format!(
                "block with {k} vertices has {} edges",
                local.m()
            )));
        }
        let order = hamiltonian_cycle(&local)?;
        let mut position = vec![0u32; k];
        for (i, &v) in order.iter().enumerate() {
            position[v as usize] = i as u32;
        }
        let mut chords = Vec::with_capacity(local.m() - k);
        for (a, b) in local.edges() {
            let (i, j) = (position[a], position[b]);
            let (i, j) = if i < j { (i, j) } else { (j, i) };
            let on_cycle = j == i + 1 || (i == 0 && j as usize == k - 1);
            if !on_cycle {
                chords.push((i, j));
            }
        }
        if chords.len() + k != local.m() {
            return Err(Error::NotOuterplanar("cycle uses a missing edge".into()));
        }
        chords.sort_unstable();
        let cycle: Vec<u32> = order.iter().map(|&v| vertices[v as usize]).collect();
        let faces = sweep_faces(&cycle, &chords)?;
        Ok(Block {
            vertices,
            cycle,
            chords,
            faces,
            local,
        })
    }

    /// Number of interior faces.
    pub fn face_number(&self) -> usize {
        self.chords.len() + 1
    }

    pub fn local_id(&self, global: u32) -> Option<usize> {
        self.vertices.binary_search(&global).ok()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Interior faces of a cycle with chords, by a stack sweep over cycle
/// positions. At position `p`, each chord `(i, p)` (innermost first) closes
/// the face made of the stacked positions from `i` up to `p`; the stack
/// left at the end is the last face.
pub fn sweep_faces(cycle: &[u32], chords: &[(u32, u32)]) -> Result<Vec<Face>> {
    let k = cycle.len();
    let mut ending: Vec<Vec<u32>> = vec![Vec::new(); k];
    for &(i, j) in chords {
        ending[j as usize].push(i);
    }
    let mut stack: Vec<u32> = Vec::with_capacity(k);
    let mut faces = Vec::with_capacity(chords.len() + 1);
    for p in 0..k as u32 {
        let starts = &mut ending[p as usize];
        starts.sort_unstable_by(|a, b| b.cmp(a));
        for &i in starts.iter() {
            let Some(at) = stack.iter().rposition(|&q| q == i) else {
                return Err(Error::NotOuterplanar(format!(
                    "chord ({}, {}) crosses another chord",
                    cycle[i as usize], cycle[p as usize]
                )));
            };
            let mut boundary: Vec<u32> = stack[at..].iter().map(|&q| cycle[q as usize]).collect();
            boundary.push(cycle[p as usize]);
            faces.push(Face { boundary });
            stack.truncate(at + 1);
        }
        stack.push(p);
    }
    faces.push(Face {
        boundary: stack.iter().map(|&q| cycle[q as usize]).collect(),
    });
    Ok(faces)
}

/// Hamiltonian cycle of a biconnected outerplanar graph by degree-2
/// elimination: removing a degree-2 vertex `v` with neighbors `a`, `b` and
/// adding `ab` keeps the graph biconnected outerplanar, and `v` goes back
/// between `a` and `b`, which are then adjacent on the cycle. Any failure
/// means the graph is not biconnected outerplanar.
///
/// Returns local ids in cycle order, starting at 0 and continuing towards
/// its smaller cycle neighbor.
pub fn hamiltonian_cycle(graph: &Graph) -> Result<Vec<u32>> {
    let k = graph.n();
    let fail = |why: &str| Err(Error::NotOuterplanar(why.to_string()));
    if k < 3 {
        return fail("fewer than 3 vertices");
    }
    let mut adj: Vec<HashSet<u32>> = (0..k)
        .map(|v| graph.neighbors(v).iter().copied().collect())
        .collect();
    let mut removed = vec![false; k];
    let mut queue: Vec<u32> = (0..k as u32).filter(|&v| adj[v as usize].len() == 2).collect();
    let mut removals: Vec<(u32, u32, u32)> = Vec::with_capacity(k);
    let mut alive = k;
    while alive > 3 {
        let Some(v) = queue.pop() else {
            return fail("no vertex of degree 2 left to eliminate");
        };
        let vi = v as usize;
        if removed[vi] || adj[vi].len() != 2 {
            continue;
        }
        let mut it = adj[vi].iter().copied();
        let (a, b) = (it.next().unwrap(), it.next().unwrap());
        adj[a as usize].remove(&v);
        adj[b as usize].remove(&v);
        adj[vi].clear();
        removed[vi] = true;
        alive -= 1;
        adj[a as usize].insert(b);
        adj[b as usize].insert(a);
        removals.push((v, a, b));
        for x in [a, b] {
            match adj[x as usize].len() {
                2 => queue.push(x),
                0 | 1 => return fail("elimination disconnected the block"),
                _ => {}
            }
        }
    }
    let rest: Vec<u32> = (0..k as u32).filter(|&v| !removed[v as usize]).collect();
    let (x, y, z) = (rest[0], rest[1], rest[2]);
    if !(adj[x as usize].contains(&y) && adj[y as usize].contains(&z) && adj[z as usize].contains(&x)) {
        return fail("reduction does not end in a triangle");
    }
    let mut next = vec![u32::MAX; k];
    let mut prev = vec![u32::MAX; k];
    for (a, b) in [(x, y), (y, z), (z, x)] {
        next[a as usize] = b;
        prev[b as usize] = a;
    }
    for &(v, a, b) in removals.iter().rev() {
        let (a, b) = if next[a as usize] == b {
            (a, b)
        } else if next[b as usize] == a {
            (b, a)
        } else {
            return fail("eliminated vertex cannot be reinserted on the cycle");
        };
        next[a as usize] = v;
        prev[v as usize] = a;
        next[v as usize] = b;
        prev[b as usize] = v;
    }
    let forward = next[0] < prev[0];
    let mut order = Vec::with_capacity(k);
    let mut cur = 0u32;
    loop {
        order.push(cur);
        cur = if forward { next[cur as usize] } else { prev[cur as usize] };
        if cur == 0 {
            break;
        }
        if order.len() > k {
            return fail("cycle reconstruction looped");
        }
    }
    if order.len() != k {
        return fail("cycle does not cover the block");
    }
    for i in 0..k {
        let (a, b) = (order[i] as usize, order[(i + 1) % k] as usize);
        if !graph.has_edge(a, b) {
            return fail("cycle uses an edge missing from the block");
        }
    }
    Ok(order)
}
