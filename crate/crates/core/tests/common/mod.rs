//! Independent reference implementations used as test oracles.
#![allow(dead_code)]

use geohull::graph::Graph;
use geohull::sampler::{DfsPath, DfsTree, OuterplanarGraph};
use geohull::vertex_set::VertexSet;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rustworkx_core::petgraph::graph::UnGraph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    geohull::random::rng(seed)
}

/// Outerplanar iff planar after adding one vertex adjacent to everything.
pub fn is_outerplanar_oracle(g: &Graph) -> bool {
    let n = g.n() as u32;
    let mut edges: Vec<(u32, u32)> = g.edges().map(|(a, b)| (a as u32, b as u32)).collect();
    edges.extend((0..n).map(|v| (v, n)));
    let mut pg: UnGraph<(), ()> = UnGraph::with_capacity(g.n() + 1, edges.len());
    for _ in 0..=n {
        pg.add_node(());
    }
    for (a, b) in edges {
        pg.add_edge(a.into(), b.into(), ());
    }
    rustworkx_core::planar::is_planar(&pg)
}

pub const INF: u32 = u32::MAX / 4;

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
        for &w in g.neighbors(v) {
            row[w as usize] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// Vertices on some shortest `u`-`v` path, by enumerating every simple
/// path of length `d(u, v)` from `u`.
pub fn interval_by_enumeration(g: &Graph, u: usize, v: usize, dist: &[Vec<u32>]) -> Vec<usize> {
    let target = dist[u][v];
    let mut hit = vec![false; g.n()];
    if target == INF {
        return Vec::new();
    }
    let mut path = vec![u];
    let mut on_path = vec![false; g.n()];
    on_path[u] = true;
    fn walk(
        g: &Graph,
        v: usize,
        target: u32,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        hit: &mut [bool],
    ) {
        let here = *path.last().unwrap();
        if path.len() as u32 - 1 == target {
            if here == v {
                for &x in path.iter() {
                    hit[x] = true;
                }
            }
            return;
        }
        for &w in g.neighbors(here) {
            let w = w as usize;
            if !on_path[w] {
                on_path[w] = true;
                path.push(w);
                walk(g, v, target, path, on_path, hit);
                path.pop();
                on_path[w] = false;
            }
        }
    }
    walk(g, v, target, &mut path, &mut on_path, &mut hit);
    (0..g.n()).filter(|&x| hit[x]).collect()
}

/// Iterates `X ← ⋃_{u,v ∈ X} I(u, v)` to a fixed point, from an all-pairs
/// distance matrix.
pub fn pairwise_fixpoint(dist: &[Vec<u32>], x: &VertexSet) -> VertexSet {
    let n = dist.len();
    let mut cur = x.clone();
    loop {
        let members = cur.to_vec();
        let mut next = cur.clone();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                for z in 0..n {
                    if dist[u][z] + dist[z][v] == dist[u][v] {
                        next.insert(z);
                    }
                }
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// One round of pairwise intervals.
pub fn pairwise_union(dist: &[Vec<u32>], x: &VertexSet) -> VertexSet {
    let n = dist.len();
    let members = x.to_vec();
    let mut out = x.clone();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            for z in 0..n {
                if dist[u][z] + dist[z][v] == dist[u][v] {
                    out.insert(z);
                }
            }
        }
    }
    out
}

pub fn is_closed(dist: &[Vec<u32>], x: &VertexSet) -> bool {
    pairwise_union(dist, x) == *x
}

pub fn random_subset<R: Rng>(rng: &mut R, n: usize, size: usize) -> VertexSet {
    let ids = rand::seq::index::sample(rng, n, size.min(n));
    VertexSet::from_iter(n, ids)
}

/// Sampler following the pseudocode line by line: no stack, every update
/// of an accepted edge walks the whole open tree interval.
pub type EdgeList = Vec<(u32, u32)>;

pub fn literal_sample(g: &Graph, tree: &DfsTree, paths: &[DfsPath]) -> (EdgeList, EdgeList) {
    const L: usize = 0;
    const R: usize = 1;
    let n = g.n();
    let mut reach = vec![[true, true]; n];
    let mut sigma = vec![[false, false]; n];
    let mut up = vec![[0u32, 0u32]; n];
    let mut out: [Vec<(u32, u32)>; 2] = [Vec::new(), Vec::new()];
    let parent = |v: usize| tree.parent[v] as usize;
    for path in paths {
        let verts: Vec<usize> = path.vertices(tree).collect();
        let ri = verts[0];
        reach[ri] = [true, true];
        for d in [R, L] {
            up[ri][d] = if sigma[ri][d] || ri == tree.root {
                tree.depth[ri]
            } else {
                up[parent(ri)][d]
            };
        }
        for &v in &verts[1..] {
            reach[v] = [true, true];
            up[v] = up[parent(v)];
            let f: Vec<usize> = g
                .neighbors(v)
                .iter()
                .map(|&w| w as usize)
                .filter(|&w| w != parent(v) && tree.precedes(w, v))
                .collect();
            let mut e: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
            for d in [L, R] {
                for &w in &f {
                    if reach[w][d] && up[v][d] <= tree.depth[w] {
                        e[d].push(w);
                    }
                }
            }
            let (x, y) = if e[R].len() > e[L].len() { (R, L) } else { (L, R) };
            if !e[x].is_empty() {
                up[v][y] = tree.depth[parent(v)];
                for &w in &e[x] {
                    let mut z = parent(v);
                    while z != w {
                        reach[z][x] = false;
                        up[z][y] = tree.depth[z];
                        sigma[z][x] = true;
                        z = parent(z);
                    }
                    out[x].push((v as u32, w as u32));
                }
            }
        }
    }
    let [mut l, mut r] = out;
    l.sort_unstable();
    r.sort_unstable();
    (l, r)
}

fn lca(tree: &DfsTree, mut a: usize, mut b: usize) -> usize {
    while tree.depth[a] > tree.depth[b] {
        a = tree.parent[a] as usize;
    }
    while tree.depth[b] > tree.depth[a] {
        b = tree.parent[b] as usize;
    }
    while a != b {
        a = tree.parent[a] as usize;
        b = tree.parent[b] as usize;
    }
    a
}

/// Checks the two structural properties of same-side and opposite-side
/// back edge pairs. Returns a description of the first violation.
pub fn check_side_structure(h: &OuterplanarGraph) -> Result<(), String> {
    let t = h.tree();
    let sides = [h.left_edges(), h.right_edges()];
    for (s, edges) in sides.iter().enumerate() {
        for (i, &(v1, w1)) in edges.iter().enumerate() {
            let (v1, w1) = (v1 as usize, w1 as usize);
            if !t.precedes(w1, v1) || t.depth[v1] < t.depth[w1] + 2 {
                return Err(format!("side {s}: ({v1},{w1}) is not a back edge of length >= 2"));
            }
            for (j, &(v2, w2)) in edges.iter().enumerate() {
                if i == j {
                    continue;
                }
                let (v2, w2) = (v2 as usize, w2 as usize);
                // Some y with w2 ≺ y ⪯ v1 and y ⪯ v2 exists iff w2 ≺ lca.
                if !t.precedes(w2, lca(t, v1, v2)) {
                    continue;
                }
                if t.precedes(w1, w2) && !t.precedes_eq(v2, v1) {
                    return Err(format!("side {s}: ({v1},{w1}) and ({v2},{w2}) cross"));
                }
                if w1 == w2 && !(t.precedes(v1, v2) || t.precedes(v2, v1)) {
                    return Err(format!("side {s}: ({v1},{w1}) and ({v2},{w2}) share an end but branch"));
                }
            }
        }
        for &(va, wa) in edges.iter() {
            for &(vb, wb) in sides[1 - s].iter() {
                if t.precedes_eq(va as usize, vb as usize) && t.precedes_eq(wb as usize, wa as usize) {
                    return Err(format!("({va},{wa}) is enclosed by ({vb},{wb}) on the other side"));
                }
            }
        }
    }
    Ok(())
}

/// Random biconnected outerplanar graph: a `k`-cycle with `chords`
/// non-crossing chords, vertex ids shuffled. Returns the graph and its
/// number of interior faces.
pub fn random_block<R: Rng>(rng: &mut R, k: usize, chords: usize) -> (Graph, usize) {
    assert!(k >= 3);
    let mut faces: Vec<Vec<usize>> = vec![(0..k).collect()];
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let mut added = 0;
    while added < chords {
        let splittable: Vec<usize> = (0..faces.len()).filter(|&f| faces[f].len() >= 4).collect();
        let Some(&f) = splittable.choose(rng) else { break };
        let face = faces.swap_remove(f);
        let len = face.len();
        let i = rng.gen_range(0..len);
        let off = rng.gen_range(2..=len - 2);
        let j = (i + off) % len;
        let (a, b) = (i.min(j), i.max(j));
        edges.push((face[a], face[b]));
        faces.push(face[a..=b].to_vec());
        let mut other = face[b..].to_vec();
        other.extend_from_slice(&face[..=a]);
        faces.push(other);
        added += 1;
    }
    let mut perm: Vec<usize> = (0..k).collect();
    perm.shuffle(rng);
    let g = Graph::from_edges(k, edges.into_iter().map(|(a, b)| (perm[a], perm[b])));
    (g, added + 1)
}

/// Random outerplanar graph: random blocks and bridges glued along a
/// random tree.
pub fn random_outerplanar<R: Rng>(rng: &mut R, parts: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut n = 1usize;
    for _ in 0..parts {
        let attach = rng.gen_range(0..n);
        if rng.gen_bool(0.3) {
            edges.push((attach, n));
            n += 1;
        } else {
            let k = rng.gen_range(3..10);
            let chords = rng.gen_range(0..k - 2);
            let (b, _) = random_block(rng, k, chords);
            // Block vertex 0 is glued onto `attach`.
            let map = |v: usize| if v == 0 { attach } else { n + v - 1 };
            edges.extend(b.edges().map(|(x, y)| (map(x), map(y))));
            n += k - 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Greedy extension of `h` inside `g` with one planarity test per
/// candidate edge; returns the number of edges added.
pub fn greedy_extension(g: &Graph, h: &Graph) -> usize {
    let mut edges: Vec<(usize, usize)> = h.edges().collect();
    let base = edges.len();
    for (a, b) in g.edges() {
        if h.has_edge(a, b) {
            continue;
        }
        edges.push((a, b));
        if !is_outerplanar_oracle(&Graph::from_edges(g.n(), edges.iter().copied())) {
            edges.pop();
        }
    }
    edges.len() - base
}
