//! Immutable undirected simple graphs in compressed adjacency form, plus
//! SNAP edge-list ingestion.
//!
//! Vertex ids are dense (`0..n`). Every graph also carries the original
//! integer label of each vertex; labels are strictly increasing in id order,
//! so sorting by id and sorting by label agree.

use std::collections::{BTreeMap, VecDeque};
use std::io::{BufRead, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
    labels: Vec<u64>,
}

impl Graph {
    /// Builds a graph on vertices `0..n` labelled by their ids. Parallel
    /// edges collapse, self-loops are dropped, and every edge is symmetrized.
    ///
    /// Panics if an endpoint is `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges_labelled((0..n as u64).collect(), edges)
    }

    /// Like [`Graph::from_edges`] with explicit labels, which must be
    /// strictly increasing.
    pub fn from_edges_labelled<I>(labels: Vec<u64>, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        assert!(
            labels.windows(2).all(|w| w[0] < w[1]),
            "labels must be strictly increasing"
        );
        assert!(labels.len() < u32::MAX as usize);
        let n = labels.len();
        let mut pairs: Vec<(u32, u32)> = edges
            .into_iter()
            .filter(|&(u, v)| u != v)
            .map(|(u, v)| {
                assert!(u < n && v < n, "edge ({u}, {v}) out of range for n={n}");
                if u < v {
                    (u as u32, v as u32)
                } else {
                    (v as u32, u as u32)
                }
            })
            .collect();
        pairs.sort_unstable();
        pairs.dedup();

        let mut degree = vec![0usize; n + 1];
        for &(u, v) in &pairs {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = vec![0usize; n + 1];
        for v in 0..n {
            offsets[v + 1] = offsets[v] + degree[v];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0u32; offsets[n]];
        // Pairs are sorted by (u, v): smaller neighbors first, then larger
        // ones, leaves every list sorted.
        for &(u, v) in &pairs {
            targets[fill[v as usize]] = u;
            fill[v as usize] += 1;
        }
        for &(u, v) in &pairs {
            targets[fill[u as usize]] = v;
            fill[u as usize] += 1;
        }
        Graph {
            offsets,
            targets,
            labels,
        }
    }

    pub fn empty() -> Self {
        Graph {
            offsets: vec![0],
            targets: Vec::new(),
            labels: Vec::new(),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&(b as u32)).is_ok()
    }

    #[inline]
    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    /// Dense id of an original label.
    pub fn id_of(&self, label: u64) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .map(|&v| v as usize)
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Component index per vertex (numbered in order of smallest member)
    /// and the number of components.
    pub fn components(&self) -> (Vec<u32>, usize) {
        let n = self.n();
        let mut comp = vec![u32::MAX; n];
        let mut count = 0u32;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if comp[s] != u32::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if comp[w as usize] == u32::MAX {
                        comp[w as usize] = count;
                        queue.push_back(w as usize);
                    }
                }
            }
            count += 1;
        }
        (comp, count as usize)
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.components().1 == 1
    }

    pub fn ensure_connected(&self) -> Result<()> {
        let (_, components) = self.components();
        if self.n() > 0 && components != 1 {
            return Err(Error::NotConnected { components });
        }
        Ok(())
    }

    /// Subgraph induced by `keep`, with ids re-densified in increasing order
    /// and labels carried over.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Graph {
        let mut new_id = vec![u32::MAX; self.n()];
        let mut labels = Vec::with_capacity(keep.len());
        for (i, v) in keep.iter().enumerate() {
            new_id[v] = i as u32;
            labels.push(self.labels[v]);
        }
        let edges = self.edges().filter_map(|(u, v)| {
            let (a, b) = (new_id[u], new_id[v]);
            (a != u32::MAX && b != u32::MAX).then_some((a as usize, b as usize))
        });
        Graph::from_edges_labelled(labels, edges)
    }

    /// Writes the graph in SNAP edge-list form using original labels.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "# Nodes: {} Edges: {}", self.n(), self.m())?;
        for (u, v) in self.edges() {
            writeln!(out, "{}\t{}", self.labels[u], self.labels[v])?;
        }
        Ok(())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.m())
            .finish()
    }
}

/// Parses one data line of an edge list into its first two labels.
/// Returns the remaining tokens of the line as well.
pub(crate) fn parse_label_pair(
    line: &str,
    line_no: usize,
) -> Result<Option<(u64, u64, std::str::SplitWhitespace<'_>)>> {
    let trimmed = line.trim();
    if trimmed.is_empty() || trimmed.starts_with('#') {
        return Ok(None);
    }
    let mut tokens = trimmed.split_whitespace();
    let mut next_label = |what: &str| -> Result<u64> {
        let tok = tokens.next().ok_or_else(|| Error::Parse {
            line: line_no,
            message: format!("missing {what} vertex label"),
        })?;
        tok.parse::<u64>().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("invalid vertex label {tok:?}"),
        })
    };
    let u = next_label("first")?;
    let v = next_label("second")?;
    Ok(Some((u, v, tokens)))
}

/// Reads a SNAP-style edge list: `#` starts a comment line, every other
/// non-blank line holds two whitespace-separated non-negative integer
/// labels (further columns are ignored). Directed inputs are symmetrized.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    let mut raw = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::Parse {
            line: idx + 1,
            message: e.to_string(),
        })?;
        if let Some((u, v, _)) = parse_label_pair(&line, idx + 1)? {
            raw.push((u, v));
        }
    }
    Ok(graph_from_labelled_edges(&raw))
}

pub(crate) fn graph_from_labelled_edges(raw: &[(u64, u64)]) -> Graph {
    let mut labels: Vec<u64> = raw.iter().flat_map(|&(u, v)| [u, v]).collect();
    labels.sort_unstable();
    labels.dedup();
    let id = |l: u64| labels.binary_search(&l).expect("label collected above");
    let edges: Vec<(usize, usize)> = raw.iter().map(|&(u, v)| (id(u), id(v))).collect();
    Graph::from_edges_labelled(labels.clone(), edges)
}

pub fn read_edge_list_file(path: &Path) -> Result<Graph> {
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    parse_edge_list(std::io::BufReader::new(file))
}

/// Induced subgraph on the largest connected component; ties go to the
/// component containing the smallest vertex id.
pub fn largest_component(graph: &Graph) -> Graph {
    if graph.n() == 0 {
        return Graph::empty();
    }
    let (comp, count) = graph.components();
    if count == 1 {
        return graph.clone();
    }
    let mut sizes = vec![0usize; count];
    for &c in &comp {
        sizes[c as usize] += 1;
    }
    // max_by_key returns the last maximum; scan manually to keep the first.
    let mut best = 0;
    for c in 1..count {
        if sizes[c] > sizes[best] {
            best = c;
        }
    }
    let keep = VertexSet::from_iter(
        graph.n(),
        (0..graph.n()).filter(|&v| comp[v] as usize == best),
    );
    graph.induced_subgraph(&keep)
}

/// Histogram of full-graph degrees over the members of `set`.
pub fn degree_distribution(graph: &Graph, set: &VertexSet) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for v in set.iter() {
        *hist.entry(graph.degree(v)).or_insert(0) += 1;
    }
    hist
}
