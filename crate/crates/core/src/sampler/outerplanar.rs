use std::io::{BufRead, Write};
use std::path::Path;

use super::dfs::{DfsTree, NO_PARENT};
use crate::error::{Error, Result};
use crate::graph::{parse_label_pair, Graph};

/// Role of an edge in a sampled subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeTag {
    Tree,
    Left,
    Right,
}

impl EdgeTag {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeTag::Tree => "T",
            EdgeTag::Left => "L",
            EdgeTag::Right => "R",
        }
    }

    fn parse(tok: &str) -> Option<Self> {
        match tok {
            "T" => Some(EdgeTag::Tree),
            "L" => Some(EdgeTag::Left),
            "R" => Some(EdgeTag::Right),
            _ => None,
        }
    }
}

/// Spanning subgraph made of the DFS tree edges plus left and right back
/// edges. Back edges are stored oriented as `(v, w)` with `w` a proper
/// ancestor of `v`.
#[derive(Clone, Debug)]
pub struct OuterplanarGraph {
    graph: Graph,
    tree: DfsTree,
    left: Vec<(u32, u32)>,
    right: Vec<(u32, u32)>,
}

impl OuterplanarGraph {
    pub(crate) fn from_parts(
        labels: Vec<u64>,
        tree: DfsTree,
        mut left: Vec<(u32, u32)>,
        mut right: Vec<(u32, u32)>,
    ) -> Self {
        left.sort_unstable();
        right.sort_unstable();
        let tree_edges = (0..tree.n()).filter_map(|v| tree.parent(v).map(|p| (p, v)));
        let back = left
            .iter()
            .chain(right.iter())
            .map(|&(v, w)| (v as usize, w as usize));
        let graph = Graph::from_edges_labelled(labels, tree_edges.chain(back).collect::<Vec<_>>());
        OuterplanarGraph {
            graph,
            tree,
            left,
            right,
        }
    }

    /// The subgraph itself, on the same vertex ids and labels as its source.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn tree(&self) -> &DfsTree {
        &self.tree
    }

    pub fn left_edges(&self) -> &[(u32, u32)] {
        &self.left
    }

    pub fn right_edges(&self) -> &[(u32, u32)] {
        &self.right
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    /// Edges with their tags: tree edges as `(parent, child)` by child id,
    /// then left, then right back edges as `(v, w)`.
    pub fn tagged_edges(&self) -> impl Iterator<Item = (usize, usize, EdgeTag)> + '_ {
        let tree = (0..self.tree.n())
            .filter_map(|v| self.tree.parent(v).map(|p| (p, v, EdgeTag::Tree)));
        let left = self
            .left
            .iter()
            .map(|&(v, w)| (v as usize, w as usize, EdgeTag::Left));
        let right = self
            .right
            .iter()
            .map(|&(v, w)| (v as usize, w as usize, EdgeTag::Right));
        tree.chain(left).chain(right)
    }

    /// Writes the tagged edge list. The header comment records the root so
    /// the tree (and thus the orientation of back edges) can be reloaded;
    /// the body is also a valid plain edge list.
    pub fn write_tagged<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        let labels = self.graph.labels();
        writeln!(
            out,
            "# outerplanar nodes={} edges={} root={}",
            self.n(),
            self.m(),
            labels[self.tree.root]
        )?;
        for (a, b, tag) in self.tagged_edges() {
            writeln!(out, "{}\t{}\t{}", labels[a], labels[b], tag.as_str())?;
        }
        Ok(())
    }

    /// Reloads a tagged edge list written by [`OuterplanarGraph::write_tagged`].
    pub fn read_tagged<R: BufRead>(reader: R) -> Result<Self> {
        let mut root_label = None;
        let mut raw: Vec<(u64, u64, EdgeTag)> = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line_no = idx + 1;
            let line = line.map_err(|e| Error::Parse {
                line: line_no,
                message: e.to_string(),
            })?;
            let trimmed = line.trim();
            if let Some(comment) = trimmed.strip_prefix('#') {
                if let Some(root) = comment
                    .split_whitespace()
                    .find_map(|tok| tok.strip_prefix("root="))
                {
                    root_label = Some(root.parse::<u64>().map_err(|_| Error::Parse {
                        line: line_no,
                        message: format!("invalid root label {root:?}"),
                    })?);
                }
                continue;
            }
            let Some((a, b, mut rest)) = parse_label_pair(&line, line_no)? else {
                continue;
            };
            let tag = rest
                .next()
                .and_then(EdgeTag::parse)
                .ok_or_else(|| Error::Parse {
                    line: line_no,
                    message: "expected edge tag T, L or R".into(),
                })?;
            raw.push((a, b, tag));
        }
        let root_label = root_label.ok_or_else(|| Error::Parse {
            line: 1,
            message: "missing root=<label> header".into(),
        })?;

        let mut labels: Vec<u64> = raw.iter().flat_map(|&(a, b, _)| [a, b]).collect();
        labels.push(root_label);
        labels.sort_unstable();
        labels.dedup();
        let id = |l: u64| labels.binary_search(&l).unwrap() as u32;
        let n = labels.len();
        let root = id(root_label) as usize;

        let mut tree_adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        let mut back = Vec::new();
        for &(a, b, tag) in &raw {
            let (a, b) = (id(a), id(b));
            match tag {
                EdgeTag::Tree => {
                    tree_adj[a as usize].push(b);
                    tree_adj[b as usize].push(a);
                }
                side => back.push((a, b, side)),
            }
        }
        let mut parent = vec![NO_PARENT; n];
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in &tree_adj[u] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    parent[w as usize] = u as u32;
                    queue.push_back(w as usize);
                }
            }
        }
        let tree = DfsTree::from_parents(root, parent)?;
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (a, b, side) in back {
            let (v, w) = if tree.precedes(b as usize, a as usize) {
                (a, b)
            } else if tree.precedes(a as usize, b as usize) {
                (b, a)
            } else {
                return Err(Error::InvalidArgument(format!(
                    "back edge {}-{} joins incomparable tree vertices",
                    labels[a as usize], labels[b as usize]
                )));
            };
            match side {
                EdgeTag::Left => left.push((v, w)),
                _ => right.push((v, w)),
            }
        }
        let out = OuterplanarGraph::from_parts(labels.clone(), tree, left, right);
        let expected = raw.len();
        if out.m() != expected {
            return Err(Error::InvalidArgument(format!(
                "tagged edge list has {expected} lines but {} distinct edges",
                out.m()
            )));
        }
        Ok(out)
    }

    pub fn read_tagged_file(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
        Self::read_tagged(std::io::BufReader::new(file))
    }
}
