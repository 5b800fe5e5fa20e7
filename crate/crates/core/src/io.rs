//! Line-oriented file formats: vertex sets, degree histograms and
//! `key=value` records.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Reads one label per line; blank lines and `#` comments are skipped.
pub fn read_vertex_set<R: BufRead>(graph: &Graph, reader: R) -> Result<VertexSet> {
    let mut set = VertexSet::new(graph.n());
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        let token = line.trim();
        if token.is_empty() || token.starts_with('#') {
            continue;
        }
        let label: u64 = token.parse().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("invalid vertex label {token:?}"),
        })?;
        let id = graph.id_of(label).ok_or(Error::UnknownLabel(label))?;
        set.insert(id);
    }
    Ok(set)
}

pub fn read_vertex_set_file(graph: &Graph, path: &Path) -> Result<VertexSet> {
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    read_vertex_set(graph, BufReader::new(file))
}

/// Labels of the set, one per line, ascending.
pub fn write_vertex_set<W: Write>(graph: &Graph, set: &VertexSet, mut out: W) -> std::io::Result<()> {
    for v in set.iter() {
        writeln!(out, "{}", graph.label(v))?;
    }
    Ok(())
}

/// Reads a label list without a graph, for comparing two set files.
pub fn read_label_file(path: &Path) -> Result<Vec<u64>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut labels = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let token = line.trim();
        if token.is_empty() || token.starts_with('#') {
            continue;
        }
        labels.push(token.parse().map_err(|_| Error::Parse {
            line: idx + 1,
            message: format!("invalid vertex label {token:?}"),
        })?);
    }
    labels.sort_unstable();
    labels.dedup();
    Ok(labels)
}

/// `degree,count` rows under a header.
pub fn write_degree_csv<W: Write>(hist: &BTreeMap<usize, usize>, mut out: W) -> std::io::Result<()> {
    writeln!(out, "degree,count")?;
    for (degree, count) in hist {
        writeln!(out, "{degree},{count}")?;
    }
    Ok(())
}

/// Ordered `key=value` record.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Record {
    entries: Vec<(String, String)>,
}

impl Record {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.entries.push((key.to_string(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn write<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for (k, v) in &self.entries {
            writeln!(out, "{k}={v}")?;
        }
        Ok(())
    }

    pub fn parse(text: &str) -> Result<Record> {
        let mut record = Record::new();
        for (idx, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| Error::Parse {
                line: idx + 1,
                message: "expected key=value".into(),
            })?;
            record.push(k, v);
        }
        Ok(record)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_round_trip_and_unknown_label() {
        let g = Graph::from_edges_labelled(vec![10, 20, 30], [(0, 1), (1, 2)]);
        let set = read_vertex_set(&g, "30\n# c\n\n10\n".as_bytes()).unwrap();
        assert_eq!(set.to_vec(), vec![0, 2]);
        let mut buf = Vec::new();
        write_vertex_set(&g, &set, &mut buf).unwrap();
        assert_eq!(buf, b"10\n30\n");
        assert!(matches!(
            read_vertex_set(&g, "40\n".as_bytes()),
            Err(Error::UnknownLabel(40))
        ));
    }

    #[test]
    fn record_round_trip() {
        let mut r = Record::new();
        r.push("mode", "exact").push("size", 12);
        let mut buf = Vec::new();
        r.write(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "mode=exact\nsize=12\n");
        assert_eq!(Record::parse(&text).unwrap(), r);
    }
}
