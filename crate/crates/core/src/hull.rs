//! Approximate geodesic closure by voting over closures in sampled
//! outerplanar spanning subgraphs.

use std::io::Write;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::op_closure::PreparedOuterplanar;
use crate::random::derive_seed;
use crate::sampler::sample_outerplanar;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnsembleConfig {
    /// Number of sampled subgraphs `N`.
    pub num_subgraphs: usize,
    /// Vote threshold `t` in percent of `N`, `0 < t ≤ 100`.
    pub threshold: f64,
    pub seed: u64,
}

impl Default for EnsembleConfig {
    fn default() -> Self {
        EnsembleConfig {
            num_subgraphs: 100,
            threshold: 1.0,
            seed: 0,
        }
    }
}

impl EnsembleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.num_subgraphs == 0 {
            return Err(Error::InvalidArgument("number of subgraphs must be at least 1".into()));
        }
        if !(self.threshold > 0.0 && self.threshold <= 100.0) {
            return Err(Error::InvalidArgument(format!(
                "threshold {} is outside (0, 100]",
                self.threshold
            )));
        }
        Ok(())
    }

    /// Smallest vote count that passes: `⌈t·N/100⌉`. Products within
    /// `1e-9` of an integer count as that integer, so `t = 7, N = 100`
    /// needs 7 votes despite rounding in `0.07 * 100`.
    pub fn min_votes(&self) -> usize {
        let raw = self.threshold * self.num_subgraphs as f64 / 100.0;
        let nearest = raw.round();
        let votes = if (raw - nearest).abs() < 1e-9 { nearest } else { raw.ceil() };
        (votes as usize).max(1)
    }
}

/// Summary of one sampled subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleInfo {
    pub seed: u64,
    pub edges: usize,
    pub face_number: usize,
}

/// `N` sampled outerplanar subgraphs, prepared for closure queries.
pub struct Ensemble {
    config: EnsembleConfig,
    n: usize,
    members: Vec<PreparedOuterplanar>,
    info: Vec<SampleInfo>,
}

impl Ensemble {
    /// Samples subgraph `i` with seed `derive_seed(config.seed, i)`, in
    /// parallel on the current rayon pool.
    pub fn sample(graph: &Graph, config: &EnsembleConfig) -> Result<Ensemble> {
        config.validate()?;
        let built: Vec<(PreparedOuterplanar, SampleInfo)> = (0..config.num_subgraphs as u64)
            .into_par_iter()
            .map(|i| {
                let seed = derive_seed(config.seed, i);
                let h = sample_outerplanar(graph, seed)?;
                let prepared = PreparedOuterplanar::new(h.graph())?;
                let info = SampleInfo {
                    seed,
                    edges: h.m(),
                    face_number: prepared.face_number(),
                };
                Ok((prepared, info))
            })
            .collect::<Result<_>>()?;
        let (members, info) = built.into_iter().unzip();
        Ok(Ensemble {
            config: *config,
            n: graph.n(),
            members,
            info,
        })
    }

    pub fn config(&self) -> &EnsembleConfig {
        &self.config
    }

    pub fn samples(&self) -> &[SampleInfo] {
        &self.info
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Number of subgraphs whose closure of `x` contains each vertex.
    pub fn votes(&self, x: &VertexSet) -> Vec<u32> {
        assert_eq!(x.universe(), self.n, "vertex set over a different graph");
        self.members
            .par_iter()
            .fold(
                || vec![0u32; self.n],
                |mut acc, member| {
                    for v in member.closure(x).iter() {
                        acc[v] += 1;
                    }
                    acc
                },
            )
            .reduce(
                || vec![0u32; self.n],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            )
    }

    /// Vertices with at least [`EnsembleConfig::min_votes`] votes.
    pub fn approximate_closure(&self, x: &VertexSet) -> VertexSet {
        self.select(&self.votes(x))
    }

    pub fn select(&self, votes: &[u32]) -> VertexSet {
        let need = self.config.min_votes() as u32;
        VertexSet::from_iter(self.n, (0..self.n).filter(|&v| votes[v] >= need))
    }
}

/// Samples an ensemble and returns the approximate closure of `x`.
pub fn approximate_closure(graph: &Graph, x: &VertexSet, config: &EnsembleConfig) -> Result<VertexSet> {
    Ok(Ensemble::sample(graph, config)?.approximate_closure(x))
}

/// `label,votes` per vertex, in id order, with a header line.
pub fn write_votes_csv<W: Write>(graph: &Graph, votes: &[u32], mut out: W) -> std::io::Result<()> {
    writeln!(out, "label,votes")?;
    for (v, &count) in votes.iter().enumerate() {
        writeln!(out, "{},{}", graph.label(v), count)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::closure_exact;

    fn config(n: usize, t: f64) -> EnsembleConfig {
        EnsembleConfig {
            num_subgraphs: n,
            threshold: t,
            seed: 3,
        }
    }

    #[test]
    fn vote_threshold_rounds_up() {
        assert_eq!(config(100, 1.0).min_votes(), 1);
        assert_eq!(config(100, 7.0).min_votes(), 7);
        assert_eq!(config(30, 10.0).min_votes(), 3);
        assert_eq!(config(30, 11.0).min_votes(), 4);
        assert_eq!(config(1, 0.5).min_votes(), 1);
        assert_eq!(config(10, 100.0).min_votes(), 10);
    }

    #[test]
    fn rejects_bad_config() {
        assert!(config(0, 1.0).validate().is_err());
        assert!(config(5, 0.0).validate().is_err());
        assert!(config(5, 100.5).validate().is_err());
        assert!(config(5, f64::NAN).validate().is_err());
    }

    #[test]
    fn tree_input_gives_exact_closure() {
        let t = crate::random::random_tree(40, 8);
        let x = VertexSet::from_iter(40, [3, 17, 29]);
        let approx = approximate_closure(&t, &x, &config(5, 50.0)).unwrap();
        assert_eq!(approx, closure_exact(&t, &x));
    }

    #[test]
    fn tightening_threshold_shrinks_result() {
        let g = crate::random::connected_erdos_renyi(80, 0.08, 2);
        let ens = Ensemble::sample(&g, &config(20, 1.0)).unwrap();
        let x = VertexSet::from_iter(80, [1, 30, 55, 70]);
        let votes = ens.votes(&x);
        let mut prev: Option<VertexSet> = None;
        for t in [1.0, 10.0, 50.0, 100.0] {
            let need = config(20, t).min_votes() as u32;
            let cur = VertexSet::from_iter(80, (0..80).filter(|&v| votes[v] >= need));
            assert!(x.is_subset(&cur));
            if let Some(p) = &prev {
                assert!(cur.is_subset(p));
            }
            prev = Some(cur);
        }
    }
}
