//! Convexity-based core-periphery decomposition: the core is the fixed
//! point of intersecting closures of random vertex sets.

use std::time::{Duration, Instant};

use rand::seq::index::sample;

use crate::error::{Error, Result};
use crate::exact::closure_exact;
use crate::graph::Graph;
use crate::hull::{Ensemble, EnsembleConfig};
use crate::random::{derive_seed, rng};
use crate::vertex_set::VertexSet;

/// Stream of the random vertex sets, kept apart from the subgraph seeds.
const DRAW_STREAM: u64 = 0x636f_7265_0000_0000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoreConfig {
    /// Size of the random sets for exact closures.
    pub k: usize,
    /// Size of the random sets for approximate closures.
    pub l: usize,
    pub ensemble: EnsembleConfig,
    pub max_iterations: usize,
    /// Seed of the random vertex sets.
    pub seed: u64,
}

impl Default for CoreConfig {
    fn default() -> Self {
        CoreConfig {
            k: 10,
            l: 5,
            ensemble: EnsembleConfig::default(),
            max_iterations: 50,
            seed: 0,
        }
    }
}

impl CoreConfig {
    /// Defaults with one master seed for both the sets and the subgraphs.
    pub fn with_seed(seed: u64) -> Self {
        let mut config = CoreConfig {
            seed,
            ..CoreConfig::default()
        };
        config.ensemble.seed = seed;
        config
    }

    pub fn validate(&self) -> Result<()> {
        if self.k == 0 || self.l == 0 {
            return Err(Error::InvalidArgument("k and l must be at least 1".into()));
        }
        if self.max_iterations == 0 {
            return Err(Error::InvalidArgument("max_iterations must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct CoreResult {
    pub core: VertexSet,
    /// Smallest `i` with `C_1 ∩ … ∩ C_i = C_1 ∩ … ∩ C_{i+1}`.
    pub iterations: usize,
    /// `|C_j|` for every closure computed, `i + 1` entries.
    pub closure_sizes: Vec<usize>,
    pub elapsed: Duration,
}

impl CoreResult {
    pub fn periphery(&self) -> VertexSet {
        self.core.complement()
    }
}

fn fixed_point<F>(graph: &Graph, size: usize, config: &CoreConfig, mut closure: F) -> Result<CoreResult>
where
    F: FnMut(&VertexSet) -> VertexSet,
{
    let start = Instant::now();
    let n = graph.n();
    if n == 0 {
        return Err(Error::InvalidArgument("graph has no vertices".into()));
    }
    graph.ensure_connected()?;
    let mut draws = rng(derive_seed(config.seed, DRAW_STREAM));
    let mut draw = || {
        let x = sample(&mut draws, n, size.min(n));
        closure(&VertexSet::from_iter(n, x))
    };
    let first = draw();
    let mut sizes = vec![first.len()];
    let mut running = first;
    for i in 1..=config.max_iterations {
        let next = draw();
        sizes.push(next.len());
        let before = running.len();
        running.intersect_with(&next);
        if running.len() == before {
            return Ok(CoreResult {
                core: running,
                iterations: i,
                closure_sizes: sizes,
                elapsed: start.elapsed(),
            });
        }
    }
    Err(Error::NoFixedPoint {
        iterations: config.max_iterations,
        size: running.len(),
    })
}

/// Core from exact closures of random `k`-sets.
pub fn exact_core(graph: &Graph, config: &CoreConfig) -> Result<CoreResult> {
    config.validate()?;
    fixed_point(graph, config.k, config, |x| closure_exact(graph, x))
}

/// Core from approximate closures of random `l`-sets. One ensemble is
/// sampled per call and reused for every closure.
pub fn approximate_core(graph: &Graph, config: &CoreConfig) -> Result<CoreResult> {
    config.validate()?;
    let start = Instant::now();
    let ensemble = Ensemble::sample(graph, &config.ensemble)?;
    let mut result = approximate_core_with(graph, &ensemble, config)?;
    result.elapsed = start.elapsed();
    Ok(result)
}

/// As [`approximate_core`] with an already sampled ensemble; its vote
/// threshold is taken from `config.ensemble`.
pub fn approximate_core_with(graph: &Graph, ensemble: &Ensemble, config: &CoreConfig) -> Result<CoreResult> {
    config.validate()?;
    config.ensemble.validate()?;
    let need = config.ensemble.min_votes() as u32;
    let n = graph.n();
    fixed_point(graph, config.l, config, |x| {
        let votes = ensemble.votes(x);
        VertexSet::from_iter(n, (0..n).filter(|&v| votes[v] >= need))
    })
}

/// `|A ∩ B| / |A ∪ B|`, 1 for two empty sets.
pub fn jaccard(a: &VertexSet, b: &VertexSet) -> f64 {
    let union = a.union_len(b);
    if union == 0 {
        1.0
    } else {
        a.intersection_len(b) as f64 / union as f64
    }
}
