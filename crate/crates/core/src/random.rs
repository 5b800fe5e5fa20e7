//! Seed derivation and random graph generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{largest_component, Graph};

/// Mixes `(master, stream)` into an independent 64-bit seed (SplitMix64
/// finalizer over a golden-ratio counter).
pub fn derive_seed(master: u64, stream: u64) -> u64 {
    let mut z = master
        .wrapping_add(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(stream.wrapping_mul(0xBF58_476D_1CE4_E5B9))
        .rotate_left(17)
        ^ stream;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// G(n, p) via geometric edge skipping over the lower triangle
/// (Batagelj and Brandes), expected `O(n + m)`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p), "edge probability {p} outside [0, 1]");
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    if n >= 2 && p > 0.0 {
        if p >= 1.0 {
            for v in 1..n {
                for w in 0..v {
                    edges.push((v, w));
                }
            }
        } else {
            let log_q = (1.0 - p).ln();
            let (mut v, mut w): (usize, i64) = (1, -1);
            while v < n {
                let r: f64 = rng.gen::<f64>();
                let skip = ((1.0 - r).ln() / log_q).floor() as i64;
                w += 1 + skip;
                while v < n && w >= v as i64 {
                    w -= v as i64;
                    v += 1;
                }
                if v < n {
                    edges.push((v, w as usize));
                }
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Connected G(n, p): redraws until connected, giving up after `attempts`
/// tries and returning the largest component of the last draw.
pub fn connected_erdos_renyi(n: usize, p: f64, seed: u64) -> Graph {
    const ATTEMPTS: u64 = 64;
    let mut last = Graph::empty();
    for attempt in 0..ATTEMPTS {
        let g = erdos_renyi(n, p, derive_seed(seed, attempt));
        if g.is_connected() {
            return g;
        }
        last = g;
    }
    largest_component(&last)
}

/// Random recursive tree on `n` vertices: vertex `v` attaches to a uniform
/// earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = rng(seed);
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (v, rng.gen_range(0..v))).collect();
    Graph::from_edges(n, edges)
}
