//! Geodesic convex hulls in graphs, approximated through closures in
//! sampled outerplanar spanning subgraphs.

pub mod bbtree;
pub mod bfs;
pub mod block;
pub mod core_periphery;
pub mod error;
pub mod exact;
pub mod graph;
pub mod hull;
pub mod io;
pub mod op_closure;
pub mod outerplanarity;
pub mod random;
pub mod sampler;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::Graph;
pub use vertex_set::VertexSet;
pub use core_periphery::{approximate_core, exact_core, jaccard, CoreConfig, CoreResult};
pub use exact::{closure_exact, geodesic_interval};
pub use hull::{approximate_closure, Ensemble, EnsembleConfig};
pub use op_closure::{closure_naive_outerplanar, outerplanar_closure, PreparedOuterplanar};
pub use outerplanarity::{is_outerplanar, maximality_deficit};
pub use sampler::{sample_outerplanar, OuterplanarGraph};
