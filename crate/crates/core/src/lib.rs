//! Link cohesion: an edge score built from 1-, 2- and 3-hop support, a
//! cohesion-weighted graph density, and the MDCore pruning sweep that removes
//! the weakest edges until that density peaks.
//!
//! The crate also carries the pieces needed to put the pruning to work:
//! k-truss decomposition with maximal-community level selection, a Jaccard
//! sparsification baseline, exact edge betweenness, and community-detection
//! scoring against ground truth.
//!
//! ```
//! use linkcohesion::{cohesion, density, graph::Graph};
//!
//! let g = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
//! let scores = cohesion::score_all(&g, cohesion::HopWeights::default()).unwrap();
//! let curve = density::mdcore_sweep(&g, &scores).unwrap();
//! assert_eq!(curve.best_removed, 0);
//! ```

pub mod baselines;
pub mod cohesion;
pub mod density;
mod error;
pub mod eval;
pub mod graph;
pub mod truss;

pub use error::{Error, Result};
pub use graph::{CommunityAssignment, EdgeId, EdgeMask, EdgeRef, Graph, VertexId};
