//! Simulator for the multi-self-loop lackadaisical quantum walk with partial
//! phase inversion on the n-dimensional hypercube.
//!
//! The modules build on one another:
//!
//! - [`hypercube`]: vertex labels and bit-level adjacency
//! - [`weights`]: self-loop weight schemes and the coin parameters
//! - [`walk`]: state preparation, oracle, coin, shift and the walk loop
//! - [`sampling`]: marked-vertex sets for the two experiment scenarios
//! - [`experiments`]: sweeps, summaries and scaling fits
//! - [`reference`]: dense-matrix operators used as a test oracle

pub mod error;
pub mod experiments;
pub mod hypercube;
pub mod reference;
pub mod sampling;
pub mod walk;
pub mod weights;

pub use error::{Error, Result};
pub use hypercube::{hamming_distance, is_adjacent, HypercubeDims, VertexId};
pub use walk::{OracleSpec, StateVector, WalkResult};
pub use weights::{compute_weight, make_coin_spec, CoinSpec, WeightScheme};
