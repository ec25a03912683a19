//! Arrangements of great circles on the sphere (and great (d-1)-spheres on
//! S^d): construction of the full combinatorial arrangement graph, distances
//! and k-levels, zones, half-interval/half-circle clique counting, and a
//! random great-sphere model with exact quadrature, closed-form bounds, and
//! reproducible parallel Monte Carlo estimators.

pub mod arrangement;
pub mod cliques;
pub mod error;
pub mod geom;
pub mod io;
pub mod levels;
pub mod quad;
pub mod random;
pub mod rng;

pub use error::{Error, Result};
