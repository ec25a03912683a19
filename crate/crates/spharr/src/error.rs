//! Error type shared across the crate.

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A point lies on a circle where a strict side was required.
    #[error("point lies on circle {circle} within tolerance; strict side required")]
    OnCircle { circle: usize },

    /// Central projection is undefined on the equator.
    #[error("point lies on the equator; central projection undefined")]
    OnEquator,

    /// Input violates the simplicity assumptions (parallel normals,
    /// coincident crossings, cells thinner than the interior nudge, ...).
    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("argument out of range: {0}")]
    Range(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("quadrature did not reach tolerance {tol} within {intervals} subintervals")]
    Convergence { tol: f64, intervals: usize },

    #[error("operation budget exceeded: {0}")]
    Budget(String),

    #[error("cannot parse {path}: {message}")]
    Parse { path: PathBuf, message: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
