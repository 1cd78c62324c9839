//! Orthogonal exponential families for the cube and the ball.
//!
//! The cube admits the integer lattice as a spectrum; the ball admits no
//! spectrum at all, because the distances available to an orthogonal family
//! (Bessel-root radii, linearly many up to R) cannot keep up with the
//! distinct distances any candidate spectrum must realize (super-linear in
//! R). This crate evaluates the transforms and zero sets of both domains,
//! checks orthogonality through the difference-set criterion, counts
//! distinct distances exactly, searches for maximal orthogonal families,
//! and tabulates the available-versus-demanded contradiction.

pub mod cli;
pub mod distances;
pub mod domains;
pub mod error;
pub mod ortho;
pub mod points;
pub mod search;
pub mod specfun;

pub use error::{Error, Result};

/// Format a float with 15 significant digits (stable CSV output).
pub(crate) fn fmt15(x: f64) -> String {
    format!("{:.14e}", x)
}

/// Round to 15 significant digits for report fields.
pub(crate) fn round15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    fmt15(x).parse().unwrap_or(x)
}
