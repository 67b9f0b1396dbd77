//! Exact character-reduced bounds for weight-threshold Cayley graphs on `C_m^n`.
//!
//! The crate covers the chain of objects needed to certify orthogonal-rank
//! bounds for the graphs `H_m^n(d)`:
//!
//! - [`group_core`]: elements, characters and the Fourier transform on `C_m^n`,
//! - [`cayley`]: the weight-band connection sets and complements,
//! - [`bochner`]: the two equivalent positive-semidefiniteness tests,
//! - [`embedding`]: symmetric orthogonal embeddings and the minimal-support oracle,
//! - [`ratlp`]: an exact rational simplex with dual certificates,
//! - [`theta`]: Lovász theta through the Fourier LP and its Krawtchouk reduction,
//! - [`interp`]: the Lagrange-interpolation certificate bounding the LP value.

pub mod bochner;
pub mod cayley;
pub mod embedding;
mod error;
pub mod group_core;
pub mod guard;
pub mod interp;
pub mod ratlp;
pub mod theta;

pub use error::{Error, Result};
pub use ratlp::Rational;
