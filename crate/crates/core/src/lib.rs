//! Quantum revivals and superrevivals of wavepackets in a finite square well,
//! with a cubic anharmonic oscillator as an analytically tractable companion.
//!
//! Times are scaled by the infinite-well revival time `T_rv = 4 m L^2 / (pi hbar)`
//! and positions by the well length, so the well strength `epsilon` is the only
//! parameter of the well.

// `!(x > 0.0)` style guards are kept on purpose: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod anharmonic;
pub mod cli;
pub mod error;
pub mod quadrature;
pub mod revival;
pub mod roots;
pub mod scenario;
pub mod special;
pub mod spectrum;
pub mod wavepacket;

pub use error::{Error, Result};
