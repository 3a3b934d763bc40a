//! The per-module identity suites.

pub mod bmw;
pub mod braid;
pub mod bshuffle;
pub mod hecke;
pub mod spectral;
