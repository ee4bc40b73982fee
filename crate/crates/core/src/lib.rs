//! Tenfold-way band topology: symmetry classification of gapped Bloch
//! Hamiltonians, the KR/KO group tables, and numerical bulk invariants.
//!
//! Everything is generic over the real scalar (`f32` or `f64`); the aliases
//! below fix it to `f64`.

pub mod invariants;
pub mod ktable;
pub mod models;
pub mod numkit;
pub mod scalar;
pub mod symmetry;

pub use scalar::Real;

pub type CMatrix = numkit::Matrix<f64>;
pub type Model = models::BlochModel<f64>;
pub type Sampled = models::SampledBloch<f64>;
pub type Params = models::ModelParams<f64>;
