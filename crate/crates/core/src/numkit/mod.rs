//! Small dense complex linear algebra: Hermitian eigensolver, determinant,
//! Pfaffian, unitarity checks and Pauli tensor strings.
//!
//! All routines are pure functions of their inputs.

mod det;
mod eigen;
mod matrix;
mod pauli;

pub use det::{det, pfaffian};
pub use eigen::{
    eig_hermitian, eig_hermitian_with, sqrt_unitary, unitary_distance, unitary_eig, unitary_part, EigDecomposition,
    JacobiOptions, UnitaryEig,
};
pub use matrix::Matrix;
pub use pauli::{ParsePauliError, Pauli, PauliString};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NumError {
    #[error("matrix is not Hermitian (‖A − A†‖_F = {residual:e})")]
    NotHermitian { residual: f64 },
    #[error("Jacobi iteration did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix has non-finite entries")]
    NonFinite,
    #[error("matrix is not real antisymmetric (residual {residual:e})")]
    NotAntisymmetric { residual: f64 },
    #[error("Pfaffian needs an even dimension, got {0}")]
    OddDimension(usize),
    #[error("matrix is not unitary (‖A†A − I‖_F = {residual:e})")]
    NotUnitary { residual: f64 },
    #[error("matrix is singular")]
    Singular,
}
