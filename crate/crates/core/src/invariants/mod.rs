//! Bulk topological invariants of gapped, flattened Bloch Hamiltonians.
//!
//! Conventions: plaquettes are traversed counterclockwise in `(k_x, k_y)`
//! (axis 0, then axis 1); the 3d winding uses `ε^{xyz} = +1`; 1d windings
//! count the phase of `det q` as `k` increases. Results whose raw value lies
//! 0.05 or more from the nearest integer are errors, never guesses.

mod chern;
mod dispatch;
mod flat;
mod winding;
mod z2;

pub use chern::chern_number;
pub use dispatch::{dispatch, Witnesses};
pub use flat::{chiral_block, flatten, ChiralBlock, FlattenedBloch};
pub use winding::{winding_1d, winding_3d};
pub use z2::{class_d_1d_z2, z2_wannier_2d};

use std::fmt;

use serde::Serialize;

use crate::ktable::KTableError;
use crate::models::ModelError;
use crate::numkit::NumError;
use crate::scalar::Real;
use crate::symmetry::{AZClass, RealityConstraint, SymmetryError};

/// Largest accepted distance between a raw invariant and its rounding.
pub const ROUNDING_TOL: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum InvariantError {
    #[error("model is gapless at the Fermi level (min gap {min_gap:e})")]
    GaplessModel { min_gap: f64 },
    #[error("occupied band count varies over the grid ({min}..{max})")]
    InconsistentOccupation { min: usize, max: usize },
    #[error("operator does not anticommute with Q(k) (residual {residual:e})")]
    NotChiral { residual: f64 },
    #[error("chiral eigenspaces have unequal dimensions {plus} and {minus}")]
    OddSplit { plus: usize, minus: usize },
    #[error("link overlap determinant {modulus:e} is too small; refine the grid")]
    SingularOverlap { modulus: f64 },
    #[error("computation did not converge ({reason}; raw {raw}, residual {residual})")]
    NonConvergent { raw: f64, residual: f64, reason: String },
    #[error("chiral block is not smooth on the grid (neighbour distance {distance})")]
    NotSmooth { distance: f64 },
    #[error("integer invariant has no verified reality constraint; refusing to reduce mod 2")]
    NoRealityConstraint,
    #[error("not class D: {0}")]
    NotClassD(String),
    #[error("no usable time-reversal symmetry: {0}")]
    NotTimeReversal(String),
    #[error("occupied band count {0} is odd")]
    OddOccupation(usize),
    #[error("expected a {expected}d model, got {got}d")]
    WrongDimension { expected: usize, got: usize },
    #[error("expected an integer invariant")]
    NotInteger,
    #[error("class {class} needs a {what} witness")]
    MissingWitness { class: AZClass, what: &'static str },
    #[error(transparent)]
    KTable(#[from] KTableError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Num(#[from] NumError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum InvariantKind {
    Integer,
    Mod2,
    Trivial,
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvariantKind::Integer => "Integer",
            InvariantKind::Mod2 => "Mod2",
            InvariantKind::Trivial => "Trivial",
        })
    }
}

/// A computed invariant: the rounded value, the raw number it came from, the
/// grid size, and `|raw − value|`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct InvariantValue {
    pub kind: InvariantKind,
    pub value: i64,
    pub raw: f64,
    #[serde(rename = "grid")]
    pub grid_size: usize,
    pub residual: f64,
}

impl InvariantValue {
    pub fn trivial(grid_size: usize) -> Self {
        Self { kind: InvariantKind::Trivial, value: 0, raw: 0.0, grid_size, residual: 0.0 }
    }

    pub(crate) fn mod2(value: i64, raw: f64, grid_size: usize) -> Self {
        Self { kind: InvariantKind::Mod2, value, raw, grid_size, residual: 0.0 }
    }

    /// Rounds `raw`, refusing results too far from an integer.
    pub(crate) fn integer<T: Real>(raw: T, grid_size: usize, what: &str) -> Result<Self, InvariantError> {
        let raw = raw.to_f64_lossy();
        if !raw.is_finite() {
            return Err(InvariantError::NonConvergent {
                raw,
                residual: f64::NAN,
                reason: format!("{what} is not finite"),
            });
        }
        let value = raw.round();
        let residual = (raw - value).abs();
        if residual >= ROUNDING_TOL {
            return Err(InvariantError::NonConvergent {
                raw,
                residual,
                reason: format!("{what} is not near an integer"),
            });
        }
        Ok(Self { kind: InvariantKind::Integer, value: value as i64, raw, grid_size, residual })
    }
}

/// Reduces an integer invariant mod 2. The reduction is only meaningful when
/// an anti-unitary symmetry constrains the transition function, so the
/// evidence of one is required.
pub fn mod2_reduce(
    v: InvariantValue,
    constraint: Option<&RealityConstraint>,
) -> Result<InvariantValue, InvariantError> {
    if v.kind != InvariantKind::Integer {
        return Err(InvariantError::NotInteger);
    }
    if constraint.is_none() {
        return Err(InvariantError::NoRealityConstraint);
    }
    Ok(InvariantValue { kind: InvariantKind::Mod2, value: v.value.rem_euclid(2), ..v })
}
