//! Bloch Hamiltonians on the d-torus, their grid sampling, and the model zoo.

mod grid;
mod terms;
mod zoo;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub use grid::{min_gap, sample_grid, GridShape, SampledBloch, GAPLESS_THRESHOLD};
pub use terms::{PauliTerm, Trig, TrigFactor};
pub use zoo::{make_model, ModelKind};

use crate::numkit::{Matrix, NumError};
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModelError {
    #[error("unknown model `{0}`")]
    UnknownModel(String),
    #[error("missing model parameter `{0}`")]
    MissingParam(String),
    #[error("invalid parameter assignment `{0}`")]
    BadAssignment(String),
    #[error("invalid term `{term}`: {reason}")]
    BadTerm { term: String, reason: String },
    #[error("grid size {0} is too small (need N ≥ 4)")]
    GridTooSmall(usize),
    #[error("grid size {0} is not even")]
    NotEven(usize),
    #[error("spatial dimension {0} is not supported (need 1 ≤ d ≤ 3)")]
    UnsupportedDimension(usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error(transparent)]
    Num(#[from] NumError),
}

/// Point of the Brillouin zone with every coordinate reduced into `[−π, π)`.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentumPoint<T> {
    coords: Vec<T>,
}

impl<T: Real> MomentumPoint<T> {
    pub fn new(coords: impl Into<Vec<T>>) -> Self {
        Self { coords: coords.into().into_iter().map(reduce_angle).collect() }
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// The image under the involution `k ↦ −k`.
    pub fn negated(&self) -> Self {
        Self::new(self.coords.iter().map(|&x| -x).collect::<Vec<_>>())
    }
}

/// Reduces an angle into `[−π, π)`.
pub fn reduce_angle<T: Real>(x: T) -> T {
    let pi = T::PI();
    let two_pi = pi + pi;
    if x >= -pi && x < pi {
        // adding +0 turns −0 into +0
        return x + T::zero();
    }
    let r = x - two_pi * ((x + pi) / two_pi).floor();
    // floor can land one period off at the upper edge after rounding
    if r >= pi {
        r - two_pi
    } else {
        r
    }
}

/// Named real model parameters (`mu`, `t`, `delta`, `m`, ...).
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ModelParams<T>(BTreeMap<String, T>);

impl<T: Real> ModelParams<T> {
    pub fn new() -> Self {
        Self(BTreeMap::new())
    }

    pub fn with(mut self, name: &str, value: T) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    pub fn set(&mut self, name: &str, value: T) {
        self.0.insert(name.to_string(), value);
    }

    pub fn get(&self, name: &str) -> Option<T> {
        self.0.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<T, ModelError> {
        self.get(name).ok_or_else(|| ModelError::MissingParam(name.to_string()))
    }

    pub fn get_or(&self, name: &str, default: T) -> T {
        self.get(name).unwrap_or(default)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, T)> {
        self.0.iter().map(|(k, &v)| (k.as_str(), v))
    }

    /// Parses `name=value` pairs separated by commas, e.g. `mu=0.5,t=1`.
    pub fn parse_assignments(src: &str) -> Result<Self, ModelError> {
        let mut out = Self::new();
        for pair in src.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (name, value) = pair.split_once('=').ok_or_else(|| ModelError::BadAssignment(pair.to_string()))?;
            let value: f64 = value.trim().parse().map_err(|_| ModelError::BadAssignment(pair.to_string()))?;
            if !value.is_finite() || name.trim().is_empty() {
                return Err(ModelError::BadAssignment(pair.to_string()));
            }
            out.set(name.trim(), T::lit(value));
        }
        Ok(out)
    }

    /// Entries of `other` override entries of `self`.
    pub fn merged(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in other.iter() {
            out.set(k, v);
        }
        out
    }
}

type HamiltonianFn<T> = dyn Fn(&[T]) -> Matrix<T> + Send + Sync;

/// A closed-form map from the d-torus to `bands x bands` Hermitian matrices.
#[derive(Clone)]
pub struct BlochModel<T> {
    name: String,
    dim: usize,
    bands: usize,
    params: ModelParams<T>,
    hamiltonian: Arc<HamiltonianFn<T>>,
}

impl<T: Real> BlochModel<T> {
    /// Wraps an arbitrary Hamiltonian. `f` receives reduced coordinates and
    /// must be pure and 2π-periodic in each of them.
    pub fn from_fn(
        name: impl Into<String>,
        dim: usize,
        bands: usize,
        params: ModelParams<T>,
        f: impl Fn(&[T]) -> Matrix<T> + Send + Sync + 'static,
    ) -> Result<Self, ModelError> {
        if !(1..=3).contains(&dim) {
            return Err(ModelError::UnsupportedDimension(dim));
        }
        Ok(Self { name: name.into(), dim, bands, params, hamiltonian: Arc::new(f) })
    }

    /// A linear combination of Pauli strings with trigonometric coefficients.
    pub fn from_terms(
        name: impl Into<String>,
        dim: usize,
        params: ModelParams<T>,
        terms: Vec<PauliTerm<T>>,
    ) -> Result<Self, ModelError> {
        let first = terms.first().ok_or_else(|| ModelError::DimensionMismatch("model has no terms".into()))?;
        let bands = first.pauli.dim();
        for term in &terms {
            if term.pauli.dim() != bands {
                return Err(ModelError::DimensionMismatch(format!(
                    "term `{}` acts on {} bands, expected {bands}",
                    term.pauli,
                    term.pauli.dim()
                )));
            }
            if let Some(axis) = term.max_axis() {
                if axis >= dim {
                    return Err(ModelError::DimensionMismatch(format!(
                        "term references momentum axis {axis} in a {dim}d model"
                    )));
                }
            }
        }
        Self::from_fn(name, dim, bands, params, move |k| terms::assemble(&terms, bands, k))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bands(&self) -> usize {
        self.bands
    }

    pub fn params(&self) -> &ModelParams<T> {
        &self.params
    }

    pub fn eval(&self, k: &MomentumPoint<T>) -> Matrix<T> {
        debug_assert_eq!(k.dim(), self.dim);
        (self.hamiltonian)(k.coords())
    }

    /// Evaluates at raw coordinates, reducing them first.
    pub fn eval_at(&self, coords: &[T]) -> Matrix<T> {
        self.eval(&MomentumPoint::new(coords.to_vec()))
    }

    /// Block-diagonal `H_a(k) ⊕ H_b(k)`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, ModelError> {
        if self.dim != other.dim {
            return Err(ModelError::DimensionMismatch(format!(
                "cannot add a {}d model to a {}d model",
                self.dim, other.dim
            )));
        }
        let (a, b) = (self.hamiltonian.clone(), other.hamiltonian.clone());
        Self::from_fn(
            format!("{}+{}", self.name, other.name),
            self.dim,
            self.bands + other.bands,
            self.params.merged(&other.params),
            move |k| a(k).direct_sum(&b(k)),
        )
    }

    /// `H'(k) = conj(H(k))`.
    pub fn conjugated(&self) -> Self {
        let h = self.hamiltonian.clone();
        Self { name: format!("conj({})", self.name), hamiltonian: Arc::new(move |k| h(k).conj()), ..self.clone() }
    }

    /// `H'(k) = H(−k)`.
    pub fn reflected(&self) -> Self {
        let h = self.hamiltonian.clone();
        Self {
            name: format!("refl({})", self.name),
            hamiltonian: Arc::new(move |k| {
                let neg = MomentumPoint::new(k.iter().map(|&x| -x).collect::<Vec<_>>());
                h(neg.coords())
            }),
            ..self.clone()
        }
    }

    /// `H'(k) = U H(k) U†` for a constant unitary `U`.
    pub fn rotated(&self, u: &Matrix<T>) -> Result<Self, ModelError> {
        if u.rows() != self.bands || !u.is_square() {
            return Err(ModelError::DimensionMismatch(format!(
                "basis change is {}x{}, model has {} bands",
                u.rows(),
                u.cols(),
                self.bands
            )));
        }
        let h = self.hamiltonian.clone();
        let (u, ud) = (u.clone(), u.adjoint());
        Ok(Self {
            name: format!("rot({})", self.name),
            hamiltonian: Arc::new(move |k| &(&u * &h(k)) * &ud),
            ..self.clone()
        })
    }
}

impl<T: Real> fmt::Debug for BlochModel<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BlochModel")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .field("bands", &self.bands)
            .field("params", &self.params)
            .finish()
    }
}
