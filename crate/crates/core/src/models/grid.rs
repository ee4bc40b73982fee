use rayon::prelude::*;

use super::{BlochModel, ModelError, MomentumPoint};
use crate::numkit::{eig_hermitian, EigDecomposition, Matrix};
use crate::scalar::Real;

/// Below this minimum |eigenvalue| a sampled model counts as gapless.
pub const GAPLESS_THRESHOLD: f64 = 1e-6;

/// A model evaluated on the uniform grid `k_n = −π + 2πn/N` per axis.
///
/// `N` is even, so `k ↦ −k` maps the grid onto itself and every TRIM is a
/// grid point. Points are stored with axis 0 slowest. The spectrum of every
/// point is cached.
#[derive(Clone, Debug)]
pub struct SampledBloch<T> {
    name: String,
    dim: usize,
    n: usize,
    values: Vec<Matrix<T>>,
    spectra: Vec<EigDecomposition<T>>,
    min_gap: T,
}

/// Coordinate of grid index `n`, computed as `π·(2n − N)/N` so that the
/// coordinates of `n` and `N − n` are exact negatives of each other.
pub(crate) fn grid_coord<T: Real>(n: usize, size: usize) -> T {
    let m = T::lit(2.0 * n as f64 - size as f64);
    T::PI() * (m / T::lit(size as f64))
}

fn check_grid(n: usize) -> Result<(), ModelError> {
    if n % 2 == 1 {
        return Err(ModelError::NotEven(n));
    }
    if n < 4 {
        return Err(ModelError::GridTooSmall(n));
    }
    Ok(())
}

pub fn sample_grid<T: Real>(model: &BlochModel<T>, n: usize) -> Result<SampledBloch<T>, ModelError> {
    check_grid(n)?;
    let dim = model.dim();
    if !(1..=3).contains(&dim) {
        return Err(ModelError::UnsupportedDimension(dim));
    }
    let total = n.pow(dim as u32);
    let values: Vec<Matrix<T>> = (0..total)
        .into_par_iter()
        .map(|idx| {
            let k = MomentumPoint::new(point_coords::<T>(idx, dim, n));
            model.eval(&k)
        })
        .collect();
    for h in &values {
        if h.rows() != model.bands() || !h.is_square() {
            return Err(ModelError::DimensionMismatch(format!(
                "model `{}` returned a {}x{} matrix, declared {} bands",
                model.name(),
                h.rows(),
                h.cols(),
                model.bands()
            )));
        }
    }
    SampledBloch::assemble(model.name().to_string(), dim, n, values)
}

fn point_coords<T: Real>(idx: usize, dim: usize, n: usize) -> Vec<T> {
    multi_index(idx, dim, n).into_iter().map(|i| grid_coord(i, n)).collect()
}

fn multi_index(mut idx: usize, dim: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; dim];
    for slot in out.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
    out
}

impl<T: Real> SampledBloch<T> {
    /// Wraps precomputed grid values, e.g. a flattened Hamiltonian.
    pub fn from_values(
        name: impl Into<String>,
        dim: usize,
        n: usize,
        values: Vec<Matrix<T>>,
    ) -> Result<Self, ModelError> {
        check_grid(n)?;
        if !(1..=3).contains(&dim) {
            return Err(ModelError::UnsupportedDimension(dim));
        }
        if values.len() != n.pow(dim as u32) {
            return Err(ModelError::DimensionMismatch(format!(
                "{} grid values for a {dim}d grid of size {n}",
                values.len()
            )));
        }
        let bands = values.first().map_or(0, Matrix::rows);
        if values.iter().any(|h| h.rows() != bands || !h.is_square()) {
            return Err(ModelError::DimensionMismatch("grid values differ in shape".into()));
        }
        Self::assemble(name.into(), dim, n, values)
    }

    fn assemble(name: String, dim: usize, n: usize, values: Vec<Matrix<T>>) -> Result<Self, ModelError> {
        let spectra = values.par_iter().map(eig_hermitian).collect::<Result<Vec<_>, _>>()?;
        let min_gap = spectra.iter().flat_map(|e| e.eigenvalues.iter().map(|l| l.abs())).fold(T::infinity(), T::min);
        Ok(Self { name, dim, n, values, spectra, min_gap })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Points per axis.
    pub fn grid_size(&self) -> usize {
        self.n
    }

    pub fn bands(&self) -> usize {
        self.values.first().map_or(0, Matrix::rows)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Matrix<T>] {
        &self.values
    }

    pub fn value(&self, idx: usize) -> &Matrix<T> {
        &self.values[idx]
    }

    pub fn spectrum(&self, idx: usize) -> &EigDecomposition<T> {
        &self.spectra[idx]
    }

    pub fn spectra(&self) -> &[EigDecomposition<T>] {
        &self.spectra
    }

    /// Smallest |eigenvalue| over the grid.
    pub fn min_gap(&self) -> T {
        self.min_gap
    }

    pub fn is_gapless(&self) -> bool {
        self.min_gap < T::lit(GAPLESS_THRESHOLD)
    }

    pub fn point(&self, idx: usize) -> MomentumPoint<T> {
        MomentumPoint::new(point_coords::<T>(idx, self.dim, self.n))
    }

    pub fn shape(&self) -> GridShape {
        GridShape { dim: self.dim, n: self.n }
    }

    pub fn multi_index(&self, idx: usize) -> Vec<usize> {
        self.shape().multi_index(idx)
    }

    pub fn flat_index(&self, multi: &[usize]) -> usize {
        self.shape().flat_index(multi)
    }

    /// Index of `−k` for the point at `idx`.
    pub fn neg_index(&self, idx: usize) -> usize {
        self.shape().neg_index(idx)
    }

    /// Index of the neighbour `delta` steps along `axis`, periodically wrapped.
    pub fn shifted(&self, idx: usize, axis: usize, delta: isize) -> usize {
        self.shape().shifted(idx, axis, delta)
    }

    /// Indices of the 2^d time-reversal invariant momenta (coordinates in {−π, 0}).
    pub fn trim_indices(&self) -> Vec<usize> {
        self.shape().trim_indices()
    }

    /// The same data relabelled by `k ↦ −k`.
    pub fn reflected(&self) -> Self {
        let perm: Vec<usize> = (0..self.len()).map(|i| self.neg_index(i)).collect();
        Self {
            name: format!("refl({})", self.name),
            dim: self.dim,
            n: self.n,
            values: perm.iter().map(|&j| self.values[j].clone()).collect(),
            spectra: perm.iter().map(|&j| self.spectra[j].clone()).collect(),
            min_gap: self.min_gap,
        }
    }
}

/// Index arithmetic on an `N^d` grid stored with axis 0 slowest.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridShape {
    pub dim: usize,
    pub n: usize,
}

impl GridShape {
    pub fn len(&self) -> usize {
        self.n.pow(self.dim as u32)
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn multi_index(&self, idx: usize) -> Vec<usize> {
        multi_index(idx, self.dim, self.n)
    }

    pub fn flat_index(&self, multi: &[usize]) -> usize {
        multi.iter().fold(0, |acc, &i| acc * self.n + i % self.n)
    }

    pub fn neg_index(&self, idx: usize) -> usize {
        let neg: Vec<usize> = self.multi_index(idx).iter().map(|&i| (self.n - i) % self.n).collect();
        self.flat_index(&neg)
    }

    pub fn shifted(&self, idx: usize, axis: usize, delta: isize) -> usize {
        let mut multi = self.multi_index(idx);
        let n = self.n as isize;
        multi[axis] = (multi[axis] as isize + delta).rem_euclid(n) as usize;
        self.flat_index(&multi)
    }

    pub fn trim_indices(&self) -> Vec<usize> {
        (0..(1usize << self.dim))
            .map(|mask| {
                let multi: Vec<usize> =
                    (0..self.dim).map(|a| if mask >> (self.dim - 1 - a) & 1 == 1 { self.n / 2 } else { 0 }).collect();
                self.flat_index(&multi)
            })
            .collect()
    }
}

/// Smallest |eigenvalue| of `H(k)` over the sampled grid.
pub fn min_gap<T: Real>(sampled: &SampledBloch<T>) -> T {
    sampled.min_gap()
}
