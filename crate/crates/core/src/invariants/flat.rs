use num_complex::Complex;

use super::InvariantError;
use crate::models::{GridShape, SampledBloch, GAPLESS_THRESHOLD};
use crate::numkit::{eig_hermitian, unitary_distance, Matrix};
use crate::scalar::Real;
use crate::symmetry::{Sign, UnitaryOp};

const FLAT_TOL: f64 = 1e-8;

/// The spectrally flattened grid `Q(k) = 1 − 2P(k)` together with an
/// orthonormal frame of the occupied subspace at every point.
#[derive(Clone, Debug)]
pub struct FlattenedBloch<T> {
    name: String,
    shape: GridShape,
    q: Vec<Matrix<T>>,
    frames: Vec<Matrix<T>>,
    n_occ: usize,
}

/// Flattens every grid point at Fermi level `fermi`: bands below it become
/// `−1`, bands above it `+1`.
pub fn flatten<T: Real>(sampled: &SampledBloch<T>, fermi: T) -> Result<FlattenedBloch<T>, InvariantError> {
    let gap = sampled
        .spectra()
        .iter()
        .flat_map(|e| e.eigenvalues.iter().map(move |&l| (l - fermi).abs()))
        .fold(T::infinity(), T::min);
    if gap < T::lit(GAPLESS_THRESHOLD) {
        return Err(InvariantError::GaplessModel { min_gap: gap.to_f64_lossy() });
    }
    let occ: Vec<usize> =
        sampled.spectra().iter().map(|e| e.eigenvalues.iter().filter(|&&l| l < fermi).count()).collect();
    let (min, max) = (occ.iter().copied().min().unwrap_or(0), occ.iter().copied().max().unwrap_or(0));
    if min != max {
        return Err(InvariantError::InconsistentOccupation { min, max });
    }
    let n_occ = min;
    let bands = sampled.bands();
    let signs: Vec<T> = (0..bands).map(|i| if i < n_occ { -T::one() } else { T::one() }).collect();
    let mut q = Vec::with_capacity(sampled.len());
    let mut frames = Vec::with_capacity(sampled.len());
    for e in sampled.spectra() {
        let v = &e.eigenvectors;
        let qk = &(v * &Matrix::from_diagonal(&signs)) * &v.adjoint();
        let residual = (&qk * &qk).distance(&Matrix::identity(bands));
        if residual >= T::tol(FLAT_TOL) {
            return Err(InvariantError::NonConvergent {
                raw: residual.to_f64_lossy(),
                residual: residual.to_f64_lossy(),
                reason: "flattened Q(k) does not square to 1".into(),
            });
        }
        q.push(qk);
        frames.push(v.select_columns(&(0..n_occ).collect::<Vec<_>>()));
    }
    Ok(FlattenedBloch { name: sampled.name().to_string(), shape: sampled.shape(), q, frames, n_occ })
}

impl<T: Real> FlattenedBloch<T> {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn shape(&self) -> GridShape {
        self.shape
    }

    pub fn dim(&self) -> usize {
        self.shape.dim
    }

    pub fn grid_size(&self) -> usize {
        self.shape.n
    }

    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }

    pub fn bands(&self) -> usize {
        self.q.first().map_or(0, Matrix::rows)
    }

    pub fn n_occ(&self) -> usize {
        self.n_occ
    }

    pub fn q(&self, idx: usize) -> &Matrix<T> {
        &self.q[idx]
    }

    pub fn qs(&self) -> &[Matrix<T>] {
        &self.q
    }

    /// Orthonormal occupied frame (`bands x n_occ`) at `idx`.
    pub fn frame(&self, idx: usize) -> &Matrix<T> {
        &self.frames[idx]
    }

    /// Occupied projector `(1 − Q)/2`.
    pub fn projector(&self, idx: usize) -> Matrix<T> {
        let id = Matrix::identity(self.bands());
        (&id - &self.q[idx]).scale_real(T::lit(0.5))
    }

    /// Replaces each occupied frame `V(k)` by `V(k)·U(k)` for unitaries
    /// `U(k)` of size `n_occ`. `Q` is unchanged.
    pub fn regauge(&self, mut u: impl FnMut(usize) -> Matrix<T>) -> Self {
        let frames = self.frames.iter().enumerate().map(|(i, v)| v * &u(i)).collect();
        Self { frames, ..self.clone() }
    }

    /// The flattened grid viewed as a sampled Hamiltonian.
    pub fn to_sampled(&self) -> Result<SampledBloch<T>, InvariantError> {
        Ok(SampledBloch::from_values(format!("flat({})", self.name), self.shape.dim, self.shape.n, self.q.clone())?)
    }
}

/// Off-diagonal unitary block `q(k)` of a chirally symmetric flattened
/// Hamiltonian, `Q = [[0, q], [q†, 0]]` in the eigenbasis of `S`.
#[derive(Clone, Debug)]
pub struct ChiralBlock<T> {
    shape: GridShape,
    q: Vec<Matrix<T>>,
}

impl<T: Real> ChiralBlock<T> {
    /// Wraps a grid of unitaries, checking unitarity to 1e−8.
    pub fn from_blocks(shape: GridShape, q: Vec<Matrix<T>>) -> Result<Self, InvariantError> {
        if q.len() != shape.len() {
            return Err(InvariantError::WrongDimension { expected: shape.len(), got: q.len() });
        }
        for block in &q {
            let d = if block.is_square() { unitary_distance(block) } else { T::infinity() };
            if d >= T::tol(FLAT_TOL) {
                return Err(InvariantError::NonConvergent {
                    raw: d.to_f64_lossy(),
                    residual: d.to_f64_lossy(),
                    reason: "chiral block is not unitary".into(),
                });
            }
        }
        Ok(Self { shape, q })
    }

    pub fn shape(&self) -> GridShape {
        self.shape
    }

    pub fn dim(&self) -> usize {
        self.shape.dim
    }

    pub fn grid_size(&self) -> usize {
        self.shape.n
    }

    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }

    pub fn block(&self, idx: usize) -> &Matrix<T> {
        &self.q[idx]
    }

    pub fn blocks(&self) -> &[Matrix<T>] {
        &self.q
    }

    /// `q_a(k) ⊕ q_b(k)`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, InvariantError> {
        if self.shape != other.shape {
            return Err(InvariantError::WrongDimension { expected: self.len(), got: other.len() });
        }
        let q = self.q.iter().zip(&other.q).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(Self { shape: self.shape, q })
    }
}

/// Reads off `q(k) = V₊† Q(k) V₋` where `V±` span the `±1` eigenspaces of
/// `S` (of `iS` when `S² = −1`).
pub fn chiral_block<T: Real>(flat: &FlattenedBloch<T>, s: &UnitaryOp<T>) -> Result<ChiralBlock<T>, InvariantError> {
    let bands = flat.bands();
    if s.matrix().rows() != bands {
        return Err(InvariantError::Symmetry(crate::symmetry::SymmetryError::DimensionMismatch {
            op: s.matrix().rows(),
            bands,
        }));
    }
    let herm = match s.square() {
        Sign::Plus => s.matrix().clone(),
        Sign::Minus => s.matrix().scale(Complex::new(T::zero(), T::one())),
    };
    let eig = eig_hermitian(&herm.hermitian_part())?;
    let minus: Vec<usize> = (0..bands).filter(|&i| eig.eigenvalues[i] < T::zero()).collect();
    let plus: Vec<usize> = (0..bands).filter(|&i| eig.eigenvalues[i] > T::zero()).collect();
    if plus.len() != minus.len() || plus.len() + minus.len() != bands {
        return Err(InvariantError::OddSplit { plus: plus.len(), minus: minus.len() });
    }
    let vp = eig.eigenvectors.select_columns(&plus);
    let vm = eig.eigenvectors.select_columns(&minus);
    let sm = s.matrix();
    let mut blocks = Vec::with_capacity(flat.len());
    for qk in flat.qs() {
        let anti = &(sm * qk) + &(qk * sm);
        let residual = anti.frobenius_norm() / qk.frobenius_norm().max(T::one());
        if residual >= T::tol(FLAT_TOL) {
            return Err(InvariantError::NotChiral { residual: residual.to_f64_lossy() });
        }
        blocks.push(&vp.adjoint() * &(qk * &vm));
    }
    ChiralBlock::from_blocks(flat.shape(), blocks)
}
