use num_complex::Complex;

use super::{Matrix, NumError};
use crate::scalar::Real;

/// Eigenpairs of a Hermitian matrix, eigenvalues ascending.
#[derive(Clone, Debug)]
pub struct EigDecomposition<T> {
    pub eigenvalues: Vec<T>,
    /// Unitary matrix whose columns are the eigenvectors, in eigenvalue order.
    pub eigenvectors: Matrix<T>,
}

impl<T: Real> EigDecomposition<T> {
    /// `V · diag(λ) · V†`.
    pub fn reconstruct(&self) -> Matrix<T> {
        let v = &self.eigenvectors;
        let n = v.rows();
        Matrix::from_fn(n, n, |i, j| (0..n).map(|k| v[(i, k)] * v[(j, k)].conj() * self.eigenvalues[k]).sum())
    }
}

/// Settings for the cyclic Jacobi sweep.
#[derive(Clone, Copy, Debug)]
pub struct JacobiOptions<T> {
    pub max_sweeps: usize,
    /// Relative Frobenius tolerance for the Hermiticity precheck.
    pub hermitian_tol: T,
}

impl<T: Real> Default for JacobiOptions<T> {
    fn default() -> Self {
        Self { max_sweeps: 100, hermitian_tol: T::tol(1e-10) }
    }
}

pub fn eig_hermitian<T: Real>(a: &Matrix<T>) -> Result<EigDecomposition<T>, NumError> {
    eig_hermitian_with(a, JacobiOptions::default())
}

pub fn eig_hermitian_with<T: Real>(a: &Matrix<T>, opts: JacobiOptions<T>) -> Result<EigDecomposition<T>, NumError> {
    if !a.is_square() {
        return Err(NumError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    if !a.is_finite() {
        return Err(NumError::NonFinite);
    }
    let norm = a.frobenius_norm();
    let asym = a.distance(&a.adjoint());
    if asym > opts.hermitian_tol * norm {
        return Err(NumError::NotHermitian { residual: asym.to_f64_lossy() });
    }

    let n = a.rows();
    let mut m = a.hermitian_part();
    let mut v = Matrix::identity(n);
    let zero = T::zero();
    let eps = T::epsilon();

    let mut converged = n <= 1;
    for _ in 0..opts.max_sweeps {
        let off: T = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[(i, j)].norm_sqr())
            .sum::<T>()
            .sqrt();
        if off <= eps * norm || off == zero {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                let g = apq.norm();
                if g == zero {
                    continue;
                }
                // Annihilate m[p][q] with J = D R D†, D = diag(1, e^{-iφ}).
                let phase = apq.unscale(g);
                let app = m[(p, p)].re;
                let aqq = m[(q, q)].re;
                let theta = (aqq - app) / (g + g);
                let t = {
                    let t = T::one() / (theta.abs() + (theta * theta + T::one()).sqrt());
                    if theta < zero {
                        -t
                    } else {
                        t
                    }
                };
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                let jpq = phase.scale(s);
                let jqp = -phase.conj().scale(s);
                rotate(&mut m, p, q, c, jpq, jqp);
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp.scale(c) + vkq * jqp;
                    v[(k, q)] = vkp * jpq + vkq.scale(c);
                }
            }
        }
    }
    if !converged {
        return Err(NumError::NoConvergence { sweeps: opts.max_sweeps });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.partial_cmp(&m[(j, j)].re).expect("finite eigenvalues"));
    let eigenvalues = order.iter().map(|&i| m[(i, i)].re).collect();
    let eigenvectors = v.select_columns(&order);
    Ok(EigDecomposition { eigenvalues, eigenvectors })
}

// m <- J† m J with J = [[c, jpq], [jqp, c]] on the (p, q) plane.
fn rotate<T: Real>(m: &mut Matrix<T>, p: usize, q: usize, c: T, jpq: Complex<T>, jqp: Complex<T>) {
    let n = m.rows();
    for k in 0..n {
        let mkp = m[(k, p)];
        let mkq = m[(k, q)];
        m[(k, p)] = mkp.scale(c) + mkq * jqp;
        m[(k, q)] = mkp * jpq + mkq.scale(c);
    }
    for k in 0..n {
        let mpk = m[(p, k)];
        let mqk = m[(q, k)];
        m[(p, k)] = mpk.scale(c) + mqk * jqp.conj();
        m[(q, k)] = mpk * jpq.conj() + mqk.scale(c);
    }
    m[(p, q)] = Complex::new(T::zero(), T::zero());
    m[(q, p)] = Complex::new(T::zero(), T::zero());
    m[(p, p)].im = T::zero();
    m[(q, q)].im = T::zero();
}

/// Eigen-decomposition of a unitary matrix.
#[derive(Clone, Debug)]
pub struct UnitaryEig<T> {
    /// Eigenphases in (−π, π].
    pub phases: Vec<T>,
    pub eigenvectors: Matrix<T>,
}

/// Diagonalises a unitary matrix through a generic Hermitian combination of
/// its commuting Hermitian and anti-Hermitian parts.
///
/// `tol` bounds the off-diagonal residual of `V† U V`; an accidental
/// degeneracy of the combination that mixes distinct eigenphases shows up
/// there and is reported as `NoConvergence`.
pub fn unitary_eig<T: Real>(u: &Matrix<T>, tol: T) -> Result<UnitaryEig<T>, NumError> {
    if !a_is_unitary(u, tol) {
        return Err(NumError::NotUnitary { residual: unitary_distance(u).to_f64_lossy() });
    }
    let ud = u.adjoint();
    let half = T::lit(0.5);
    let re = (u + &ud).scale_real(half);
    let im = (u - &ud).scale(Complex::new(T::zero(), -half));
    // Irrational weight so distinct eigenphases rarely collide.
    let weights = [T::lit(0.618_033_988_749_895), T::SQRT_2()];
    for w in weights {
        let mixed = &re + &im.scale_real(w);
        let eig = eig_hermitian_with(&mixed, JacobiOptions { max_sweeps: 100, hermitian_tol: T::tol(1e-8) })?;
        let v = eig.eigenvectors;
        let d = &v.adjoint() * &(u * &v);
        let n = d.rows();
        let off: T = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| d[(i, j)].norm_sqr())
            .sum::<T>()
            .sqrt();
        if off <= tol * T::lit(n as f64).sqrt().max(T::one()) {
            let phases = (0..n).map(|i| d[(i, i)].arg()).collect();
            return Ok(UnitaryEig { phases, eigenvectors: v });
        }
    }
    Err(NumError::NoConvergence { sweeps: 0 })
}

/// Principal square root of a unitary matrix. For symmetric `u` the root is
/// symmetric as well, so `W Wᵀ = u`.
pub fn sqrt_unitary<T: Real>(u: &Matrix<T>, tol: T) -> Result<Matrix<T>, NumError> {
    let eig = unitary_eig(u, tol)?;
    let v = &eig.eigenvectors;
    let n = v.rows();
    let half = T::lit(0.5);
    Ok(Matrix::from_fn(n, n, |i, j| {
        (0..n).map(|k| v[(i, k)] * v[(j, k)].conj() * Complex::from_polar(T::one(), eig.phases[k] * half)).sum()
    }))
}

/// Unitary factor of the polar decomposition `a = U·P`, via `U = a (a†a)^{-1/2}`.
pub fn unitary_part<T: Real>(a: &Matrix<T>) -> Result<Matrix<T>, NumError> {
    let gram = a.adjoint_mul(a);
    let eig = eig_hermitian(&gram)?;
    let tiny = T::epsilon() * gram.frobenius_norm().max(T::one());
    if eig.eigenvalues.iter().any(|&l| l <= tiny) {
        return Err(NumError::Singular);
    }
    let v = &eig.eigenvectors;
    let n = v.rows();
    let inv_sqrt = Matrix::from_fn(n, n, |i, j| {
        (0..n).map(|k| v[(i, k)] * v[(j, k)].conj() * eig.eigenvalues[k].sqrt().recip()).sum()
    });
    Ok(a * &inv_sqrt)
}

/// `‖A†A − I‖_F`.
pub fn unitary_distance<T: Real>(a: &Matrix<T>) -> T {
    let gram = a.adjoint_mul(a);
    gram.distance(&Matrix::identity(gram.rows()))
}

fn a_is_unitary<T: Real>(a: &Matrix<T>, tol: T) -> bool {
    a.is_square() && unitary_distance(a) <= tol
}
