use num_complex::Complex;

use super::{FlattenedBloch, InvariantError, InvariantValue};
use crate::models::SampledBloch;
use crate::numkit::{pfaffian, sqrt_unitary, unitary_eig, unitary_part, Matrix};
use crate::scalar::Real;
use crate::symmetry::{antiunitary_residual, AntiUnitaryKind, AntiUnitaryOp, Sign, DEFAULT_TOL};

const OP_TOL: f64 = 1e-8;

/// 1d class-D ℤ₂ index from the Pfaffian signs at `k = 0` and `k = π`.
///
/// With `U_C = W Wᵀ` (`W` the symmetric square root), `i W† H W` is real
/// antisymmetric at the two particle-hole invariant momenta; the index is
/// `(1 − sign Pf(0)·Pf(π)) / 2`.
pub fn class_d_1d_z2<T: Real>(
    sampled: &SampledBloch<T>,
    c: &AntiUnitaryOp<T>,
) -> Result<InvariantValue, InvariantError> {
    if sampled.dim() != 1 {
        return Err(InvariantError::WrongDimension { expected: 1, got: sampled.dim() });
    }
    if c.kind() != AntiUnitaryKind::Phs || c.square() != Sign::Plus {
        return Err(InvariantError::NotClassD(format!("`{}` is not a PHS squaring to +1", c.label())));
    }
    if sampled.is_gapless() {
        return Err(InvariantError::GaplessModel { min_gap: sampled.min_gap().to_f64_lossy() });
    }
    let residual = antiunitary_residual(sampled.values(), |i| sampled.neg_index(i), c)?;
    if residual > T::tol(DEFAULT_TOL) {
        return Err(InvariantError::NotClassD(format!(
            "`{}` fails on the grid (residual {:e})",
            c.label(),
            residual.to_f64_lossy()
        )));
    }
    let w = sqrt_unitary(c.matrix(), T::tol(OP_TOL))?;
    let i_unit = Complex::new(T::zero(), T::one());
    let mut product = T::one();
    for idx in [sampled.flat_index(&[sampled.grid_size() / 2]), 0] {
        let x = (&w.adjoint() * &(sampled.value(idx) * &w)).scale(i_unit);
        let scale = x.frobenius_norm().max(T::one());
        product *= pfaffian(&x, T::tol(OP_TOL) * scale)?;
    }
    let value = i64::from(product < T::zero());
    Ok(InvariantValue::mod2(value, value as f64, sampled.grid_size()))
}

fn frac<T: Real>(x: T) -> T {
    x - x.floor()
}

/// Wannier-centre phases (in [0, 1)) of the occupied Wilson loop along
/// `k_y` at grid column `ix`.
fn wannier_centres<T: Real>(flat: &FlattenedBloch<T>, ix: usize) -> Result<Vec<T>, InvariantError> {
    let shape = flat.shape();
    let n = shape.n;
    let mut wilson = Matrix::identity(flat.n_occ());
    for iy in 0..n {
        let a = shape.flat_index(&[ix, iy]);
        let b = shape.flat_index(&[ix, (iy + 1) % n]);
        let overlap = unitary_part(&flat.frame(a).adjoint_mul(flat.frame(b)))?;
        wilson = &wilson * &overlap;
    }
    let eig = unitary_eig(&wilson, T::tol(1e-6))?;
    let two_pi = T::PI() + T::PI();
    let mut centres: Vec<T> = eig.phases.iter().map(|&p| frac(p / two_pi)).collect();
    centres.sort_by(|a, b| a.partial_cmp(b).expect("finite phase"));
    Ok(centres)
}

/// Midpoint of the largest gap between consecutive centres on the circle.
fn largest_gap_midpoint<T: Real>(centres: &[T]) -> T {
    let n = centres.len();
    let mut best = (T::neg_infinity(), T::zero());
    for i in 0..n {
        let lo = centres[i];
        let hi = if i + 1 < n { centres[i + 1] } else { centres[0] + T::one() };
        let gap = hi - lo;
        if gap > best.0 {
            best = (gap, frac((lo + hi) * T::lit(0.5)));
        }
    }
    best.1
}

/// Parity of the number of times the largest-gap midpoint passes a Wannier
/// centre from one column to the next.
fn flow_parity<T: Real>(centres: &[Vec<T>]) -> i64 {
    let mids: Vec<T> = centres.iter().map(|c| largest_gap_midpoint(c)).collect();
    let mut crossings = 0i64;
    for step in 1..centres.len() {
        let (z0, z1) = (mids[step - 1], mids[step]);
        let (lo, hi) = if z0 < z1 { (z0, z1) } else { (z1, z0) };
        crossings += centres[step].iter().filter(|&&x| x > lo && x < hi).count() as i64;
    }
    crossings.rem_euclid(2)
}

/// 2d ℤ₂ index of a Kramers-degenerate occupied bundle from the flow of
/// Wannier centres (Wilson-loop eigenphases along `k_y`) as `k_x` runs over
/// half the Brillouin zone, `0 → π`.
///
/// The flow is evaluated on every column and on every second column; if
/// the parities differ the grid is too coarse and the result is refused.
pub fn z2_wannier_2d<T: Real>(
    flat: &FlattenedBloch<T>,
    theta: &AntiUnitaryOp<T>,
) -> Result<InvariantValue, InvariantError> {
    if flat.dim() != 2 {
        return Err(InvariantError::WrongDimension { expected: 2, got: flat.dim() });
    }
    if theta.kind() != AntiUnitaryKind::Trs || theta.square() != Sign::Minus {
        return Err(InvariantError::NotTimeReversal(format!("`{}` is not a TRS squaring to −1", theta.label())));
    }
    let shape = flat.shape();
    let residual = antiunitary_residual(flat.qs(), |i| shape.neg_index(i), theta)?;
    if residual > T::tol(OP_TOL) {
        return Err(InvariantError::NotTimeReversal(format!(
            "`{}` fails on the flattened grid (residual {:e})",
            theta.label(),
            residual.to_f64_lossy()
        )));
    }
    let n_occ = flat.n_occ();
    if n_occ % 2 == 1 || n_occ == 0 {
        return Err(InvariantError::OddOccupation(n_occ));
    }
    let n = shape.n;
    // k_x = 0 is column N/2, k_x = π is column N ≡ 0
    let cols: Vec<usize> = (n / 2..=n).map(|c| c % n).collect();
    let centres = cols.iter().map(|&c| wannier_centres(flat, c)).collect::<Result<Vec<_>, _>>()?;
    let full = flow_parity(&centres);
    let mut coarse: Vec<Vec<T>> = centres.iter().step_by(2).cloned().collect();
    if (cols.len() - 1) % 2 == 1 {
        coarse.push(centres.last().expect("non-empty").clone());
    }
    let half = flow_parity(&coarse);
    if full != half {
        return Err(InvariantError::NonConvergent {
            raw: full as f64,
            residual: 1.0,
            reason: "Wannier-centre flow parity differs between the grid and its stride-2 subgrid".into(),
        });
    }
    Ok(InvariantValue::mod2(full, full as f64, n))
}
