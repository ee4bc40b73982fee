use num_complex::Complex;
use rayon::prelude::*;

use super::{ChiralBlock, InvariantError, InvariantValue, ROUNDING_TOL};
use crate::numkit::{det, Matrix};
use crate::scalar::Real;

/// Largest phase step of `det q` between neighbours before unwrapping is
/// considered unreliable.
const MAX_STEP: f64 = std::f64::consts::FRAC_PI_2;
const MAX_NEIGHBOUR_DISTANCE: f64 = 0.5;

fn wrap<T: Real>(x: T) -> T {
    let pi = T::PI();
    let two_pi = pi + pi;
    x - two_pi * ((x + pi) / two_pi).floor()
}

/// Winding number of `det q(k)` around the 1d Brillouin zone.
pub fn winding_1d<T: Real>(q: &ChiralBlock<T>) -> Result<InvariantValue, InvariantError> {
    if q.dim() != 1 {
        return Err(InvariantError::WrongDimension { expected: 1, got: q.dim() });
    }
    let phases: Vec<T> = q.blocks().iter().map(|b| det(b).arg()).collect();
    let n = phases.len();
    let mut total = T::zero();
    for i in 0..n {
        let step = wrap(phases[(i + 1) % n] - phases[i]);
        if step.abs() > T::lit(MAX_STEP) {
            return Err(InvariantError::NonConvergent {
                raw: step.to_f64_lossy(),
                residual: f64::NAN,
                reason: format!("det q phase jumps by {} between neighbours; refine the grid", step.to_f64_lossy()),
            });
        }
        total += step;
    }
    InvariantValue::integer(total / (T::PI() + T::PI()), q.grid_size(), "1d winding")
}

// First-derivative stencils: (offset, weight) in units of 1/h.
const CENTRAL_2: &[(isize, f64)] = &[(-1, -0.5), (1, 0.5)];
const CENTRAL_4: &[(isize, f64)] = &[(-2, 1.0 / 12.0), (-1, -2.0 / 3.0), (1, 2.0 / 3.0), (2, -1.0 / 12.0)];

/// Degree of `q: T³ → U(m)`,
/// `(1/24π²) ∫ ε^{ijk} tr[(q†∂_i q)(q†∂_j q)(q†∂_k q)] d³k`,
/// by central differences and the (periodic) trapezoid rule.
///
/// If the second-order result misses an integer by 0.05 or more, a
/// fourth-order stencil is tried before reporting non-convergence.
pub fn winding_3d<T: Real>(q: &ChiralBlock<T>) -> Result<InvariantValue, InvariantError> {
    if q.dim() != 3 {
        return Err(InvariantError::WrongDimension { expected: 3, got: q.dim() });
    }
    let shape = q.shape();
    let distance = (0..q.len())
        .into_par_iter()
        .map(|i| (0..3).map(|a| q.block(i).distance(q.block(shape.shifted(i, a, 1)))).fold(T::zero(), T::max))
        .reduce(T::zero, T::max);
    if distance >= T::lit(MAX_NEIGHBOUR_DISTANCE) {
        return Err(InvariantError::NotSmooth { distance: distance.to_f64_lossy() });
    }
    let second = degree_3d(q, CENTRAL_2);
    match InvariantValue::integer(second, q.grid_size(), "3d winding") {
        Ok(v) => Ok(v),
        Err(_) => {
            let fourth = degree_3d(q, CENTRAL_4);
            InvariantValue::integer(fourth, q.grid_size(), "3d winding").map_err(|_| {
                let raw = fourth.to_f64_lossy();
                InvariantError::NonConvergent {
                    raw,
                    residual: (raw - raw.round()).abs().max(ROUNDING_TOL),
                    reason: "3d winding is not near an integer; refine the grid".into(),
                }
            })
        }
    }
}

fn degree_3d<T: Real>(q: &ChiralBlock<T>, stencil: &[(isize, f64)]) -> T {
    let shape = q.shape();
    let n = q.grid_size();
    let h = T::lit(2.0 * std::f64::consts::PI / n as f64);
    let density: Vec<T> = (0..q.len())
        .into_par_iter()
        .map(|i| {
            let qi = q.block(i);
            let a: Vec<Matrix<T>> = (0..3)
                .map(|axis| {
                    let m = qi.rows();
                    let mut d = Matrix::zeros(m, m);
                    for &(off, w) in stencil {
                        d = &d + &q.block(shape.shifted(i, axis, off)).scale_real(T::lit(w) / h);
                    }
                    qi.adjoint_mul(&d)
                })
                .collect();
            // ε^{ijk} tr(A_i A_j A_k) = 3 [tr(A_x A_y A_z) − tr(A_x A_z A_y)]
            let xyz = (&(&a[0] * &a[1]) * &a[2]).trace();
            let xzy = (&(&a[0] * &a[2]) * &a[1]).trace();
            let v: Complex<T> = (xyz - xzy) * T::lit(3.0);
            v.re
        })
        .collect();
    let total: T = density.iter().copied().sum();
    let norm = T::lit(24.0 * std::f64::consts::PI * std::f64::consts::PI);
    total * h * h * h / norm
}
