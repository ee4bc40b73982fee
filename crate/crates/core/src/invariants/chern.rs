use num_complex::Complex;
use rayon::prelude::*;

use super::{FlattenedBloch, InvariantError, InvariantValue};
use crate::numkit::{det, Matrix};
use crate::scalar::Real;

const MIN_LINK: f64 = 1e-6;

fn link<T: Real>(a: &Matrix<T>, b: &Matrix<T>) -> Result<Complex<T>, InvariantError> {
    let d = det(&a.adjoint_mul(b));
    let modulus = d.norm();
    if modulus < T::lit(MIN_LINK) {
        return Err(InvariantError::SingularOverlap { modulus: modulus.to_f64_lossy() });
    }
    Ok(d / modulus)
}

/// Lattice field-strength Chern number of the occupied bundle.
///
/// Each plaquette contributes `arg(U_x(k) U_y(k+x) U_x(k+y)* U_y(k)*)` with
/// `U_μ(k) = det V(k)†V(k+μ)` normalised; the sum over plaquettes divided
/// by 2π is an integer for any grid on which every link is regular.
pub fn chern_number<T: Real>(flat: &FlattenedBloch<T>) -> Result<InvariantValue, InvariantError> {
    if flat.dim() != 2 {
        return Err(InvariantError::WrongDimension { expected: 2, got: flat.dim() });
    }
    let shape = flat.shape();
    let links: Vec<[Complex<T>; 2]> = (0..flat.len())
        .into_par_iter()
        .map(|i| {
            let v = flat.frame(i);
            Ok([link(v, flat.frame(shape.shifted(i, 0, 1)))?, link(v, flat.frame(shape.shifted(i, 1, 1)))?])
        })
        .collect::<Result<_, InvariantError>>()?;
    let curvature: Vec<T> = (0..flat.len())
        .into_par_iter()
        .map(|i| {
            let ux = links[i][0];
            let uy_right = links[shape.shifted(i, 0, 1)][1];
            let ux_up = links[shape.shifted(i, 1, 1)][0];
            let uy = links[i][1];
            (ux * uy_right * ux_up.conj() * uy.conj()).arg()
        })
        .collect();
    // fixed order so the result does not depend on scheduling
    let total: T = curvature.iter().copied().sum();
    InvariantValue::integer(total / (T::PI() + T::PI()), flat.grid_size(), "Chern number")
}
