use num_complex::Complex;

use super::{Matrix, NumError};
use crate::scalar::Real;

/// Determinant by LU factorisation with partial pivoting.
///
/// Singular input yields zero up to roundoff. Panics on a non-square matrix.
pub fn det<T: Real>(a: &Matrix<T>) -> Complex<T> {
    assert!(a.is_square(), "det of a non-square matrix");
    let n = a.rows();
    let mut lu = a.clone();
    let mut acc = Complex::new(T::one(), T::zero());
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| {
                lu[(i, col)].norm_sqr().partial_cmp(&lu[(j, col)].norm_sqr()).unwrap_or(std::cmp::Ordering::Equal)
            })
            .expect("non-empty pivot range");
        let p = lu[(pivot, col)];
        if p.norm_sqr() == T::zero() {
            return Complex::new(T::zero(), T::zero());
        }
        if pivot != col {
            for j in 0..n {
                let tmp = lu[(col, j)];
                lu[(col, j)] = lu[(pivot, j)];
                lu[(pivot, j)] = tmp;
            }
            acc = -acc;
        }
        acc *= p;
        for i in (col + 1)..n {
            let f = lu[(i, col)] / p;
            if f.norm_sqr() == T::zero() {
                continue;
            }
            for j in col..n {
                let s = lu[(col, j)];
                lu[(i, j)] -= f * s;
            }
        }
    }
    acc
}

/// Pfaffian of a real antisymmetric matrix by recursive expansion along the
/// first row. Intended for `n ≤ 8`; cost grows as `(n−1)!!`.
///
/// Imaginary parts and the antisymmetric defect must both sit below `tol`
/// relative to `max(‖A‖_F, 1)`.
pub fn pfaffian<T: Real>(a: &Matrix<T>, tol: T) -> Result<T, NumError> {
    if !a.is_square() {
        return Err(NumError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    if n % 2 == 1 {
        return Err(NumError::OddDimension(n));
    }
    let scale = a.frobenius_norm().max(T::one());
    let imag: T = a.as_slice().iter().map(|z| z.im * z.im).sum::<T>().sqrt();
    let skew = a.distance(&-&a.transpose());
    let residual = imag.max(skew);
    if residual > tol * scale {
        return Err(NumError::NotAntisymmetric { residual: residual.to_f64_lossy() });
    }
    let real: Vec<T> = a.as_slice().iter().map(|z| z.re).collect();
    let idx: Vec<usize> = (0..n).collect();
    Ok(pf_expand(&real, n, &idx))
}

fn pf_expand<T: Real>(a: &[T], n: usize, idx: &[usize]) -> T {
    match idx.len() {
        0 => T::one(),
        2 => a[idx[0] * n + idx[1]],
        _ => {
            let first = idx[0];
            let rest = &idx[1..];
            let mut sum = T::zero();
            let mut sub = Vec::with_capacity(rest.len() - 1);
            for (pos, &j) in rest.iter().enumerate() {
                let entry = a[first * n + j];
                if entry == T::zero() {
                    continue;
                }
                sub.clear();
                sub.extend(rest.iter().enumerate().filter(|&(p, _)| p != pos).map(|(_, &k)| k));
                let term = entry * pf_expand(a, n, &sub);
                if pos % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            sum
        }
    }
}
