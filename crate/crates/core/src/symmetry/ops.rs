use std::fmt;

use num_complex::Complex;
use serde::Serialize;

use super::{Sign, SymmetryError};
use crate::models::ModelKind;
use crate::numkit::{unitary_distance, Matrix, PauliString};
use crate::scalar::Real;

const OP_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AntiUnitaryKind {
    #[serde(rename = "TRS")]
    Trs,
    #[serde(rename = "PHS")]
    Phs,
}

impl fmt::Display for AntiUnitaryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AntiUnitaryKind::Trs => "TRS",
            AntiUnitaryKind::Phs => "PHS",
        })
    }
}

fn check_unitary<T: Real>(u: &Matrix<T>, label: &str) -> Result<(), SymmetryError> {
    let residual = if u.is_square() { unitary_distance(u) } else { T::infinity() };
    if residual > T::tol(OP_TOL) {
        return Err(SymmetryError::NotUnitary { label: label.to_string(), residual: residual.to_f64_lossy() });
    }
    Ok(())
}

fn square_sign<T: Real>(sq: &Matrix<T>, label: &str) -> Result<Sign, SymmetryError> {
    let id = Matrix::identity(sq.rows());
    let tol = T::tol(OP_TOL);
    if sq.distance(&id) <= tol {
        Ok(Sign::Plus)
    } else if sq.distance(&-&id) <= tol {
        Ok(Sign::Minus)
    } else {
        Err(SymmetryError::NoDefiniteSquare { label: label.to_string() })
    }
}

/// An anti-unitary operator `U K` acting as TRS or PHS.
#[derive(Clone, Debug)]
pub struct AntiUnitaryOp<T> {
    u: Matrix<T>,
    kind: AntiUnitaryKind,
    square: Sign,
    label: String,
}

impl<T: Real> AntiUnitaryOp<T> {
    /// Validates unitarity of `u` and that `U conj(U) = ±1`.
    pub fn new(kind: AntiUnitaryKind, u: Matrix<T>, label: impl Into<String>) -> Result<Self, SymmetryError> {
        let label = label.into();
        check_unitary(&u, &label)?;
        let square = square_sign(&(&u * &u.conj()), &label)?;
        Ok(Self { u, kind, square, label })
    }

    pub fn time_reversal(u: Matrix<T>, label: impl Into<String>) -> Result<Self, SymmetryError> {
        Self::new(AntiUnitaryKind::Trs, u, label)
    }

    pub fn particle_hole(u: Matrix<T>, label: impl Into<String>) -> Result<Self, SymmetryError> {
        Self::new(AntiUnitaryKind::Phs, u, label)
    }

    /// `phase · pauli · K`.
    pub fn from_pauli(kind: AntiUnitaryKind, pauli: &PauliString, phase: Complex<T>) -> Result<Self, SymmetryError> {
        let label = format!("{}{pauli} K", phase_prefix(phase));
        Self::new(kind, pauli.matrix::<T>().scale(phase), label)
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.u
    }

    pub fn kind(&self) -> AntiUnitaryKind {
        self.kind
    }

    pub fn square(&self) -> Sign {
        self.square
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// e.g. `PHS -1 witness: −iτ_yK`.
    pub fn describe(&self) -> String {
        format!("{} {} witness: {}", self.kind, self.square, self.label)
    }
}

/// A unitary chiral operator `S`.
#[derive(Clone, Debug)]
pub struct UnitaryOp<T> {
    s: Matrix<T>,
    square: Sign,
    label: String,
}

impl<T: Real> UnitaryOp<T> {
    /// Validates unitarity and `S² = ±1`.
    pub fn new(s: Matrix<T>, label: impl Into<String>) -> Result<Self, SymmetryError> {
        let label = label.into();
        check_unitary(&s, &label)?;
        let square = square_sign(&(&s * &s), &label)?;
        Ok(Self { s, square, label })
    }

    pub fn from_pauli(pauli: &PauliString, phase: Complex<T>) -> Result<Self, SymmetryError> {
        let label = format!("{}{pauli}", phase_prefix(phase));
        Self::new(pauli.matrix::<T>().scale(phase), label)
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.s
    }

    pub fn square(&self) -> Sign {
        self.square
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn describe(&self) -> String {
        format!("CS witness: {}", self.label)
    }
}

fn phase_prefix<T: Real>(phase: Complex<T>) -> &'static str {
    let (o, l) = (T::zero(), T::one());
    if phase == Complex::new(l, o) {
        ""
    } else if phase == Complex::new(-l, o) {
        "-"
    } else if phase == Complex::new(o, l) {
        "i*"
    } else if phase == Complex::new(o, -l) {
        "-i*"
    } else {
        "c*"
    }
}

/// A symmetry candidate for [`super::classify`].
#[derive(Clone, Debug)]
pub enum SymmetryOp<T> {
    Anti(AntiUnitaryOp<T>),
    Chiral(UnitaryOp<T>),
}

impl<T: Real> SymmetryOp<T> {
    pub fn label(&self) -> &str {
        match self {
            SymmetryOp::Anti(op) => op.label(),
            SymmetryOp::Chiral(op) => op.label(),
        }
    }
}

/// Every Pauli (tensor) operator as a TRS, PHS and chiral candidate, for 2
/// or 4 bands.
pub fn pauli_candidates<T: Real>(bands: usize) -> Result<Vec<SymmetryOp<T>>, SymmetryError> {
    let factors = match bands {
        2 => 1,
        4 => 2,
        other => return Err(SymmetryError::NoCandidates(other)),
    };
    let one = Complex::new(T::one(), T::zero());
    let strings = PauliString::all(factors);
    let mut out = Vec::with_capacity(3 * strings.len());
    for kind in [AntiUnitaryKind::Trs, AntiUnitaryKind::Phs] {
        for p in &strings {
            out.push(SymmetryOp::Anti(AntiUnitaryOp::from_pauli(kind, p, one)?));
        }
    }
    for p in strings.iter().filter(|p| !p.is_identity()) {
        out.push(SymmetryOp::Chiral(UnitaryOp::from_pauli(p, one)?));
    }
    Ok(out)
}

fn pm<T: Real>(src: &str, re: f64, im: f64) -> Matrix<T> {
    let p: PauliString = src.parse().expect("static Pauli string");
    p.matrix::<T>().scale(Complex::new(T::lit(re), T::lit(im)))
}

/// The symmetry operators written down for each zoo model.
pub fn zoo_symmetries<T: Real>(kind: ModelKind) -> Vec<SymmetryOp<T>> {
    let anti = |k, u, label: &str| SymmetryOp::Anti(AntiUnitaryOp::new(k, u, label).expect("zoo operator"));
    let chiral = |s, label: &str| SymmetryOp::Chiral(UnitaryOp::new(s, label).expect("zoo operator"));
    use AntiUnitaryKind::{Phs, Trs};
    match kind {
        ModelKind::KitaevChain => vec![
            anti(Trs, pm("pauli:0", 1.0, 0.0), "K"),
            anti(Phs, pm("pauli:x", 1.0, 0.0), "σ_xK"),
            chiral(pm("pauli:x", 1.0, 0.0), "τ_x"),
        ],
        ModelKind::ChiralPWave => vec![anti(Phs, pm("pauli:x", 1.0, 0.0), "σ_xK")],
        ModelKind::DIdWave => vec![anti(Phs, pm("pauli:y", 0.0, -1.0), "−iτ_yK")],
        ModelKind::DiiiSuperposition => {
            vec![anti(Trs, pm("pauli:0*y", 0.0, 1.0), "τ_0⊗iσ_yK"), anti(Phs, pm("pauli:x*0", 1.0, 0.0), "τ_x⊗σ_0K")]
        }
        ModelKind::BhzQsh => vec![anti(Trs, pm("pauli:y*0", 0.0, 1.0), "iσ_y⊗τ_0K")],
        ModelKind::Dirac3dChiral => vec![chiral(pm("pauli:z*0", 1.0, 0.0), "τ_z⊗σ_0")],
    }
}
