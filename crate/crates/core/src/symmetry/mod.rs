//! Time-reversal, particle-hole and chiral symmetry checks on sampled
//! Hamiltonians, and the Altland–Zirnbauer class of the resulting signature.

mod class;
mod ops;

pub use class::{az_class_of, AZClass, ParseClassError, Sign, SymmetrySignature};
pub use ops::{pauli_candidates, zoo_symmetries, AntiUnitaryKind, AntiUnitaryOp, SymmetryOp, UnitaryOp};

use serde::Serialize;

use crate::models::{ModelError, SampledBloch, GAPLESS_THRESHOLD};
use crate::numkit::{Matrix, NumError};
use crate::scalar::Real;

/// Relative Frobenius tolerance used when none is given.
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SymmetryError {
    #[error("operator is {op}x{op} but the Hamiltonian has {bands} bands")]
    DimensionMismatch { op: usize, bands: usize },
    #[error("operator `{label}` is not unitary (‖U†U − I‖_F = {residual:e})")]
    NotUnitary { label: String, residual: f64 },
    #[error("operator `{label}` does not square to ±1")]
    NoDefiniteSquare { label: String },
    #[error("inconsistent symmetry signature (TRS {trs:?}, PHS {phs:?}, CS {cs})")]
    InconsistentSignature { trs: Option<Sign>, phs: Option<Sign>, cs: bool },
    #[error("model is gapless (min gap {min_gap:e} < {GAPLESS_THRESHOLD:e})")]
    GaplessModel { min_gap: f64 },
    #[error("ambiguous {kind} witnesses: `{first}` squares to {first_sign}, `{second}` squares to {second_sign}")]
    AmbiguousWitness { kind: AntiUnitaryKind, first: String, first_sign: Sign, second: String, second_sign: Sign },
    #[error("no candidate operators given and no built-in sweep for {0} bands")]
    NoCandidates(usize),
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Outcome of an anti-unitary symmetry check.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AntiUnitaryCheck {
    pub holds: bool,
    /// Square of the operator, reported only when the symmetry holds.
    pub sign: Option<Sign>,
    /// Worst relative residual over the grid.
    pub residual: f64,
}

fn rel_residual<T: Real>(lhs: &Matrix<T>, rhs: &Matrix<T>, scale: T) -> T {
    let d = lhs.distance(rhs);
    if scale > T::zero() {
        d / scale
    } else {
        d
    }
}

/// Checks `U conj(H(k)) U† = ±H(−k)` at every grid point (`+` for TRS,
/// `−` for PHS), relative to `‖H(k)‖_F`.
pub fn check_antiunitary<T: Real>(
    sampled: &SampledBloch<T>,
    op: &AntiUnitaryOp<T>,
    tol: T,
) -> Result<AntiUnitaryCheck, SymmetryError> {
    let residual = antiunitary_residual(sampled.values(), |i| sampled.neg_index(i), op)?;
    let holds = residual <= tol;
    Ok(AntiUnitaryCheck { holds, sign: holds.then_some(op.square()), residual: residual.to_f64_lossy() })
}

pub(crate) fn antiunitary_residual<T: Real>(
    values: &[Matrix<T>],
    neg: impl Fn(usize) -> usize,
    op: &AntiUnitaryOp<T>,
) -> Result<T, SymmetryError> {
    let u = op.matrix();
    let bands = values.first().map_or(0, Matrix::rows);
    if u.rows() != bands {
        return Err(SymmetryError::DimensionMismatch { op: u.rows(), bands });
    }
    let ud = u.adjoint();
    let mut worst = T::zero();
    for (i, h) in values.iter().enumerate() {
        let image = &(u * &h.conj()) * &ud;
        let target = match op.kind() {
            AntiUnitaryKind::Trs => values[neg(i)].clone(),
            AntiUnitaryKind::Phs => -&values[neg(i)],
        };
        worst = worst.max(rel_residual(&image, &target, h.frobenius_norm()));
    }
    Ok(worst)
}

/// Checks `S H(k) S† = −H(k)` at every grid point.
pub fn check_chiral<T: Real>(sampled: &SampledBloch<T>, op: &UnitaryOp<T>, tol: T) -> Result<bool, SymmetryError> {
    Ok(chiral_residual(sampled.values(), op)? <= tol)
}

pub(crate) fn chiral_residual<T: Real>(values: &[Matrix<T>], op: &UnitaryOp<T>) -> Result<T, SymmetryError> {
    let s = op.matrix();
    let bands = values.first().map_or(0, Matrix::rows);
    if s.rows() != bands {
        return Err(SymmetryError::DimensionMismatch { op: s.rows(), bands });
    }
    let sd = s.adjoint();
    let mut worst = T::zero();
    for h in values {
        let image = &(s * h) * &sd;
        worst = worst.max(rel_residual(&image, &-h, h.frobenius_norm()));
    }
    Ok(worst)
}

/// Evidence that an anti-unitary symmetry was verified on the grid.
///
/// It can only be obtained from a passing check, and gates the reduction of
/// integer invariants to ℤ₂.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RealityConstraint {
    witness: String,
    kind: AntiUnitaryKind,
    sign: Sign,
}

impl RealityConstraint {
    pub fn from_check<T: Real>(op: &AntiUnitaryOp<T>, check: &AntiUnitaryCheck) -> Option<Self> {
        check.holds.then(|| Self { witness: op.label().to_string(), kind: op.kind(), sign: op.square() })
    }

    pub fn witness(&self) -> &str {
        &self.witness
    }

    pub fn kind(&self) -> AntiUnitaryKind {
        self.kind
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }
}

/// Result of [`classify`].
#[derive(Clone, Debug)]
pub struct Classification<T> {
    pub class: AZClass,
    pub signature: SymmetrySignature,
    pub trs: Option<AntiUnitaryOp<T>>,
    pub phs: Option<AntiUnitaryOp<T>>,
    pub chiral: Option<UnitaryOp<T>>,
    /// Labels of every candidate (or derived product) that held.
    pub holding: Vec<String>,
    /// The full class first, then the class obtained by forgetting TRS
    /// when both TRS and PHS hold (the bare BdG class of a superconductor).
    pub consistent_classes: Vec<AZClass>,
    pub warnings: Vec<String>,
    pub reality: Option<RealityConstraint>,
}

/// Assembles the symmetry signature of `sampled` from the candidates that
/// hold and maps it to its AZ class.
///
/// With no candidates, 2- and 4-band models are swept over all Pauli
/// (tensor) operators.
pub fn classify<T: Real>(
    sampled: &SampledBloch<T>,
    candidates: &[SymmetryOp<T>],
    tol: T,
) -> Result<Classification<T>, SymmetryError> {
    if sampled.is_gapless() {
        return Err(SymmetryError::GaplessModel { min_gap: sampled.min_gap().to_f64_lossy() });
    }
    let swept;
    let candidates = if candidates.is_empty() {
        swept = pauli_candidates(sampled.bands())?;
        &swept[..]
    } else {
        candidates
    };

    let mut holding = Vec::new();
    let mut trs: Option<(AntiUnitaryOp<T>, AntiUnitaryCheck)> = None;
    let mut phs: Option<(AntiUnitaryOp<T>, AntiUnitaryCheck)> = None;
    let mut chiral: Option<UnitaryOp<T>> = None;

    for cand in candidates {
        match cand {
            SymmetryOp::Anti(op) => {
                let check = check_antiunitary(sampled, op, tol)?;
                if !check.holds {
                    continue;
                }
                holding.push(op.describe());
                let slot = match op.kind() {
                    AntiUnitaryKind::Trs => &mut trs,
                    AntiUnitaryKind::Phs => &mut phs,
                };
                match slot {
                    None => *slot = Some((op.clone(), check)),
                    Some((prev, _)) if prev.square() != op.square() => {
                        return Err(SymmetryError::AmbiguousWitness {
                            kind: op.kind(),
                            first: prev.label().to_string(),
                            first_sign: prev.square(),
                            second: op.label().to_string(),
                            second_sign: op.square(),
                        });
                    }
                    Some(_) => {}
                }
            }
            SymmetryOp::Chiral(op) => {
                if check_chiral(sampled, op, tol)? {
                    holding.push(op.describe());
                    chiral.get_or_insert_with(|| op.clone());
                }
            }
        }
    }

    let mut warnings = Vec::new();
    let two_tol = tol + tol;
    // TRS + chiral implies PHS = S·Θ and vice versa.
    if let (Some(s), true) = (&chiral, trs.is_some() != phs.is_some()) {
        let (known, missing_kind) = match (&trs, &phs) {
            (Some((t, _)), None) => (t, AntiUnitaryKind::Phs),
            (None, Some((c, _))) => (c, AntiUnitaryKind::Trs),
            _ => unreachable!(),
        };
        let u = s.matrix() * known.matrix();
        let label = format!("{}·{}", s.label(), known.label());
        let derived = AntiUnitaryOp::new(missing_kind, u, label)?;
        let check = check_antiunitary(sampled, &derived, two_tol)?;
        if check.holds {
            holding.push(derived.describe());
            match missing_kind {
                AntiUnitaryKind::Trs => trs = Some((derived, check)),
                AntiUnitaryKind::Phs => phs = Some((derived, check)),
            }
        }
    }
    if let (Some((t, _)), Some((c, _))) = (&trs, &phs) {
        let product = UnitaryOp::new(t.matrix() * &c.matrix().conj(), format!("{}·{}", t.label(), c.label()))?;
        if check_chiral(sampled, &product, two_tol)? {
            if chiral.is_none() {
                holding.push(product.describe());
                chiral = Some(product);
            }
        } else {
            warnings
                .push(format!("product `{}` of the TRS and PHS witnesses is not a chiral symmetry", product.label()));
        }
        let tc = t.matrix() * &c.matrix().conj();
        let ct = c.matrix() * &t.matrix().conj();
        if tc.distance(&ct) > two_tol * tc.frobenius_norm().max(T::one()) {
            warnings.push(format!("witnesses `{}` and `{}` do not commute", t.label(), c.label()));
        }
    }

    let signature = SymmetrySignature::new(
        trs.as_ref().map(|(t, _)| t.square()),
        phs.as_ref().map(|(c, _)| c.square()),
        chiral.is_some(),
    )?;
    let class = az_class_of(signature)?;
    let mut consistent_classes = vec![class];
    if let (Some(_), Some((c, _))) = (&trs, &phs) {
        let bare = az_class_of(SymmetrySignature::new(None, Some(c.square()), false)?)?;
        consistent_classes.push(bare);
    }
    let reality = trs.as_ref().or(phs.as_ref()).and_then(|(op, check)| RealityConstraint::from_check(op, check));

    Ok(Classification {
        class,
        signature,
        trs: trs.map(|(op, _)| op),
        phs: phs.map(|(op, _)| op),
        chiral,
        holding,
        consistent_classes,
        warnings,
        reality,
    })
}
