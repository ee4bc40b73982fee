//! Lattice models used throughout the crate.
//!
//! The superconducting models use tight-binding regularisations (`sin k`,
//! `cos k`) of the usual continuum BdG forms so that the momentum space is a
//! genuine torus. `bhz_qsh` and `dirac_3d_chiral` are test-bench models for
//! the 2d class AII and 3d winding routes; they do not come from the BdG
//! examples.

use std::fmt;
use std::str::FromStr;

use super::{BlochModel, ModelError, ModelParams, PauliTerm, TrigFactor};
use crate::numkit::PauliString;
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModelKind {
    /// `(−μ − t cos k) τ_z + Δ sin k τ_y`; params `mu, t, delta`.
    KitaevChain,
    /// `Δ̄ sin kx τ_x + Δ̄ sin ky τ_y + (−μ − 2t(cos kx + cos ky)) τ_z`;
    /// params `mu, t, pd`.
    ChiralPWave,
    /// `Δ₁(cos kx − cos ky) τ_x + Δ₂ sin kx sin ky τ_y + (−μ − 2t(cos kx + cos ky)) τ_z`;
    /// params `mu, t, dx2y2, dxy`.
    DIdWave,
    /// Equal superposition of p+ip and p−ip pairing, 4 bands in
    /// (particle-hole ⊗ spin); params `mu, t, pd`.
    DiiiSuperposition,
    /// Two time-reversed Chern blocks (spin ⊗ orbital) with a
    /// TRS-preserving coupling `lambda` and a particle-hole breaking
    /// kinetic term `gamma`; params `m`, optional `lambda` (0.1), `gamma` (0.05).
    BhzQsh,
    /// `Σ_j sin k_j τ_x σ_j + (m − Σ_j cos k_j) τ_y`, chiral under `τ_z`; param `m`.
    Dirac3dChiral,
}

impl ModelKind {
    pub const ALL: [ModelKind; 6] = [
        ModelKind::KitaevChain,
        ModelKind::ChiralPWave,
        ModelKind::DIdWave,
        ModelKind::DiiiSuperposition,
        ModelKind::BhzQsh,
        ModelKind::Dirac3dChiral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::KitaevChain => "kitaev_chain",
            ModelKind::ChiralPWave => "chiral_p_wave",
            ModelKind::DIdWave => "d_id_wave",
            ModelKind::DiiiSuperposition => "diii_superposition",
            ModelKind::BhzQsh => "bhz_qsh",
            ModelKind::Dirac3dChiral => "dirac_3d_chiral",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            ModelKind::KitaevChain => 1,
            ModelKind::Dirac3dChiral => 3,
            _ => 2,
        }
    }

    pub fn bands(self) -> usize {
        match self {
            ModelKind::KitaevChain | ModelKind::ChiralPWave | ModelKind::DIdWave => 2,
            _ => 4,
        }
    }

    pub fn required_params(self) -> &'static [&'static str] {
        match self {
            ModelKind::KitaevChain => &["mu", "t", "delta"],
            ModelKind::ChiralPWave | ModelKind::DiiiSuperposition => &["mu", "t", "pd"],
            ModelKind::DIdWave => &["mu", "t", "dx2y2", "dxy"],
            ModelKind::BhzQsh | ModelKind::Dirac3dChiral => &["m"],
        }
    }

    /// True for the harness models that are not BdG examples.
    pub fn is_harness(self) -> bool {
        matches!(self, ModelKind::BhzQsh | ModelKind::Dirac3dChiral)
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelKind {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ModelKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| ModelError::UnknownModel(s.to_string()))
    }
}

const BHZ_DEFAULT_LAMBDA: f64 = 0.1;
const BHZ_DEFAULT_GAMMA: f64 = 0.05;

fn ps(src: &str) -> PauliString {
    src.parse().expect("static Pauli string")
}

/// Builds a zoo model by name.
pub fn make_model<T: Real>(name: &str, params: &ModelParams<T>) -> Result<BlochModel<T>, ModelError> {
    let kind: ModelKind = name.parse()?;
    build(kind, params)
}

fn build<T: Real>(kind: ModelKind, p: &ModelParams<T>) -> Result<BlochModel<T>, ModelError> {
    for name in kind.required_params() {
        p.require(name)?;
    }
    let two = T::lit(2.0);
    let (sin, cos) = (TrigFactor::sin, TrigFactor::cos);
    let term = |c: T, f: &[TrigFactor], pauli: &str| PauliTerm::new(c, f.to_vec(), ps(pauli));

    let terms = match kind {
        ModelKind::KitaevChain => {
            let (mu, t, delta) = (p.require("mu")?, p.require("t")?, p.require("delta")?);
            vec![term(-mu, &[], "pauli:z"), term(-t, &[cos(0)], "pauli:z"), term(delta, &[sin(0)], "pauli:y")]
        }
        ModelKind::ChiralPWave => {
            let (mu, t, pd) = (p.require("mu")?, p.require("t")?, p.require("pd")?);
            vec![
                term(pd, &[sin(0)], "pauli:x"),
                term(pd, &[sin(1)], "pauli:y"),
                term(-mu, &[], "pauli:z"),
                term(-two * t, &[cos(0)], "pauli:z"),
                term(-two * t, &[cos(1)], "pauli:z"),
            ]
        }
        ModelKind::DIdWave => {
            let (mu, t) = (p.require("mu")?, p.require("t")?);
            let (d1, d2) = (p.require("dx2y2")?, p.require("dxy")?);
            vec![
                term(d1, &[cos(0)], "pauli:x"),
                term(-d1, &[cos(1)], "pauli:x"),
                term(d2, &[sin(0), sin(1)], "pauli:y"),
                term(-mu, &[], "pauli:z"),
                term(-two * t, &[cos(0)], "pauli:z"),
                term(-two * t, &[cos(1)], "pauli:z"),
            ]
        }
        ModelKind::DiiiSuperposition => {
            // [[ε σ_0, Δ], [Δ†, −ε σ_0]] with Δ = Δ̄ (sin kx σ_z + i sin ky σ_0)
            let (mu, t, pd) = (p.require("mu")?, p.require("t")?, p.require("pd")?);
            vec![
                term(-mu, &[], "pauli:z*0"),
                term(-two * t, &[cos(0)], "pauli:z*0"),
                term(-two * t, &[cos(1)], "pauli:z*0"),
                term(pd, &[sin(0)], "pauli:x*z"),
                term(-pd, &[sin(1)], "pauli:y*0"),
            ]
        }
        ModelKind::BhzQsh => {
            // spin-up block h(k), spin-down block conj(h(−k))
            let m = p.require("m")?;
            let lambda = p.get_or("lambda", T::lit(BHZ_DEFAULT_LAMBDA));
            let gamma = p.get_or("gamma", T::lit(BHZ_DEFAULT_GAMMA));
            vec![
                term(T::one(), &[sin(0)], "pauli:z*x"),
                term(T::one(), &[sin(1)], "pauli:0*y"),
                term(m, &[], "pauli:0*z"),
                term(-T::one(), &[cos(0)], "pauli:0*z"),
                term(-T::one(), &[cos(1)], "pauli:0*z"),
                term(lambda, &[], "pauli:x*y"),
                term(gamma, &[cos(0)], "pauli:0*0"),
                term(gamma, &[cos(1)], "pauli:0*0"),
            ]
        }
        ModelKind::Dirac3dChiral => {
            let m = p.require("m")?;
            vec![
                term(T::one(), &[sin(0)], "pauli:x*x"),
                term(T::one(), &[sin(1)], "pauli:x*y"),
                term(T::one(), &[sin(2)], "pauli:x*z"),
                term(m, &[], "pauli:y*0"),
                term(-T::one(), &[cos(0)], "pauli:y*0"),
                term(-T::one(), &[cos(1)], "pauli:y*0"),
                term(-T::one(), &[cos(2)], "pauli:y*0"),
            ]
        }
    };
    let mut params = p.clone();
    if kind == ModelKind::BhzQsh {
        params.set("lambda", p.get_or("lambda", T::lit(BHZ_DEFAULT_LAMBDA)));
        params.set("gamma", p.get_or("gamma", T::lit(BHZ_DEFAULT_GAMMA)));
    }
    BlochModel::from_terms(kind.name(), kind.dim(), params, terms)
}
