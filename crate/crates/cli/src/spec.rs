//! Model spec files.
//!
//! ```toml
//! [model]
//! name = "my_chain"          # a built-in model name, or any label with `terms`
//! dim = 1
//! terms = ["-mu*pauli:z", "-t*cos(kx)*pauli:z", "delta*sin(kx)*pauli:y"]
//!
//! [params]
//! mu = 0.5
//! t = 1
//! delta = 1
//!
//! [symmetry.phs]             # also [symmetry.trs] and [symmetry.cs]
//! u = "pauli:x"
//! phase = "1"                # optional: 1, -1, i, -i
//! label = "τ_xK"             # optional
//! ```

use std::collections::BTreeMap;

use num_complex::Complex;
use serde::Deserialize;

use tenfold::models::ModelParams;
use tenfold::numkit::PauliString;
use tenfold::symmetry::{AntiUnitaryKind, AntiUnitaryOp, SymmetryOp, UnitaryOp};

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub model: ModelSection,
    #[serde(default)]
    pub params: BTreeMap<String, f64>,
    #[serde(default)]
    pub symmetry: SymmetrySection,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSection {
    pub name: String,
    pub dim: Option<usize>,
    #[serde(default)]
    pub terms: Vec<String>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymmetrySection {
    pub trs: Option<OpSection>,
    pub phs: Option<OpSection>,
    pub cs: Option<OpSection>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OpSection {
    pub u: String,
    pub phase: Option<String>,
    pub label: Option<String>,
    pub antiunitary: Option<bool>,
}

/// A symmetry operator declared in a spec file.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetrySpec {
    /// `None` for the chiral operator.
    pub kind: Option<AntiUnitaryKind>,
    pub pauli: PauliString,
    pub phase: Complex<f64>,
    pub label: Option<String>,
}

impl SymmetrySpec {
    pub fn build(&self) -> Result<SymmetryOp<f64>, tenfold::symmetry::SymmetryError> {
        let u = self.pauli.matrix::<f64>().scale(self.phase);
        Ok(match (self.kind, &self.label) {
            (Some(kind), Some(label)) => SymmetryOp::Anti(AntiUnitaryOp::new(kind, u, label.clone())?),
            (Some(kind), None) => SymmetryOp::Anti(AntiUnitaryOp::from_pauli(kind, &self.pauli, self.phase)?),
            (None, Some(label)) => SymmetryOp::Chiral(UnitaryOp::new(u, label.clone())?),
            (None, None) => SymmetryOp::Chiral(UnitaryOp::from_pauli(&self.pauli, self.phase)?),
        })
    }
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<Self, String> {
        toml::from_str(text).map_err(|e| e.message().to_string())
    }

    pub fn params(&self) -> ModelParams<f64> {
        self.params.iter().fold(ModelParams::new(), |p, (k, &v)| p.with(k, v))
    }

    pub fn symmetries(&self) -> Result<Vec<SymmetrySpec>, String> {
        let sections = [
            ("trs", Some(AntiUnitaryKind::Trs), &self.symmetry.trs),
            ("phs", Some(AntiUnitaryKind::Phs), &self.symmetry.phs),
            ("cs", None, &self.symmetry.cs),
        ];
        let mut out = Vec::new();
        for (name, kind, section) in sections {
            let Some(op) = section else { continue };
            if op.antiunitary.is_some_and(|a| a != kind.is_some()) {
                return Err(format!("[symmetry.{name}]: `antiunitary` contradicts the section"));
            }
            let pauli: PauliString = op.u.parse().map_err(|e| format!("[symmetry.{name}]: {e}"))?;
            let phase = parse_phase(op.phase.as_deref().unwrap_or("1"))
                .ok_or_else(|| format!("[symmetry.{name}]: phase must be one of 1, -1, i, -i"))?;
            let spec = SymmetrySpec { kind, pauli, phase, label: op.label.clone() };
            spec.build().map_err(|e| format!("[symmetry.{name}]: {e}"))?;
            out.push(spec);
        }
        Ok(out)
    }
}

fn parse_phase(s: &str) -> Option<Complex<f64>> {
    Some(match s.trim() {
        "1" | "+1" => Complex::new(1.0, 0.0),
        "-1" => Complex::new(-1.0, 0.0),
        "i" | "+i" => Complex::new(0.0, 1.0),
        "-i" => Complex::new(0.0, -1.0),
        _ => return None,
    })
}
