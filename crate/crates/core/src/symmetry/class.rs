use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::SymmetryError;

/// Square of an (anti)unitary symmetry operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    #[serde(rename = "+1")]
    Plus,
    #[serde(rename = "-1")]
    Minus,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// The (TRS, PHS, CS) triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SymmetrySignature {
    pub trs: Option<Sign>,
    pub phs: Option<Sign>,
    pub cs: bool,
}

impl SymmetrySignature {
    /// Validates the AZ constraints: both anti-unitary symmetries force a
    /// chiral one, and exactly one of them forbids it.
    pub fn new(trs: Option<Sign>, phs: Option<Sign>, cs: bool) -> Result<Self, SymmetryError> {
        let consistent = match (trs, phs) {
            (Some(_), Some(_)) => cs,
            (Some(_), None) | (None, Some(_)) => !cs,
            (None, None) => true,
        };
        if !consistent {
            return Err(SymmetryError::InconsistentSignature { trs, phs, cs });
        }
        Ok(Self { trs, phs, cs })
    }
}

impl fmt::Display for SymmetrySignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |x: Option<Sign>| x.map_or("0".to_string(), |s| s.to_string());
        write!(f, "(TRS {}, PHS {}, CS {})", s(self.trs), s(self.phs), u8::from(self.cs))
    }
}

/// Altland–Zirnbauer symmetry class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AZClass {
    A,
    AIII,
    AI,
    BDI,
    D,
    DIII,
    AII,
    CII,
    C,
    CI,
}

impl AZClass {
    pub const ALL: [AZClass; 10] = [
        AZClass::A,
        AZClass::AIII,
        AZClass::AI,
        AZClass::BDI,
        AZClass::D,
        AZClass::DIII,
        AZClass::AII,
        AZClass::CII,
        AZClass::C,
        AZClass::CI,
    ];

    /// The eight real classes in their cyclic order AI, BDI, ..., CI.
    pub const REAL: [AZClass; 8] =
        [AZClass::AI, AZClass::BDI, AZClass::D, AZClass::DIII, AZClass::AII, AZClass::CII, AZClass::C, AZClass::CI];

    pub fn is_real(self) -> bool {
        !matches!(self, AZClass::A | AZClass::AIII)
    }

    pub fn label(self) -> &'static str {
        match self {
            AZClass::A => "A",
            AZClass::AIII => "AIII",
            AZClass::AI => "AI",
            AZClass::BDI => "BDI",
            AZClass::D => "D",
            AZClass::DIII => "DIII",
            AZClass::AII => "AII",
            AZClass::CII => "CII",
            AZClass::C => "C",
            AZClass::CI => "CI",
        }
    }

    pub fn signature(self) -> SymmetrySignature {
        use Sign::{Minus, Plus};
        let (trs, phs, cs) = match self {
            AZClass::A => (None, None, false),
            AZClass::AIII => (None, None, true),
            AZClass::AI => (Some(Plus), None, false),
            AZClass::BDI => (Some(Plus), Some(Plus), true),
            AZClass::D => (None, Some(Plus), false),
            AZClass::DIII => (Some(Minus), Some(Plus), true),
            AZClass::AII => (Some(Minus), None, false),
            AZClass::CII => (Some(Minus), Some(Minus), true),
            AZClass::C => (None, Some(Minus), false),
            AZClass::CI => (Some(Plus), Some(Minus), true),
        };
        SymmetrySignature { trs, phs, cs }
    }
}

impl fmt::Display for AZClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown symmetry class `{0}`")]
pub struct ParseClassError(pub String);

impl FromStr for AZClass {
    type Err = ParseClassError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AZClass::ALL
            .into_iter()
            .find(|c| c.label().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| ParseClassError(s.to_string()))
    }
}

/// The unique class with the given signature.
pub fn az_class_of(sig: SymmetrySignature) -> Result<AZClass, SymmetryError> {
    let sig = SymmetrySignature::new(sig.trs, sig.phs, sig.cs)?;
    Ok(AZClass::ALL.into_iter().find(|c| c.signature() == sig).expect("every consistent signature names a class"))
}
