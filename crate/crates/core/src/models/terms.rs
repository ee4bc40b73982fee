//! Pauli-term model expressions: `coeff * trig(k_axis) * ... * pauli:...`.
//!
//! A term is a product of real factors (numbers, parameter names, `sin(kx)`,
//! `cos(ky)`, ...) ending in a Pauli string, e.g. `-2*t*cos(kx)*pauli:z`.
//! Because Pauli strings contain `*`, the Pauli string must come last.

use std::str::FromStr;

use super::{ModelError, ModelParams};
use crate::numkit::{Matrix, PauliString};
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trig {
    Sin,
    Cos,
}

/// A single `sin(k_axis)` or `cos(k_axis)` factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrigFactor {
    pub trig: Trig,
    pub axis: usize,
}

impl TrigFactor {
    pub fn sin(axis: usize) -> Self {
        Self { trig: Trig::Sin, axis }
    }

    pub fn cos(axis: usize) -> Self {
        Self { trig: Trig::Cos, axis }
    }

    fn eval<T: Real>(self, k: &[T]) -> T {
        match self.trig {
            Trig::Sin => k[self.axis].sin(),
            Trig::Cos => k[self.axis].cos(),
        }
    }
}

/// Numeric coefficient times trig factors times a Pauli string.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliTerm<T> {
    pub coeff: T,
    pub factors: Vec<TrigFactor>,
    pub pauli: PauliString,
}

impl<T: Real> PauliTerm<T> {
    pub fn new(coeff: T, factors: impl Into<Vec<TrigFactor>>, pauli: PauliString) -> Self {
        Self { coeff, factors: factors.into(), pauli }
    }

    pub fn weight(&self, k: &[T]) -> T {
        self.factors.iter().fold(self.coeff, |acc, f| acc * f.eval(k))
    }

    /// Largest axis index referenced, if any.
    pub fn max_axis(&self) -> Option<usize> {
        self.factors.iter().map(|f| f.axis).max()
    }

    /// Parses one term, resolving parameter names against `params`.
    pub fn parse(src: &str, params: &ModelParams<T>) -> Result<Self, ModelError> {
        let bad = |why: &str| ModelError::BadTerm { term: src.to_string(), reason: why.to_string() };
        let text = src.trim();
        let (head, pauli_src) = match text.find("pauli:") {
            Some(pos) => (&text[..pos], &text[pos..]),
            None => return Err(bad("missing trailing Pauli string")),
        };
        let pauli = PauliString::from_str(pauli_src).map_err(|e| bad(&e.to_string()))?;
        let head = head.trim();
        let head = match head.strip_suffix('*') {
            Some(h) => h,
            None if head.is_empty() || head == "-" || head == "+" => head,
            None => return Err(bad("factors must be joined to the Pauli string with `*`")),
        };

        let mut coeff = T::one();
        let mut factors = Vec::new();
        let head = head.trim();
        let head = if let Some(rest) = head.strip_prefix('-') {
            coeff = -coeff;
            rest
        } else {
            head.strip_prefix('+').unwrap_or(head)
        };
        if head.trim().is_empty() {
            return Ok(Self { coeff, factors, pauli });
        }
        for raw in head.split('*') {
            let mut tok = raw.trim();
            if let Some(rest) = tok.strip_prefix('-') {
                coeff = -coeff;
                tok = rest.trim();
            }
            if tok.is_empty() {
                return Err(bad("empty factor"));
            }
            if let Some(f) = parse_trig(tok) {
                factors.push(f.map_err(|why| bad(&why))?);
            } else if let Ok(v) = tok.parse::<f64>() {
                coeff *= T::lit(v);
            } else if tok.chars().all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
                && tok.starts_with(|ch: char| ch.is_ascii_alphabetic() || ch == '_')
            {
                coeff *= params.require(tok)?;
            } else {
                return Err(bad(&format!("unrecognised factor `{tok}`")));
            }
        }
        Ok(Self { coeff, factors, pauli })
    }
}

fn parse_trig(tok: &str) -> Option<Result<TrigFactor, String>> {
    let (trig, rest) =
        if let Some(r) = tok.strip_prefix("sin(") { (Trig::Sin, r) } else { (Trig::Cos, tok.strip_prefix("cos(")?) };
    let Some(axis_name) = rest.strip_suffix(')') else {
        return Some(Err(format!("unclosed trig factor `{tok}`")));
    };
    let axis = match axis_name.trim() {
        "k" | "kx" | "k0" => 0,
        "ky" | "k1" => 1,
        "kz" | "k2" => 2,
        other => return Some(Err(format!("unknown momentum axis `{other}`"))),
    };
    Some(Ok(TrigFactor { trig, axis }))
}

/// `H(k) = Σ_terms weight(k) · pauli`.
pub(crate) fn assemble<T: Real>(terms: &[PauliTerm<T>], bands: usize, k: &[T]) -> Matrix<T> {
    let mut h = Matrix::zeros(bands, bands);
    for term in terms {
        let w = term.weight(k);
        if w == T::zero() {
            continue;
        }
        h = &h + &term.pauli.matrix::<T>().scale_real(w);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numkit::Pauli;

    fn params() -> ModelParams<f64> {
        ModelParams::parse_assignments("mu=0.5, t=1, delta=2").unwrap()
    }

    #[test]
    fn parses_coefficients_and_trig() {
        let t = PauliTerm::parse("-2*t*cos(kx)*pauli:z", &params()).unwrap();
        assert_eq!(t.coeff, -2.0);
        assert_eq!(t.factors, vec![TrigFactor::cos(0)]);
        assert_eq!(t.pauli, PauliString::new([Pauli::Z]));

        let t = PauliTerm::parse("delta * sin(ky) * sin(kx) * pauli:y*x", &params()).unwrap();
        assert_eq!(t.coeff, 2.0);
        assert_eq!(t.factors, vec![TrigFactor::sin(1), TrigFactor::sin(0)]);
        assert_eq!(t.pauli.dim(), 4);

        let t = PauliTerm::parse("-mu*pauli:z", &params()).unwrap();
        assert_eq!(t.coeff, -0.5);
        let t = PauliTerm::parse("pauli:x", &params()).unwrap();
        assert_eq!(t.coeff, 1.0);
        let t = PauliTerm::parse("-pauli:x", &params()).unwrap();
        assert_eq!(t.coeff, -1.0);
    }

    #[test]
    fn rejects_malformed_terms() {
        let p = params();
        assert!(matches!(PauliTerm::parse("mu*z", &p), Err(ModelError::BadTerm { .. })));
        assert!(matches!(PauliTerm::parse("tan(kx)*pauli:z", &p), Err(ModelError::BadTerm { .. })));
        assert!(matches!(PauliTerm::parse("cos(kw)*pauli:z", &p), Err(ModelError::BadTerm { .. })));
        assert!(matches!(PauliTerm::parse("nope*pauli:z", &p), Err(ModelError::MissingParam(_))));
        assert!(matches!(PauliTerm::parse("mu pauli:z", &p), Err(ModelError::BadTerm { .. })));
    }
}
