use std::fmt;
use std::str::FromStr;

use num_complex::Complex;

use super::Matrix;
use crate::scalar::Real;

/// One of σ_0, σ_x, σ_y, σ_z.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    pub fn matrix<T: Real>(self) -> Matrix<T> {
        let o = T::zero();
        let l = T::one();
        let c = |re: T, im: T| Complex::new(re, im);
        let rows = match self {
            Pauli::I => [[c(l, o), c(o, o)], [c(o, o), c(l, o)]],
            Pauli::X => [[c(o, o), c(l, o)], [c(l, o), c(o, o)]],
            Pauli::Y => [[c(o, o), c(o, -l)], [c(o, l), c(o, o)]],
            Pauli::Z => [[c(l, o), c(o, o)], [c(o, o), c(-l, o)]],
        };
        Matrix::from_row_major(2, 2, rows.iter().flatten().copied().collect())
    }

    fn letter(self) -> char {
        match self {
            Pauli::I => '0',
            Pauli::X => 'x',
            Pauli::Y => 'y',
            Pauli::Z => 'z',
        }
    }
}

/// Tensor product of Pauli matrices, leftmost factor outermost.
///
/// Textual form is `pauli:y*x` (= σ_y ⊗ σ_x); `0`, `i` or `1` name σ_0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString(pub Vec<Pauli>);

impl PauliString {
    pub fn new(factors: impl Into<Vec<Pauli>>) -> Self {
        Self(factors.into())
    }

    /// Matrix dimension `2^len`.
    pub fn dim(&self) -> usize {
        1 << self.0.len()
    }

    pub fn matrix<T: Real>(&self) -> Matrix<T> {
        let mut factors = self.0.iter();
        let first = match factors.next() {
            Some(p) => p.matrix(),
            None => return Matrix::identity(1),
        };
        factors.fold(first, |acc, p| acc.kron(&p.matrix()))
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&p| p == Pauli::I)
    }

    /// Every Pauli string of `factors` factors, in lexicographic order.
    pub fn all(factors: usize) -> Vec<PauliString> {
        let mut out = vec![PauliString(Vec::new())];
        for _ in 0..factors {
            out = out
                .into_iter()
                .flat_map(|s| {
                    Pauli::ALL.iter().map(move |&p| {
                        let mut v = s.0.clone();
                        v.push(p);
                        PauliString(v)
                    })
                })
                .collect();
        }
        out
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pauli:")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", p.letter())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid Pauli string `{0}` (expected e.g. `pauli:y` or `pauli:0*x`)")]
pub struct ParsePauliError(pub String);

impl FromStr for PauliString {
    type Err = ParsePauliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim().strip_prefix("pauli:").ok_or_else(|| ParsePauliError(s.to_string()))?;
        let factors = body
            .split('*')
            .map(|tok| match tok.trim() {
                "0" | "i" | "1" | "I" => Ok(Pauli::I),
                "x" | "X" => Ok(Pauli::X),
                "y" | "Y" => Ok(Pauli::Y),
                "z" | "Z" => Ok(Pauli::Z),
                _ => Err(ParsePauliError(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if factors.is_empty() {
            return Err(ParsePauliError(s.to_string()));
        }
        Ok(PauliString(factors))
    }
}
