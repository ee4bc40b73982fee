use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

/// A finitely generated abelian group `Z^r ⊕ Z_{n1} ⊕ Z_{n2} ⊕ ...`.
///
/// Torsion orders are kept sorted so that equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    free_rank: u32,
    torsion: Vec<u32>,
}

impl AbelianGroup {
    /// # Panics
    /// If any torsion order is below 2.
    pub fn new(free_rank: u32, mut torsion: Vec<u32>) -> Self {
        assert!(torsion.iter().all(|&n| n >= 2), "torsion orders must be ≥ 2");
        torsion.sort_unstable();
        Self { free_rank, torsion }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn z() -> Self {
        Self::new(1, vec![])
    }

    pub fn z2() -> Self {
        Self::new(0, vec![2])
    }

    pub fn free_rank(&self) -> u32 {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u32] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_z(&self) -> bool {
        *self == Self::z()
    }

    pub fn is_z2(&self) -> bool {
        *self == Self::z2()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut torsion = self.torsion.clone();
        torsion.extend_from_slice(&other.torsion);
        Self::new(self.free_rank + other.free_rank, torsion)
    }

    /// `n` copies of `self`.
    pub fn times(&self, n: u32) -> Self {
        (0..n).fold(Self::zero(), |acc, _| acc.direct_sum(self))
    }

    /// Whether `other` is a direct summand of `self` in the structural sense.
    pub fn contains_summand(&self, other: &Self) -> bool {
        if other.free_rank > self.free_rank {
            return false;
        }
        let mut rest = self.torsion.clone();
        other.torsion.iter().all(|t| match rest.iter().position(|x| x == t) {
            Some(i) => {
                rest.remove(i);
                true
            }
            None => false,
        })
    }
}

impl std::iter::Sum for AbelianGroup {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a.direct_sum(&b))
    }
}

/// ASCII form: `0`, `Z`, `Z2`, `Z2^4`, `Z^3 + Z2`.
impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let n = self.torsion[i];
            let count = self.torsion[i..].iter().take_while(|&&x| x == n).count();
            parts.push(if count == 1 { format!("Z{n}") } else { format!("Z{n}^{count}") });
            i += count;
        }
        f.write_str(&parts.join(" + "))
    }
}

impl Serialize for AbelianGroup {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse `{0}` as an abelian group")]
pub struct ParseGroupError(pub String);

impl FromStr for AbelianGroup {
    type Err = ParseGroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseGroupError(s.to_string());
        if s.trim() == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        for part in s.split('+').map(str::trim) {
            let (base, count) = match part.split_once('^') {
                Some((b, c)) => (b, c.parse::<u32>().map_err(|_| err())?),
                None => (part, 1),
            };
            let summand = match base.strip_prefix('Z').ok_or_else(err)? {
                "" => Self::z(),
                n => {
                    let n: u32 = n.parse().map_err(|_| err())?;
                    if n < 2 {
                        return Err(err());
                    }
                    Self::new(0, vec![n])
                }
            };
            out = out.direct_sum(&summand.times(count));
        }
        Ok(out)
    }
}
