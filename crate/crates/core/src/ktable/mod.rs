//! KO-groups of a point, reduced KR/KQ-groups of spheres and tori, the real
//! periodic table, and per-class index metadata.
//!
//! Degrees are written as `KIndex(i)` for the group in degree `−i`, so
//! `KO^{-i}` is `ko_point(KIndex::new(i))`.

mod group;
mod tables;

use std::fmt;

use serde::Serialize;

pub use group::{AbelianGroup, ParseGroupError};
pub use tables::{
    class_metadata, generated_periodic_table, table_self_check, transcribed_periodic_table, ClassTablesEntry,
    HomotopyLabel, IndexTag,
};

use crate::symmetry::AZClass;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KTableError {
    #[error("class {0} is complex; only the eight real classes carry KR data")]
    ComplexClass(AZClass),
    #[error("dimension {0} is out of range")]
    BadDimension(usize),
}

/// A KR degree `−i`, reduced mod 8 (Bott periodicity).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct KIndex(u8);

impl KIndex {
    pub fn new(i: i64) -> Self {
        Self(i.rem_euclid(8) as u8)
    }

    pub fn get(self) -> u8 {
        self.0
    }

    /// Degree `−(i + n)`.
    pub fn shifted(self, n: i64) -> Self {
        Self::new(i64::from(self.0) + n)
    }
}

impl fmt::Display for KIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            f.write_str("0")
        } else {
            write!(f, "-{}", self.0)
        }
    }
}

/// `KO^{-i}(pt)`: `Z, Z2, Z2, 0, Z, 0, 0, 0` for `i = 0..7`.
pub fn ko_point(i: KIndex) -> AbelianGroup {
    match i.get() {
        0 | 4 => AbelianGroup::z(),
        1 | 2 => AbelianGroup::z2(),
        _ => AbelianGroup::zero(),
    }
}

/// `KR^{-i}(S^{1,d})`: the reduced group is `KO^{-(i−d)}`, the full one adds
/// the point summand `KO^{-i}`.
pub fn kr_sphere(i: KIndex, d: usize, reduced: bool) -> AbelianGroup {
    let top = ko_point(i.shifted(-(d as i64)));
    if reduced {
        top
    } else {
        ko_point(i).direct_sum(&top)
    }
}

fn binomial(n: usize, k: usize) -> u32 {
    (0..k).fold(1u64, |acc, j| acc * (n - j) as u64 / (j + 1) as u64) as u32
}

/// `KR^{-i}(T^d) = ⊕_k C(d,k) KO^{-(i−k)}`, with `k ≥ 1` when reduced.
pub fn kr_torus(i: KIndex, d: usize, reduced: bool) -> AbelianGroup {
    let start = usize::from(reduced);
    (start..=d).map(|k| ko_point(i.shifted(-(k as i64))).times(binomial(d, k))).sum()
}

/// `KQ^{-i} ≅ KR^{-(i+4)}`.
pub fn kq_shift(i: KIndex) -> KIndex {
    i.shifted(4)
}

pub fn kq_sphere(i: KIndex, d: usize, reduced: bool) -> AbelianGroup {
    kr_sphere(kq_shift(i), d, reduced)
}

pub fn kq_torus(i: KIndex, d: usize, reduced: bool) -> AbelianGroup {
    kr_torus(kq_shift(i), d, reduced)
}

/// Position of a real class in the cycle AI=0, BDI=1, ..., CI=7.
pub fn class_number(class: AZClass) -> Result<u8, KTableError> {
    AZClass::REAL.iter().position(|&c| c == class).map(|p| p as u8).ok_or(KTableError::ComplexClass(class))
}

/// Class number recomputed from the CS column: read the chiral flags from AI
/// down to `class`, split them into consecutive pairs, let each pair (or
/// trailing single) contribute `2^(len − 1)`, and subtract one.
pub fn class_number_from_code(class: AZClass) -> Result<u8, KTableError> {
    let pos = class_number(class)? as usize;
    let code: Vec<bool> = AZClass::REAL[..=pos].iter().map(|c| c.signature().cs).collect();
    let sum: u32 = code.chunks(2).map(|chunk| 1 << (chunk.len() - 1)).sum();
    Ok((sum - 1) as u8)
}

/// The CS column as a 0/1 string from AI down to `class` (e.g. `01010` for AII).
pub fn class_code(class: AZClass) -> Result<String, KTableError> {
    let pos = class_number(class)? as usize;
    Ok(AZClass::REAL[..=pos].iter().map(|c| if c.signature().cs { '1' } else { '0' }).collect())
}

/// Strong invariant group of `class` in dimension `d`: `KO^{-(k−d)}(pt)`.
pub fn periodic_table_entry(class: AZClass, d: usize) -> Result<AbelianGroup, KTableError> {
    if d == 0 {
        return Err(KTableError::BadDimension(d));
    }
    let k = class_number(class)?;
    Ok(ko_point(KIndex::new(i64::from(k) - d as i64)))
}

#[cfg(test)]
mod tests;
