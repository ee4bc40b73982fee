//! Transcribed class tables, kept apart from the formulas in the parent
//! module so that [`table_self_check`] can compare the two.

use std::fmt;

use serde::Serialize;

use super::{class_number, kr_sphere, periodic_table_entry, AbelianGroup, KIndex, KTableError};
use crate::symmetry::AZClass;

/// How a bulk invariant is computed from the flattened Hamiltonian.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum IndexTag {
    /// First Chern character of the occupied projector.
    #[serde(rename = "ch1(p)")]
    Ch1P,
    /// 1d winding of the chiral block.
    #[serde(rename = "ch1(w)")]
    Ch1W,
    /// Z2-valued 1d odd index.
    #[serde(rename = "ch1^(2)(w)")]
    Ch1WMod2,
    /// Z2-valued odd index after reduction from 2d to 1d.
    #[serde(rename = "ch1^(2)(w)_{2->1}")]
    Ch1WMod2Reduced,
    /// 3d winding of the chiral block.
    #[serde(rename = "ch3(w)")]
    Ch3W,
    /// Z2-valued 3d odd index.
    #[serde(rename = "ch3^(2)(w)")]
    Ch3WMod2,
}

impl IndexTag {
    pub fn label(self) -> &'static str {
        match self {
            IndexTag::Ch1P => "ch1(p)",
            IndexTag::Ch1W => "ch1(w)",
            IndexTag::Ch1WMod2 => "ch1^(2)(w)",
            IndexTag::Ch1WMod2Reduced => "ch1^(2)(w)_{2->1}",
            IndexTag::Ch3W => "ch3(w)",
            IndexTag::Ch3WMod2 => "ch3^(2)(w)",
        }
    }
}

impl fmt::Display for IndexTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// `π_level(F_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HomotopyLabel {
    pub level: u8,
    pub fredholm: u8,
}

impl fmt::Display for HomotopyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pi{}(F{})", self.level, self.fredholm)
    }
}

impl Serialize for HomotopyLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassTablesEntry {
    pub class: AZClass,
    pub d: usize,
    pub group: AbelianGroup,
    /// `0`, `-2` or `-4` for `KO^0`, `KO^-2`, `KO^-4`; absent for a zero entry.
    pub ko_label: Option<i8>,
    /// `i` of the Fredholm classifying space `F_i`.
    pub fredholm_label: Option<u8>,
    pub homotopy_label: Option<HomotopyLabel>,
    /// `i` of the bulk source `KR^{-i}(X)`.
    pub source_exponent: Option<u8>,
    pub index_tag: Option<IndexTag>,
}

// Rows in class-number order AI..CI, columns d = 1, 2, 3.
const PERIODIC: [[&str; 3]; 8] = [
    ["0", "0", "0"],
    ["Z", "0", "0"],
    ["Z2", "Z", "0"],
    ["Z2", "Z2", "Z"],
    ["0", "Z2", "Z2"],
    ["Z", "0", "Z2"],
    ["0", "Z", "0"],
    ["0", "0", "Z"],
];

const KO_LABEL: [[Option<i8>; 3]; 8] = [
    [None, None, None],
    [Some(0), None, None],
    [Some(-2), Some(0), None],
    [Some(-2), Some(-2), Some(0)],
    [None, Some(-2), Some(-2)],
    [Some(-4), None, Some(-2)],
    [None, Some(-4), None],
    [None, None, Some(-4)],
];

const FREDHOLM: [[Option<u8>; 3]; 8] = [
    [None, None, None],
    [Some(0), None, None],
    [Some(1), Some(0), None],
    [Some(2), Some(1), Some(0)],
    [None, Some(2), Some(1)],
    [Some(4), None, Some(2)],
    [None, Some(4), None],
    [None, None, Some(4)],
];

// (level, i) of π_level(F_i)
const HOMOTOPY: [[Option<(u8, u8)>; 3]; 8] = [
    [None, None, None],
    [Some((0, 0)), None, None],
    [Some((1, 1)), Some((0, 0)), None],
    [Some((0, 2)), Some((1, 1)), Some((0, 0))],
    [None, Some((0, 2)), Some((1, 1))],
    [Some((0, 4)), None, Some((0, 2))],
    [None, Some((0, 4)), None],
    [None, None, Some((0, 4))],
];

const SOURCE: [[Option<u8>; 3]; 8] = [
    [None, None, None],
    [Some(1), None, None],
    [Some(3), Some(2), None],
    [Some(3), Some(4), Some(3)],
    [None, Some(4), Some(5)],
    [Some(5), None, Some(5)],
    [None, Some(6), None],
    [None, None, Some(7)],
];

const TAG: [[Option<IndexTag>; 3]; 8] = {
    use IndexTag::*;
    [
        [None, None, None],
        [Some(Ch1W), None, None],
        [Some(Ch1WMod2), Some(Ch1P), None],
        [Some(Ch1WMod2), Some(Ch1WMod2Reduced), Some(Ch3W)],
        [None, Some(Ch1WMod2Reduced), Some(Ch3WMod2)],
        [Some(Ch1W), None, Some(Ch3WMod2)],
        [None, Some(Ch1P), None],
        [None, None, Some(Ch3W)],
    ]
};

fn cell(class: AZClass, d: usize) -> Result<(usize, usize), KTableError> {
    let k = class_number(class)? as usize;
    if !(1..=3).contains(&d) {
        return Err(KTableError::BadDimension(d));
    }
    Ok((k, d - 1))
}

/// The transcribed metadata for a real class in `d ∈ {1, 2, 3}`.
pub fn class_metadata(class: AZClass, d: usize) -> Result<ClassTablesEntry, KTableError> {
    let (r, c) = cell(class, d)?;
    Ok(ClassTablesEntry {
        class,
        d,
        group: PERIODIC[r][c].parse().expect("static group"),
        ko_label: KO_LABEL[r][c],
        fredholm_label: FREDHOLM[r][c],
        homotopy_label: HOMOTOPY[r][c].map(|(level, fredholm)| HomotopyLabel { level, fredholm }),
        source_exponent: SOURCE[r][c],
        index_tag: TAG[r][c],
    })
}

/// `(class, d, group)` from the formula, for the real classes and d = 1..3.
pub fn generated_periodic_table() -> Vec<(AZClass, usize, AbelianGroup)> {
    table_cells(|class, d| periodic_table_entry(class, d).expect("real class"))
}

/// `(class, d, group)` as transcribed.
pub fn transcribed_periodic_table() -> Vec<(AZClass, usize, AbelianGroup)> {
    table_cells(|class, d| class_metadata(class, d).expect("real class").group)
}

fn table_cells(f: impl Fn(AZClass, usize) -> AbelianGroup) -> Vec<(AZClass, usize, AbelianGroup)> {
    AZClass::REAL
        .iter()
        .flat_map(|&class| (1..=3).map(move |d| (class, d)))
        .map(|(class, d)| (class, d, f(class, d)))
        .collect()
}

/// Cross-checks the transcribed tables against the formulas and against
/// each other. Returns one message per disagreement.
pub fn table_self_check() -> Vec<String> {
    let mut issues = Vec::new();
    for (class, d, group) in transcribed_periodic_table() {
        let at = format!("{class} d={d}");
        let formula = periodic_table_entry(class, d).expect("real class");
        if formula != group {
            issues.push(format!("{at}: formula gives {formula}, table has {group}"));
        }
        let meta = class_metadata(class, d).expect("real class");
        let nonzero = !group.is_trivial();
        let present = [
            meta.ko_label.is_some(),
            meta.fredholm_label.is_some(),
            meta.homotopy_label.is_some(),
            meta.source_exponent.is_some(),
            meta.index_tag.is_some(),
        ];
        if present.iter().any(|&p| p != nonzero) {
            issues.push(format!("{at}: metadata cells do not match the nonzero pattern"));
        }
        if let Some(label) = meta.ko_label {
            let ko = super::ko_point(KIndex::new(-i64::from(label)));
            let ok = if group.is_z2() { label == -2 } else { ko == group };
            if !ok {
                issues.push(format!("{at}: KO label {label} inconsistent with {group}"));
            }
        }
        if let Some(i) = meta.source_exponent {
            let sphere = kr_sphere(KIndex::new(i64::from(i)), d, true);
            if sphere != group {
                issues.push(format!("{at}: source KR^-{i} gives {sphere} on the sphere, table has {group}"));
            }
        }
        if let (Some(h), Some(f)) = (meta.homotopy_label, meta.fredholm_label) {
            // π1 appears exactly on F1 cells
            if (h.level == 1) != (f == 1) || (h.level == 0 && h.fredholm != f) {
                issues.push(format!("{at}: homotopy label {h} inconsistent with F{f}"));
            }
        }
    }
    issues
}
