use super::{
    chern_number, chiral_block, class_d_1d_z2, flatten, mod2_reduce, winding_1d, winding_3d, z2_wannier_2d,
    InvariantError, InvariantValue,
};
use crate::ktable::{class_metadata, IndexTag};
use crate::models::SampledBloch;
use crate::scalar::Real;
use crate::symmetry::{AZClass, AntiUnitaryOp, Classification, RealityConstraint, UnitaryOp};

/// Symmetry operators verified for a model, as consumed by [`dispatch`].
#[derive(Clone, Debug)]
pub struct Witnesses<T> {
    pub trs: Option<AntiUnitaryOp<T>>,
    pub phs: Option<AntiUnitaryOp<T>>,
    pub chiral: Option<UnitaryOp<T>>,
    pub reality: Option<RealityConstraint>,
}

impl<T> Default for Witnesses<T> {
    fn default() -> Self {
        Self { trs: None, phs: None, chiral: None, reality: None }
    }
}

impl<T: Real> From<&Classification<T>> for Witnesses<T> {
    fn from(c: &Classification<T>) -> Self {
        Self { trs: c.trs.clone(), phs: c.phs.clone(), chiral: c.chiral.clone(), reality: c.reality.clone() }
    }
}

/// Computes the strong invariant of `class` in the model's dimension by the
/// index formula listed for that table cell; empty cells give `Trivial`.
pub fn dispatch<T: Real>(
    class: AZClass,
    sampled: &SampledBloch<T>,
    witnesses: &Witnesses<T>,
) -> Result<InvariantValue, InvariantError> {
    let meta = class_metadata(class, sampled.dim())?;
    let n = sampled.grid_size();
    let Some(tag) = meta.index_tag else {
        return Ok(InvariantValue::trivial(n));
    };
    let need_chiral = || witnesses.chiral.as_ref().ok_or(InvariantError::MissingWitness { class, what: "chiral" });
    match tag {
        IndexTag::Ch1P => chern_number(&flatten(sampled, T::zero())?),
        IndexTag::Ch1W => winding_1d(&chiral_block(&flatten(sampled, T::zero())?, need_chiral()?)?),
        IndexTag::Ch3W => winding_3d(&chiral_block(&flatten(sampled, T::zero())?, need_chiral()?)?),
        IndexTag::Ch1WMod2 if class == AZClass::D => {
            let c = witnesses.phs.as_ref().ok_or(InvariantError::MissingWitness { class, what: "PHS" })?;
            class_d_1d_z2(sampled, c)
        }
        IndexTag::Ch1WMod2 => {
            let w = winding_1d(&chiral_block(&flatten(sampled, T::zero())?, need_chiral()?)?)?;
            mod2_reduce(w, witnesses.reality.as_ref())
        }
        IndexTag::Ch3WMod2 => {
            let w = winding_3d(&chiral_block(&flatten(sampled, T::zero())?, need_chiral()?)?)?;
            mod2_reduce(w, witnesses.reality.as_ref())
        }
        IndexTag::Ch1WMod2Reduced => {
            let theta = witnesses.trs.as_ref().ok_or(InvariantError::MissingWitness { class, what: "TRS" })?;
            z2_wannier_2d(&flatten(sampled, T::zero())?, theta)
        }
    }
}
