use alloc::vec::Vec;

use super::construct::{base_ideal, check_weights, construct_for_class};
use crate::classgroup::ClassGroup;
use crate::quadfield::{FieldCtx, GTriple, PrimePlace, Weight};
use crate::{Error, Result};

/// One admissible `S3` with the class `[d prod_{S3} p_v]` and the number of
/// wide classes squaring to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct S3Term {
    pub s3: Vec<PrimePlace>,
    pub target: usize,
    pub preimages: u64,
}

fn terms(group: &ClassGroup, weights: &[Weight]) -> Result<Vec<S3Term>> {
    let ctx = group.ctx();
    if !ctx.two_splits_completely() {
        return Err(Error::TwoNotSplit);
    }
    check_weights(ctx, weights)?;
    let n2 = ctx.s2_places().len();
    let ninf = weights.iter().filter(|w| **w == Weight::ThreeHalves).count();
    let t3 = ctx.t3_places();
    let mut out = Vec::new();
    for mask in 0u32..(1 << t3.len()) {
        let s3: Vec<PrimePlace> = (0..t3.len()).filter(|i| mask & (1 << i) != 0).map(|i| t3[i]).collect();
        if (n2 + s3.len() + ninf) % 2 != 0 {
            continue;
        }
        let target = group.class_of(&base_ideal(ctx, &s3)?);
        out.push(S3Term { preimages: group.sq_preimage_count(target), s3, target });
    }
    Ok(out)
}

/// Number of equivalence classes of `G`:
/// `[E+ : E^2] * sum_{S3} |Sq^{-1}([d prod_{S3} p_v])|`.
pub fn equiv_classes(ctx: FieldCtx, weights: &[Weight]) -> Result<(u64, Vec<S3Term>)> {
    let group = ClassGroup::narrow(ctx)?;
    let ts = terms(&group, weights)?;
    let total = ctx.tp_unit_index() * ts.iter().map(|t| t.preimages).sum::<u64>();
    Ok((total, ts))
}

/// One triple per equivalence class, built from class representatives and
/// totally positive units modulo squares.
pub fn realize_classes(ctx: FieldCtx, weights: &[Weight]) -> Result<Vec<GTriple>> {
    let group = ClassGroup::narrow(ctx)?;
    let mut out = Vec::new();
    for t in terms(&group, weights)? {
        for y in group.sq_preimages(t.target) {
            for u in ctx.tp_unit_reps() {
                let tr = construct_for_class(group.rep(y), &t.s3, &u, weights)?
                    .ok_or_else(|| Error::NotAdmissible("class equation not narrowly principal".into()))?;
                out.push(tr);
            }
        }
    }
    Ok(out)
}
