use alloc::vec::Vec;

use super::ClassGroup;
use crate::quadfield::{PrimePlace, Weight};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Thm2Case {
    /// `|S2| + |S_inf|` even: test `[d]`.
    Even,
    /// `|S2| + |S_inf|` odd: test `[d p_v0]` for a fixed `v0` in `T3`.
    Odd,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thm2Report {
    pub exists: bool,
    pub case: Thm2Case,
    /// A set `S3` for which the class equation is solvable, when one exists.
    pub s3: Option<Vec<PrimePlace>>,
}

/// Existence of an admissible triple for the given weights, decided in
/// `Cl+ / Cl+^2`.
pub fn theorem2_check(group: &ClassGroup, weights: &[Weight]) -> Result<Thm2Report> {
    let ctx = group.ctx();
    if !ctx.two_splits_completely() {
        return Err(Error::TwoNotSplit);
    }
    if weights.len() != ctx.degree() {
        return Err(Error::InvalidWeights(alloc::format!("expected {} weights", ctx.degree())));
    }
    let n2 = ctx.s2_places().len();
    let ninf = weights.iter().filter(|w| **w == Weight::ThreeHalves).count();
    let t3 = ctx.t3_places();
    let squares = group.squares();
    let dclass = group.class_of(&ctx.different());
    let classes: Vec<usize> = t3.iter().map(|v| group.class_of(&v.ideal())).collect();
    let case = if (n2 + ninf) % 2 == 0 { Thm2Case::Even } else { Thm2Case::Odd };
    let (base, fixed) = match case {
        Thm2Case::Even => (dclass, None),
        Thm2Case::Odd => {
            if t3.is_empty() {
                return Ok(Thm2Report { exists: false, case, s3: None });
            }
            (group.mul(dclass, classes[0]), Some(0usize))
        }
    };
    for mask in 0u32..(1 << t3.len()) {
        if mask.count_ones() % 2 != 0 {
            continue;
        }
        let mut c = base;
        for (i, &k) in classes.iter().enumerate() {
            if mask & (1 << i) != 0 {
                c = group.mul(c, k);
            }
        }
        if squares.contains(&c) {
            let mut odd = mask;
            if let Some(i) = fixed {
                odd ^= 1 << i;
            }
            let s3 = (0..t3.len()).filter(|i| odd & (1 << i) != 0).map(|i| t3[i]).collect();
            return Ok(Thm2Report { exists: true, case, s3: Some(s3) });
        }
    }
    Ok(Thm2Report { exists: false, case, s3: None })
}
