use num_traits::ToPrimitive;

use super::construct::{check_weights, construct_triple};
use super::count::equiv_classes;
use crate::arith::{factor, FACTOR_BOUND};
use crate::classgroup::{theorem2_check, ClassGroup, Thm2Case};
use crate::quadfield::{FieldCtx, GTriple, Weight};
use crate::{Error, Result};

/// Which class equation a witness satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExistCase {
    /// `(8 beta) d = a^2`, `S3` empty.
    C1,
    /// `(8 beta) d p = a^2`, `N(p) = 3`.
    C2,
    /// `(8 beta) d p p' = a^2`, 3 split.
    C3,
    /// Generic decision with `[d]`.
    Thm2Even,
    /// Generic decision with `[d p_v0]`.
    Thm2Odd,
}

impl ExistCase {
    pub fn label(self) -> &'static str {
        match self {
            ExistCase::C1 => "C1",
            ExistCase::C2 => "C2",
            ExistCase::C3 => "C3",
            ExistCase::Thm2Even => "thm2-even",
            ExistCase::Thm2Odd => "thm2-odd",
        }
    }
}

/// The three congruence conditions on `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Criteria {
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExistenceReport {
    pub exists: bool,
    pub case: ExistCase,
    pub criteria: Option<Criteria>,
    pub witness: Option<GTriple>,
    pub class_count: Option<u64>,
}

/// Congruence decision for `Q(sqrt D)`, `D = 1 mod 8`.
pub fn quadratic_criteria(ctx: FieldCtx, weights: &[Weight]) -> Result<ExistenceReport> {
    if ctx.is_rational() {
        return Err(Error::InvalidField("congruence criteria need a quadratic field".into()));
    }
    if !ctx.two_splits_completely() {
        return Err(Error::TwoNotSplit);
    }
    check_weights(ctx, weights)?;
    let d = ctx.d();
    let ps: alloc::vec::Vec<u64> =
        factor(&d.into(), FACTOR_BOUND)?.into_iter().map(|(p, _)| p).collect();
    let c1 = ps.iter().all(|p| p % 4 == 1);
    let c2 = ps.iter().all(|p| p % 3 != 2);
    let c3 = d.to_u64().map(|x| x % 24 == 1).unwrap_or(false) && c1;
    let crit = Criteria { c1, c2, c3 };
    let ninf = weights.iter().filter(|w| **w == Weight::ThreeHalves).count();
    let (exists, case) = if ninf % 2 == 0 {
        if c1 {
            (true, ExistCase::C1)
        } else if c3 {
            (true, ExistCase::C3)
        } else {
            (false, ExistCase::C1)
        }
    } else {
        (c2, ExistCase::C2)
    };
    Ok(ExistenceReport { exists, case, criteria: Some(crit), witness: None, class_count: None })
}

/// Full report: generic class-group decision, congruence case (quadratic
/// fields), a witness triple and the number of equivalence classes.
pub fn existence_report(ctx: FieldCtx, weights: &[Weight]) -> Result<ExistenceReport> {
    if !ctx.two_splits_completely() {
        return Err(Error::TwoNotSplit);
    }
    check_weights(ctx, weights)?;
    let group = ClassGroup::narrow(ctx)?;
    let generic = theorem2_check(&group, weights)?;
    let (case, criteria) = if ctx.is_rational() {
        let c = match generic.case {
            Thm2Case::Even => ExistCase::Thm2Even,
            Thm2Case::Odd => ExistCase::Thm2Odd,
        };
        (c, None)
    } else {
        let q = quadratic_criteria(ctx, weights)?;
        if q.exists != generic.exists {
            return Err(Error::NotAdmissible("congruence and class-group decisions disagree".into()));
        }
        (q.case, q.criteria)
    };
    if !generic.exists {
        return Ok(ExistenceReport { exists: false, case, criteria, witness: None, class_count: Some(0) });
    }
    let witness = construct_triple(ctx, weights)?;
    let (count, _) = equiv_classes(ctx, weights)?;
    Ok(ExistenceReport { exists: true, case, criteria, witness, class_count: Some(count) })
}
