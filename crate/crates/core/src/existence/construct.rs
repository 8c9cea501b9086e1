use alloc::vec::Vec;

use num_traits::ToPrimitive;

use super::criteria::{quadratic_criteria, ExistCase};
use super::norms::norm_form_reps;
use crate::arith::{rat, QuadElem};
use crate::quadfield::{tp_generator, FieldCtx, FracIdeal, GTriple, PrimePlace, Weight};
use crate::{Error, Result};

pub(crate) fn check_weights(ctx: FieldCtx, weights: &[Weight]) -> Result<()> {
    if weights.len() != ctx.degree() {
        return Err(Error::InvalidWeights(alloc::format!(
            "expected {} weights, got {}",
            ctx.degree(),
            weights.len()
        )));
    }
    Ok(())
}

/// `d * prod_{S3} p_v`.
pub(crate) fn base_ideal(ctx: FieldCtx, s3: &[PrimePlace]) -> Result<FracIdeal> {
    let mut out = ctx.different();
    for v in s3 {
        out = out.mul(&v.ideal())?;
    }
    Ok(out)
}

/// Membership in `G`: total positivity, `S3 ⊆ T3`, the parity condition and
/// `(8 beta) d prod_{S3} p_v = a^2`.
pub fn is_in_g(t: &GTriple) -> bool {
    let ctx = t.ctx();
    if t.weights.len() != ctx.degree() || !ctx.two_splits_completely() {
        return false;
    }
    if t.beta.is_zero() || !t.beta.is_totally_positive() {
        return false;
    }
    let t3 = ctx.t3_places();
    if !t.s3.iter().all(|v| t3.contains(v)) {
        return false;
    }
    if (t.s2().len() + t.s3.len() + t.s_inf().len()) % 2 != 0 {
        return false;
    }
    let lhs = base_ideal(ctx, &t.s3).and_then(|b| b.mul_elem(&t.beta.scale(&rat(8, 1))));
    let rhs = t.ideal.mul(&t.ideal);
    matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
}

/// The triple `(u sigma / 8, S3, a)` where `sigma` is a totally positive
/// generator of `a^2 (d prod_{S3} p_v)^{-1}`; `None` if that ideal is not
/// narrowly principal.
pub fn construct_for_class(
    a: &FracIdeal,
    s3: &[PrimePlace],
    unit: &QuadElem,
    weights: &[Weight],
) -> Result<Option<GTriple>> {
    let ctx = a.ctx();
    check_weights(ctx, weights)?;
    let j = a.mul(a)?.div(&base_ideal(ctx, s3)?)?;
    let sigma = match tp_generator(&j) {
        Some(s) => s,
        None => return Ok(None),
    };
    let beta = (unit * &sigma).scale(&rat(1, 8));
    let t = GTriple::new(beta, s3.to_vec(), a.clone(), weights.to_vec());
    Ok(Some(t.normalize()?))
}

/// `prod q^{e_q}` with `e_q = ord_q(rho) / 2`, rounded up at `odd` if given.
fn half_ideal(rho: &QuadElem, odd: Option<&PrimePlace>) -> Result<FracIdeal> {
    let ctx = ctx_of(rho);
    let fac = FracIdeal::principal(rho)?.factor()?;
    let mut half = Vec::new();
    for (v, e) in fac {
        let h = if Some(&v) == odd {
            (e + 1) / 2
        } else {
            if e % 2 != 0 {
                return Err(Error::NotAdmissible(alloc::format!("odd order of rho at {v}")));
            }
            e / 2
        };
        half.push((v, h));
    }
    Ok(FracIdeal::from_factorization(ctx, &half))
}

fn ctx_of(x: &QuadElem) -> FieldCtx {
    if x.d == 1 {
        FieldCtx::rational()
    } else {
        FieldCtx::quadratic(x.d).expect("valid field")
    }
}

/// Smallest odd `v > 0` with `n = k u^2 + v^2`.
fn smallest_odd_v(n: u64, k: u64) -> Result<u64> {
    norm_form_reps(n, k)
        .into_iter()
        .map(|(_, v)| v)
        .filter(|v| v % 2 == 1)
        .min()
        .ok_or_else(|| Error::NotAdmissible(alloc::format!("{n} is not of the form {k}u^2 + v^2")))
}

/// An explicit element of `G` for the weights, or `None` if none exists.
/// Over `Q` the two classical triples; over `Q(sqrt D)` the constructions
/// from `D = u^2 + v^2` (cases C1, C3) or `D = 3u^2 + v^2` (case C2) with
/// `rho = (v + sqrt D)/2` for the smallest odd admissible `v`, and
/// `beta = sqrt(D) rho / 8` (or `/24` in C3).
pub fn construct_triple(ctx: FieldCtx, weights: &[Weight]) -> Result<Option<GTriple>> {
    check_weights(ctx, weights)?;
    if ctx.is_rational() {
        let t = match weights[0] {
            Weight::Half => GTriple::new(ctx.rat(rat(1, 24)), ctx.t3_places(), FracIdeal::unit(ctx), weights.to_vec()),
            Weight::ThreeHalves => GTriple::new(ctx.rat(rat(1, 8)), Vec::new(), FracIdeal::unit(ctx), weights.to_vec()),
        };
        return Ok(Some(t));
    }
    let report = quadratic_criteria(ctx, weights)?;
    if !report.exists {
        return Ok(None);
    }
    let d = ctx.d();
    let dd = d.to_u64().expect("positive");
    let sqrt_d = QuadElem::sqrt_d(d);
    let rho_of = |v: u64| -> QuadElem { ctx.elem(rat(v as i64, 2), rat(1, 2)) };
    let t = match report.case {
        ExistCase::C1 | ExistCase::C3 => {
            let v = smallest_odd_v(dd, 1)?;
            let rho = rho_of(v);
            let a = ctx.different().mul(&half_ideal(&rho, None)?)?;
            let (den, s3) = if report.case == ExistCase::C1 { (8, Vec::new()) } else { (24, ctx.t3_places()) };
            let beta = (&sqrt_d * &rho).scale(&rat(1, den));
            GTriple::new(beta, s3, a, weights.to_vec())
        }
        _ => {
            let v = smallest_odd_v(dd, 3)?;
            let rho = rho_of(v);
            let q3 = ctx
                .t3_places()
                .into_iter()
                .find(|w| w.valuation(&rho).map(|o| o > 0).unwrap_or(false))
                .ok_or_else(|| Error::NotAdmissible("rho prime to 3".into()))?;
            let a = ctx.different().mul(&half_ideal(&rho, Some(&q3))?)?;
            let beta = (&sqrt_d * &rho).scale(&rat(1, 8));
            GTriple::new(beta, alloc::vec![q3], a, weights.to_vec())
        }
    };
    let t = t.normalize()?;
    if !is_in_g(&t) {
        return Err(Error::NotAdmissible(alloc::format!("constructed triple {t} fails membership")));
    }
    Ok(Some(t))
}

