use alloc::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{FieldCtx, FracIdeal};
use crate::arith::QuadElem;
use crate::classgroup::QForm;

/// Form `(a, b, c)` with `I(a, b, c) = [a, b0 + omega]` for a primitive ideal.
pub(crate) fn form_of_primitive(ctx: FieldCtx, a: &BigInt, b0: &BigInt) -> QForm {
    let d = BigInt::from(ctx.disc());
    let tr = if ctx.d().rem_euclid(4) == 1 { BigInt::one() } else { BigInt::zero() };
    let b = -(BigInt::from(2) * b0 + tr);
    let c = (&b * &b - &d) / (BigInt::from(4) * a);
    QForm::new(a.clone(), b, c)
}

/// Reduces `f`, returning the reduced form and the accumulated multiplier.
fn reduce_tracking(mut f: QForm, d: i64) -> (QForm, QuadElem) {
    let mut lam = QuadElem::one(d);
    while !f.is_reduced() {
        lam = &lam * &f.rho_multiplier(d);
        f = f.rho();
    }
    (f, lam)
}

/// Totally positive generator of a principal ideal in the narrow sense, or
/// `None` if the ideal has none.
///
/// Works by walking the cycle of reduced ideals of the ideal's class and
/// matching it against the principal cycle.
pub fn tp_generator(ideal: &FracIdeal) -> Option<QuadElem> {
    let ctx = ideal.ctx();
    let d = ctx.d();
    if ctx.is_rational() {
        return Some(ctx.rat(ideal.scale().clone()));
    }
    // principal cycle: key -> mu with I = mu O
    let (p0, mu0) = reduce_tracking(form_of_primitive(ctx, &BigInt::one(), &BigInt::zero()), d);
    let mut principal: BTreeMap<(BigInt, BigInt), QuadElem> = BTreeMap::new();
    let (mut f, mut mu) = (p0.clone(), mu0);
    loop {
        principal.entry(f.ideal_key()).or_insert_with(|| mu.clone());
        mu = &mu * &f.rho_multiplier(d);
        f = f.rho();
        if f == p0 {
            break;
        }
    }
    let (_, a, b, _) = ideal.hnf();
    let (c0, lam0) = reduce_tracking(form_of_primitive(ctx, &a, &b), d);
    let (mut f, mut lam) = (c0.clone(), lam0);
    let mut found = None;
    loop {
        if let Some(m) = principal.get(&f.ideal_key()) {
            // lam c = m O, so c = (m / lam) O
            found = Some(m.checked_div(&lam).expect("non-zero"));
            break;
        }
        lam = &lam * &f.rho_multiplier(d);
        f = f.rho();
        if f == c0 {
            break;
        }
    }
    let mut g = found?.scale(ideal.scale());
    if g.norm().is_negative() {
        match (ctx.fundamental_unit(), ctx.unit_norm()) {
            (Some(e), Some(-1)) => g = &g * &e,
            _ => return None,
        }
    }
    if g.embedding_sign(0) < 0 {
        g = -&g;
    }
    debug_assert!(g.is_totally_positive());
    debug_assert!(FracIdeal::principal(&g).ok().as_ref() == Some(ideal));
    if g.x.is_zero() && g.y.is_zero() {
        return None;
    }
    Some(g)
}
