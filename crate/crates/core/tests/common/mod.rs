#![allow(dead_code)]

use halftheta::arith::rat;
use halftheta::localsymbols::Sl2;
use halftheta::{FieldCtx, QuadElem};
use proptest::prelude::*;

pub fn ctx(d: i64) -> FieldCtx {
    FieldCtx::parse(&d.to_string()).unwrap()
}

/// `s + t omega`.
pub fn elem(ctx: FieldCtx, s: i64, t: i64) -> QuadElem {
    let w = ctx.omega();
    &ctx.int(s) + &w.scale(&rat(t, 1))
}

pub fn small_elem(ctx: FieldCtx, bound: i64) -> impl Strategy<Value = QuadElem> {
    let tb = if ctx.is_rational() { 0 } else { bound };
    (-bound..=bound, -tb..=tb).prop_map(move |(s, t)| elem(ctx, s, t)).prop_filter("non-zero", |x| !x.is_zero())
}

pub fn nonzero_rational(ctx: FieldCtx) -> impl Strategy<Value = QuadElem> {
    (small_elem(ctx, 40), 1i64..30).prop_map(move |(x, den)| x.scale(&rat(1, den)))
}

/// Words in `u+(x)`, `u-(x)` and `-1`.
pub fn sl2_word(ctx: FieldCtx, len: usize) -> impl Strategy<Value = Sl2> {
    proptest::collection::vec((0u8..3, small_elem(ctx, 3)), 1..=len).prop_map(move |w| {
        w.iter().fold(Sl2::identity(ctx), |m, (k, x)| match k {
            0 => m.mul(&Sl2::u_plus(x)),
            1 => m.mul(&Sl2::u_minus(x)),
            _ => m.mul(&Sl2::minus_one(ctx)),
        })
    })
}

/// Words in `u+(x)` and `u-(4x)`, which stay in `Gamma_1(4)`.
pub fn gamma1_4_word(ctx: FieldCtx, len: usize) -> impl Strategy<Value = Sl2> {
    proptest::collection::vec((0u8..2, small_elem(ctx, 3)), 1..=len).prop_map(move |w| {
        w.iter().fold(Sl2::identity(ctx), |m, (k, x)| match k {
            0 => m.mul(&Sl2::u_plus(x)),
            _ => m.mul(&Sl2::u_minus(&x.scale(&rat(4, 1)))),
        })
    })
}
