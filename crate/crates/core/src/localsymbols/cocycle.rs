use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::hilbert::{hilbert_symbol, Place};
use super::jacobi::{jacobi, jacobi_lower, jacobi_upper};
use super::Sl2;
use crate::arith::{mod_inv, QuadElem};
use crate::quadfield::{FieldCtx, PrimePlace};
use crate::{Error, Result};

/// Local splitting `s_v` of the Kubota cocycle on `SL2(O_v)`:
/// `1` if `c` is a unit, `<c, d>_v` if `c` lies in the prime, `<-1, d>_v`
/// if `c = 0`.
pub fn splitting_s(g: &Sl2, v: &PrimePlace) -> Result<i8> {
    for x in [&g.a, &g.b, &g.c, &g.d] {
        if !x.is_zero() && v.valuation(x)? < 0 {
            return Err(Error::NotIntegral);
        }
    }
    let place = Place::Finite(*v);
    if g.c.is_zero() {
        return hilbert_symbol(&QuadElem::from_int(-1, g.c.d), &g.d, &place);
    }
    if v.valuation(&g.c)? == 0 {
        return Ok(1);
    }
    hilbert_symbol(&g.c, &g.d, &place)
}

fn x_of(g: &Sl2) -> &QuadElem {
    if g.c.is_zero() {
        &g.d
    } else {
        &g.c
    }
}

/// Kubota cocycle `c(g, h) = <x(g) x(gh), x(h) x(gh)>_v`, where `x(g) = c`,
/// or `d` when `c = 0`.
pub fn kubota_cocycle(g: &Sl2, h: &Sl2, place: &Place) -> Result<i8> {
    let gh = g.mul(h);
    let xgh = x_of(&gh);
    hilbert_symbol(&(x_of(g) * xgh), &(x_of(h) * xgh), place)
}

/// `v0(g) = prod_{v finite} s_v(g)` by enumerating the places dividing `2c`.
pub fn v0_by_places(g: &Sl2, ctx: FieldCtx) -> Result<i8> {
    if !g.is_integral() {
        return Err(Error::NotIntegral);
    }
    let mut places = ctx.s2_places();
    if g.c.is_zero() {
        for p in crate::arith::factor(&BigInt::from(ctx.disc()), crate::arith::FACTOR_BOUND)? {
            places.extend(ctx.primes_above(p.0));
        }
    } else {
        let ideal = crate::quadfield::FracIdeal::principal(&g.c)?;
        for (v, _) in ideal.factor()? {
            places.push(v);
        }
    }
    places.sort();
    places.dedup();
    let mut r = 1i8;
    for v in &places {
        r *= splitting_s(g, v)?;
    }
    Ok(r)
}

/// `v0(g)` without factoring `c`: the dyadic factors come from Hilbert
/// symbols in `Q_2`, and the odd part is the quadratic residue symbol
/// `(d / c)`, evaluated with Jacobi symbols on the content of `c` and on
/// `O / (c0) = Z / N(c0)` for the primitive part `c0`.
pub fn v0(g: &Sl2, ctx: FieldCtx) -> Result<i8> {
    if !g.is_integral() {
        return Err(Error::NotIntegral);
    }
    if !ctx.two_splits_completely() {
        return Err(Error::TwoNotSplit);
    }
    let mut r = 1i8;
    for v in ctx.s2_places() {
        r *= splitting_s(g, &v)?;
    }
    if g.c.is_zero() {
        return Ok(r);
    }
    let (cs, ct) = g.c.omega_coords();
    let (cs, ct) = (cs.to_integer(), ct.to_integer());
    let (ds, dt) = g.d.omega_coords();
    let (ds, dt) = (ds.to_integer(), dt.to_integer());
    let content = cs.gcd(&ct);
    let (_, g_odd) = crate::arith::split_p(&content, 2);
    if ctx.is_rational() {
        return Ok(r * jacobi(&ds, &g_odd)?);
    }
    // content part: prod_{p | g odd} (N(d)/p)^{ord_p g}
    let nd = g.d.norm().to_integer();
    r *= jacobi(&nd, &g_odd)?;
    // primitive part c0 = x + y omega
    let (x, y) = (&cs / &content, &ct / &content);
    let n0 = crate::quadfield::omega_norm(&x, &y, ctx.d()).abs();
    let (_, n_odd) = crate::arith::split_p(&n0, 2);
    if !n_odd.is_one() {
        // omega = -x / y in O / (c0)
        let yinv = mod_inv(&y, &n_odd).ok_or(Error::NotIntegral)?;
        let w = (-&x * yinv).mod_floor(&n_odd);
        let dres = (&ds + &dt * w).mod_floor(&n_odd);
        r *= jacobi(&dres, &n_odd)?;
    }
    Ok(r)
}

/// Closed form of `v0` over `Q`: `(d/c)^*` for odd `c`, `(c/d)_*` for even `c`.
pub fn v0_rational_closed_form(c: &BigInt, d: &BigInt) -> Result<i8> {
    if c.is_odd() {
        jacobi_upper(d, c)
    } else {
        jacobi_lower(c, d)
    }
}
