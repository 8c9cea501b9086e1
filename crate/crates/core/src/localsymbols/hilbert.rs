use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::jacobi;
use crate::arith::QuadElem;
use crate::quadfield::{PlaceKind, PrimePlace};
use crate::{Error, Result};

/// A place of the base field: a real embedding (index 0 or 1) or a finite place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Real(usize),
    Finite(PrimePlace),
}

fn legendre_of(n: &BigInt, p: u64) -> i8 {
    jacobi(n, &BigInt::from(p)).expect("odd prime")
}

/// Quadratic character of the residue field applied to a `v`-unit, `v` odd.
pub fn unit_char(u: &QuadElem, v: &PrimePlace) -> Result<i8> {
    match v.kind {
        PlaceKind::Inert => {
            // Frobenius is conjugation, so the norm to F_p detects squares.
            let n = u.norm();
            let p = BigInt::from(v.p);
            let inv = crate::arith::mod_inv(n.denom(), &p).ok_or(Error::NotIntegral)?;
            Ok(legendre_of(&(n.numer() * inv), v.p))
        }
        _ => {
            let r = v.residue_at(u, 1)?;
            Ok(legendre_of(&r.value, v.p))
        }
    }
}

fn split_off(x: &QuadElem, v: &PrimePlace) -> Result<(i64, QuadElem)> {
    let a = v.valuation(x)?;
    let pi = v.uniformizer();
    let u = if a >= 0 { x.checked_div(&pi.pow(a as u32))? } else { x * &pi.pow((-a) as u32) };
    Ok((a, u))
}

fn dyadic_eps(u: u32) -> u32 {
    ((u - 1) / 2) % 2
}

fn dyadic_omega(u: u32) -> u32 {
    ((u * u - 1) / 8) % 2
}

/// Hilbert symbol `<a, b>_v` of non-zero elements.
pub fn hilbert_symbol(a: &QuadElem, b: &QuadElem, place: &Place) -> Result<i8> {
    a.same_field(b)?;
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroValuation);
    }
    match place {
        Place::Real(i) => Ok(if a.embedding_sign(*i) < 0 && b.embedding_sign(*i) < 0 { -1 } else { 1 }),
        Place::Finite(v) if v.p == 2 => {
            if !v.is_degree_one_unramified() {
                return Err(Error::NonSplitDyadic);
            }
            let (al, u) = v.qp_embed(a, 3)?;
            let (be, w) = v.qp_embed(b, 3)?;
            let u = u.value.to_u32().expect("mod 8");
            let w = w.value.to_u32().expect("mod 8");
            let e = dyadic_eps(u) * dyadic_eps(w)
                + (al.rem_euclid(2) as u32) * dyadic_omega(w)
                + (be.rem_euclid(2) as u32) * dyadic_omega(u);
            Ok(if e % 2 == 0 { 1 } else { -1 })
        }
        Place::Finite(v) => {
            let (al, u) = split_off(a, v)?;
            let (be, w) = split_off(b, v)?;
            let mut r = 1i8;
            if (al * be).rem_euclid(2) == 1 {
                r *= unit_char(&QuadElem::from_int(-1, a.d), v)?;
            }
            if be.rem_euclid(2) == 1 {
                r *= unit_char(&u, v)?;
            }
            if al.rem_euclid(2) == 1 {
                r *= unit_char(&w, v)?;
            }
            Ok(r)
        }
    }
}
