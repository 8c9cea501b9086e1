use crate::arith::QuadElem;
use crate::quadfield::{PlaceKind, PrimePlace};
use crate::Result;

/// Precision of the scan, one above the largest possible answer.
const M_MAX: u32 = 4;

/// `min { ord_v(a^2 - 1) : a in O_v^x }`, by scanning unit representatives
/// modulo `p^M_MAX`.
pub fn min_unit_sq_val(v: &PrimePlace) -> Result<u32> {
    let d = v.d;
    let pk = v.p.pow(M_MAX) as i64;
    let cap = M_MAX as i64 * v.e() as i64;
    let w = QuadElem::omega(d);
    let t_range = if v.kind == PlaceKind::Rational { 0..1 } else { 0..pk };
    let one = QuadElem::one(d);
    let mut best = cap;
    for t in t_range {
        for s in 0..pk {
            let a = &QuadElem::from_int(s, d) + &w.scale(&crate::arith::rat(t, 1));
            if a.is_zero() || v.valuation(&a)? != 0 {
                continue;
            }
            let e = &(&a * &a) - &one;
            let o = if e.is_zero() { cap } else { v.valuation(&e)?.min(cap) };
            if o < best {
                best = o;
                if best == 0 {
                    return Ok(0);
                }
            }
        }
    }
    Ok(best as u32)
}
