use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::UnitRoot;
use crate::arith::{padic_frac, QuadElem, Rational};
use crate::localsymbols::{v0, Sl2};
use crate::quadfield::{FieldCtx, GTriple, PlaceKind, PrimePlace};
use crate::{Error, Result};

/// `psi_{v}(y) = e(-{Tr_{F_v/Q_p}(y)}_p)`, the local component of the
/// standard additive character.
pub fn psi_local(y: &QuadElem, v: &PrimePlace) -> Result<UnitRoot> {
    if y.is_zero() {
        return Ok(UnitRoot::one());
    }
    let frac = match v.kind {
        PlaceKind::Rational => padic_frac(&y.x, v.p),
        PlaceKind::Split => {
            let o = v.valuation(y)?;
            if o >= 0 {
                Rational::zero()
            } else {
                let k = (-o) as u32;
                let pk = BigInt::from(v.p).pow(k);
                let r = v.residue_at(&y.scale(&Rational::from_integer(pk.clone())), k)?;
                Rational::new(r.value, pk)
            }
        }
        // the only place above p: the local trace is the global one
        PlaceKind::Inert | PlaceKind::Ramified => padic_frac(&y.trace(), v.p),
    };
    Ok(UnitRoot::new(-frac))
}

/// Local correction `kappa_v(beta, g)` at `v` in `S2` or `S3`.
pub fn kappa_v(beta: &QuadElem, g: &Sl2, v: &PrimePlace, in_s2: bool) -> Result<UnitRoot> {
    let d = beta.d;
    let k = |n: i64| QuadElem::from_int(n, d);
    let (a, b, c, dd) = (&g.a, &g.b, &g.c, &g.d);
    let apd = a + dd;
    let x = if in_s2 {
        let c_unit = !c.is_zero() && v.valuation(c)? == 0;
        if c_unit {
            // -(a+d)c + 3c
            &(-&(&apd * c)) + &(&k(3) * c)
        } else {
            // (c-b)d - 3(d-1)
            &(&(c - b) * dd) - &(&k(3) * &(dd - &k(1)))
        }
    } else {
        // -(a+d)c + bd(c^2-1)
        &(-&(&apd * c)) + &(&(b * dd) * &(&(c * c) - &k(1)))
    };
    psi_local(&(beta * &x), v)
}

/// Data defining `v_lambda`: a normalized admissible triple.
#[derive(Debug, Clone)]
pub struct MultiplierSpec {
    pub ctx: FieldCtx,
    pub triple: GTriple,
    pub s2: Vec<PrimePlace>,
    pub s3: Vec<PrimePlace>,
}

impl MultiplierSpec {
    /// Normalizes the triple; requires 2 to split completely.
    pub fn new(triple: &GTriple) -> Result<Self> {
        let ctx = triple.ctx();
        if !ctx.two_splits_completely() {
            return Err(Error::TwoNotSplit);
        }
        let t = triple.normalize()?;
        Ok(MultiplierSpec { ctx, s2: ctx.s2_places(), s3: t.s3.clone(), triple: t })
    }

    pub fn beta(&self) -> &QuadElem {
        &self.triple.beta
    }

    /// `v_lambda(g) = v0(g) prod_{S2 ∪ S3} kappa_v(beta, g)`.
    pub fn v_lambda(&self, g: &Sl2) -> Result<UnitRoot> {
        if !g.is_integral() {
            return Err(Error::NotIntegral);
        }
        let mut r = UnitRoot::from_sign(v0(g, self.ctx)?);
        for v in &self.s2 {
            r = r.mul(&kappa_v(self.beta(), g, v, true)?);
        }
        for v in &self.s3 {
            r = r.mul(&kappa_v(self.beta(), g, v, false)?);
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn psi_examples() {
        let q = FieldCtx::rational();
        let y = q.rat(rat(-1, 24));
        assert_eq!(psi_local(&y, &q.primes_above(2)[0]).unwrap(), UnitRoot::new(rat(3, 8)));
        assert_eq!(psi_local(&y, &q.primes_above(3)[0]).unwrap(), UnitRoot::new(rat(2, 3)));
        assert_eq!(psi_local(&q.rat(rat(5, 7)), &q.primes_above(2)[0]).unwrap(), UnitRoot::one());
    }

    #[test]
    fn psi_split_place_is_additive() {
        let k = FieldCtx::quadratic(793).unwrap();
        let v = k.primes_above(2)[0];
        let a = k.elem(rat(5, 16), rat(1, 16));
        let b = k.elem(rat(3, 8), rat(-7, 4));
        let lhs = psi_local(&(&a + &b), &v).unwrap();
        let rhs = psi_local(&a, &v).unwrap().mul(&psi_local(&b, &v).unwrap());
        assert_eq!(lhs, rhs);
    }
}
