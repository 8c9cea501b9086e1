use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{FieldCtx, FracIdeal};
use crate::arith::{
    hensel_root_labeled, int_pow, mod_inv, ord_p_int, simple_roots_mod_p, split_p, PadicResidue, QuadElem,
    Rational,
};
use crate::{Error, Result};

/// Decomposition type of a prime. `Rational` marks a prime of `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlaceKind {
    Rational,
    Split,
    Inert,
    Ramified,
}

/// A finite place of the base field.
///
/// For split primes, label 1 is the place where `omega` reduces to the
/// smaller root of its minimal polynomial mod `p`. `root` is the image of
/// `omega` in the residue field for degree-one places.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePlace {
    pub p: u64,
    pub label: u8,
    pub kind: PlaceKind,
    pub root: u64,
    pub d: i64,
}

pub(super) fn primes_above(ctx: FieldCtx, p: u64) -> Vec<PrimePlace> {
    let d = ctx.d();
    let mk = |label, kind, root| PrimePlace { p, label, kind, root, d };
    if ctx.is_rational() {
        return alloc::vec![mk(1, PlaceKind::Rational, 0)];
    }
    let disc = ctx.disc();
    if disc.rem_euclid(p as i64) == 0 {
        let root = if d.rem_euclid(4) == 1 {
            (p + 1) / 2 % p
        } else if p == 2 {
            d.rem_euclid(2) as u64
        } else {
            0
        };
        return alloc::vec![mk(1, PlaceKind::Ramified, root)];
    }
    match simple_roots_mod_p(d, p) {
        Ok((r1, r2)) => alloc::vec![mk(1, PlaceKind::Split, r1), mk(2, PlaceKind::Split, r2)],
        Err(_) => alloc::vec![mk(1, PlaceKind::Inert, 0)],
    }
}

impl PrimePlace {
    pub fn e(&self) -> u32 {
        if self.kind == PlaceKind::Ramified {
            2
        } else {
            1
        }
    }

    pub fn f(&self) -> u32 {
        if self.kind == PlaceKind::Inert {
            2
        } else {
            1
        }
    }

    /// Size of the residue field.
    pub fn q(&self) -> u64 {
        self.p.pow(self.f())
    }

    pub fn is_dyadic(&self) -> bool {
        self.p == 2
    }

    /// Whether the completion is `Q_p` itself.
    pub fn is_degree_one_unramified(&self) -> bool {
        matches!(self.kind, PlaceKind::Rational | PlaceKind::Split)
    }

    pub fn ctx(&self) -> FieldCtx {
        FieldCtx::quadratic(self.d).expect("valid field")
    }

    /// The prime ideal of the place.
    pub fn ideal(&self) -> FracIdeal {
        let ctx = self.ctx();
        let p = ctx.int(self.p as i64);
        match self.kind {
            PlaceKind::Rational | PlaceKind::Inert => FracIdeal::principal(&p).expect("non-zero"),
            _ => {
                let g = &ctx.omega() - &ctx.int(self.root as i64);
                FracIdeal::from_generators(&[p, g], ctx).expect("non-zero")
            }
        }
    }

    /// An element of valuation one at this place.
    pub fn uniformizer(&self) -> QuadElem {
        let d = self.d;
        match self.kind {
            PlaceKind::Rational | PlaceKind::Inert | PlaceKind::Split => QuadElem::from_int(self.p as i64, d),
            PlaceKind::Ramified => {
                if self.p == 2 && d.rem_euclid(4) == 3 {
                    &QuadElem::one(d) + &QuadElem::sqrt_d(d)
                } else {
                    QuadElem::sqrt_d(d)
                }
            }
        }
    }

    /// Valuation of a non-zero element.
    pub fn valuation(&self, x: &QuadElem) -> Result<i64> {
        if x.is_zero() {
            return Err(Error::ZeroValuation);
        }
        if x.d != self.d {
            return Err(Error::FieldMismatch);
        }
        let (s, t, m) = integral_coords(x);
        let jm = ord_p_int(&m, self.p) as i64;
        let p = self.p;
        if self.kind == PlaceKind::Rational {
            return Ok(ord_p_int(&s, p) as i64 - jm);
        }
        let k = content_ord(&s, &t, p);
        let pk = int_pow(p, k);
        let (s1, t1) = (&s / &pk, &t / &pk);
        let local = match self.kind {
            PlaceKind::Inert => 0,
            PlaceKind::Ramified => ord_p_int(&omega_norm(&s1, &t1, self.d), p) as i64,
            _ => {
                let r = BigInt::from(self.root);
                if (&s1 + &t1 * r).mod_floor(&BigInt::from(p)).is_zero() {
                    ord_p_int(&omega_norm(&s1, &t1, self.d), p) as i64
                } else {
                    0
                }
            }
        };
        let e = self.e() as i64;
        Ok(e * k as i64 + local - e * jm)
    }

    /// Image of a `v`-integral element in `O_v / p^k` for a degree-one
    /// place; ramified odd places only allow `k = 1`.
    pub fn residue_at(&self, x: &QuadElem, k: u32) -> Result<PadicResidue> {
        if x.d != self.d {
            return Err(Error::FieldMismatch);
        }
        if !x.is_zero() && self.valuation(x)? < 0 {
            return Err(Error::NotIntegral);
        }
        let p = self.p;
        match self.kind {
            PlaceKind::Inert => Err(Error::NoDegreeOnePlace(p)),
            PlaceKind::Ramified => {
                if p == 2 {
                    return Err(Error::NonSplitDyadic);
                }
                if k != 1 {
                    return Err(Error::NoDegreeOnePlace(p));
                }
                // x = s + t sqrt(D) with s, t p-integral; sqrt(D) lies in the prime.
                let s = &x.x;
                let pb = BigInt::from(p);
                let inv = mod_inv(s.denom(), &pb).expect("p-integral");
                Ok(PadicResidue::new(p, 1, s.numer() * inv))
            }
            PlaceKind::Rational | PlaceKind::Split => {
                if x.is_zero() {
                    return Ok(PadicResidue::new(p, k, BigInt::zero()));
                }
                let (s, t, m) = integral_coords(x);
                let (j, m1) = split_p(&m, p);
                let prec = k + j;
                let val = if self.kind == PlaceKind::Rational {
                    s
                } else {
                    let r = hensel_root_labeled(self.d, p, prec, self.label)?;
                    s + t * r.value
                };
                let modulus = int_pow(p, prec);
                let val = val.mod_floor(&modulus);
                let pj = int_pow(p, j);
                debug_assert!(val.is_multiple_of(&pj));
                let mk = int_pow(p, k);
                let inv = mod_inv(&m1, &mk).expect("coprime");
                Ok(PadicResidue::new(p, k, (val / pj) * inv))
            }
        }
    }

    /// Valuation and unit part mod `p^k` of the image in `Q_p`.
    pub fn qp_embed(&self, x: &QuadElem, k: u32) -> Result<(i64, PadicResidue)> {
        if !self.is_degree_one_unramified() {
            return Err(if self.p == 2 { Error::NonSplitDyadic } else { Error::NoDegreeOnePlace(self.p) });
        }
        let a = self.valuation(x)?;
        let pa = Rational::from_integer(BigInt::from(self.p)).pow(-a as i32);
        let u = x.scale(&pa);
        Ok((a, self.residue_at(&u, k)?))
    }
}

/// Writes `x = (s + t omega) / m` with integers and `m > 0`.
pub(crate) fn integral_coords(x: &QuadElem) -> (BigInt, BigInt, BigInt) {
    let (u, v) = x.omega_coords();
    let m = u.denom().lcm(v.denom());
    let s = u.numer() * (&m / u.denom());
    let t = v.numer() * (&m / v.denom());
    (s, t, m)
}

fn content_ord(s: &BigInt, t: &BigInt, p: u64) -> u32 {
    match (s.is_zero(), t.is_zero()) {
        (true, _) => ord_p_int(t, p),
        (_, true) => ord_p_int(s, p),
        _ => ord_p_int(s, p).min(ord_p_int(t, p)),
    }
}

/// Norm of `s + t omega`.
pub(crate) fn omega_norm(s: &BigInt, t: &BigInt, d: i64) -> BigInt {
    let n = if d.rem_euclid(4) == 1 {
        s * s + s * t - t * t * BigInt::from((d - 1) / 4)
    } else {
        s * s - t * t * BigInt::from(d)
    };
    n
}

impl fmt::Display for PrimePlace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            PlaceKind::Split => write!(f, "p{}_{}", self.p, self.label),
            _ => write!(f, "p{}", self.p),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{factor, rat, FACTOR_BOUND};

    fn ctx(d: i64) -> FieldCtx {
        FieldCtx::quadratic(d).unwrap()
    }

    #[test]
    fn decomposition_types() {
        let k = ctx(793);
        assert_eq!(k.primes_above(2).len(), 2);
        assert_eq!(k.primes_above(3).len(), 2);
        assert_eq!(k.primes_above(13)[0].kind, PlaceKind::Ramified);
        assert_eq!(k.primes_above(5)[0].kind, PlaceKind::Inert);
        let k = ctx(17);
        assert_eq!(k.primes_above(3)[0].kind, PlaceKind::Inert);
        assert!(k.t3_places().is_empty());
        assert_eq!(ctx(5).primes_above(2)[0].kind, PlaceKind::Inert);
        assert_eq!(ctx(3).primes_above(2)[0].kind, PlaceKind::Ramified);
    }

    #[test]
    fn residue_field_sizes_multiply_to_p_squared() {
        for d in [17i64, 793, 57, 2, 3, 5, 6, 10] {
            let k = ctx(d);
            for p in [2u64, 3, 5, 7, 11, 13, 61] {
                let vs = k.primes_above(p);
                let total: u32 = vs.iter().map(|v| v.e() * v.f()).sum();
                assert_eq!(total, 2, "d={d} p={p}");
                let nprod: BigInt = vs.iter().map(|v| v.ideal().norm().to_integer().pow(v.e())).product();
                assert_eq!(nprod, BigInt::from(p * p));
            }
        }
    }

    #[test]
    fn valuations_sum_to_norm() {
        // sum_v f_v ord_v(x) = ord_p N(x)
        let k = ctx(793);
        let xs = [
            k.elem(rat(5, 2), rat(1, 2)),
            k.elem(rat(12, 1), rat(-3, 1)),
            k.elem(rat(39, 4), rat(13, 4)),
            k.elem(rat(1, 6), rat(1, 2)),
        ];
        for x in &xs {
            let n = x.norm();
            for (p, _) in factor(&(n.numer() * n.denom()), FACTOR_BOUND).unwrap() {
                let total: i64 = k.primes_above(p).iter().map(|v| v.f() as i64 * v.valuation(x).unwrap()).sum();
                assert_eq!(total, crate::arith::ord_p(&n, p).unwrap(), "x={x} p={p}");
            }
        }
    }

    #[test]
    fn rho_793_valuations() {
        let k = ctx(793);
        let rho = k.elem(rat(5, 2), rat(1, 2));
        let two = k.primes_above(2);
        let three = k.primes_above(3);
        // omega = 0 mod q2 (label 1); rho = 2 + omega.
        assert_eq!(two[0].valuation(&rho).unwrap(), 6);
        assert_eq!(two[1].valuation(&rho).unwrap(), 0);
        assert_eq!(three[1].valuation(&rho).unwrap(), 1);
        assert_eq!(three[0].valuation(&rho).unwrap(), 0);
    }

    #[test]
    fn residues_are_ring_maps() {
        let k = ctx(793);
        let v = k.primes_above(2)[0];
        let a = k.elem(rat(5, 2), rat(1, 2));
        let b = k.elem(rat(7, 3), rat(-1, 1));
        let ra = v.residue_at(&a, 6).unwrap().value;
        let rb = v.residue_at(&b, 6).unwrap().value;
        let rab = v.residue_at(&(&a * &b), 6).unwrap().value;
        assert_eq!((ra * rb).mod_floor(&BigInt::from(64)), rab);
        assert_eq!(v.residue_at(&k.elem(rat(1, 2), rat(0, 1)), 3), Err(Error::NotIntegral));
    }
}
