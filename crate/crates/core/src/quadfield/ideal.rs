use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{FieldCtx, PrimePlace};
use crate::arith::{factor, ord_p, QuadElem, Rational, FACTOR_BOUND};
use crate::{Error, Result};

/// A non-zero fractional ideal `scale * (a Z + (b + omega) Z)` with
/// `scale > 0`, `a > 0`, `0 <= b < a` and `a | N(b + omega)`.
///
/// Over `Q` the lattice part is `Z` (`a = 1`, `b = 0`). The representation
/// is canonical, so structural equality is ideal equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FracIdeal {
    scale: Rational,
    a: BigInt,
    b: BigInt,
    ctx: FieldCtx,
}

impl FracIdeal {
    pub fn unit(ctx: FieldCtx) -> Self {
        FracIdeal { scale: Rational::one(), a: BigInt::one(), b: BigInt::zero(), ctx }
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn principal(x: &QuadElem) -> Result<Self> {
        let ctx = FieldCtx::quadratic(x.d)?;
        Self::from_generators(core::slice::from_ref(x), ctx)
    }

    /// Ideal generated over the maximal order by the given elements.
    pub fn from_generators(gens: &[QuadElem], ctx: FieldCtx) -> Result<Self> {
        let w = ctx.omega();
        let mut zgens = Vec::with_capacity(2 * gens.len());
        for g in gens {
            if g.d != ctx.d() {
                return Err(Error::FieldMismatch);
            }
            zgens.push(g.clone());
            if !ctx.is_rational() {
                zgens.push(g * &w);
            }
        }
        Self::from_zbasis(&zgens, ctx)
    }

    /// Canonical form of the `Z`-span of elements known to span an ideal.
    fn from_zbasis(gens: &[QuadElem], ctx: FieldCtx) -> Result<Self> {
        let coords: Vec<(Rational, Rational)> = gens.iter().map(|g| g.omega_coords()).collect();
        let mut l = BigInt::one();
        for (u, v) in &coords {
            l = l.lcm(u.denom()).lcm(v.denom());
        }
        let lr = Rational::from_integer(l.clone());
        let rows: Vec<(BigInt, BigInt)> =
            coords.iter().map(|(u, v)| ((u * &lr).to_integer(), (v * &lr).to_integer())).collect();
        if ctx.is_rational() {
            let g = rows.iter().fold(BigInt::zero(), |acc, (u, _)| acc.gcd(u));
            if g.is_zero() {
                return Err(Error::ZeroIdeal);
            }
            return Ok(FracIdeal { scale: Rational::new(g, l), a: BigInt::one(), b: BigInt::zero(), ctx });
        }
        let (aa, bb, cc) = hnf2(&rows).ok_or(Error::ZeroIdeal)?;
        debug_assert!(aa.is_multiple_of(&cc) && bb.is_multiple_of(&cc), "not an ideal");
        let a = &aa / &cc;
        let b = (&bb / &cc).mod_floor(&a);
        let scale = Rational::new(cc, l);
        let out = FracIdeal { scale, a, b, ctx };
        debug_assert!(out.lattice_is_ideal());
        Ok(out)
    }

    fn lattice_is_ideal(&self) -> bool {
        if self.ctx.is_rational() {
            return true;
        }
        let w = self.ctx.omega();
        let g = &QuadElem::from_bigint(self.b.clone(), self.ctx.d()) + &w;
        g.norm().to_integer().is_multiple_of(&self.a)
    }

    /// `(scale, a, b, c)` with the lattice `a Z + (b + c omega) Z`; `c = 1`.
    pub fn hnf(&self) -> (Rational, BigInt, BigInt, BigInt) {
        (self.scale.clone(), self.a.clone(), self.b.clone(), BigInt::one())
    }

    pub fn scale(&self) -> &Rational {
        &self.scale
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// A `Z`-basis.
    pub fn z_basis(&self) -> Vec<QuadElem> {
        let d = self.ctx.d();
        let first = QuadElem::from_bigint(self.a.clone(), d).scale(&self.scale);
        if self.ctx.is_rational() {
            return alloc::vec![first];
        }
        let second = (&QuadElem::from_bigint(self.b.clone(), d) + &self.ctx.omega()).scale(&self.scale);
        alloc::vec![first, second]
    }

    pub fn norm(&self) -> Rational {
        if self.ctx.is_rational() {
            return self.scale.clone();
        }
        &self.scale * &self.scale * Rational::from_integer(self.a.clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ctx != other.ctx {
            return Err(Error::FieldMismatch);
        }
        let mut gens = Vec::new();
        for x in self.z_basis() {
            for y in other.z_basis() {
                gens.push(&x * &y);
            }
        }
        Self::from_zbasis(&gens, self.ctx)
    }

    pub fn conj(&self) -> Self {
        let gens: Vec<QuadElem> = self.z_basis().iter().map(|g| g.conj()).collect();
        Self::from_zbasis(&gens, self.ctx).expect("non-zero")
    }

    pub fn inv(&self) -> Self {
        if self.ctx.is_rational() {
            return self.scale_by(&self.scale.recip().pow(2));
        }
        let n = self.norm().recip();
        self.conj().scale_by(&n)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv())
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = Self::unit(self.ctx);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base).expect("same field");
        }
        acc
    }

    /// Multiplies by a non-zero rational.
    pub fn scale_by(&self, r: &Rational) -> Self {
        let mut out = self.clone();
        out.scale = &self.scale * r.abs();
        out
    }

    /// Multiplies by a non-zero element.
    pub fn mul_elem(&self, x: &QuadElem) -> Result<Self> {
        self.mul(&Self::principal(x)?)
    }

    pub fn contains(&self, x: &QuadElem) -> bool {
        if x.d != self.ctx.d() {
            return false;
        }
        let y = x.scale(&self.scale.recip());
        let (u, v) = y.omega_coords();
        if !u.is_integer() || !v.is_integer() {
            return false;
        }
        if self.ctx.is_rational() {
            return true;
        }
        let r = u.to_integer() - v.to_integer() * &self.b;
        r.is_multiple_of(&self.a)
    }

    /// Inclusion `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.z_basis().iter().all(|g| other.contains(g))
    }

    pub fn is_integral(&self) -> bool {
        self.scale.is_integer()
    }

    pub fn is_unit(&self) -> bool {
        *self == Self::unit(self.ctx)
    }

    /// Primitive integral part: the lattice `a Z + (b + omega) Z`.
    pub fn primitive_part(&self) -> Self {
        let mut out = self.clone();
        out.scale = Rational::one();
        out
    }

    /// Valuation at a place.
    pub fn ord_at(&self, v: &PrimePlace) -> i64 {
        let e = v.e() as i64;
        let s = ord_p(&self.scale, v.p).expect("non-zero scale") * e;
        if self.ctx.is_rational() || self.a.is_one() {
            return s;
        }
        let d = self.ctx.d();
        let va = v.valuation(&QuadElem::from_bigint(self.a.clone(), d)).expect("non-zero");
        let g = &QuadElem::from_bigint(self.b.clone(), d) + &self.ctx.omega();
        let vb = v.valuation(&g).expect("non-zero");
        s + va.min(vb)
    }

    /// Prime factorization, sorted by place.
    pub fn factor(&self) -> Result<Vec<(PrimePlace, i64)>> {
        let mut primes: Vec<u64> = Vec::new();
        for n in [self.scale.numer(), self.scale.denom(), &self.a] {
            if !n.is_one() {
                primes.extend(factor(n, FACTOR_BOUND)?.into_iter().map(|(p, _)| p));
            }
        }
        primes.sort_unstable();
        primes.dedup();
        let mut out = Vec::new();
        for p in primes {
            for v in self.ctx.primes_above(p) {
                let k = self.ord_at(&v);
                if k != 0 {
                    out.push((v, k));
                }
            }
        }
        Ok(out)
    }

    /// Product of prime powers.
    pub fn from_factorization(ctx: FieldCtx, fac: &[(PrimePlace, i64)]) -> Self {
        fac.iter().fold(Self::unit(ctx), |acc, (v, k)| acc.mul(&v.ideal().pow(*k)).expect("same field"))
    }
}

/// Hermite normal form `{(A, 0), (B, C)}` of the integer row span, with
/// `C > 0` and `A > 0`; `None` for a lattice of rank below two.
fn hnf2(rows: &[(BigInt, BigInt)]) -> Option<(BigInt, BigInt, BigInt)> {
    let mut pivot: Option<(BigInt, BigInt)> = None;
    let mut a = BigInt::zero();
    for (u, v) in rows {
        let (u, v) = (u.clone(), v.clone());
        match pivot.take() {
            None => {
                if v.is_zero() {
                    a = a.gcd(&u);
                } else {
                    pivot = Some((u, v));
                }
            }
            Some((pu, pv)) => {
                if v.is_zero() {
                    a = a.gcd(&u);
                    pivot = Some((pu, pv));
                    continue;
                }
                let e = pv.extended_gcd(&v);
                let g = e.gcd;
                let nu = &e.x * &pu + &e.y * &u;
                // (v/g) * pivot - (pv/g) * row has zero second coordinate.
                let ku = (&v / &g) * &pu - (&pv / &g) * &u;
                a = a.gcd(&ku);
                pivot = Some((nu, g));
            }
        }
    }
    let (mut b, mut c) = pivot?;
    if a.is_zero() {
        return None;
    }
    if c.is_negative() {
        b = -b;
        c = -c;
    }
    let a = a.abs();
    Some((a.clone(), b.mod_floor(&a), c))
}

impl fmt::Display for FracIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ctx.is_rational() {
            write!(f, "({})", self.scale)
        } else {
            write!(f, "{}*[{}, {}+w]", self.scale, self.a, self.b)
        }
    }
}
