use core::fmt;

use crate::arith::QuadElem;
use crate::quadfield::FieldCtx;
use crate::{Error, Result};

/// A matrix `[[a, b], [c, d]]` of determinant one over the base field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sl2 {
    pub a: QuadElem,
    pub b: QuadElem,
    pub c: QuadElem,
    pub d: QuadElem,
}

impl Sl2 {
    pub fn new(a: QuadElem, b: QuadElem, c: QuadElem, d: QuadElem) -> Result<Self> {
        let m = Sl2 { a, b, c, d };
        if m.det() != QuadElem::one(m.a.d) {
            return Err(Error::NotSl2);
        }
        Ok(m)
    }

    pub fn from_ints(ctx: FieldCtx, a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        Self::new(ctx.int(a), ctx.int(b), ctx.int(c), ctx.int(d))
    }

    pub fn det(&self) -> QuadElem {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn identity(ctx: FieldCtx) -> Self {
        Sl2 { a: ctx.int(1), b: ctx.int(0), c: ctx.int(0), d: ctx.int(1) }
    }

    /// `-1_2`.
    pub fn minus_one(ctx: FieldCtx) -> Self {
        Sl2 { a: ctx.int(-1), b: ctx.int(0), c: ctx.int(0), d: ctx.int(-1) }
    }

    /// `u+(x) = [[1, x], [0, 1]]`.
    pub fn u_plus(x: &QuadElem) -> Self {
        let d = x.d;
        Sl2 { a: QuadElem::one(d), b: x.clone(), c: QuadElem::zero(d), d: QuadElem::one(d) }
    }

    /// `u-(x) = [[1, 0], [x, 1]]`.
    pub fn u_minus(x: &QuadElem) -> Self {
        let d = x.d;
        Sl2 { a: QuadElem::one(d), b: QuadElem::zero(d), c: x.clone(), d: QuadElem::one(d) }
    }

    /// `diag(e, e^-1)`.
    pub fn diag(e: &QuadElem) -> Result<Self> {
        let d = e.d;
        Ok(Sl2 { a: e.clone(), b: QuadElem::zero(d), c: QuadElem::zero(d), d: e.inv()? })
    }

    /// `[[0, -1], [1, 0]]`.
    pub fn s(ctx: FieldCtx) -> Self {
        Sl2 { a: ctx.int(0), b: ctx.int(-1), c: ctx.int(1), d: ctx.int(0) }
    }

    /// `[[1, 1], [0, 1]]`.
    pub fn t(ctx: FieldCtx) -> Self {
        Self::u_plus(&ctx.int(1))
    }

    pub fn mul(&self, o: &Self) -> Self {
        Sl2 {
            a: &(&self.a * &o.a) + &(&self.b * &o.c),
            b: &(&self.a * &o.b) + &(&self.b * &o.d),
            c: &(&self.c * &o.a) + &(&self.d * &o.c),
            d: &(&self.c * &o.b) + &(&self.d * &o.d),
        }
    }

    pub fn inv(&self) -> Self {
        Sl2 { a: self.d.clone(), b: -&self.b, c: -&self.c, d: self.a.clone() }
    }

    pub fn neg(&self) -> Self {
        Sl2 { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }

    pub fn is_integral(&self) -> bool {
        [&self.a, &self.b, &self.c, &self.d].iter().all(|x| x.is_integral())
    }

    /// Entries under the real embedding `i`.
    pub fn embed_f64(&self, i: usize) -> [f64; 4] {
        [self.a.embed_f64(i), self.b.embed_f64(i), self.c.embed_f64(i), self.d.embed_f64(i)]
    }
}

impl fmt::Display for Sl2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}
