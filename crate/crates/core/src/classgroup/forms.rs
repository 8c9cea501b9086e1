use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{isqrt, QuadElem, Rational};

/// Indefinite binary quadratic form `a x^2 + b xy + c y^2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QForm {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl QForm {
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Self {
        QForm { a, b, c }
    }

    pub fn disc(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    /// `|sqrt d - 2|a|| < b < sqrt d`.
    pub fn is_reduced(&self) -> bool {
        let d = self.disc();
        let b = &self.b;
        if !b.is_positive() || b * b >= d {
            return false;
        }
        let a2 = BigInt::from(2) * self.a.abs();
        let lo = &a2 + b;
        let hi = &a2 - b;
        (&lo * &lo > d) && (hi.is_negative() || &hi * &hi < d)
    }

    /// One reduction step; `r = -b mod 2c` in the standard window.
    pub fn rho(&self) -> QForm {
        let d = self.disc();
        let sq = isqrt(&d);
        let c = &self.c;
        let m = BigInt::from(2) * c.abs();
        let r0 = (-&self.b).mod_floor(&m);
        let r = if c * c < d {
            // largest r = -b (mod 2|c|) with r <= floor(sqrt d)
            &sq - (&sq - &r0).mod_floor(&m)
        } else {
            // -|c| < r <= |c|
            if r0 > c.abs() {
                r0 - &m
            } else {
                r0
            }
        };
        let nc = (&r * &r - &d) / (BigInt::from(4) * c);
        QForm { a: c.clone(), b: r, c: nc }
    }

    /// Element `lambda` with `lambda I(f) = I(rho f)`, where
    /// `I(a, b, c) = [|a|, (-b + sqrt d)/2]`.
    pub fn rho_multiplier(&self, dfield: i64) -> QuadElem {
        let a2 = Rational::from_integer(BigInt::from(2) * &self.a);
        let x = Rational::from_integer(-self.b.clone()) / &a2;
        // sqrt(d_K) = sqrt(D) or 2 sqrt(D)
        let k = if dfield.rem_euclid(4) == 1 { 1 } else { 2 };
        let y = Rational::from_integer(BigInt::from(-k)) / a2;
        QuadElem::new(x, y, dfield)
    }

    /// `(|a|, b mod 2|a|)`, which determines the ideal `I(f)`.
    pub fn ideal_key(&self) -> (BigInt, BigInt) {
        let a = self.a.abs();
        let m = BigInt::from(2) * &a;
        (a, self.b.mod_floor(&m))
    }

    pub fn neg(&self) -> QForm {
        QForm { a: -&self.a, b: self.b.clone(), c: -&self.c }
    }

    pub fn is_zero_form(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }
}
