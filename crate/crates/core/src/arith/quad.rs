use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Float, One, Signed, Zero};

use super::{rat_to_f64, rational_sqrt, Rational};
use crate::{Error, Result};

/// An element `x + y sqrt(D)` of `Q(sqrt D)`, or a rational when `D == 1`
/// (then `y` is always zero).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadElem {
    pub x: Rational,
    pub y: Rational,
    pub d: i64,
}

impl QuadElem {
    pub fn new(x: Rational, y: Rational, d: i64) -> Self {
        assert!(d != 1 || y.is_zero(), "rational element with sqrt part");
        QuadElem { x, y, d }
    }

    pub fn rational(x: Rational, d: i64) -> Self {
        QuadElem { x, y: Rational::zero(), d }
    }

    pub fn from_int(n: i64, d: i64) -> Self {
        Self::rational(Rational::from_integer(BigInt::from(n)), d)
    }

    pub fn from_bigint(n: BigInt, d: i64) -> Self {
        Self::rational(Rational::from_integer(n), d)
    }

    pub fn zero(d: i64) -> Self {
        Self::from_int(0, d)
    }

    pub fn one(d: i64) -> Self {
        Self::from_int(1, d)
    }

    /// `sqrt(D)`; only meaningful for quadratic fields.
    pub fn sqrt_d(d: i64) -> Self {
        assert!(d != 1);
        QuadElem { x: Rational::zero(), y: Rational::one(), d }
    }

    /// The integral basis element `omega`: `(1 + sqrt D)/2` if `D = 1 mod 4`,
    /// else `sqrt D`; `1` over `Q`.
    pub fn omega(d: i64) -> Self {
        if d == 1 {
            Self::one(1)
        } else if d.rem_euclid(4) == 1 {
            QuadElem { x: Rational::new(1.into(), 2.into()), y: Rational::new(1.into(), 2.into()), d }
        } else {
            Self::sqrt_d(d)
        }
    }

    /// `u + v omega`.
    pub fn from_omega_coords(u: Rational, v: Rational, d: i64) -> Self {
        if d == 1 {
            return Self::rational(u + v, 1);
        }
        if d.rem_euclid(4) == 1 {
            let h = Rational::new(1.into(), 2.into());
            QuadElem { x: u + &v * &h, y: v * h, d }
        } else {
            QuadElem { x: u, y: v, d }
        }
    }

    /// Coordinates `(u, v)` with `self = u + v omega`.
    pub fn omega_coords(&self) -> (Rational, Rational) {
        if self.d == 1 {
            return (self.x.clone(), Rational::zero());
        }
        if self.d.rem_euclid(4) == 1 {
            let v = &self.y * Rational::from_integer(2.into());
            (&self.x - &self.y, v)
        } else {
            (self.x.clone(), self.y.clone())
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }

    /// Whether the element lies in the maximal order.
    pub fn is_integral(&self) -> bool {
        let (u, v) = self.omega_coords();
        u.is_integer() && v.is_integer()
    }

    pub fn conj(&self) -> Self {
        QuadElem { x: self.x.clone(), y: -&self.y, d: self.d }
    }

    pub fn norm(&self) -> Rational {
        &self.x * &self.x - &self.y * &self.y * Rational::from_integer(self.d.into())
    }

    pub fn trace(&self) -> Rational {
        if self.d == 1 {
            self.x.clone()
        } else {
            &self.x * Rational::from_integer(2.into())
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        QuadElem { x: &self.x * r, y: &self.y * r, d: self.d }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(QuadElem { x: c.x / &n, y: c.y / n, d: self.d })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self * &other.inv()?)
    }

    pub fn same_field(&self, other: &Self) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.d);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Sign (`-1`, `0`, `1`) of the real embedding `i` (0: `sqrt D > 0`,
    /// 1: `sqrt D < 0`), computed exactly.
    pub fn embedding_sign(&self, i: usize) -> i8 {
        let y = if i == 0 { self.y.clone() } else { -&self.y };
        let sx = sign(&self.x);
        let sy = sign(&y);
        if sy == 0 {
            return sx;
        }
        if sx == 0 || sx == sy {
            return sy;
        }
        // x and y sqrt(D) of opposite sign: compare x^2 with D y^2.
        let lhs = &self.x * &self.x;
        let rhs = &y * &y * Rational::from_integer(self.d.into());
        match lhs.cmp(&rhs) {
            core::cmp::Ordering::Greater => sx,
            core::cmp::Ordering::Less => sy,
            core::cmp::Ordering::Equal => 0,
        }
    }

    pub fn is_totally_positive(&self) -> bool {
        let n = if self.d == 1 { 1 } else { 2 };
        (0..n).all(|i| self.embedding_sign(i) > 0)
    }

    /// Value of the real embedding `i` as a float. When `x` and `y sqrt D`
    /// nearly cancel, the value is recovered from the norm and the other
    /// embedding.
    pub fn embed_f64(&self, i: usize) -> f64 {
        let x = rat_to_f64(&self.x);
        if self.y.is_zero() {
            return x;
        }
        let sd = Float::sqrt(self.d as f64);
        let y = rat_to_f64(&self.y) * if i == 0 { sd } else { -sd };
        if x == 0.0 || (x > 0.0) == (y > 0.0) {
            return x + y;
        }
        let other = x - y;
        rat_to_f64(&self.norm()) / other
    }

    /// Exact square root in the field, if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.d == 1 {
            return rational_sqrt(&self.x).map(|r| Self::rational(r, 1));
        }
        if self.y.is_zero() {
            if let Some(r) = rational_sqrt(&self.x) {
                return Some(Self::rational(r, self.d));
            }
            let dd = Rational::from_integer(self.d.into());
            return rational_sqrt(&(&self.x / &dd)).map(|t| QuadElem { x: Rational::zero(), y: t, d: self.d });
        }
        // (s + t sqrt D)^2 = x + y sqrt D, so s^2 = (x +- sqrt(N))/2.
        let n = rational_sqrt(&self.norm())?;
        let half = Rational::new(1.into(), 2.into());
        for cand in [(&self.x + &n) * &half, (&self.x - &n) * &half] {
            if let Some(s) = rational_sqrt(&cand) {
                if s.is_zero() {
                    continue;
                }
                let t = &self.y / (&s * Rational::from_integer(2.into()));
                let r = QuadElem { x: s, y: t, d: self.d };
                if &(&r * &r) == self {
                    return Some(r);
                }
            }
        }
        None
    }
}

fn sign(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_zero() {
            write!(f, "{}", self.x)
        } else {
            let (op, y) = if self.y.is_negative() { ('-', -&self.y) } else { ('+', self.y.clone()) };
            write!(f, "{}{}{}*sqrt({})", self.x, op, y, self.d)
        }
    }
}

impl<'a> Add<&'a QuadElem> for &'a QuadElem {
    type Output = QuadElem;
    fn add(self, o: &QuadElem) -> QuadElem {
        debug_assert_eq!(self.d, o.d);
        QuadElem { x: &self.x + &o.x, y: &self.y + &o.y, d: self.d }
    }
}

impl<'a> Sub<&'a QuadElem> for &'a QuadElem {
    type Output = QuadElem;
    fn sub(self, o: &QuadElem) -> QuadElem {
        debug_assert_eq!(self.d, o.d);
        QuadElem { x: &self.x - &o.x, y: &self.y - &o.y, d: self.d }
    }
}

impl<'a> Mul<&'a QuadElem> for &'a QuadElem {
    type Output = QuadElem;
    fn mul(self, o: &QuadElem) -> QuadElem {
        debug_assert_eq!(self.d, o.d);
        let dd = Rational::from_integer(self.d.into());
        if self.d == 1 {
            return QuadElem::rational(&self.x * &o.x, 1);
        }
        QuadElem {
            x: &self.x * &o.x + &self.y * &o.y * dd,
            y: &self.x * &o.y + &self.y * &o.x,
            d: self.d,
        }
    }
}

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem { x: -&self.x, y: -&self.y, d: self.d }
    }
}

impl Add for QuadElem {
    type Output = QuadElem;
    fn add(self, o: QuadElem) -> QuadElem {
        &self + &o
    }
}

impl Sub for QuadElem {
    type Output = QuadElem;
    fn sub(self, o: QuadElem) -> QuadElem {
        &self - &o
    }
}

impl Mul for QuadElem {
    type Output = QuadElem;
    fn mul(self, o: QuadElem) -> QuadElem {
        &self * &o
    }
}

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        -&self
    }
}
