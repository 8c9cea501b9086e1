use core::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{Float, Zero};

use crate::arith::{rat_to_f64, Rational};

/// `e(r) = exp(2 pi i r)` with `r` an exact rational kept in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitRoot(Rational);

impl UnitRoot {
    pub fn new(r: Rational) -> Self {
        let f = r.floor();
        UnitRoot(r - f)
    }

    pub fn one() -> Self {
        UnitRoot(Rational::zero())
    }

    /// `+1 -> e(0)`, `-1 -> e(1/2)`.
    pub fn from_sign(s: i8) -> Self {
        assert!(s == 1 || s == -1);
        if s == 1 {
            Self::one()
        } else {
            UnitRoot(Rational::new(1.into(), 2.into()))
        }
    }

    pub fn exponent(&self) -> &Rational {
        &self.0
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.0 + &o.0)
    }

    pub fn inv(&self) -> Self {
        Self::new(-&self.0)
    }

    pub fn pow(&self, k: i64) -> Self {
        Self::new(&self.0 * Rational::from_integer(BigInt::from(k)))
    }

    /// Order of the root of unity.
    pub fn order(&self) -> BigInt {
        self.0.denom().clone()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_complex(&self) -> Complex64 {
        let den = self.0.denom();
        // exact values on the quarter lattice
        if (BigInt::from(4)).is_multiple_of(den) {
            let k = (&self.0 * Rational::from_integer(4.into())).to_integer();
            return match k.try_into().unwrap_or(0i64) {
                0 => Complex64::new(1.0, 0.0),
                1 => Complex64::new(0.0, 1.0),
                2 => Complex64::new(-1.0, 0.0),
                _ => Complex64::new(0.0, -1.0),
            };
        }
        let t = 2.0 * core::f64::consts::PI * rat_to_f64(&self.0);
        Complex64::new(Float::cos(t), Float::sin(t))
    }
}

impl fmt::Display for UnitRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({})", self.0)
    }
}
