use num_bigint::BigInt;
use num_integer::Integer;

use super::UnitRoot;
use crate::arith::Rational;
use crate::localsymbols::{jacobi_lower, jacobi_upper};
use crate::{Error, Result};

/// Multiplier system of the Dedekind eta function on `SL2(Z)`.
pub fn v_eta(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> Result<UnitRoot> {
    if a * d - b * c != BigInt::from(1) {
        return Err(Error::NotSl2);
    }
    let one = BigInt::from(1);
    let three = BigInt::from(3);
    let base = (a + d) * c - b * d * (c * c - &one);
    let (sign, num) = if c.is_odd() {
        (jacobi_upper(d, c)?, base - &three * c)
    } else {
        (jacobi_lower(c, d)?, base + &three * d - &three - &three * c * d)
    };
    let e = UnitRoot::new(Rational::new(num, BigInt::from(24)));
    Ok(e.mul(&UnitRoot::from_sign(sign)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn generators() {
        assert_eq!(v_eta(&b(1), &b(1), &b(0), &b(1)).unwrap(), UnitRoot::new(rat(1, 24)));
        assert_eq!(v_eta(&b(0), &b(-1), &b(1), &b(0)).unwrap(), UnitRoot::new(rat(-1, 8)));
        assert_eq!(v_eta(&b(-1), &b(0), &b(0), &b(-1)).unwrap(), UnitRoot::new(rat(1, 4)));
        assert!(v_eta(&b(1), &b(1), &b(1), &b(1)).is_err());
    }
}
