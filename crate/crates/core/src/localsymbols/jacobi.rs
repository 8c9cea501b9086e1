use alloc::string::ToString;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Jacobi symbol `(a/n)` for odd `n > 0`.
pub fn jacobi(a: &BigInt, n: &BigInt) -> Result<i8> {
    if !n.is_positive() || n.is_even() {
        return Err(Error::UndefinedSymbol(a.to_string(), n.to_string()));
    }
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut r = 1i8;
    while !a.is_zero() {
        let tz = a.trailing_zeros().unwrap_or(0);
        a >>= tz;
        let n8 = low_bits(&n, 8);
        if tz % 2 == 1 && (n8 == 3 || n8 == 5) {
            r = -r;
        }
        if low_bits(&a, 4) == 3 && n8 % 4 == 3 {
            r = -r;
        }
        core::mem::swap(&mut a, &mut n);
        a = a.mod_floor(&n);
    }
    Ok(if n.is_one() { r } else { 0 })
}

fn low_bits(n: &BigInt, m: u32) -> u32 {
    n.mod_floor(&BigInt::from(m)).to_u32().expect("small")
}

pub fn jacobi_i64(a: i64, n: i64) -> Result<i8> {
    jacobi(&BigInt::from(a), &BigInt::from(n))
}

fn check_pair(c: &BigInt, d: &BigInt) -> Result<()> {
    let err = || Error::UndefinedSymbol(c.to_string(), d.to_string());
    if d.is_even() {
        return Err(err());
    }
    if c.is_zero() && !d.abs().is_one() {
        return Err(err());
    }
    if !c.gcd(d).is_one() {
        return Err(err());
    }
    Ok(())
}

/// `(c/d)^* = (c/|d|)` for odd `d` coprime to `c`, with `(0/±1)^* = 1`.
pub fn jacobi_upper(c: &BigInt, d: &BigInt) -> Result<i8> {
    check_pair(c, d)?;
    if c.is_zero() {
        return Ok(1);
    }
    jacobi(c, &d.abs())
}

/// `(c/d)_* = t(c,d) (c/|d|)` with `t(c,d) = -1` iff `c, d < 0`;
/// `(0/1)_* = 1` and `(0/-1)_* = -1`.
pub fn jacobi_lower(c: &BigInt, d: &BigInt) -> Result<i8> {
    check_pair(c, d)?;
    if c.is_zero() {
        return Ok(if d.is_positive() { 1 } else { -1 });
    }
    let t = if c.is_negative() && d.is_negative() { -1 } else { 1 };
    Ok(t * jacobi(c, &d.abs())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    /// Euler's criterion over the prime factorization of `n`.
    fn oracle(a: i64, n: i64) -> i8 {
        let mut r = 1i8;
        let mut m = n;
        let mut p = 3;
        while m > 1 {
            if m % p == 0 {
                m /= p;
                let mut e = 1i64;
                for _ in 0..(p - 1) / 2 {
                    e = e * a.rem_euclid(p) % p;
                }
                r *= if e == 0 { 0 } else if e == 1 { 1 } else { -1 };
            } else {
                p += 2;
            }
        }
        r
    }

    #[test]
    fn agrees_with_euler() {
        for n in (1..200).step_by(2) {
            for a in -50..150 {
                assert_eq!(jacobi_i64(a, n).unwrap(), oracle(a, n), "({a}/{n})");
            }
        }
    }

    #[test]
    fn examples() {
        assert_eq!(jacobi_i64(2, 15).unwrap(), 1);
        assert_eq!(jacobi_lower(&b(-3), &b(-5)).unwrap(), -jacobi_i64(-3, 5).unwrap());
        assert_eq!(jacobi_upper(&b(0), &b(-1)).unwrap(), 1);
        assert_eq!(jacobi_lower(&b(0), &b(-1)).unwrap(), -1);
        assert_eq!(jacobi_lower(&b(0), &b(1)).unwrap(), 1);
        assert!(jacobi_upper(&b(3), &b(4)).is_err());
        assert!(jacobi_upper(&b(3), &b(9)).is_err());
        assert!(jacobi_upper(&b(0), &b(3)).is_err());
    }
}
