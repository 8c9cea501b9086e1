//! Exact rational, integer and p-adic helpers, and elements of `Q(sqrt D)`.

mod padic;
mod quad;

pub use num_bigint::BigInt;
pub use padic::{hensel_root, hensel_root_labeled, padic_frac, PadicResidue};
pub(crate) use padic::simple_roots_mod_p;
pub use quad::QuadElem;

use alloc::vec::Vec;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Exact rational number; always reduced with a positive denominator.
pub type Rational = BigRational;

/// Trial division bound used when factoring norms.
pub const FACTOR_BOUND: u64 = 1_000_000;

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Floor of the square root of a non-negative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of a negative number");
    n.sqrt()
}

pub fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = isqrt(n);
    &r * &r == *n
}

/// Exact square root of a rational, if it exists.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    if is_square(n) && is_square(d) {
        Some(Rational::new(isqrt(n), isqrt(d)))
    } else {
        None
    }
}

/// Least non-negative residue of `a` modulo `m > 0`.
pub fn modp(a: &BigInt, m: &BigInt) -> BigInt {
    a.mod_floor(m)
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inv(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Exponent of the prime `p` in the non-zero integer `n`.
pub fn ord_p_int(n: &BigInt, p: u64) -> u32 {
    assert!(!n.is_zero(), "valuation of zero");
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

/// Exponent of `p` in a non-zero rational.
pub fn ord_p(x: &Rational, p: u64) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::ZeroValuation);
    }
    Ok(ord_p_int(x.numer(), p) as i64 - ord_p_int(x.denom(), p) as i64)
}

/// Splits `n != 0` as `p^k * m` with `p` not dividing `m`.
pub fn split_p(n: &BigInt, p: u64) -> (u32, BigInt) {
    let k = ord_p_int(n, p);
    (k, n / BigInt::from(p).pow(k))
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Miller-Rabin on the first 13 prime bases, which is deterministic below
/// `3.3 * 10^24`.
fn is_probable_prime(n: &BigInt) -> bool {
    if let Some(m) = n.to_u64() {
        return is_prime_u64(m);
    }
    if n.is_even() {
        return false;
    }
    let one = BigInt::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41] {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Steps allowed to Pollard rho per cofactor.
const RHO_STEPS: u64 = 1 << 21;

/// A proper divisor of the odd composite `n` by Brent's variant of Pollard
/// rho, or `None` once the step budget is spent.
fn rho_divisor(n: &BigInt) -> Option<BigInt> {
    let one = BigInt::one();
    let mut spent = 0u64;
    for c in 1u32..=8 {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c) % n;
        let (mut y, mut x, mut ys) = (BigInt::from(2), BigInt::zero(), BigInt::zero());
        let (mut g, mut r, mut q) = (one.clone(), 1u64, one.clone());
        const BATCH: u64 = 128;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..BATCH.min(r - k) {
                    y = f(&y);
                    q = q * (&x - &y).abs() % n;
                }
                g = q.gcd(n);
                k += BATCH;
            }
            spent += r;
            r *= 2;
            if spent > RHO_STEPS {
                return None;
            }
        }
        if &g == n {
            // the batch overshot; redo it one step at a time
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return Some(g);
        }
    }
    None
}

/// Factors `|n|` into primes by trial division up to `bound`, then Pollard
/// rho on what is left. Fails if a prime factor does not fit in 64 bits or
/// rho runs out of steps.
pub fn factor(n: &BigInt, bound: u64) -> Result<Vec<(u64, u32)>> {
    let mut n = n.abs();
    if n.is_zero() {
        return Err(Error::ZeroValuation);
    }
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= bound {
        let pb = BigInt::from(p);
        if &pb * &pb > n {
            break;
        }
        let mut k = 0;
        loop {
            let (q, r) = n.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            n = q;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n.is_one() {
        return Ok(out);
    }
    let too_large = || Error::NormTooLarge(alloc::format!("{}", n));
    let mut big: Vec<u64> = Vec::new();
    let mut stack = alloc::vec![n.clone()];
    while let Some(m) = stack.pop() {
        if is_probable_prime(&m) {
            big.push(m.to_u64().ok_or_else(too_large)?);
        } else if p.checked_mul(p).map_or(false, |pp| BigInt::from(pp) > m) {
            // trial division stopped early because m is small enough to be prime
            big.push(m.to_u64().ok_or_else(too_large)?);
        } else {
            let d = rho_divisor(&m).ok_or_else(too_large)?;
            stack.push(&m / &d);
            stack.push(d);
        }
    }
    big.sort_unstable();
    for q in big {
        match out.last_mut() {
            Some((r, k)) if *r == q => *k += 1,
            _ => out.push((q, 1)),
        }
    }
    Ok(out)
}

pub fn is_squarefree(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Square root of `a` modulo an odd prime `p`, if `a` is a square.
pub fn sqrt_mod_prime(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if p == 2 || a == 0 {
        return Some(a);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    // Tonelli-Shanks
    let mut q = p - 1;
    let mut s = 0;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

/// Nearest `f64` to a rational, also for huge numerators and denominators.
pub fn rat_to_f64(x: &Rational) -> f64 {
    if let Some(f) = x.to_f64() {
        if f.is_finite() && (f != 0.0 || x.is_zero()) {
            return f;
        }
    }
    // Shift both parts into range before dividing.
    let nb = x.numer().bits() as i64;
    let db = x.denom().bits() as i64;
    let shift_n = (nb - 60).max(0) as usize;
    let shift_d = (db - 60).max(0) as usize;
    let n = (x.numer() >> shift_n).to_f64().unwrap_or(0.0);
    let d = (x.denom() >> shift_d).to_f64().unwrap_or(1.0);
    let e = shift_n as i32 - shift_d as i32;
    (n / d) * libm_powi2(e)
}

fn libm_powi2(e: i32) -> f64 {
    num_traits::Float::powi(2.0f64, e)
}

/// `p^k` as a big integer.
pub fn int_pow(p: u64, k: u32) -> BigInt {
    BigInt::from(p).pow(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_small() {
        assert_eq!(factor(&int(793), FACTOR_BOUND).unwrap(), alloc::vec![(13, 1), (61, 1)]);
        assert_eq!(factor(&int(-192), FACTOR_BOUND).unwrap(), alloc::vec![(2, 6), (3, 1)]);
        assert_eq!(factor(&int(1), FACTOR_BOUND).unwrap(), alloc::vec![]);
    }

    #[test]
    fn factor_large_prime_cofactor() {
        let p = BigInt::from(1_000_000_007u64) * BigInt::from(6);
        assert_eq!(factor(&p, 1000).unwrap(), alloc::vec![(2, 1), (3, 1), (1_000_000_007, 1)]);
    }

    #[test]
    fn factor_splits_composite_cofactor() {
        let n = BigInt::from(1_000_000_007u64) * BigInt::from(1_000_000_009u64) * BigInt::from(1_000_000_007u64);
        assert_eq!(factor(&n, 1000).unwrap(), alloc::vec![(1_000_000_007, 2), (1_000_000_009, 1)]);
        let n = BigInt::from(414801879331162129944u128);
        let f = factor(&n, FACTOR_BOUND).unwrap();
        let back = f.iter().fold(BigInt::one(), |acc, &(p, k)| acc * BigInt::from(p).pow(k));
        assert_eq!(back, n);
        assert!(f.iter().all(|&(p, _)| is_prime_u64(p)));
    }

    #[test]
    fn factor_refuses_wide_primes() {
        // the least prime above 2^64
        let p = BigInt::from(18446744073709551629u128);
        assert!(is_probable_prime(&p));
        assert!(matches!(factor(&p, 1000), Err(Error::NormTooLarge(_))));
        assert!(matches!(factor(&(&p * 6), 1000), Err(Error::NormTooLarge(_))));
    }

    #[test]
    fn probable_primes_agree_with_u64_test() {
        let big = BigInt::from(1u128 << 64);
        for k in [1u32, 13, 15, 51, 63] {
            let n = &big + k;
            let want = k == 13 || k == 51;
            assert_eq!(is_probable_prime(&n), want, "2^64 + {k}");
        }
        assert!(!is_probable_prime(&(BigInt::from(4_294_967_291u64) * BigInt::from(4_294_967_311u64) * 7)));
    }

    #[test]
    fn miller_rabin_matches_trial_division() {
        for n in 0u64..5000 {
            let slow = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            assert_eq!(is_prime_u64(n), slow, "n = {n}");
        }
    }

    #[test]
    fn tonelli_shanks() {
        for p in [3u64, 5, 7, 13, 17, 41, 61, 97, 193] {
            for a in 0..p {
                let brute = (0..p).find(|x| x * x % p == a);
                match sqrt_mod_prime(a, p) {
                    Some(r) => assert_eq!(r * r % p, a),
                    None => assert!(brute.is_none()),
                }
            }
        }
    }

    #[test]
    fn squarefree() {
        assert!(is_squarefree(793));
        assert!(!is_squarefree(18));
        assert!(is_squarefree(1));
    }

    #[test]
    fn big_rational_to_f64() {
        let x = Rational::new(BigInt::from(10).pow(400) * 3, BigInt::from(10).pow(399));
        assert!((rat_to_f64(&x) - 30.0).abs() < 1e-12);
    }
}
