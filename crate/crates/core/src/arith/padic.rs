use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{int_pow, mod_inv, ord_p_int, sqrt_mod_prime, Rational};
use crate::{Error, Result};

/// A residue class modulo `p^k`, stored as its least non-negative representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicResidue {
    pub p: u64,
    pub k: u32,
    pub value: BigInt,
}

impl PadicResidue {
    pub fn new(p: u64, k: u32, value: BigInt) -> Self {
        let value = value.mod_floor(&int_pow(p, k));
        PadicResidue { p, k, value }
    }

    pub fn modulus(&self) -> BigInt {
        int_pow(self.p, self.k)
    }

    /// Reduction to a lower precision.
    pub fn truncate(&self, k: u32) -> PadicResidue {
        assert!(k <= self.k);
        PadicResidue::new(self.p, k, self.value.clone())
    }
}

/// Coefficients `(t1, t0)` of the minimal polynomial `t^2 + t1 t + t0` of
/// the integral basis element `omega`.
pub(crate) fn omega_minpoly(d: i64) -> (BigInt, BigInt) {
    if d.rem_euclid(4) == 1 {
        (BigInt::from(-1), BigInt::from(-(d - 1) / 4))
    } else {
        (BigInt::zero(), BigInt::from(-d))
    }
}

/// Roots of the minimal polynomial of `omega` modulo `p`, ascending, when
/// `p` does not divide the discriminant and the roots exist.
pub(crate) fn simple_roots_mod_p(d: i64, p: u64) -> Result<(u64, u64)> {
    let disc = if d.rem_euclid(4) == 1 { d } else { 4 * d };
    if disc.rem_euclid(p as i64) == 0 {
        return Err(Error::NoDegreeOnePlace(p));
    }
    let (t1, t0) = omega_minpoly(d);
    let pb = BigInt::from(p);
    let roots: alloc::vec::Vec<u64> = if p == 2 {
        (0..2u64)
            .filter(|&r| {
                let r = BigInt::from(r);
                (&r * &r + &t1 * &r + &t0).mod_floor(&pb).is_zero()
            })
            .collect()
    } else {
        let dm = disc.rem_euclid(p as i64) as u64;
        let s = sqrt_mod_prime(dm, p).ok_or(Error::NoDegreeOnePlace(p))?;
        // r = (-t1 +- s) / 2
        let inv2 = (p + 1) / 2;
        let mt1 = (-&t1).mod_floor(&pb);
        let mt1: u64 = num_traits::ToPrimitive::to_u64(&mt1).unwrap();
        let r1 = ((mt1 + s) % p) as u128 * inv2 as u128 % p as u128;
        let r2 = ((mt1 + p - s) % p) as u128 * inv2 as u128 % p as u128;
        alloc::vec![r1 as u64, r2 as u64]
    };
    if roots.len() != 2 {
        return Err(Error::NoDegreeOnePlace(p));
    }
    let (a, b) = (roots[0].min(roots[1]), roots[0].max(roots[1]));
    if a == b {
        return Err(Error::NoDegreeOnePlace(p));
    }
    Ok((a, b))
}

/// Image of `omega` under the split embedding labelled 1 (the lift of the
/// smaller root mod `p`), modulo `p^k`.
pub fn hensel_root(d: i64, p: u64, k: u32) -> Result<PadicResidue> {
    hensel_root_labeled(d, p, k, 1)
}

/// As [`hensel_root`], for the place with the given label (1 or 2).
pub fn hensel_root_labeled(d: i64, p: u64, k: u32, label: u8) -> Result<PadicResidue> {
    let (r1, r2) = simple_roots_mod_p(d, p)?;
    let r0 = if label == 1 { r1 } else { r2 };
    let (t1, t0) = omega_minpoly(d);
    let mut r = BigInt::from(r0);
    let mut prec = 1u32;
    while prec < k {
        prec = (2 * prec).min(k);
        let m = int_pow(p, prec);
        let f = &r * &r + &t1 * &r + &t0;
        let df = BigInt::from(2) * &r + &t1;
        let inv = mod_inv(&df, &m).expect("simple root");
        r = (&r - f * inv).mod_floor(&m);
    }
    Ok(PadicResidue::new(p, k, r))
}

/// Fractional part of `x` in `Q_p`: the rational `r` with denominator a power
/// of `p`, `0 <= r < 1`, and `x - r` a `p`-adic integer.
pub fn padic_frac(x: &Rational, p: u64) -> Rational {
    if x.is_zero() {
        return Rational::zero();
    }
    let j = ord_p_int(x.denom(), p);
    if j == 0 {
        return Rational::zero();
    }
    let pj = int_pow(p, j);
    let m = x.denom() / &pj;
    let inv = mod_inv(&m, &pj).expect("coprime");
    let num = (x.numer() * inv).mod_floor(&pj);
    Rational::new(num, pj)
}
