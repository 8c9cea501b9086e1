use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{isqrt, QuadElem, Rational};

/// Fundamental unit `eps > 1` of `Q(sqrt d)` from the continued fraction
/// expansion of `omega`.
pub(super) fn fundamental_unit(d: i64) -> QuadElem {
    let dd = BigInt::from(d);
    let sq = isqrt(&dd);
    let one_mod_4 = d.rem_euclid(4) == 1;
    // omega = (p + sqrt d) / q
    let (mut p, mut q) = if one_mod_4 { (BigInt::one(), BigInt::from(2)) } else { (BigInt::zero(), BigInt::one()) };
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let n_omega = if one_mod_4 { BigInt::from(-(d - 1) / 4) } else { -dd.clone() };
    let t_omega = if one_mod_4 { BigInt::one() } else { BigInt::zero() };
    loop {
        let a = (&p + &sq) / &q;
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        h0 = core::mem::replace(&mut h1, h2);
        k0 = core::mem::replace(&mut k1, k2);
        // N(h - k omega) = h^2 - h k Tr(omega) + k^2 N(omega)
        let n = &h1 * &h1 - &h1 * &k1 * &t_omega + &k1 * &k1 * &n_omega;
        if n == BigInt::one() || n == -BigInt::one() {
            // h - k omega' = h - k (Tr omega - omega) > 1
            let w = QuadElem::omega(d);
            let wc = w.conj();
            let k = QuadElem::from_bigint(k1.clone(), d);
            let e = &QuadElem::from_bigint(h1.clone(), d) - &(&k * &wc);
            debug_assert!(e.embedding_sign(0) > 0 && e.x > Rational::zero());
            return e;
        }
        p = &a * &q - &p;
        q = (&dd - &p * &p) / &q;
    }
}
