use crate::arith::{factor, is_square, isqrt, FACTOR_BOUND};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

fn scan(n: u64, k: u64) -> Option<(u64, u64)> {
    let mut u = 0u64;
    while k * u * u <= n {
        let r = n - k * u * u;
        if is_square(&BigInt::from(r)) {
            let v = isqrt(&BigInt::from(r)).to_u64().expect("fits");
            return Some((u, v));
        }
        u += 1;
    }
    None
}

/// `n = u^2 + v^2` with the smallest `u`.
pub fn two_squares(n: u64) -> Option<(u64, u64)> {
    scan(n, 1)
}

/// `n = 3u^2 + v^2` with the smallest `u`.
pub fn three_u2_v2(n: u64) -> Option<(u64, u64)> {
    scan(n, 3)
}

/// All `(u, v)` with `u, v >= 0` and `n = k u^2 + v^2`, by increasing `u`.
pub fn norm_form_reps(n: u64, k: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut u = 0u64;
    while k * u * u <= n {
        let r = BigInt::from(n - k * u * u);
        if is_square(&r) {
            out.push((u, isqrt(&r).to_u64().expect("fits")));
        }
        u += 1;
    }
    out
}

fn primes(n: u64) -> impl Iterator<Item = u64> {
    factor(&BigInt::from(n), FACTOR_BOUND).expect("factorable").into_iter().map(|(p, _)| p)
}

/// No prime factor of `n` is inert in `Q(sqrt -1)`.
pub fn two_squares_criterion(n: u64) -> bool {
    primes(n).all(|p| p % 4 != 3)
}

/// No prime factor of `n` is inert in `Q(sqrt -3)`.
pub fn three_u2_v2_criterion(n: u64) -> bool {
    primes(n).all(|p| p % 3 != 2)
}
