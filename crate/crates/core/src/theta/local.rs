use num_traits::ToPrimitive;

use crate::arith::QuadElem;
use crate::quadfield::{GTriple, PrimePlace};
use crate::{Error, Result};

/// Sign table for residues modulo `p^k`: `+1` on `1`, `-1` on `-1`.
pub(crate) fn sign_of_residue(r: u64, modulus: u64) -> i8 {
    if r == 1 % modulus {
        1
    } else if r == modulus - 1 {
        -1
    } else {
        0
    }
}

/// Precision of the local test: `1 + 2 p_v` is `1 + 4 Z_2` at a place in
/// `S2` and `1 + p_v` at a place in `S3`.
pub(crate) fn precision(t: &GTriple, v: &PrimePlace) -> Result<u32> {
    if t.s2().contains(v) {
        Ok(2)
    } else if t.s3.contains(v) {
        Ok(1)
    } else {
        Err(Error::NotAdmissible(alloc::format!("{v} is not in S2 or S3")))
    }
}

/// `f_v(xi)`: `1` on `1 + 2 p_v`, `-1` on `-1 + 2 p_v`, `0` elsewhere.
pub fn local_factor(t: &GTriple, xi: &QuadElem, v: &PrimePlace) -> Result<i8> {
    let k = precision(t, v)?;
    if xi.is_zero() {
        return Ok(0);
    }
    if v.valuation(xi)? < 0 {
        return Err(Error::NotIntegral);
    }
    let r = v.residue_at(xi, k)?;
    let m = r.modulus().to_u64().expect("small modulus");
    Ok(sign_of_residue(r.value.to_u64().expect("reduced residue"), m))
}
