use num_complex::Complex64;

use crate::{Error, Result};

const TWO_PI: f64 = 2.0 * core::f64::consts::PI;

/// `eta(z) = e(z/24) prod_{m >= 1} (1 - e(mz))`, truncated once the
/// remaining factors change the value by less than `1e-17` relatively.
pub fn eta(z: Complex64) -> Result<Complex64> {
    if z.im <= 0.0 {
        return Err(Error::NotInUpperHalfPlane);
    }
    let i = Complex64::new(0.0, 1.0);
    let q = (i * TWO_PI * z).exp();
    let aq = q.norm();
    let mut acc = (i * TWO_PI * z / 24.0).exp();
    let mut qm = q;
    let mut am = aq;
    let mut m = 1u64;
    loop {
        acc *= Complex64::new(1.0, 0.0) - qm;
        // |sum_{k > m} log(1 - q^k)| <= |q|^{m+1} / (1 - |q|)^2
        if am * aq / ((1.0 - aq) * (1.0 - aq)) < 1e-17 {
            return Ok(acc);
        }
        m += 1;
        if m > 10_000_000 {
            return Err(Error::NoConvergence("eta product".into()));
        }
        qm *= q;
        am *= aq;
    }
}

pub fn eta_cubed(z: Complex64) -> Result<Complex64> {
    Ok(eta(z)?.powu(3))
}

