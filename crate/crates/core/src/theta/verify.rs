use alloc::vec::Vec;

use num_complex::Complex64;

use super::evaluate::evaluate_relative;
use crate::localsymbols::Sl2;
use crate::multiplier::{weight_factor, MultiplierSpec, UnitRoot};
use crate::arith::QuadElem;
use crate::quadfield::{GTriple, Weight};
use crate::Result;

#[derive(Debug, Clone, PartialEq)]
pub struct TransformReport {
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub multiplier: UnitRoot,
    pub rel_err: f64,
}

/// `g z` for `z = sigma + zeta`, again as an exact shift plus a small part:
/// `a/c - 1/(c (cz + d))` if `c != 0`, and `a^2 z + ab` if `c = 0`.
pub fn image_split(g: &Sl2, sigma: &QuadElem, zeta: &[Complex64]) -> Result<(QuadElem, Vec<Complex64>)> {
    let n = zeta.len();
    if g.c.is_zero() {
        let a2 = &g.a * &g.a;
        let shift = &(&a2 * sigma) + &(&g.a * &g.b);
        let img: Vec<Complex64> = (0..n).map(|i| zeta[i] * a2.embed_f64(i)).collect();
        return Ok((shift, img));
    }
    let shift = g.a.checked_div(&g.c)?;
    let cs_d = &(&g.c * sigma) + &g.d;
    let img: Vec<Complex64> = (0..n)
        .map(|i| {
            let c = g.c.embed_f64(i);
            let czd = zeta[i] * c + cs_d.embed_f64(i);
            -(czd * c).inv()
        })
        .collect();
    Ok((shift, img))
}

/// `prod J(g, z_i)^{2 w_i}` with `c z + d` formed as `(c sigma + d) + c zeta`.
fn jfactor(g: &Sl2, sigma: &QuadElem, zeta: &[Complex64], weights: &[Weight]) -> Complex64 {
    if g.c.is_zero() {
        return weight_factor(g, weights, zeta);
    }
    let cs_d = &(&g.c * sigma) + &g.d;
    let mut r = Complex64::new(1.0, 0.0);
    for (i, w) in weights.iter().enumerate() {
        let czd = zeta[i] * g.c.embed_f64(i) + cs_d.embed_f64(i);
        r *= czd.sqrt().powu(w.twice());
    }
    r
}

/// `g z` coordinatewise.
pub fn act(g: &Sl2, z: &[Complex64]) -> Vec<Complex64> {
    (0..z.len())
        .map(|i| {
            let [a, b, c, d] = g.embed_f64(i);
            (z[i] * a + b) / (z[i] * c + d)
        })
        .collect()
}

/// Compares `theta(g z)` with `v_lambda(g) prod J(g, z_i)^{2 w_i} theta(z)`.
/// Both sides are evaluated with tail below `tol * 1e-3` relatively.
pub fn verify_transform(t: &GTriple, g: &Sl2, z: &[Complex64], tol: f64) -> Result<TransformReport> {
    let zero = QuadElem::from_int(0, t.beta.d);
    verify_transform_at(t, g, &zero, z, tol)
}

/// As `verify_transform` at `z = sigma + zeta` with `sigma` exact; the image
/// is split by `image_split`.
pub fn verify_transform_at(
    t: &GTriple,
    g: &Sl2,
    sigma: &QuadElem,
    zeta: &[Complex64],
    tol: f64,
) -> Result<TransformReport> {
    let spec = MultiplierSpec::new(t)?;
    let v = spec.v_lambda(g)?;
    let (img_shift, img) = image_split(g, sigma, zeta)?;
    let lhs = evaluate_relative(t, &img_shift, &img, tol * 1e-3)?.value;
    let th = evaluate_relative(t, sigma, zeta, tol * 1e-3)?.value;
    let jf = jfactor(g, sigma, zeta, &t.weights);
    let rhs = v.to_complex() * jf * th;
    let scale = lhs.norm().max(rhs.norm());
    let rel_err = if scale == 0.0 { 0.0 } else { (lhs - rhs).norm() / scale };
    Ok(TransformReport { lhs, rhs, multiplier: v, rel_err })
}
