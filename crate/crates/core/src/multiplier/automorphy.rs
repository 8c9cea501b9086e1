use num_complex::Complex64;
use num_traits::Float;

use super::UnitRoot;
use crate::localsymbols::{kubota_cocycle, Place, Sl2};
use crate::quadfield::{FieldCtx, Weight};
use crate::Result;

/// `J(g, z)`: `sqrt(d)` or `-sqrt(-d)`-type value when `c = 0`, otherwise the
/// principal branch of `(cz + d)^{1/2}`; `g` is taken under embedding `i`.
pub fn automorphy_j(g: &Sl2, i: usize, z: Complex64) -> Complex64 {
    let [_, _, c, d] = g.embed_f64(i);
    if g.c.is_zero() {
        if g.d.embedding_sign(i) > 0 {
            Complex64::new(Float::sqrt(d), 0.0)
        } else {
            // -sqrt(d) with sqrt(d) = i sqrt(|d|)
            Complex64::new(0.0, -Float::sqrt(-d))
        }
    } else {
        (z * c + d).sqrt()
    }
}

/// `prod_i J(iota_i g, z_i)^{2 w_i}`.
pub fn weight_factor(g: &Sl2, weights: &[Weight], z: &[Complex64]) -> Complex64 {
    let mut r = Complex64::new(1.0, 0.0);
    for (i, w) in weights.iter().enumerate() {
        r *= automorphy_j(g, i, z[i]).powu(w.twice());
    }
    r
}

/// Product of the Kubota cocycle over the real places.
pub fn c_infinity(g1: &Sl2, g2: &Sl2, ctx: FieldCtx) -> Result<i8> {
    let mut r = 1;
    for i in 0..ctx.degree() {
        r *= kubota_cocycle(g1, g2, &Place::Real(i))?;
    }
    Ok(r)
}

/// Exact check of `v(g1) v(g2) = c_inf(g1, g2) v(g1 g2)`.
pub fn cocycle_check<F>(v: F, g1: &Sl2, g2: &Sl2, ctx: FieldCtx) -> Result<bool>
where
    F: Fn(&Sl2) -> Result<UnitRoot>,
{
    let lhs = v(g1)?.mul(&v(g2)?);
    let rhs = v(&g1.mul(g2))?.mul(&UnitRoot::from_sign(c_infinity(g1, g2, ctx)?));
    Ok(lhs == rhs)
}
