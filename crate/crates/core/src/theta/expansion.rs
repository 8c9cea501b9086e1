use alloc::vec::Vec;

use num_traits::ToPrimitive;

use super::lattice::ThetaLattice;
use crate::arith::{QuadElem, Rational};
use crate::quadfield::GTriple;
use crate::Result;

/// One Fourier coefficient: `nu = beta xi^2`, with `xi` the representative of
/// `±xi` that is positive at the first embedding.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaEntry {
    pub nu: QuadElem,
    pub trace: Rational,
    pub xi: QuadElem,
    pub sign: i8,
    pub coeff: f64,
}

#[derive(Debug, Clone)]
pub struct ThetaExpansion {
    pub triple: GTriple,
    pub bound: Rational,
    pub entries: Vec<ThetaEntry>,
}

/// All coefficients with `Tr(nu) <= bound`, sorted by trace and then by `xi`.
/// The triple is normalized first.
pub fn q_expansion(t: &GTriple, bound: &Rational) -> Result<ThetaExpansion> {
    let lat = ThetaLattice::new(t)?;
    let w = lat.beta;
    let tb = bound.to_f64().unwrap_or(f64::MAX) * (1.0 + 1e-9) + 1e-9;
    let mut pts = Vec::new();
    lat.enumerate(&w, tb, |p| {
        if p.xi[0] > 0.0 && lat.f(p.m, p.n) != 0 {
            pts.push((p.m, p.n));
        }
    })?;
    let beta = &lat.triple.beta;
    let s_inf = lat.triple.s_inf();
    let mut entries = Vec::new();
    for (m, n) in pts {
        let xi = lat.xi_exact(m, n);
        let nu = &(beta * &xi) * &xi;
        let trace = nu.trace();
        if &trace > bound {
            continue;
        }
        let sign = lat.f(m, n);
        let prod: f64 = s_inf.iter().map(|&i| xi.embed_f64(i)).product();
        entries.push(ThetaEntry { nu, trace, coeff: 2.0 * f64::from(sign) * prod, sign, xi });
    }
    entries.sort_by(|a, b| {
        a.trace.cmp(&b.trace).then_with(|| a.xi.x.cmp(&b.xi.x)).then_with(|| a.xi.y.cmp(&b.xi.y))
    });
    Ok(ThetaExpansion { triple: lat.triple, bound: bound.clone(), entries })
}
