use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // float methods without std
use num_traits::Float;

use super::lattice::{ShiftPhase, ThetaLattice};
use crate::arith::{QuadElem, Rational};
use crate::quadfield::GTriple;
use crate::{Error, Result};

const TWO_PI: f64 = 2.0 * core::f64::consts::PI;

/// Value of the theta series with the cutoff used and its certified tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    /// `sum |term|` over the summed terms; its ratio to `|value|` measures
    /// the cancellation in the sum.
    pub magnitude: f64,
    pub cutoff: f64,
    pub tail: f64,
    pub terms: usize,
}

fn check_point(lat: &ThetaLattice, z: &[Complex64]) -> Result<[f64; 2]> {
    if z.len() != lat.deg {
        return Err(Error::InvalidWeights(alloc::format!("expected {} coordinates", lat.deg)));
    }
    let mut w = [0.0; 2];
    for i in 0..lat.deg {
        if !(z[i].im > 0.0) || !z[i].re.is_finite() {
            return Err(Error::NotInUpperHalfPlane);
        }
        w[i] = z[i].im * lat.beta[i];
    }
    Ok(w)
}

/// Bound on `sum_{Q(xi) > t} |f(xi) prod_{S_inf} xi_i e(...)|` by dyadic
/// shells, using `#{Q <= R} <= (1 + 2 sqrt(R / lambda1))^n` and
/// `|xi_i| <= sqrt(Q / w_i)`.
fn tail_of(lat: &ThetaLattice, w: &[f64; 2], t: f64) -> Result<f64> {
    let k = lat.triple.s_inf();
    let lambda1 = lat.minimum(w)? * (1.0 - 1e-9);
    let c: f64 = k.iter().map(|&i| 1.0 / w[i].sqrt()).product();
    let half_k = k.len() as f64 / 2.0;
    let n = lat.deg as i32;
    let mut total = 0.0;
    let mut r = t;
    for _ in 0..80 {
        let count = (1.0 + 2.0 * (2.0 * r / lambda1).sqrt()).powi(n);
        let term = count * c * r.powf(half_k) * (-TWO_PI * r).exp();
        total += term;
        if term < 1e-40 * total.max(1e-300) || term == 0.0 {
            break;
        }
        r *= 2.0;
    }
    Ok(total)
}

/// Tail bound for the cutoff `t` at the point `z`.
pub fn tail_bound(t: &GTriple, z: &[Complex64], cutoff: f64) -> Result<f64> {
    let lat = ThetaLattice::new(t)?;
    let w = check_point(&lat, z)?;
    tail_of(&lat, &w, cutoff.max(1.0))
}

/// Neumaier-compensated sum of reals.
#[derive(Default)]
struct Acc {
    s: f64,
    c: f64,
}

impl Acc {
    fn add(&mut self, x: f64) {
        let t = self.s + x;
        if self.s.abs() >= x.abs() {
            self.c += (self.s - t) + x;
        } else {
            self.c += (x - t) + self.s;
        }
        self.s = t;
    }

    fn get(&self) -> f64 {
        self.s + self.c
    }
}

/// `theta(z) = sum_{xi in a^{-1}} f(xi) prod_{S_inf} xi_i e(sum z_i beta_i xi_i^2)`
/// with the discarded tail certified below `tol`.
pub fn evaluate(t: &GTriple, z: &[Complex64], tol: f64) -> Result<Evaluation> {
    evaluate_at(t, &t.beta.scale(&Rational::from_integer(0.into())), z, tol)
}

/// Smallest cutoff on the grid `c_0 1.2^k` whose tail bound is below `tol`,
/// with that bound.
fn cutoff_for(lat: &ThetaLattice, w: &[f64; 2], tol: f64) -> Result<(f64, f64)> {
    let tol = if tol > 0.0 { tol } else { 1e-12 };
    let mut cutoff = (lat.triple.s_inf().len() as f64 / (4.0 * core::f64::consts::PI)).max(1.0);
    let mut tail = tail_of(lat, w, cutoff)?;
    while tail >= tol {
        cutoff *= 1.2;
        tail = tail_of(lat, w, cutoff)?;
        if cutoff > 1e12 {
            return Err(Error::NoConvergence("tail bound".into()));
        }
    }
    Ok((cutoff, tail))
}

/// Upper estimate of the lattice points `evaluate_at` visits at `zeta` with
/// tolerance `tol`; the shift does not change it.
pub fn term_estimate(t: &GTriple, zeta: &[Complex64], tol: f64) -> Result<f64> {
    let lat = ThetaLattice::new(t)?;
    let w = check_point(&lat, zeta)?;
    let (cutoff, _) = cutoff_for(&lat, &w, tol)?;
    lat.estimate(&w, cutoff)
}

/// `theta(sigma + zeta)` for an exact real shift `sigma` in `F`. The phase
/// `e(Tr(sigma beta xi^2))` is computed exactly, so large real parts cost no
/// precision.
pub fn evaluate_at(t: &GTriple, sigma: &QuadElem, zeta: &[Complex64], tol: f64) -> Result<Evaluation> {
    let lat = ThetaLattice::new(t)?;
    let w = check_point(&lat, zeta)?;
    let z = zeta;
    let shift = if sigma.is_zero() { None } else { Some(lat.shift_phase(sigma)?) };
    let (cutoff, tail) = cutoff_for(&lat, &w, tol)?;
    let s_inf: Vec<usize> = lat.triple.s_inf();
    let (value, magnitude, terms) = if lat.deg == 1 {
        sum_points(&lat, &s_inf, shift, z, &w, cutoff)?
    } else {
        sum_rows(&lat, &s_inf, shift, z, &w, cutoff)?
    };
    Ok(Evaluation { value, magnitude, cutoff, tail, terms })
}

/// Term by term over the points with `Q <= t`.
fn sum_points(
    lat: &ThetaLattice,
    s_inf: &[usize],
    shift: Option<ShiftPhase>,
    z: &[Complex64],
    w: &[f64; 2],
    t: f64,
) -> Result<(Complex64, f64, usize)> {
    let (mut re, mut im) = (Acc::default(), Acc::default());
    let mut abs = 0.0;
    let mut terms = 0usize;
    lat.enumerate(w, t, |p| {
        let f = lat.f(p.m, p.n);
        if f == 0 {
            return;
        }
        let mut amp = f64::from(f);
        for &i in s_inf {
            amp *= p.xi[i];
        }
        let mut phase = shift.as_ref().map(|sp| sp.frac(sp.value(p.m, p.n))).unwrap_or(0.0);
        for i in 0..lat.deg {
            phase += z[i].re * lat.beta[i] * p.xi[i] * p.xi[i];
        }
        let mag = amp * (-TWO_PI * p.q).exp();
        let (sn, cs) = (TWO_PI * phase).sin_cos();
        re.add(mag * cs);
        im.add(mag * sn);
        abs += mag.abs();
        terms += 1;
    })?;
    Ok((Complex64::new(re.get(), im.get()), abs, terms))
}

/// Steps between exact reseeds of the row recurrences.
const RESEED: i64 = 64;

/// Row by row in a reduced basis `(b1, b2)`. Along a row `xi = p b1 + q b2`
/// the exponent `sum z_i beta_i xi_i^2` is quadratic in `p`, so consecutive
/// exponentials differ by a factor that itself changes by a constant factor.
fn sum_rows(
    lat: &ThetaLattice,
    s_inf: &[usize],
    shift: Option<ShiftPhase>,
    z: &[Complex64],
    w: &[f64; 2],
    t: f64,
) -> Result<(Complex64, f64, usize)> {
    let rows = lat.rows(w, t)?;
    let sp = match shift {
        Some(sp) => {
            let l = sp.modulus();
            sp.change_basis(lat.coords_mod(rows.b1, rows.twist, l), lat.coords_mod(rows.b2, rows.twist, l))
        }
        None => ShiftPhase::trivial(),
    };
    // sum z_i beta_i xi_i^2 = a11 p^2 + a12 p q + a22 q^2
    let (mut a11, mut a12, mut a22) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    for i in 0..2 {
        let zb = z[i] * lat.beta[i];
        a11 += zb * (rows.x1[i] * rows.x1[i]);
        a12 += zb * (2.0 * rows.x1[i] * rows.x2[i]);
        a22 += zb * (rows.x2[i] * rows.x2[i]);
    }
    let cis = |x: f64| {
        let (sn, cs) = (TWO_PI * x).sin_cos();
        Complex64::new(cs, sn)
    };
    let expi = |x: Complex64| (Complex64::new(0.0, TWO_PI) * x).exp();
    let exact_second = sp.second(1);
    let second = expi(a11 * 2.0) * cis(sp.frac(exact_second));
    let (mut re, mut im) = (Acc::default(), Acc::default());
    let mut abs = 0.0;
    let mut terms = 0usize;
    let per = lat.period();
    let b1p = lat.coords_mod(rows.b1, rows.twist, per as u128).map(|x| x as i64);
    let b2p = lat.coords_mod(rows.b2, rows.twist, per as u128).map(|x| x as i64);
    let step = b1p;
    let weighted: Vec<usize> = s_inf.to_vec();
    // f is periodic along a row, so long rows walk each residue class with
    // f != 0 on its own and skip the zero classes
    let perf = per as f64;
    let exact_stride_second = sp.second(per);
    let stride_second = expi(a11 * (2.0 * perf * perf)) * cis(sp.frac(exact_stride_second));
    for &(q, lo, hi) in &rows.ranges {
        let qf = q as f64;
        let (lr, qr) = (lo.rem_euclid(per), q.rem_euclid(per));
        let mut mm = (lr * b1p[0] + qr * b2p[0]) % per;
        let mut nn = (lr * b1p[1] + qr * b2p[1]) % per;
        let (mut row_re, mut row_im) = (Acc::default(), Acc::default());
        let mut add = |p: i64, f: i8, e: Complex64| {
            let mut amp = f64::from(f);
            // in a reduced basis p x1 + q x2 loses nothing against the
            // size of xi allowed by the cutoff
            for &i in &weighted {
                amp *= p as f64 * rows.x1[i] + qf * rows.x2[i];
            }
            row_re.add(amp * e.re);
            row_im.add(amp * e.im);
            abs += amp.abs() * e.norm();
            terms += 1;
        };
        if hi - lo + 1 >= 4 * per {
            for p0 in lo..lo + per {
                let f = lat.f_index((mm * per + nn) as usize);
                mm = (mm + step[0]) % per;
                nn = (nn + step[1]) % per;
                if f == 0 {
                    continue;
                }
                let mut e = Complex64::new(0.0, 0.0);
                let mut r = Complex64::new(0.0, 0.0);
                // exact residues of the shift phase, advanced by addition only
                let (mut ue, mut ur) = (sp.value(p0, q), sp.step(p0, q, per));
                let mut k = 0;
                let mut p = p0;
                while p <= hi {
                    if k % RESEED == 0 {
                        let pf = p as f64;
                        e = expi(a11 * (pf * pf) + a12 * (pf * qf) + a22 * (qf * qf)) * cis(sp.frac(ue));
                        r = expi(a11 * (2.0 * pf * perf + perf * perf) + a12 * (perf * qf)) * cis(sp.frac(ur));
                    }
                    if p != 0 || q != 0 {
                        add(p, f, e);
                    }
                    e *= r;
                    r *= stride_second;
                    ue = sp.add(ue, ur);
                    ur = sp.add(ur, exact_stride_second);
                    p += per;
                    k += 1;
                }
            }
        } else {
            let mut e = Complex64::new(0.0, 0.0);
            let mut r = Complex64::new(0.0, 0.0);
            let (mut ue, mut ur) = (sp.value(lo, q), sp.step(lo, q, 1));
            for p in lo..=hi {
                if (p - lo) % RESEED == 0 {
                    let pf = p as f64;
                    e = expi(a11 * (pf * pf) + a12 * (pf * qf) + a22 * (qf * qf)) * cis(sp.frac(ue));
                    r = expi(a11 * (2.0 * pf + 1.0) + a12 * qf) * cis(sp.frac(ur));
                }
                let f = lat.f_index((mm * per + nn) as usize);
                if f != 0 && (p != 0 || q != 0) {
                    add(p, f, e);
                }
                e *= r;
                r *= second;
                ue = sp.add(ue, ur);
                ur = sp.add(ur, exact_second);
                mm += step[0];
                if mm >= per {
                    mm -= per;
                }
                nn += step[1];
                if nn >= per {
                    nn -= per;
                }
            }
        }
        re.add(row_re.get());
        im.add(row_im.get());
    }
    Ok((Complex64::new(re.get(), im.get()), abs, terms))
}

/// Evaluation at `sigma + zeta` whose tail is below `rel` times the
/// magnitude of the value. The tolerance shrinks until the value separates
/// from the tail; a value that never does is returned at the last tolerance.
pub fn evaluate_relative(t: &GTriple, sigma: &QuadElem, zeta: &[Complex64], rel: f64) -> Result<Evaluation> {
    let mut tol = 1e-4;
    loop {
        let e = evaluate_at(t, sigma, zeta, tol)?;
        let lower = e.value.norm() - e.tail;
        let want = 0.01 * rel * lower.max(0.0);
        if want >= e.tail || tol < 1e-280 {
            return Ok(e);
        }
        tol = if want > 0.0 { want } else { tol * 1e-8 };
    }
}
