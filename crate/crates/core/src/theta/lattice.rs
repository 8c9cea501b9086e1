use alloc::vec::Vec;

use num_integer::Integer;
#[allow(unused_imports)] // float methods without std
use num_traits::Float;
use num_traits::ToPrimitive;

use super::local::{precision, sign_of_residue};
use crate::arith::{rat_to_f64, QuadElem, Rational};
use crate::quadfield::{FracIdeal, GTriple};
use crate::{Error, Result};

/// Bound on reduced basis coordinates.
const COORD_LIMIT: i64 = 1 << 40;

/// Hard cap on the bounding box of an enumeration. Only a fraction of the
/// box is visited, and only points with f != 0 are summed.
pub(crate) const MAX_POINTS: f64 = 2.0e9;

/// The lattice `a^{-1} = s (a Z + (b + omega) Z)` of a normalized triple,
/// with the periodic table of `f = prod f_v` in the coordinates `(m, n)`.
#[derive(Debug, Clone)]
pub(crate) struct ThetaLattice {
    pub triple: GTriple,
    pub deg: usize,
    pub scale: Rational,
    pub s: f64,
    a: i128,
    b: i128,
    tr_w: i128,
    n_w: i128,
    omega: [f64; 2],
    pub beta: [f64; 2],
    e1: QuadElem,
    e2: QuadElem,
    unit: Option<UnitAction>,
    period: i64,
    table: Vec<i8>,
}

/// Multiplication by the fundamental unit on coordinates `(m, n)`.
#[derive(Debug, Clone)]
struct UnitAction {
    /// `ln |eps_0|`
    log: f64,
    emb: [f64; 2],
    /// columns are the coordinates of `eps e1`, `eps e2`
    mat: [[i128; 2]; 2],
    /// the same for `eps^{-1}`
    inv: [[i128; 2]; 2],
}

/// Twists beyond this are not tried.
const MAX_TWIST: f64 = 48.0;

pub(crate) fn add_mod(x: u128, y: u128, l: u128) -> u128 {
    let s = x + y;
    if s >= l {
        s - l
    } else {
        s
    }
}

/// `x y mod l` for residues below `2^127`.
pub(crate) fn mul_mod(x: u128, y: u128, l: u128) -> u128 {
    if x >> 64 == 0 && y >> 64 == 0 {
        return x * y % l;
    }
    let (mut x, mut y, mut r) = (x, y, 0);
    if x < y {
        core::mem::swap(&mut x, &mut y);
    }
    while y > 0 {
        if y & 1 == 1 {
            r = add_mod(r, x, l);
        }
        x = add_mod(x, x, l);
        y >>= 1;
    }
    r
}

fn red_mod(x: i128, l: u128) -> u128 {
    if l > i128::MAX as u128 {
        if x < 0 {
            l - x.unsigned_abs()
        } else {
            x as u128
        }
    } else {
        x.rem_euclid(l as i128) as u128
    }
}

/// `Tr(sigma beta xi(m, n)^2) mod 1` as `(A m^2 + B m n + C n^2 mod L) / L`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ShiftPhase {
    a: u128,
    b: u128,
    c: u128,
    l: u128,
}

/// Largest denominator a shift may have; residues and their sums stay
/// below `2^127`.
const MAX_SHIFT_DENOM: u128 = 1 << 126;

impl ShiftPhase {
    pub fn trivial() -> ShiftPhase {
        ShiftPhase { a: 0, b: 0, c: 0, l: 1 }
    }

    pub fn modulus(&self) -> u128 {
        self.l
    }

    fn red(&self, x: i64) -> u128 {
        red_mod(x as i128, self.l)
    }

    pub fn add(&self, x: u128, y: u128) -> u128 {
        add_mod(x, y, self.l)
    }

    fn mul(&self, x: u128, y: u128) -> u128 {
        mul_mod(x, y, self.l)
    }

    /// Residue of `A m^2 + B m n + C n^2`.
    pub fn value(&self, m: i64, n: i64) -> u128 {
        self.value_res(self.red(m), self.red(n))
    }

    fn value_res(&self, m: u128, n: u128) -> u128 {
        let am = self.mul(self.a, self.mul(m, m));
        let bm = self.mul(self.b, self.mul(m, n));
        let cm = self.mul(self.c, self.mul(n, n));
        self.add(self.add(am, bm), cm)
    }

    /// Residue of `A (2pk + k^2) + B q k`, the step from `p` to `p + k`.
    pub fn step(&self, p: i64, q: i64, k: i64) -> u128 {
        let (p, q, k) = (self.red(p), self.red(q), self.red(k));
        let pk = self.mul(p, k);
        let lin = self.add(self.add(pk, pk), self.mul(k, k));
        self.add(self.mul(self.a, lin), self.mul(self.b, self.mul(q, k)))
    }

    /// Residue of `2A k^2`.
    pub fn second(&self, k: i64) -> u128 {
        let k = self.red(k);
        let a2 = self.add(self.a, self.a);
        self.mul(a2, self.mul(k, k))
    }

    /// `x / L` for a residue `x`.
    pub fn frac(&self, x: u128) -> f64 {
        x as f64 / self.l as f64
    }

    /// The same form after the substitution `(m, n) = p u + q v`, with `u`
    /// and `v` given mod `L`.
    pub fn change_basis(&self, u: [u128; 2], v: [u128; 2]) -> ShiftPhase {
        let (u0, u1, v0, v1) = (u[0], u[1], v[0], v[1]);
        // B(x, y) with B(x, x) = 2 S(x)
        let cross = self.add(self.mul(u0, v1), self.mul(u1, v0));
        let a2 = self.add(self.a, self.a);
        let c2 = self.add(self.c, self.c);
        let b = self.add(self.add(self.mul(a2, self.mul(u0, v0)), self.mul(self.b, cross)), self.mul(c2, self.mul(u1, v1)));
        ShiftPhase { a: self.value_res(u0, u1), b, c: self.value_res(v0, v1), l: self.l }
    }
}

/// A visited lattice point: coordinates, embeddings of `xi` and the
/// weighted value `Q = sum w_i xi_i^2`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Point {
    pub m: i64,
    pub n: i64,
    pub xi: [f64; 2],
    pub q: f64,
}

/// Row decomposition of an enumeration in a reduced basis.
#[derive(Debug, Clone)]
pub(crate) struct Rows {
    /// basis vectors `xi = eps^twist eta` given by the coordinates of `eta`
    pub b1: [i64; 2],
    pub b2: [i64; 2],
    pub twist: i32,
    pub x1: [f64; 2],
    pub x2: [f64; 2],
    pub ranges: Vec<(i64, i64, i64)>,
}

fn big_to_i128(x: &num_bigint::BigInt) -> Result<i128> {
    x.to_i128().ok_or_else(|| Error::NormTooLarge(alloc::format!("{x}")))
}

impl ThetaLattice {
    pub fn new(t: &GTriple) -> Result<Self> {
        let t = t.normalize()?;
        let ctx = t.ctx();
        let deg = ctx.degree();
        let inv: FracIdeal = t.ideal.inv();
        let (scale, a, b, _) = inv.hnf();
        let (t1, t0) = if ctx.is_rational() {
            (0, 0)
        } else if ctx.d().rem_euclid(4) == 1 {
            (1, -(ctx.d() as i128 - 1) / 4)
        } else {
            (0, -(ctx.d() as i128))
        };
        let w = ctx.omega();
        let omega = if ctx.is_rational() { [0.0, 0.0] } else { [w.embed_f64(0), w.embed_f64(1)] };
        let beta = [t.beta.embed_f64(0), if deg == 2 { t.beta.embed_f64(1) } else { 0.0 }];
        // residues of the two basis vectors at every special place
        let e1 = QuadElem::from_bigint(a.clone(), ctx.d()).scale(&scale);
        let e2 = (&QuadElem::from_bigint(b.clone(), ctx.d()) + &w).scale(&scale);
        let mut locals = Vec::new();
        for v in t.special_places() {
            let k = precision(&t, &v)?;
            let md = (v.p as i64).pow(k);
            let res = |x: &QuadElem| -> Result<i64> {
                if x.is_zero() {
                    return Ok(0);
                }
                Ok(v.residue_at(x, k)?.value.to_i64().expect("small"))
            };
            let r2 = if ctx.is_rational() { 0 } else { res(&e2)? };
            locals.push((md, res(&e1)?, r2));
        }
        let period = locals.iter().fold(1i64, |l, (md, _, _)| l.lcm(md));
        // units preserve a^{-1}, so multiplication by eps is an integer matrix
        let coords = |x: &QuadElem| -> Result<[i128; 2]> {
            let y = x.scale(&scale.recip());
            let n = &y.y / &w.y;
            let u = &y.x - &n * &w.x;
            let m = (&u - &n * Rational::from_integer(b.clone())) / Rational::from_integer(a.clone());
            if !m.is_integer() || !n.is_integer() {
                return Err(Error::NoConvergence("unit action is not integral".into()));
            }
            Ok([big_to_i128(&m.to_integer())?, big_to_i128(&n.to_integer())?])
        };
        let unit = match ctx.fundamental_unit() {
            Some(eps) if deg == 2 => {
                let ei = eps.inv()?;
                let col = |u: &QuadElem| -> Result<[[i128; 2]; 2]> {
                    let (c1, c2) = (coords(&(u * &e1))?, coords(&(u * &e2))?);
                    Ok([[c1[0], c2[0]], [c1[1], c2[1]]])
                };
                let emb = [eps.embed_f64(0), eps.embed_f64(1)];
                Some(UnitAction { log: emb[0].abs().ln(), emb, mat: col(&eps)?, inv: col(&ei)? })
            }
            _ => None,
        };
        let mut table = alloc::vec![1i8; (period * period) as usize];
        for m in 0..period {
            for n in 0..period {
                let mut f = 1i8;
                for &(md, r1, r2) in &locals {
                    let r = (m * r1 + n * r2).rem_euclid(md);
                    f *= sign_of_residue(r as u64, md as u64);
                }
                table[(m * period + n) as usize] = f;
            }
        }
        Ok(ThetaLattice {
            deg,
            s: rat_to_f64(&scale),
            scale,
            a: big_to_i128(&a)?,
            b: big_to_i128(&b)?,
            tr_w: t1,
            n_w: t0,
            omega,
            beta,
            period,
            table,
            e1,
            e2,
            unit,
            triple: t,
        })
    }

    /// Exact phase data for a real shift `sigma` in `F`.
    pub fn shift_phase(&self, sigma: &QuadElem) -> Result<ShiftPhase> {
        let sb = sigma * &self.triple.beta;
        let two = Rational::from_integer(2.into());
        let coeffs = [
            (&(&sb * &self.e1) * &self.e1).trace(),
            (&(&sb * &self.e1) * &self.e2).trace() * two,
            (&(&sb * &self.e2) * &self.e2).trace(),
        ];
        let reduced: Vec<Rational> = coeffs.iter().map(|x| x - x.floor()).collect();
        let l = reduced.iter().fold(num_bigint::BigInt::from(1), |acc, x| acc.lcm(x.denom()));
        let li = l
            .to_u128()
            .filter(|v| *v <= MAX_SHIFT_DENOM)
            .ok_or_else(|| Error::NoConvergence(alloc::format!("shift denominator {l} too large")))?;
        let num = |x: &Rational| -> u128 { (x.numer() * (&l / x.denom())).to_u128().expect("below l") };
        Ok(ShiftPhase { a: num(&reduced[0]), b: num(&reduced[1]), c: num(&reduced[2]), l: li })
    }

    /// `f(xi)` for `xi = s (m a + n (b + omega))`.
    pub fn f(&self, m: i64, n: i64) -> i8 {
        let p = self.period;
        self.table[(m.rem_euclid(p) * p + n.rem_euclid(p)) as usize]
    }

    pub fn period(&self) -> i64 {
        self.period
    }

    /// `f` by table index `(m mod period) * period + (n mod period)`.
    pub fn f_index(&self, idx: usize) -> i8 {
        self.table[idx]
    }

    /// Exact `xi(m, n)`.
    pub fn xi_exact(&self, m: i64, n: i64) -> QuadElem {
        let ctx = self.triple.ctx();
        let u = num_bigint::BigInt::from(m as i128 * self.a + n as i128 * self.b);
        let x = &QuadElem::from_bigint(u, ctx.d()) + &ctx.omega().scale(&Rational::from_integer(n.into()));
        x.scale(&self.scale)
    }

    /// Embeddings of `xi(m, n)`; the smaller one is recovered from the exact
    /// norm to avoid cancellation.
    pub fn embed(&self, m: i64, n: i64) -> [f64; 2] {
        let u = m as i128 * self.a + n as i128 * self.b;
        if self.deg == 1 {
            return [self.s * u as f64, 0.0];
        }
        let v = n as i128;
        let x0 = u as f64 + v as f64 * self.omega[0];
        let x1 = u as f64 + v as f64 * self.omega[1];
        let exact = u
            .checked_mul(u)
            .zip(self.tr_w.checked_mul(u).and_then(|x| x.checked_mul(v)))
            .zip(self.n_w.checked_mul(v).and_then(|x| x.checked_mul(v)))
            .and_then(|((a, b), c)| a.checked_add(b)?.checked_add(c));
        let Some(norm) = exact else {
            return [self.s * x0, self.s * x1];
        };
        let norm = norm as f64;
        let (x0, x1) = if x0.abs() >= x1.abs() {
            (x0, if x0 == 0.0 { 0.0 } else { norm / x0 })
        } else {
            (norm / x1, x1)
        };
        [self.s * x0, self.s * x1]
    }

    fn qform(&self, w: &[f64; 2], xi: &[f64; 2]) -> f64 {
        (0..self.deg).map(|i| w[i] * xi[i] * xi[i]).sum()
    }

    fn vec_of(&self, w: &[f64; 2], m: i64, n: i64) -> [f64; 2] {
        let e = self.embed(m, n);
        [w[0].sqrt() * e[0], w[1].sqrt() * e[1]]
    }

    /// Lagrange-reduced basis of the lattice for `Q = sum w_i xi_i^2`, as
    /// integer coordinate pairs, with `Q(b1)` the lattice minimum. Fails when
    /// the coordinates leave the range where embeddings stay exact.
    pub fn reduced_basis(&self, w: &[f64; 2]) -> Result<([i64; 2], [i64; 2])> {
        let dot = |x: [f64; 2], y: [f64; 2]| x[0] * y[0] + x[1] * y[1];
        let (mut b1, mut b2) = ([1i64, 0], [0i64, 1]);
        for _ in 0..200 {
            let (v1, v2) = (self.vec_of(w, b1[0], b1[1]), self.vec_of(w, b2[0], b2[1]));
            if dot(v2, v2) < dot(v1, v1) {
                core::mem::swap(&mut b1, &mut b2);
                continue;
            }
            let mu = (dot(v1, v2) / dot(v1, v1)).round();
            if mu == 0.0 {
                break;
            }
            if mu.abs() > COORD_LIMIT as f64 {
                return Err(Error::NoConvergence("lattice too skewed".into()));
            }
            let mu = mu as i64;
            b2 = [b2[0] - mu * b1[0], b2[1] - mu * b1[1]];
            if b2.iter().any(|x| x.abs() > COORD_LIMIT) {
                return Err(Error::NoConvergence("lattice too skewed".into()));
            }
        }
        Ok((b1, b2))
    }

    /// The twist `k` for which `Q(eps^k eta)` is closest to isotropic in
    /// `eta`, and the weights `w_i eps_i^{2k}` of that form.
    fn frame(&self, w: &[f64; 2]) -> (i32, [f64; 2]) {
        let Some(u) = &self.unit else {
            return (0, *w);
        };
        let k = (-(w[0] / w[1]).ln() / (4.0 * u.log)).round().clamp(-MAX_TWIST, MAX_TWIST);
        if k == 0.0 || !k.is_finite() {
            return (0, *w);
        }
        (k as i32, [w[0] * (2.0 * k * u.log).exp(), w[1] * (-2.0 * k * u.log).exp()])
    }

    /// Embeddings of `eps^k xi(m, n)`.
    fn embed_twisted(&self, m: i64, n: i64, k: i32) -> [f64; 2] {
        let e = self.embed(m, n);
        match &self.unit {
            Some(u) if k != 0 => [e[0] * u.emb[0].powi(k), e[1] * u.emb[1].powi(k)],
            _ => e,
        }
    }

    /// Coordinates of `eps^k xi(v)` mod `md`.
    pub fn coords_mod(&self, v: [i64; 2], k: i32, md: u128) -> [u128; 2] {
        let mut x = [red_mod(v[0] as i128, md), red_mod(v[1] as i128, md)];
        if let Some(u) = &self.unit {
            let m = if k > 0 { &u.mat } else { &u.inv };
            let m = m.map(|row| row.map(|e| red_mod(e, md)));
            for _ in 0..k.unsigned_abs() {
                x = [
                    add_mod(mul_mod(m[0][0], x[0], md), mul_mod(m[0][1], x[1], md), md),
                    add_mod(mul_mod(m[1][0], x[0], md), mul_mod(m[1][1], x[1], md), md),
                ];
            }
        }
        x
    }

    /// Minimum of `Q` on non-zero lattice vectors.
    pub fn minimum(&self, w: &[f64; 2]) -> Result<f64> {
        if self.deg == 1 {
            return Ok(w[0] * self.s * self.s);
        }
        let (_, w) = &self.frame(w);
        let (b1, _) = self.reduced_basis(w)?;
        let v = self.vec_of(w, b1[0], b1[1]);
        Ok(v[0] * v[0] + v[1] * v[1])
    }

    /// Bound on the number of points `rows(w, t)` would visit.
    pub fn estimate(&self, w: &[f64; 2], t: f64) -> Result<f64> {
        if self.deg == 1 {
            return Ok(2.0 * ((t / (w[0] * self.s * self.s)).sqrt().floor() + 1.0) + 1.0);
        }
        let slack = 1e-9 * t + 1e-12;
        let (_, w) = &self.frame(w);
        let (b1, b2) = self.reduced_basis(w)?;
        let v1 = self.vec_of(w, b1[0], b1[1]);
        let v2 = self.vec_of(w, b2[0], b2[1]);
        let g11 = v1[0] * v1[0] + v1[1] * v1[1];
        let mu = (v1[0] * v2[0] + v1[1] * v2[1]) / g11;
        let s2 = [v2[0] - mu * v1[0], v2[1] - mu * v1[1]];
        let g22 = s2[0] * s2[0] + s2[1] * s2[1];
        let qmax = ((t + slack) / g22).sqrt().floor();
        Ok((2.0 * qmax + 1.0) * (2.0 * ((t + slack) / g11).sqrt() + 3.0))
    }

    /// Reduced basis, its embeddings and the rows `(q, lo, hi)` covering
    /// every lattice point `p b1 + q b2` with `Q <= t`.
    pub fn rows(&self, w: &[f64; 2], t: f64) -> Result<Rows> {
        let slack = 1e-9 * t + 1e-12;
        let (twist, w) = &self.frame(w);
        let (b1, b2) = self.reduced_basis(w)?;
        let v1 = self.vec_of(w, b1[0], b1[1]);
        let v2 = self.vec_of(w, b2[0], b2[1]);
        let g11 = v1[0] * v1[0] + v1[1] * v1[1];
        let mu = (v1[0] * v2[0] + v1[1] * v2[1]) / g11;
        let s2 = [v2[0] - mu * v1[0], v2[1] - mu * v1[1]];
        let g22 = s2[0] * s2[0] + s2[1] * s2[1];
        let qmax = ((t + slack) / g22).sqrt().floor();
        let est = (2.0 * qmax + 1.0) * (2.0 * ((t + slack) / g11).sqrt() + 3.0);
        if est > MAX_POINTS {
            return Err(Error::NoConvergence("lattice enumeration too large".into()));
        }
        let qmax = qmax as i64;
        let mut ranges = Vec::new();
        for q in -qmax..=qmax {
            let rest = t + slack - (q * q) as f64 * g22;
            if rest < 0.0 {
                continue;
            }
            let r = (rest / g11).sqrt();
            let c = -(q as f64) * mu;
            ranges.push((q, (c - r).floor() as i64, (c + r).ceil() as i64));
        }
        let (x1, x2) = (self.embed_twisted(b1[0], b1[1], *twist), self.embed_twisted(b2[0], b2[1], *twist));
        Ok(Rows { b1, b2, twist: *twist, x1, x2, ranges })
    }

    /// Visits every non-zero lattice point with `Q <= t`, in a fixed order.
    pub fn enumerate<F: FnMut(&Point)>(&self, w: &[f64; 2], t: f64, mut visit: F) -> Result<()> {
        let slack = 1e-9 * t + 1e-12;
        if self.deg == 1 {
            let g = w[0] * self.s * self.s;
            let mmax = (t / g).sqrt().floor() + 1.0;
            if mmax > MAX_POINTS {
                return Err(Error::NoConvergence("lattice enumeration too large".into()));
            }
            let mmax = mmax as i64;
            for m in -mmax..=mmax {
                if m == 0 {
                    continue;
                }
                let xi = self.embed(m, 0);
                let q = self.qform(w, &xi);
                if q <= t {
                    visit(&Point { m, n: 0, xi, q });
                }
            }
            return Ok(());
        }
        let (b1, b2) = self.reduced_basis(w)?;
        let v1 = self.vec_of(w, b1[0], b1[1]);
        let v2 = self.vec_of(w, b2[0], b2[1]);
        let g11 = v1[0] * v1[0] + v1[1] * v1[1];
        let mu = (v1[0] * v2[0] + v1[1] * v2[1]) / g11;
        let s2 = [v2[0] - mu * v1[0], v2[1] - mu * v1[1]];
        let g22 = s2[0] * s2[0] + s2[1] * s2[1];
        let qmax = ((t + slack) / g22).sqrt().floor();
        let est = (2.0 * qmax + 1.0) * (2.0 * ((t + slack) / g11).sqrt() + 1.0);
        if est > MAX_POINTS {
            return Err(Error::NoConvergence("lattice enumeration too large".into()));
        }
        let qmax = qmax as i64;
        for q in -qmax..=qmax {
            let rest = t + slack - (q * q) as f64 * g22;
            if rest < 0.0 {
                continue;
            }
            let r = (rest / g11).sqrt();
            let c = -(q as f64) * mu;
            let (lo, hi) = ((c - r).floor() as i64 - 1, (c + r).ceil() as i64 + 1);
            for p in lo..=hi {
                if p == 0 && q == 0 {
                    continue;
                }
                let m = p * b1[0] + q * b2[0];
                let n = p * b1[1] + q * b2[1];
                let xi = self.embed(m, n);
                let val = self.qform(w, &xi);
                if val <= t {
                    visit(&Point { m, n, xi, q: val });
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn big_form(a: &BigInt, b: &BigInt, c: &BigInt, l: &BigInt, m: i64, n: i64) -> BigInt {
        let (m, n) = (BigInt::from(m), BigInt::from(n));
        (a * &m * &m + b * &m * &n + c * &n * &n).mod_floor(l)
    }

    #[test]
    fn shift_residues_match_bigint() {
        let cases: [(u128, u128, u128, u128); 3] = [
            (5, 7, 3, 24),
            (0x1234_5678_9abc_def0_1234_5678, 0x0fed_cba9_8765_4321_0fed_cba9, 0x1111_2222_3333_4444_5555_6666, (1 << 120) - 159),
            ((1 << 125) + 17, (1 << 124) + 3, (1 << 126) - 5, 1 << 126),
        ];
        for (a, b, c, l) in cases {
            let sp = ShiftPhase { a: a % l, b: b % l, c: c % l, l };
            let (ab, bb, cb, lb) = (BigInt::from(a % l), BigInt::from(b % l), BigInt::from(c % l), BigInt::from(l));
            let big = |x: u128| BigInt::from(x);
            for (m, n) in [(0, 0), (1, -1), (-7, 3), (123_456_789_012, -98_765_432_109), (i64::MIN + 1, i64::MAX)] {
                assert_eq!(big(sp.value(m, n)), big_form(&ab, &bb, &cb, &lb, m, n));
                for k in [1, 24, 999] {
                    let want = (big_form(&ab, &bb, &cb, &lb, m + k, n) - big_form(&ab, &bb, &cb, &lb, m, n)).mod_floor(&lb);
                    assert_eq!(big(sp.step(m, n, k)), want);
                    let want2 = (big_form(&ab, &bb, &cb, &lb, m + 2 * k, n) - BigInt::from(2) * big_form(&ab, &bb, &cb, &lb, m + k, n)
                        + big_form(&ab, &bb, &cb, &lb, m, n))
                    .mod_floor(&lb);
                    assert_eq!(big(sp.second(k)), want2);
                }
            }
            let (u, v) = ([3, -5], [-1_000_003, 2]);
            let r = |x: [i64; 2]| [red_mod(x[0] as i128, l), red_mod(x[1] as i128, l)];
            let nb = sp.change_basis(r(u), r(v));
            for (p, q) in [(1, 0), (0, 1), (4, -9), (-1234, 5678)] {
                assert_eq!(nb.value(p, q), sp.value(p * u[0] + q * v[0], p * u[1] + q * v[1]));
            }
        }
    }
}
