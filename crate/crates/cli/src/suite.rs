//! Seeded random generator words and evaluation points for the
//! transformation-law and cocycle suites.

use halftheta::localsymbols::Sl2;
use halftheta::theta::{act, evaluate_relative, image_split, term_estimate, verify_transform_at, TransformReport};
use halftheta::{FieldCtx, GTriple, QuadElem};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Generators of `SL2(o)`: `u+(1), u+(omega), u-(1), u-(omega), diag(eps), -1`
/// over a quadratic field; `T, S, -1` over `Q`.
pub fn generators(ctx: FieldCtx) -> Vec<Sl2> {
    if ctx.is_rational() {
        return vec![Sl2::t(ctx), Sl2::s(ctx), Sl2::minus_one(ctx)];
    }
    let one = ctx.int(1);
    let w = ctx.omega();
    let mut out = vec![Sl2::u_plus(&one), Sl2::u_plus(&w), Sl2::u_minus(&one), Sl2::u_minus(&w)];
    if let Some(e) = ctx.fundamental_unit() {
        out.push(Sl2::diag(&e).expect("unit"));
    }
    out.push(Sl2::minus_one(ctx));
    out
}

/// `1..=max_len` random generators or their inverses.
pub fn random_factors(ctx: FieldCtx, rng: &mut ChaCha8Rng, max_len: usize) -> Vec<Sl2> {
    let gens = generators(ctx);
    let len = rng.gen_range(1..=max_len.max(1));
    (0..len)
        .map(|_| {
            let h = &gens[rng.gen_range(0..gens.len())];
            if rng.gen_bool(0.5) {
                h.clone()
            } else {
                h.inv()
            }
        })
        .collect()
}

fn product(ctx: FieldCtx, factors: &[Sl2]) -> Sl2 {
    factors.iter().fold(Sl2::identity(ctx), |g, h| g.mul(h))
}

/// Product of `1..=max_len` generators or their inverses.
pub fn random_word(ctx: FieldCtx, rng: &mut ChaCha8Rng, max_len: usize) -> Sl2 {
    product(ctx, &random_factors(ctx, rng, max_len))
}

/// Word in `T` and `S` only.
pub fn random_ts_word(ctx: FieldCtx, rng: &mut ChaCha8Rng, max_len: usize) -> Sl2 {
    let len = rng.gen_range(1..=max_len.max(1));
    let mut g = Sl2::identity(ctx);
    for _ in 0..len {
        let h = if rng.gen_bool(0.5) { Sl2::t(ctx) } else { Sl2::s(ctx) };
        g = g.mul(&h);
    }
    g
}

/// `|N(c w + d)|` as a float.
fn j_norm(g: &Sl2, w: &[Complex64]) -> f64 {
    w.iter()
        .enumerate()
        .map(|(i, wi)| {
            let [_, _, c, d] = g.embed_f64(i);
            (wi * c + d).norm()
        })
        .product()
}

/// `h w = sigma + zeta` with `sigma` exact: `a/c - 1/(c (c w + d))` if
/// `c != 0`, else `a^2 w + ab`.
pub fn split_image(h: &Sl2, w: &[Complex64]) -> (QuadElem, Vec<Complex64>) {
    if h.c.is_zero() {
        let zeta = w.iter().enumerate().map(|(i, wi)| wi * h.a.embed_f64(i).powi(2)).collect();
        return (&h.a * &h.b, zeta);
    }
    let sigma = h.a.checked_div(&h.c).expect("c != 0");
    let zeta = w
        .iter()
        .enumerate()
        .map(|(i, wi)| {
            let [_, _, c, d] = h.embed_f64(i);
            -((wi * c + d) * c).inv()
        })
        .collect();
    (sigma, zeta)
}

/// A point in the orbit of a random base point `w` (`Re w_i in [-1/2, 1/2]`,
/// `Im w_i in [1/2, 2]`). The word `g = f_1 ... f_k` is written as
/// `P D D^{-1} Q` with `P Q = g` a split of the word and `D = diag(eps^j)`,
/// `|j| <= 3`; the split with the least `max(|N j(P D, w)|, |N j(Q^{-1} D, w)|)`
/// gives `z = Q^{-1} D w` and `g z = P D w`. Returns that cost with the point.
pub fn orbit_point(ctx: FieldCtx, factors: &[Sl2], rng: &mut ChaCha8Rng) -> (f64, QuadElem, Vec<Complex64>) {
    let w = random_box_point(ctx.degree(), rng, 0.5, 2.0);
    let mut units = vec![Sl2::identity(ctx)];
    if let Some(e) = ctx.fundamental_unit() {
        let d = Sl2::diag(&e).expect("unit");
        let di = d.inv();
        let (mut up, mut down) = (Sl2::identity(ctx), Sl2::identity(ctx));
        for _ in 0..3 {
            up = up.mul(&d);
            down = down.mul(&di);
            units.push(up.clone());
            units.push(down.clone());
        }
    }
    let mut best: Option<(f64, Sl2)> = None;
    for k in 0..=factors.len() {
        let p = product(ctx, &factors[..k]);
        let q_inv = product(ctx, &factors[k..]).inv();
        for u in &units {
            let (pd, qd) = (p.mul(u), q_inv.mul(u));
            let cost = j_norm(&pd, &w).max(j_norm(&qd, &w));
            if best.as_ref().map_or(true, |(c, _)| cost < *c) {
                best = Some((cost, qd));
            }
        }
    }
    let (cost, m) = best.expect("at least one split");
    let (sigma, zeta) = split_image(&m, &w);
    (cost, sigma, zeta)
}

/// `z = -d/c + r_i u_i / |c_i|` for offsets `u_i` in the upper half plane.
/// Requires `c != 0`.
pub fn balanced_point(g: &Sl2, r: &[f64], offsets: &[Complex64]) -> (QuadElem, Vec<Complex64>) {
    let sigma = (-&g.d).checked_div(&g.c).expect("c != 0");
    let zeta = r.iter().zip(offsets).enumerate().map(|(i, (ri, u))| u * (ri / g.c.embed_f64(i).abs())).collect();
    (sigma, zeta)
}

/// Scales `r` so that the estimated term counts at `z` and `g z` agree; the
/// first falls and the second rises with `r_0 r_1`.
fn even_out(t: &GTriple, g: &Sl2, r: &[f64], offsets: &[Complex64]) -> halftheta::Result<Vec<f64>> {
    let (s, z) = balanced_point(g, r, offsets);
    let (_, img) = image_split(g, &s, &z)?;
    let ratio = term_estimate(t, &z, 1e-7)? / term_estimate(t, &img, 1e-7)?;
    Ok(r.iter().map(|x| x * ratio.sqrt()).collect())
}

/// `sum |terms| / |theta|` at `z` and at `g z`, the larger of the two;
/// infinite when a value cannot be separated from zero.
pub fn condition(t: &GTriple, g: &Sl2, sigma: &QuadElem, zeta: &[Complex64]) -> halftheta::Result<f64> {
    let (img_sigma, img_zeta) = image_split(g, sigma, zeta)?;
    let mut worst: f64 = 0.0;
    for (s, z) in [(sigma, zeta), (&img_sigma, &img_zeta[..])] {
        let e = evaluate_relative(t, s, z, 1e-3)?;
        let lower = e.value.norm() - e.tail;
        worst = worst.max(if lower > 0.0 { e.magnitude / lower } else { f64::INFINITY });
    }
    Ok(worst)
}

/// Largest condition accepted for a point without further search.
pub const MAX_CONDITION: f64 = 1e5;

/// A random point for the word `g = f_1 ... f_k`.
///
/// The orbit point of `orbit_point` is used when its cost is within a small
/// factor of `sqrt |N c|`, the least possible value of the larger of the two
/// evaluation costs. Otherwise `z` is a balanced point near `-d/c`. The ratio
/// `r_0 / r_1` is scanned from where `Im z` agrees at both embeddings,
/// `log(r_0 / r_1) = +-log(|c_0| / |c_1|)`, outwards; `r_0 r_1` evens out the
/// two costs. The scan stops once both `theta(z)` and `theta(g z)` are well
/// conditioned; otherwise the best scanned point is kept.
pub fn random_point(
    t: &GTriple,
    factors: &[Sl2],
    rng: &mut ChaCha8Rng,
) -> halftheta::Result<(QuadElem, Vec<Complex64>)> {
    let ctx = t.ctx();
    let g = product(ctx, factors);
    let (cost, sigma, zeta) = orbit_point(ctx, factors, rng);
    if g.c.is_zero() {
        return Ok((sigma, zeta));
    }
    let floor = (0..ctx.degree()).map(|i| g.c.embed_f64(i).abs()).product::<f64>().sqrt();
    if cost <= 8.0 * floor.max(100.0) {
        return Ok((sigma, zeta));
    }
    if ctx.is_rational() {
        return Ok(balanced_point(&g, &[1.0], &random_box_point(1, rng, 0.5, 2.0)));
    }
    let centre = (g.c.embed_f64(0) / g.c.embed_f64(1)).abs().ln();
    let mut scan = Vec::new();
    for k in 0..8 {
        let off = 2.0 * f64::from(k / 2) * if k % 2 == 0 { 1.0 } else { -1.0 };
        if k == 1 {
            continue;
        }
        scan.push(centre + off);
        scan.push(-centre + off);
    }
    let mut best: Option<(f64, QuadElem, Vec<Complex64>)> = None;
    for l in scan {
        let offsets = random_box_point(2, rng, 0.5, 2.0);
        let r = [(l / 2.0).exp(), (-l / 2.0).exp()];
        let r = even_out(t, &g, &r, &offsets).unwrap_or(r.to_vec());
        let (s, z) = balanced_point(&g, &r, &offsets);
        let kappa = condition(t, &g, &s, &z).unwrap_or(f64::INFINITY);
        let done = kappa <= MAX_CONDITION;
        if best.as_ref().map_or(true, |(b, _, _)| kappa < *b) {
            best = Some((kappa, s, z));
        }
        if done {
            break;
        }
    }
    let (_, s, z) = best.expect("one point");
    Ok((s, z))
}

/// Point with every coordinate having `Re in [-1/2, 1/2]`, `Im in [lo, hi]`.
pub fn random_box_point(degree: usize, rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> Vec<Complex64> {
    (0..degree).map(|_| Complex64::new(rng.gen_range(-0.5..0.5), rng.gen_range(lo..hi))).collect()
}

/// Outcome of a run of the transformation suite.
#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub checks: usize,
    pub max_rel_err: f64,
    pub worst: Option<(Sl2, QuadElem, Vec<Complex64>, TransformReport)>,
    /// Checks that could not be evaluated: word index, word, error.
    pub failures: Vec<(usize, Sl2, String)>,
}

/// `words` random words of length `<= max_len`, `points` points each. A check
/// whose point or series cannot be evaluated is recorded in `failures`.
pub fn transform_suite(
    t: &GTriple,
    words: usize,
    points: usize,
    max_len: usize,
    tol: f64,
    rng: &mut ChaCha8Rng,
) -> SuiteResult {
    let ctx = t.ctx();
    let mut res = SuiteResult { checks: 0, max_rel_err: 0.0, worst: None, failures: Vec::new() };
    for k in 0..words {
        let factors = random_factors(ctx, rng, max_len);
        let g = product(ctx, &factors);
        // points draw from their own stream, so the words of a seed do not
        // depend on how the point searches went
        let mut point_rng = ChaCha8Rng::seed_from_u64(rng.gen());
        for _ in 0..points {
            res.checks += 1;
            let checked = random_point(t, &factors, &mut point_rng)
                .and_then(|(sigma, zeta)| verify_transform_at(t, &g, &sigma, &zeta, tol).map(|r| (sigma, zeta, r)));
            let (sigma, zeta, r) = match checked {
                Ok(v) => v,
                Err(e) => {
                    res.failures.push((k, g.clone(), e.to_string()));
                    continue;
                }
            };
            if r.rel_err >= res.max_rel_err {
                res.max_rel_err = r.rel_err;
                res.worst = Some((g.clone(), sigma, zeta, r));
            }
        }
    }
    res
}

/// Imaginary parts of `z` and `g z`, smallest first.
pub fn min_imag(g: &Sl2, z: &[Complex64]) -> f64 {
    let gz = act(g, z);
    z.iter().chain(gz.iter()).map(|w| w.im).fold(f64::INFINITY, f64::min)
}

