//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use halftheta::arith::{factor, rat, BigInt, FACTOR_BOUND};
use halftheta::classgroup::{theorem2_check, ClassGroup};
use halftheta::existence::{
    construct_triple, equiv_classes, is_in_g, quadratic_criteria, realize_classes, three_u2_v2_criterion,
    two_squares_criterion,
};
use halftheta::localsymbols::{
    hilbert_symbol, kubota_cocycle, min_unit_sq_val, v0, v0_by_places, v0_rational_closed_form, Place, Sl2,
};
use halftheta::multiplier::{cocycle_check, v_eta, MultiplierSpec, UnitRoot};
use halftheta::quadfield::tp_generator;
use halftheta::theta::{eta, eta_cubed, evaluate_relative};
use halftheta::{FieldCtx, FracIdeal, GTriple, PrimePlace, QuadElem, Weight};
use halftheta_cli::suite::{random_box_point, random_ts_word, random_word, transform_suite};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const H: Weight = Weight::Half;
const T: Weight = Weight::ThreeHalves;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn field(d: i64) -> FieldCtx {
    if d == 1 {
        FieldCtx::rational()
    } else {
        FieldCtx::quadratic(d).unwrap()
    }
}

fn rng(tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + tag)
}

fn to_int(x: &QuadElem) -> BigInt {
    assert!(x.y == rat(0, 1) && x.x.is_integer());
    x.x.to_integer()
}

fn eta_mult(g: &Sl2) -> UnitRoot {
    v_eta(&to_int(&g.a), &to_int(&g.b), &to_int(&g.c), &to_int(&g.d)).unwrap()
}


/// Every matrix in SL2(Z) with all entries in `[-n, n]`.
fn sl2z_box(n: i64) -> Vec<(i64, i64, i64, i64)> {
    let mut out = Vec::new();
    for a in -n..=n {
        for b in -n..=n {
            for c in -n..=n {
                for d in -n..=n {
                    if a * d - b * c == 1 {
                        out.push((a, b, c, d));
                    }
                }
            }
        }
    }
    out
}

fn rational_triple(w: Weight) -> (GTriple, GTriple) {
    let q = FieldCtx::rational();
    let t = construct_triple(q, &[w]).unwrap().unwrap();
    let expected = match w {
        H => GTriple::new(q.rat(rat(1, 24)), q.primes_above(3), FracIdeal::unit(q), vec![H]),
        T => GTriple::new(q.rat(rat(1, 8)), vec![], FracIdeal::unit(q), vec![T]),
    };
    (t, expected)
}

fn eta_baseline(w: Weight, tag: u64) -> Outcome {
    let start = Instant::now();
    let (t, expected) = rational_triple(w);
    ensure!(t.equivalent(&expected), "constructed {t} is not equivalent to {expected}");
    let zero = QuadElem::from_int(0, 1);
    let mut rng = rng(tag);
    let mut worst = 0f64;
    for _ in 0..20 {
        let z = random_box_point(1, &mut rng, 0.3, 3.0);
        let theta = evaluate_relative(&t, &zero, &z, 1e-12).unwrap().value;
        let reference = match w {
            H => eta(z[0]).unwrap(),
            T => eta_cubed(z[0]).unwrap(),
        } * 2.0;
        worst = worst.max((theta - reference).norm() / reference.norm());
    }
    let elapsed = start.elapsed();
    ensure!(worst < 1e-9, "max relative error {worst:e}");
    if w == H {
        ensure!(elapsed < Duration::from_secs(5), "runtime {elapsed:?}");
    }
    Ok(format!("{t}; 20 points, max rel err {worst:.1e}, {:.2}s", elapsed.as_secs_f64()))
}

fn criterion1() -> Outcome {
    eta_baseline(H, 1)
}

fn criterion2() -> Outcome {
    eta_baseline(T, 2)
}

fn criterion3() -> Outcome {
    let q = FieldCtx::rational();
    let half = MultiplierSpec::new(&rational_triple(H).0).unwrap();
    let cubic = MultiplierSpec::new(&rational_triple(T).0).unwrap();
    let mut mats: Vec<Sl2> = sl2z_box(20).into_iter().map(|(a, b, c, d)| Sl2::from_ints(q, a, b, c, d).unwrap()).collect();
    let boxed = mats.len();
    let mut rng = rng(3);
    for _ in 0..500 {
        mats.push(random_ts_word(q, &mut rng, 12));
    }
    for g in &mats {
        let e = eta_mult(g);
        ensure!(half.v_lambda(g).unwrap() == e, "weight 1/2 differs at {g:?}");
        ensure!(cubic.v_lambda(g).unwrap() == e.pow(3), "weight 3/2 differs at {g:?}");
    }
    Ok(format!("{boxed} box matrices and 500 T/S words, both weights"))
}

fn criterion4() -> Outcome {
    let mut rng = rng(4);
    let mut done = Vec::new();
    for (d, w) in [(1i64, vec![H]), (17, vec![H, H]), (793, vec![H, T])] {
        let k = field(d);
        let t = construct_triple(k, &w).unwrap().unwrap();
        let spec = MultiplierSpec::new(&t).unwrap();
        for _ in 0..100 {
            let g = random_word(k, &mut rng, 6);
            let h = random_word(k, &mut rng, 6);
            ensure!(cocycle_check(|x| spec.v_lambda(x), &g, &h, k).unwrap(), "D = {d}: cocycle fails at {g:?}, {h:?}");
        }
        done.push(d.to_string());
    }
    Ok(format!("100 pairs each over D in {{{}}}", done.join(", ")))
}

fn local_places(k: FieldCtx) -> Vec<Place> {
    let ps: &[u64] = match k.d() {
        1 => &[2, 3, 5, 7],
        17 => &[2, 3, 13, 17],
        _ => &[2, 3, 5, 13, 61],
    };
    let mut out: Vec<Place> = ps.iter().flat_map(|&p| k.primes_above(p)).map(Place::Finite).collect();
    out.extend((0..k.degree()).map(Place::Real));
    out
}

fn random_elem(k: FieldCtx, rng: &mut ChaCha8Rng) -> QuadElem {
    loop {
        let x = rat(rng.gen_range(-40..=40), rng.gen_range(1..=6));
        let y = if k.is_rational() { rat(0, 1) } else { rat(rng.gen_range(-10..=10), rng.gen_range(1..=4)) };
        let e = k.elem(x, y);
        if !e.is_zero() {
            return e;
        }
    }
}

/// All places where `a` or `b` can have a non-trivial symbol.
fn support(k: FieldCtx, xs: &[&QuadElem]) -> Vec<Place> {
    let mut primes = vec![2u64];
    for x in xs {
        let n = x.norm();
        for m in [n.numer().clone(), n.denom().clone(), x.x.denom().clone(), x.y.denom().clone()] {
            primes.extend(factor(&m, FACTOR_BOUND).unwrap().into_iter().map(|(p, _)| p));
        }
    }
    primes.sort_unstable();
    primes.dedup();
    let mut out: Vec<Place> = primes.iter().flat_map(|&p| k.primes_above(p)).map(Place::Finite).collect();
    out.extend((0..k.degree()).map(Place::Real));
    out
}

fn criterion5() -> Outcome {
    let fields = [field(1), field(17), field(793)];
    let mut rng = rng(5);
    for i in 0..500 {
        let k = fields[i % 3];
        let places = local_places(k);
        let v = &places[rng.gen_range(0..places.len())];
        let (a, b, c) = (random_elem(k, &mut rng), random_elem(k, &mut rng), random_elem(k, &mut rng));
        let ab = hilbert_symbol(&a, &b, v).unwrap();
        ensure!(ab == hilbert_symbol(&b, &a, v).unwrap(), "symmetry fails for {a}, {b}");
        ensure!(
            hilbert_symbol(&a, &(&b * &c), v).unwrap() == ab * hilbert_symbol(&a, &c, v).unwrap(),
            "bimultiplicativity fails for {a}, {b}, {c}"
        );
    }
    for i in 0..200 {
        let k = fields[i % 3];
        let (a, b) = (random_elem(k, &mut rng), random_elem(k, &mut rng));
        let prod: i8 = support(k, &[&a, &b]).iter().map(|v| hilbert_symbol(&a, &b, v).unwrap()).product();
        ensure!(prod == 1, "product formula fails for {a}, {b}");
    }
    for i in 0..200 {
        let k = fields[i % 3];
        let places = local_places(k);
        let v = &places[rng.gen_range(0..places.len())];
        let g: Vec<Sl2> = (0..3).map(|_| random_word(k, &mut rng, 4)).collect();
        let lhs = kubota_cocycle(&g[0], &g[1], v).unwrap() * kubota_cocycle(&g[0].mul(&g[1]), &g[2], v).unwrap();
        let rhs = kubota_cocycle(&g[0], &g[1].mul(&g[2]), v).unwrap() * kubota_cocycle(&g[1], &g[2], v).unwrap();
        ensure!(lhs == rhs, "Kubota cocycle identity fails");
    }
    let q = field(1);
    let mut small = 0;
    for (a, b, c, d) in sl2z_box(8) {
        let g = Sl2::from_ints(q, a, b, c, d).unwrap();
        let closed = v0_rational_closed_form(&BigInt::from(c), &BigInt::from(d)).unwrap();
        ensure!(v0_by_places(&g, q).unwrap() == closed, "v0 adelic product differs at {a} {b} {c} {d}");
        ensure!(v0(&g, q).unwrap() == closed, "v0 differs at {a} {b} {c} {d}");
        small += 1;
    }
    let order_places: [PrimePlace; 3] = [q.primes_above(5)[0], q.primes_above(3)[0], q.primes_above(2)[0]];
    let m: Vec<u32> = order_places.iter().map(|v| min_unit_sq_val(v).unwrap()).collect();
    ensure!(m == [0, 1, 3], "M table {m:?}");
    let k = field(793);
    ensure!(min_unit_sq_val(&k.t3_places()[0]).unwrap() == 1, "M at a q = 3 place of Q(sqrt 793)");
    Ok(format!("500 / 200 / 200 random cases, {small} matrices for v0, M = {m:?}"))
}

fn criterion6() -> Outcome {
    let start = Instant::now();
    let k = field(793);
    let rho = k.elem(rat(5, 2), rat(1, 2));
    ensure!(rho.norm() == rat(-192, 1), "N(rho) = {}", rho.norm());
    let q2 = k.s2_places().into_iter().find(|v| v.valuation(&rho).unwrap() > 0).ok_or("no q2")?;
    let q3 = k.t3_places().into_iter().find(|v| v.valuation(&rho).unwrap() > 0).ok_or("no q3")?;
    let rho_ideal = FracIdeal::principal(&rho).unwrap();
    let expected = q2.ideal().pow(6).mul(&q3.ideal()).unwrap();
    ensure!(rho_ideal.hnf() == expected.hnf(), "(rho) = {rho_ideal}, expected {expected}");
    let beta = (&rho * &QuadElem::sqrt_d(793)).scale(&rat(1, 8));
    let a = k.different().mul(&q2.ideal().pow(3)).unwrap().mul(&q3.ideal()).unwrap();
    let eight_beta = FracIdeal::principal(&beta.scale(&rat(8, 1))).unwrap();
    let lhs = eight_beta.mul(&k.different()).unwrap().mul(&q3.ideal()).unwrap();
    let rhs = a.pow(2);
    ensure!(lhs.hnf() == rhs.hnf(), "(8 beta) d q3 = {lhs}, a^2 = {rhs}");
    let t = GTriple::new(beta, vec![q3], a, vec![H, T]);
    ensure!(is_in_g(&t), "worked example is not admissible");
    let h = ClassGroup::narrow(k).unwrap().order();
    ensure!(h == 8, "narrow class number {h}");
    ensure!(k.unit_norm() == Some(1), "N(eps) = {:?}", k.unit_norm());
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(30), "runtime {elapsed:?}");
    Ok(format!("N(rho) = -192, (rho) = {q2}^6 {q3}, HNF identity, h+ = 8, N(eps) = 1, {:.2}s", elapsed.as_secs_f64()))
}

fn criterion7() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for (d, w, tag) in [(17i64, [H, H], 71u64), (793, [H, T], 72)] {
        let t = construct_triple(field(d), &w).unwrap().ok_or(format!("no triple for D = {d}"))?;
        let r = transform_suite(&t, 50, 5, 6, 1e-6, &mut rng(tag));
        ok &= r.checks == 250 && r.failures.is_empty() && r.max_rel_err < 1e-6;
        let mut part = format!(
            "D = {d}: {} checks, {} evaluated, max rel err {:.1e}",
            r.checks,
            r.checks - r.failures.len(),
            r.max_rel_err
        );
        let mut words: Vec<(usize, &Sl2, &String)> = r.failures.iter().map(|(k, g, e)| (*k, g, e)).collect();
        words.dedup_by_key(|f| f.0);
        for (k, g, e) in words {
            part += &format!("; word {k} with N(c) = {} not evaluated: {e}", g.c.norm());
        }
        parts.push(part);
    }
    let detail = parts.join("; ");
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn brute_two_squares(n: u64) -> bool {
    (0..).take_while(|u| u * u <= n).any(|u| {
        let r = n - u * u;
        let v = (r as f64).sqrt() as u64;
        (v.saturating_sub(1)..=v + 1).any(|v| v * v == r)
    })
}

fn brute_three_u2_v2(n: u64) -> bool {
    (0..).take_while(|u| 3 * u * u <= n).any(|u| {
        let r = n - 3 * u * u;
        let v = (r as f64).sqrt() as u64;
        (v.saturating_sub(1)..=v + 1).any(|v| v * v == r)
    })
}

fn squarefree(n: u64) -> bool {
    (2..).take_while(|p| p * p <= n).all(|p| n % (p * p) != 0)
}

fn criterion8() -> Outcome {
    let mut fields = 0;
    for d in (9..2000u64).step_by(8) {
        if !squarefree(d) {
            continue;
        }
        let k = field(d as i64);
        let g = ClassGroup::narrow(k).unwrap();
        for w in [[H, H], [H, T]] {
            let a = quadratic_criteria(k, &w).unwrap().exists;
            let b = theorem2_check(&g, &w).unwrap().exists;
            ensure!(a == b, "D = {d}, weights {w:?}: criteria {a}, class group {b}");
        }
        fields += 1;
    }
    let mut ns = 0;
    for n in 1..=10_000u64 {
        if !squarefree(n) {
            continue;
        }
        ensure!(two_squares_criterion(n) == brute_two_squares(n), "u^2 + v^2 = {n}");
        ensure!(three_u2_v2_criterion(n) == brute_three_u2_v2(n), "3u^2 + v^2 = {n}");
        ns += 1;
    }
    Ok(format!("{fields} fields, both parities; {ns} square-free N"))
}

/// Integral ideals of norm at most `bound` built from primes below `pmax`.
fn small_ideals(k: FieldCtx, pmax: u64, bound: u64) -> Vec<FracIdeal> {
    let mut out = vec![FracIdeal::unit(k)];
    for p in (2..pmax).filter(|&p| (2..p).all(|q| p % q != 0)) {
        for v in k.primes_above(p) {
            let mut next = Vec::new();
            for i in &out {
                let mut j = i.clone();
                loop {
                    j = j.mul(&v.ideal()).unwrap();
                    if j.norm() > rat(bound as i64, 1) {
                        break;
                    }
                    next.push(j.clone());
                }
            }
            out.extend(next);
        }
    }
    out
}

fn subsets(places: &[PrimePlace]) -> Vec<Vec<PrimePlace>> {
    (0..1usize << places.len())
        .map(|m| places.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, v)| *v).collect())
        .collect()
}

/// Classes found by trying every small ideal directly, without the class
/// group square-root formula.
fn brute_force_classes(k: FieldCtx, w: &[Weight]) -> Vec<GTriple> {
    let mut found: Vec<GTriple> = Vec::new();
    let ideals = small_ideals(k, 60, 3000);
    for s3 in subsets(&k.t3_places()) {
        let mut base = k.different();
        for v in &s3 {
            base = base.mul(&v.ideal()).unwrap();
        }
        for a in &ideals {
            let target = a.pow(2).div(&base).unwrap();
            let Some(sigma) = tp_generator(&target) else { continue };
            for u in k.tp_unit_reps() {
                let beta = (&u * &sigma).scale(&rat(1, 8));
                let t = GTriple::new(beta, s3.clone(), a.clone(), w.to_vec());
                if is_in_g(&t) && !found.iter().any(|f| f.equivalent(&t)) {
                    found.push(t);
                }
            }
        }
    }
    found
}

fn criterion9() -> Outcome {
    let q = field(1);
    for w in [H, T] {
        let (n, _) = equiv_classes(q, &[w]).unwrap();
        ensure!(n == 1, "Q, weight {w}: {n} classes");
    }
    let mut parts = vec!["Q: 1, 1".to_string()];
    for (d, ws) in [(17i64, vec![[H, H], [H, T]]), (793, vec![[H, H], [H, T], [T, T]])] {
        let k = field(d);
        let mut counts = Vec::new();
        for w in ws {
            let (n, _) = equiv_classes(k, &w).unwrap();
            let realized = realize_classes(k, &w).unwrap();
            ensure!(realized.len() as u64 == n, "D = {d}, {w:?}: formula {n}, realized {}", realized.len());
            for (i, t) in realized.iter().enumerate() {
                ensure!(is_in_g(t), "D = {d}: realized {t} is not admissible");
                ensure!(realized[..i].iter().all(|s| !s.equivalent(t)), "D = {d}: realized classes repeat");
            }
            let brute = brute_force_classes(k, &w);
            ensure!(brute.len() as u64 == n, "D = {d}, {w:?}: formula {n}, brute force {}", brute.len());
            ensure!(
                brute.iter().all(|b| realized.iter().any(|r| r.equivalent(b))),
                "D = {d}, {w:?}: brute force finds a class that was not realized"
            );
            counts.push(n.to_string());
        }
        parts.push(format!("D = {d}: {}", counts.join(", ")));
    }
    Ok(parts.join("; "))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("eta baseline, weight 1/2", criterion1),
        ("eta cubed baseline, weight 3/2", criterion2),
        ("multiplier exactness over Q", criterion3),
        ("cocycle law", criterion4),
        ("local symbol suite", criterion5),
        ("D = 793 worked example", criterion6),
        ("transformation law for D = 17, 793", criterion7),
        ("criteria agreement", criterion8),
        ("equivalence class counts", criterion9),
    ];
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    std::panic::set_hook(Box::new(|_| {}));
    for (i, (name, f)) in criteria.iter().enumerate() {
        let n = i + 1;
        if !only.is_empty() && !only.contains(&n) {
            continue;
        }
        let start = Instant::now();
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("PASS criterion {n}: {name} ({detail}) [{secs:.1}s]"),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {n}: {name}: {e} [{secs:.1}s]");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
