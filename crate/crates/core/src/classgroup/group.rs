use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::QForm;
use crate::arith::{isqrt, QuadElem};
use crate::quadfield::{FieldCtx, FracIdeal};
use crate::Result;

/// Narrow ideal class group with an explicit multiplication table.
#[derive(Debug, Clone)]
pub struct ClassGroup {
    ctx: FieldCtx,
    reps: Vec<FracIdeal>,
    lookup: BTreeMap<QForm, usize>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

/// Form attached to a primitive ideal `[a, b0 + omega] = [a, (-B + sqrt d)/2]`
/// under the orientation-preserving correspondence: `(a, -B, c)`.
fn oriented_form(ctx: FieldCtx, ideal: &FracIdeal) -> QForm {
    let (_, a, b0, _) = ideal.hnf();
    let d = BigInt::from(ctx.disc());
    let tr = if ctx.d().rem_euclid(4) == 1 { BigInt::one() } else { BigInt::from(0) };
    let b = BigInt::from(2) * b0 + tr;
    let c = (&b * &b - &d) / (BigInt::from(4) * &a);
    QForm::new(a, b, c)
}

fn reduce(mut f: QForm) -> QForm {
    while !f.is_reduced() {
        f = f.rho();
    }
    f
}

/// All reduced forms of discriminant `d`.
pub fn reduced_forms(d: &BigInt) -> Vec<QForm> {
    let sq = isqrt(d);
    let mut out = Vec::new();
    let mut b = BigInt::one();
    if d.is_even() {
        b += 1;
    }
    while b <= sq {
        let n: BigInt = (d - &b * &b) / 4;
        let nn = n.to_u64().expect("small discriminant");
        let mut a = 1u64;
        while a * a <= nn {
            if nn % a == 0 {
                for aa in [a, nn / a] {
                    for s in [1i64, -1] {
                        let ab = BigInt::from(aa) * s;
                        let c = -&n / &ab;
                        let f = QForm::new(ab, b.clone(), c);
                        if f.is_reduced() {
                            out.push(f);
                        }
                    }
                }
            }
            a += 1;
        }
        b += 2;
    }
    out.sort();
    out.dedup();
    out
}

impl ClassGroup {
    /// Narrow class group of `ctx` (trivial over `Q`).
    pub fn narrow(ctx: FieldCtx) -> Result<Self> {
        if ctx.is_rational() {
            return Ok(ClassGroup {
                ctx,
                reps: alloc::vec![FracIdeal::unit(ctx)],
                lookup: BTreeMap::new(),
                table: alloc::vec![alloc::vec![0]],
                identity: 0,
            });
        }
        let d = BigInt::from(ctx.disc());
        let forms = reduced_forms(&d);
        let mut lookup = BTreeMap::new();
        let mut reps = Vec::new();
        for f in &forms {
            if lookup.contains_key(f) {
                continue;
            }
            let idx = reps.len();
            let mut g = f.clone();
            let mut rep: Option<QForm> = None;
            loop {
                lookup.insert(g.clone(), idx);
                if rep.is_none() && g.a.is_positive() {
                    rep = Some(g.clone());
                }
                g = g.rho();
                if &g == f {
                    break;
                }
            }
            let r = rep.expect("cycle contains a form with a > 0");
            // oriented form (a, b, c) comes from [a, (b + sqrt d)/2]
            let half = crate::arith::Rational::new(1.into(), 2.into());
            let k = if ctx.d().rem_euclid(4) == 1 { 1 } else { 2 };
            let mu = QuadElem::new(
                crate::arith::Rational::from_integer(r.b.clone()) * &half,
                crate::arith::Rational::from_integer(k.into()) * &half,
                ctx.d(),
            );
            let ideal = FracIdeal::from_generators(&[QuadElem::from_bigint(r.a.clone(), ctx.d()), mu], ctx)?;
            reps.push(ideal);
        }
        let mut g = ClassGroup { ctx, reps, lookup, table: Vec::new(), identity: 0 };
        g.identity = g.class_of(&FracIdeal::unit(ctx));
        let n = g.reps.len();
        let mut table = alloc::vec![alloc::vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                table[i][j] = g.class_of(&g.reps[i].mul(&g.reps[j])?);
            }
        }
        g.table = table;
        Ok(g)
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn rep(&self, i: usize) -> &FracIdeal {
        &self.reps[i]
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn square(&self, i: usize) -> usize {
        self.table[i][i]
    }

    pub fn inv(&self, i: usize) -> usize {
        (0..self.order()).find(|&j| self.table[i][j] == self.identity).expect("group")
    }

    /// Narrow class of a fractional ideal.
    pub fn class_of(&self, ideal: &FracIdeal) -> usize {
        if self.ctx.is_rational() {
            return 0;
        }
        let f = reduce(oriented_form(self.ctx, &ideal.primitive_part()));
        self.lookup[&f]
    }

    /// Class of the principal ideal `(sqrt D)`.
    pub fn sqrt_d_class(&self) -> usize {
        if self.ctx.is_rational() {
            return self.identity;
        }
        self.class_of(&FracIdeal::principal(&QuadElem::sqrt_d(self.ctx.d())).expect("non-zero"))
    }

    /// Kernel of `Cl+ -> Cl`, generated by the class of `(sqrt D)`.
    pub fn wide_kernel(&self) -> Vec<usize> {
        let s = self.sqrt_d_class();
        if s == self.identity {
            alloc::vec![self.identity]
        } else {
            alloc::vec![self.identity, s]
        }
    }

    /// Order of the wide class group.
    pub fn wide_order(&self) -> usize {
        self.order() / self.wide_kernel().len()
    }

    /// Classes that are squares in `Cl+`.
    pub fn squares(&self) -> Vec<usize> {
        let mut s: Vec<usize> = (0..self.order()).map(|i| self.square(i)).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Narrow classes `y` with `y^2 = target`.
    pub fn square_roots(&self, target: usize) -> Vec<usize> {
        (0..self.order()).filter(|&i| self.square(i) == target).collect()
    }

    /// Number of wide classes `x` with `Sq(x) = target`.
    pub fn sq_preimage_count(&self, target: usize) -> u64 {
        (self.square_roots(target).len() / self.wide_kernel().len()) as u64
    }

    /// One narrow representative per wide class in `Sq^{-1}(target)`.
    pub fn sq_preimages(&self, target: usize) -> Vec<usize> {
        let kernel = self.wide_kernel();
        let mut seen = alloc::collections::BTreeSet::new();
        let mut out = Vec::new();
        for y in self.square_roots(target) {
            if seen.contains(&y) {
                continue;
            }
            for &k in &kernel {
                seen.insert(self.mul(y, k));
            }
            out.push(y);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::tp_generator;

    #[test]
    fn orders_of_known_fields() {
        // Narrow class numbers.
        for (d, h) in [(17i64, 1usize), (793, 8), (57, 2), (3, 2), (5, 1), (79, 6), (229, 3)] {
            let g = ClassGroup::narrow(FieldCtx::quadratic(d).unwrap()).unwrap();
            assert_eq!(g.order(), h, "d = {d}");
        }
    }

    fn jacobi_oracle(a: i64, n: i64) -> i64 {
        // multiplicative over the prime factors of n, Euler's criterion for each
        let mut r = 1;
        let mut m = n;
        let mut p = 3;
        while m > 1 {
            if m % p == 0 {
                m /= p;
                let e = (0..(p - 1) / 2).fold(1i64, |acc, _| acc * a.rem_euclid(p) % p);
                r *= if e == 0 { 0 } else if e == 1 { 1 } else { -1 };
            } else {
                p += 2;
            }
        }
        r
    }

    #[test]
    fn analytic_class_number_formula() {
        for d in (5i64..400).step_by(4) {
            let ctx = match FieldCtx::quadratic(d) {
                Ok(c) if !c.is_rational() => c,
                _ => continue,
            };
            let eps = ctx.fundamental_unit().unwrap().embed_f64(0);
            let s: f64 = (1..d)
                .map(|a| jacobi_oracle(a, d) as f64 * (core::f64::consts::PI * a as f64 / d as f64).sin().ln())
                .sum();
            let h = (-0.5 * s / eps.ln()).round() as usize;
            let hplus = if ctx.unit_norm() == Some(1) { 2 * h } else { h };
            let g = ClassGroup::narrow(ctx).unwrap();
            assert_eq!(g.order(), hplus, "d = {d}");
            assert_eq!(g.wide_order(), h, "d = {d}");
        }
    }

    #[test]
    fn class_of_principal_tracks_totally_positive_generator() {
        for d in [793i64, 57, 145, 3] {
            let ctx = FieldCtx::quadratic(d).unwrap();
            let g = ClassGroup::narrow(ctx).unwrap();
            let mut ideals = Vec::new();
            for p in [2u64, 3, 5, 7, 11, 13] {
                for v in ctx.primes_above(p) {
                    ideals.push(v.ideal());
                }
            }
            for i in &ideals {
                for j in &ideals {
                    let ij = i.mul(j).unwrap();
                    assert_eq!(g.class_of(&ij), g.mul(g.class_of(i), g.class_of(j)));
                    let trivial = g.class_of(&ij) == g.identity();
                    assert_eq!(trivial, tp_generator(&ij).is_some(), "d={d} {ij}");
                }
            }
        }
    }
}
