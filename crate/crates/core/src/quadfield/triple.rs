use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use super::{FieldCtx, FracIdeal, PrimePlace};
use crate::arith::{QuadElem, Rational};
use crate::{Error, Result};

/// Half-integral weight at one real place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Weight {
    Half,
    ThreeHalves,
}

impl Weight {
    /// `2w`.
    pub fn twice(self) -> u32 {
        match self {
            Weight::Half => 1,
            Weight::ThreeHalves => 3,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "1/2" => Ok(Weight::Half),
            "3/2" => Ok(Weight::ThreeHalves),
            other => Err(Error::InvalidWeights(other.into())),
        }
    }

    /// Parses a comma separated weight vector and checks its length.
    pub fn parse_list(s: &str, ctx: FieldCtx) -> Result<Vec<Self>> {
        let ws = s.split(',').map(Self::parse).collect::<Result<Vec<_>>>()?;
        if ws.len() != ctx.degree() {
            return Err(Error::InvalidWeights(alloc::format!("expected {} weights, got {}", ctx.degree(), ws.len())));
        }
        Ok(ws)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Weight::Half => "1/2",
            Weight::ThreeHalves => "3/2",
        })
    }
}

/// A triple `(beta, S3, a)` with its weight vector. `s3` is kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GTriple {
    pub beta: QuadElem,
    pub s3: Vec<PrimePlace>,
    pub ideal: FracIdeal,
    pub weights: Vec<Weight>,
}

impl GTriple {
    pub fn new(beta: QuadElem, mut s3: Vec<PrimePlace>, ideal: FracIdeal, weights: Vec<Weight>) -> Self {
        s3.sort();
        s3.dedup();
        GTriple { beta, s3, ideal, weights }
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ideal.ctx()
    }

    /// Real places (embedding indices) of weight 3/2.
    pub fn s_inf(&self) -> Vec<usize> {
        (0..self.weights.len()).filter(|&i| self.weights[i] == Weight::ThreeHalves).collect()
    }

    pub fn s2(&self) -> Vec<PrimePlace> {
        self.ctx().s2_places()
    }

    /// `S2 ∪ S3`, sorted.
    pub fn special_places(&self) -> Vec<PrimePlace> {
        let mut out = self.s2();
        out.extend(self.s3.iter().copied());
        out.sort();
        out.dedup();
        out
    }

    /// `(gamma^2 beta, S3, gamma a)`.
    pub fn scale_by(&self, gamma: &QuadElem) -> Result<Self> {
        let beta = &(gamma * gamma) * &self.beta;
        let ideal = self.ideal.mul_elem(gamma)?;
        Ok(GTriple { beta, s3: self.s3.clone(), ideal, weights: self.weights.clone() })
    }

    pub fn is_normalized(&self) -> bool {
        self.special_places().iter().all(|v| self.ideal.ord_at(v) == 0)
    }

    /// Equivalent triple with `ord_v a = 0` on `S2 ∪ S3`.
    pub fn normalize(&self) -> Result<Self> {
        let places = self.special_places();
        let ctx = self.ctx();
        let mut gamma = ctx.int(1);
        for v in &places {
            let n = -self.ideal.ord_at(v);
            if n == 0 {
                continue;
            }
            let others: Vec<PrimePlace> = places.iter().filter(|w| *w != v).copied().collect();
            let pi = local_uniformizer(v, &others)?;
            let f = if n > 0 { pi.pow(n as u32) } else { pi.inv()?.pow((-n) as u32) };
            gamma = &gamma * &f;
        }
        let out = self.scale_by(&gamma)?;
        debug_assert!(out.is_normalized());
        Ok(out)
    }

    /// Whether `beta' = gamma^2 beta` and `a' = gamma a` for some `gamma`.
    pub fn equivalent(&self, other: &Self) -> bool {
        if self.ctx() != other.ctx() || self.s3 != other.s3 || self.weights != other.weights {
            return false;
        }
        let q = match other.beta.checked_div(&self.beta) {
            Ok(q) => q,
            Err(_) => return false,
        };
        match q.sqrt() {
            Some(g) => self.ideal.mul_elem(&g).map(|i| i == other.ideal).unwrap_or(false),
            None => false,
        }
    }
}

/// An element of valuation 1 at `v` and 0 at each place in `others`.
pub(crate) fn local_uniformizer(v: &PrimePlace, others: &[PrimePlace]) -> Result<QuadElem> {
    let ctx = v.ctx();
    let p = BigInt::from(v.p);
    let pe = ctx.rat(Rational::from_integer(p.clone()));
    let base = if ctx.is_rational() || v.kind == super::PlaceKind::Inert {
        alloc::vec![pe.clone()]
    } else {
        alloc::vec![pe.clone(), &ctx.omega() - &ctx.int(v.root as i64)]
    };
    let ok = |x: &QuadElem| -> bool {
        !x.is_zero()
            && v.valuation(x).ok() == Some(1)
            && others.iter().all(|w| w.valuation(x).ok() == Some(0))
    };
    if ok(&pe) {
        return Ok(pe);
    }
    if base.len() == 1 {
        return Err(Error::NotAdmissible(alloc::format!("no local uniformizer at {v}")));
    }
    let bound = 4 * v.p as i64 + 8;
    for r in 1..=bound {
        for i in -r..=r {
            for j in [-r, r] {
                for (ii, jj) in [(i, j), (j, i)] {
                    let x = &base[0].scale(&Rational::from_integer(ii.into()))
                        + &base[1].scale(&Rational::from_integer(jj.into()));
                    if ok(&x) {
                        return Ok(x);
                    }
                }
            }
        }
    }
    Err(Error::NotAdmissible(alloc::format!("no local uniformizer at {v}")))
}

impl fmt::Display for GTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(beta = {}, S3 = {{", self.beta)?;
        for (k, v) in self.s3.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}, a = {})", self.ideal)
    }
}
