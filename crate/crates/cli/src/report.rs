//! JSON shapes. Algebraic data is written as exact rational strings,
//! analytic data as decimal floats.

use halftheta::existence::{ExistenceReport, S3Term};
use halftheta::localsymbols::Sl2;
use halftheta::theta::ThetaEntry;
use halftheta::{FracIdeal, GTriple, PrimePlace, QuadElem, Rational, Weight};
use serde::Serialize;

/// `x + y sqrt(D)`.
#[derive(Debug, Clone, Serialize)]
pub struct ElemJson {
    pub x: String,
    pub y: String,
}

impl From<&QuadElem> for ElemJson {
    fn from(e: &QuadElem) -> Self {
        ElemJson { x: e.x.to_string(), y: e.y.to_string() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PlaceJson {
    pub name: String,
    pub p: u64,
    pub q: u64,
    pub kind: String,
}

impl From<&PrimePlace> for PlaceJson {
    fn from(v: &PrimePlace) -> Self {
        PlaceJson { name: v.to_string(), p: v.p, q: v.q(), kind: format!("{:?}", v.kind).to_lowercase() }
    }
}

/// `scale * (a Z + (b + omega) Z)`.
#[derive(Debug, Clone, Serialize)]
pub struct IdealJson {
    pub scale: String,
    pub a: String,
    pub b: String,
    pub norm: String,
}

impl From<&FracIdeal> for IdealJson {
    fn from(i: &FracIdeal) -> Self {
        IdealJson { scale: i.scale().to_string(), a: i.a().to_string(), b: i.b().to_string(), norm: i.norm().to_string() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TripleJson {
    pub beta: ElemJson,
    pub s3: Vec<PlaceJson>,
    pub ideal: IdealJson,
    pub weights: Vec<String>,
}

impl From<&GTriple> for TripleJson {
    fn from(t: &GTriple) -> Self {
        TripleJson {
            beta: (&t.beta).into(),
            s3: t.s3.iter().map(Into::into).collect(),
            ideal: (&t.ideal).into(),
            weights: weights(&t.weights),
        }
    }
}

pub fn weights(w: &[Weight]) -> Vec<String> {
    w.iter().map(|w| w.to_string()).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct FieldReport {
    pub field: String,
    #[serde(rename = "D")]
    pub d: i64,
    pub degree: usize,
    pub discriminant: i64,
    pub different: IdealJson,
    pub primes_above_2: Vec<PlaceJson>,
    pub primes_above_3: Vec<PlaceJson>,
    pub t3: Vec<PlaceJson>,
    pub fundamental_unit: Option<ElemJson>,
    pub unit_norm: Option<i8>,
    pub tp_unit_index: u64,
    /// `None` above the class group bound.
    pub narrow_class_number: Option<usize>,
    pub wide_class_number: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriteriaJson {
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExistsReport {
    pub field: String,
    pub weights: Vec<String>,
    pub exists: bool,
    pub case: String,
    pub criteria: Option<CriteriaJson>,
    pub witness: Option<TripleJson>,
    pub class_count: Option<u64>,
}

impl ExistsReport {
    pub fn new(field: String, w: &[Weight], r: &ExistenceReport) -> Self {
        ExistsReport {
            field,
            weights: weights(w),
            exists: r.exists,
            case: r.case.label().into(),
            criteria: r.criteria.map(|c| CriteriaJson { c1: c.c1, c2: c.c2, c3: c.c3 }),
            witness: r.witness.as_ref().map(Into::into),
            class_count: r.class_count,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TripleReport {
    pub field: String,
    pub weights: Vec<String>,
    pub triple: TripleJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct S3TermJson {
    pub s3: Vec<PlaceJson>,
    pub target_class: usize,
    pub preimages: u64,
}

impl From<&S3Term> for S3TermJson {
    fn from(t: &S3Term) -> Self {
        S3TermJson { s3: t.s3.iter().map(Into::into).collect(), target_class: t.target, preimages: t.preimages }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CountReport {
    pub field: String,
    pub weights: Vec<String>,
    pub tp_unit_index: u64,
    pub terms: Vec<S3TermJson>,
    pub count: u64,
}

/// One line of the q-expansion export.
#[derive(Debug, Clone, Serialize)]
pub struct ThetaLine {
    pub nu: ElemJson,
    pub trace: f64,
    pub xi: ElemJson,
    pub sign: i8,
    pub coeff: f64,
}

impl From<&ThetaEntry> for ThetaLine {
    fn from(e: &ThetaEntry) -> Self {
        ThetaLine { nu: (&e.nu).into(), trace: rat_f64(&e.trace), xi: (&e.xi).into(), sign: e.sign, coeff: e.coeff }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MatrixJson {
    pub a: ElemJson,
    pub b: ElemJson,
    pub c: ElemJson,
    pub d: ElemJson,
}

impl From<&Sl2> for MatrixJson {
    fn from(g: &Sl2) -> Self {
        MatrixJson { a: (&g.a).into(), b: (&g.b).into(), c: (&g.c).into(), d: (&g.d).into() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WorstCase {
    pub word: MatrixJson,
    pub multiplier: String,
    pub rel_err: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub field: String,
    pub weights: Vec<String>,
    pub triple: TripleJson,
    pub seed: u64,
    pub words: usize,
    pub points: usize,
    pub max_len: usize,
    pub tol: f64,
    pub checks: usize,
    pub max_rel_err: f64,
    pub pass: bool,
    pub worst: Option<WorstCase>,
    pub failures: Vec<FailedCheck>,
}

/// A check whose point or series could not be evaluated.
#[derive(Debug, Clone, Serialize)]
pub struct FailedCheck {
    pub word_index: usize,
    pub word: MatrixJson,
    pub error: String,
}

fn rat_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}
