//! Command implementations. Each returns the full stdout text and the exit
//! code, so the binary and the tests share one code path.

use std::fmt::Write as _;

use halftheta::classgroup::ClassGroup;
use halftheta::existence::{construct_triple, equiv_classes, existence_report};
use halftheta::theta::q_expansion;
use halftheta::{FieldCtx, GTriple};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::{CliError, Command, CommandConfig, Format, REFUSAL};
use crate::report::*;
use crate::suite::transform_suite;

/// Largest field discriminant for which class numbers are reported.
pub const CLASS_BOUND: i64 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

pub fn run(cmd: Command, cfg: &CommandConfig) -> Result<Outcome, CliError> {
    match cmd {
        Command::Field => cmd_field(cfg),
        Command::Exists => cmd_exists(cfg),
        Command::Triple => cmd_triple(cfg),
        Command::Count => cmd_count(cfg),
        Command::Theta => cmd_theta(cfg),
        Command::Verify => cmd_verify(cfg),
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn require_two_split(k: FieldCtx) -> Result<(), CliError> {
    if k.two_splits_completely() {
        Ok(())
    } else {
        Err(CliError::Negative(REFUSAL.into()))
    }
}

fn names(vs: &[PlaceJson]) -> String {
    let v: Vec<&str> = vs.iter().map(|p| p.name.as_str()).collect();
    format!("{{{}}}", v.join(", "))
}

fn triple_text(t: &GTriple) -> String {
    format!("{t}")
}

pub fn cmd_field(cfg: &CommandConfig) -> Result<Outcome, CliError> {
    let k = cfg.field;
    require_two_split(k)?;
    let (h, hw) = if k.disc() <= CLASS_BOUND {
        let g = ClassGroup::narrow(k)?;
        (Some(g.order()), Some(g.wide_order()))
    } else {
        (None, None)
    };
    let r = FieldReport {
        field: k.to_string(),
        d: k.d(),
        degree: k.degree(),
        discriminant: k.disc(),
        different: (&k.different()).into(),
        primes_above_2: k.primes_above(2).iter().map(Into::into).collect(),
        primes_above_3: k.primes_above(3).iter().map(Into::into).collect(),
        t3: k.t3_places().iter().map(Into::into).collect(),
        fundamental_unit: k.fundamental_unit().as_ref().map(Into::into),
        unit_norm: k.unit_norm(),
        tp_unit_index: k.tp_unit_index(),
        narrow_class_number: h,
        wide_class_number: hw,
    };
    let out = match cfg.format {
        Format::Json => json(&r),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "field: {}", r.field);
            let _ = writeln!(s, "discriminant: {}", r.discriminant);
            let _ = writeln!(s, "different: {}", k.different());
            let _ = writeln!(s, "primes above 2: {}", names(&r.primes_above_2));
            let _ = writeln!(s, "primes above 3: {}", names(&r.primes_above_3));
            let _ = writeln!(s, "T3: {}", names(&r.t3));
            if let (Some(e), Some(n)) = (k.fundamental_unit(), r.unit_norm) {
                let _ = writeln!(s, "fundamental unit: {e} (norm {n})");
            }
            let _ = writeln!(s, "[E+ : E^2]: {}", r.tp_unit_index);
            match (h, hw) {
                (Some(h), Some(hw)) => {
                    let _ = writeln!(s, "narrow class number: {h}\nwide class number: {hw}");
                }
                _ => {
                    let _ = writeln!(s, "class numbers: not computed (discriminant above {CLASS_BOUND})");
                }
            }
            s
        }
    };
    Ok(Outcome::ok(out))
}

pub fn cmd_exists(cfg: &CommandConfig) -> Result<Outcome, CliError> {
    require_two_split(cfg.field)?;
    let r = existence_report(cfg.field, &cfg.weights)?;
    let rep = ExistsReport::new(cfg.field.to_string(), &cfg.weights, &r);
    let out = match cfg.format {
        Format::Json => json(&rep),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "field: {}  weights: ({})", rep.field, rep.weights.join(", "));
            let _ = writeln!(s, "exists: {}  case: {}", rep.exists, rep.case);
            if let Some(c) = &rep.criteria {
                let _ = writeln!(s, "criteria: C1 = {}, C2 = {}, C3 = {}", c.c1, c.c2, c.c3);
            }
            if let Some(w) = &r.witness {
                let _ = writeln!(s, "witness: {}", triple_text(w));
            }
            if let Some(n) = rep.class_count {
                let _ = writeln!(s, "classes: {n}");
            }
            s
        }
    };
    Ok(Outcome { stdout: out, code: if r.exists { 0 } else { 1 } })
}

fn witness(cfg: &CommandConfig) -> Result<GTriple, CliError> {
    require_two_split(cfg.field)?;
    construct_triple(cfg.field, &cfg.weights)?.ok_or_else(|| {
        CliError::Negative(format!("no theta series of weight ({}) over {}", weights(&cfg.weights).join(", "), cfg.field))
    })
}

pub fn cmd_triple(cfg: &CommandConfig) -> Result<Outcome, CliError> {
    let t = witness(cfg)?;
    let out = match cfg.format {
        Format::Json => json(&TripleReport { field: cfg.field.to_string(), weights: weights(&cfg.weights), triple: (&t).into() }),
        Format::Text => format!("{}\n", triple_text(&t)),
    };
    Ok(Outcome::ok(out))
}

pub fn cmd_count(cfg: &CommandConfig) -> Result<Outcome, CliError> {
    require_two_split(cfg.field)?;
    let (n, terms) = equiv_classes(cfg.field, &cfg.weights)?;
    let rep = CountReport {
        field: cfg.field.to_string(),
        weights: weights(&cfg.weights),
        tp_unit_index: cfg.field.tp_unit_index(),
        terms: terms.iter().map(Into::into).collect(),
        count: n,
    };
    let out = match cfg.format {
        Format::Json => json(&rep),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "field: {}  weights: ({})", rep.field, rep.weights.join(", "));
            for t in &rep.terms {
                let _ = writeln!(s, "S3 = {}: class {}, {} square roots", names(&t.s3), t.target_class, t.preimages);
            }
            let _ = writeln!(s, "[E+ : E^2] = {}\nclasses: {}", rep.tp_unit_index, rep.count);
            s
        }
    };
    Ok(Outcome { stdout: out, code: if n > 0 { 0 } else { 1 } })
}

pub fn cmd_theta(cfg: &CommandConfig) -> Result<Outcome, CliError> {
    let t = witness(cfg)?;
    let exp = q_expansion(&t, &cfg.bound)?;
    let mut body = String::new();
    match cfg.format {
        Format::Json => {
            for e in &exp.entries {
                body.push_str(&serde_json::to_string(&ThetaLine::from(e)).expect("serializable"));
                body.push('\n');
            }
        }
        Format::Text => {
            let _ = writeln!(body, "# {}  bound {}", triple_text(&t), exp.bound);
            for e in &exp.entries {
                let _ = writeln!(body, "nu = {}  trace = {}  xi = {}  sign = {:+}  coeff = {}", e.nu, e.trace, e.xi, e.sign, e.coeff);
            }
        }
    }
    match &cfg.out {
        Some(path) => {
            std::fs::write(path, &body).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(Outcome::ok(format!("{} entries written to {}\n", exp.entries.len(), path.display())))
        }
        None => Ok(Outcome::ok(body)),
    }
}

pub fn cmd_verify(cfg: &CommandConfig) -> Result<Outcome, CliError> {
    let t = witness(cfg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let r = transform_suite(&t, cfg.words, cfg.points, cfg.max_len, cfg.tol, &mut rng);
    let pass = r.max_rel_err < cfg.tol && r.failures.is_empty();
    let rep = VerifyReport {
        field: cfg.field.to_string(),
        weights: weights(&cfg.weights),
        triple: (&t).into(),
        seed: cfg.seed,
        words: cfg.words,
        points: cfg.points,
        max_len: cfg.max_len,
        tol: cfg.tol,
        checks: r.checks,
        max_rel_err: r.max_rel_err,
        pass,
        worst: r.worst.as_ref().map(|(g, _, _, tr)| WorstCase {
            word: g.into(),
            multiplier: tr.multiplier.to_string(),
            rel_err: tr.rel_err,
        }),
        failures: r
            .failures
            .iter()
            .map(|(k, g, e)| FailedCheck { word_index: *k, word: g.into(), error: e.clone() })
            .collect(),
    };
    let out = match cfg.format {
        Format::Json => json(&rep),
        Format::Text => format!(
            "triple: {}\nchecks: {}  failed: {}  max relative error: {:e}  tol: {:e}  {}\n",
            triple_text(&t),
            rep.checks,
            rep.failures.len(),
            rep.max_rel_err,
            rep.tol,
            if pass { "pass" } else { "FAIL" }
        ),
    };
    Ok(Outcome { stdout: out, code: if pass { 0 } else { 3 } })
}
