//! Real quadratic fields (and `Q`), their places, fractional ideals, units
//! and the admissible triples `(beta, S3, a)`.

mod generator;
mod ideal;
mod place;
mod triple;
mod unit;

pub use generator::tp_generator;
pub(crate) use place::omega_norm;
pub use ideal::FracIdeal;
pub use place::{PlaceKind, PrimePlace};
pub use triple::{GTriple, Weight};

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::arith::{is_squarefree, QuadElem, Rational};
use crate::{Error, Result};

/// Upper bound on `|D|` handled by the class group and unit routines.
pub const MAX_D: i64 = 1_000_000_000;

/// The base field: `Q` (stored as `D = 1`) or `Q(sqrt D)` with `D > 1`
/// square-free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldCtx {
    d: i64,
}

impl FieldCtx {
    pub fn rational() -> Self {
        FieldCtx { d: 1 }
    }

    pub fn quadratic(d: i64) -> Result<Self> {
        if d == 1 {
            return Ok(Self::rational());
        }
        if d < 2 || d > MAX_D {
            return Err(Error::InvalidField(alloc::format!("D = {d} is not a positive integer in range")));
        }
        if !is_squarefree(d as u64) {
            return Err(Error::InvalidField(alloc::format!("D = {d} is not square-free")));
        }
        Ok(FieldCtx { d })
    }

    /// Parses `"rational"`, `"Q"` or a square-free integer `D`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("rational") || t == "Q" {
            return Ok(Self::rational());
        }
        let d: i64 = t.parse().map_err(|_| Error::InvalidField(t.to_string()))?;
        Self::quadratic(d)
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.d == 1
    }

    pub fn degree(&self) -> usize {
        if self.is_rational() {
            1
        } else {
            2
        }
    }

    /// Field discriminant (`1` for `Q`).
    pub fn disc(&self) -> i64 {
        if self.is_rational() || self.d.rem_euclid(4) == 1 {
            self.d
        } else {
            4 * self.d
        }
    }

    pub fn omega(&self) -> QuadElem {
        QuadElem::omega(self.d)
    }

    pub fn elem(&self, x: Rational, y: Rational) -> QuadElem {
        QuadElem::new(x, y, self.d)
    }

    pub fn int(&self, n: i64) -> QuadElem {
        QuadElem::from_int(n, self.d)
    }

    pub fn rat(&self, r: Rational) -> QuadElem {
        QuadElem::rational(r, self.d)
    }

    /// Whether 2 splits completely (always true over `Q`).
    pub fn two_splits_completely(&self) -> bool {
        self.is_rational() || self.d.rem_euclid(8) == 1
    }

    /// The different, generated by `sqrt(d_K)`; the unit ideal over `Q`.
    pub fn different(&self) -> FracIdeal {
        if self.is_rational() {
            return FracIdeal::unit(*self);
        }
        let g = if self.d.rem_euclid(4) == 1 {
            QuadElem::sqrt_d(self.d)
        } else {
            QuadElem::sqrt_d(self.d).scale(&Rational::from_integer(2.into()))
        };
        FracIdeal::principal(&g).expect("non-zero")
    }

    /// Places above the rational prime `p`, ordered by label.
    pub fn primes_above(&self, p: u64) -> Vec<PrimePlace> {
        place::primes_above(*self, p)
    }

    /// Places above 2.
    pub fn s2_places(&self) -> Vec<PrimePlace> {
        self.primes_above(2)
    }

    /// Places whose residue field has 3 elements.
    pub fn t3_places(&self) -> Vec<PrimePlace> {
        self.primes_above(3).into_iter().filter(|v| v.q() == 3).collect()
    }

    /// Fundamental unit `eps > 1`; `None` over `Q`.
    pub fn fundamental_unit(&self) -> Option<QuadElem> {
        if self.is_rational() {
            None
        } else {
            Some(unit::fundamental_unit(self.d))
        }
    }

    /// Norm of the fundamental unit; `None` over `Q`.
    pub fn unit_norm(&self) -> Option<i8> {
        self.fundamental_unit().map(|e| if e.norm() > Rational::from_integer(0.into()) { 1 } else { -1 })
    }

    /// Index `[E+ : E^2]` of squares of units in totally positive units.
    pub fn tp_unit_index(&self) -> u64 {
        match self.unit_norm() {
            Some(1) => 2,
            _ => 1,
        }
    }

    /// Representatives of totally positive units modulo squares.
    pub fn tp_unit_reps(&self) -> Vec<QuadElem> {
        let mut out = alloc::vec![self.int(1)];
        if let (Some(e), Some(1)) = (self.fundamental_unit(), self.unit_norm()) {
            out.push(e);
        }
        out
    }
}

impl core::fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.is_rational() {
            write!(f, "Q")
        } else {
            write!(f, "Q(sqrt {})", self.d)
        }
    }
}
