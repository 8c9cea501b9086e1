//! Command configuration and exit codes.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use halftheta::{FieldCtx, Rational, Weight};
use num_bigint::BigInt;
use num_traits::{One, Pow};

/// Message printed when no half-integral weight theory is available.
pub const REFUSAL: &str = "no multiplier system of half-integral weight exists";

#[derive(Debug, Parser)]
#[command(name = "halftheta", version, about = "Half-integral weight theta series over Q and real quadratic fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Field data: discriminant, different, small primes, units, class numbers.
    Field,
    /// Decide whether a theta series of the given weight exists.
    Exists,
    /// Construct a witness triple.
    Triple,
    /// Count equivalence classes of triples.
    Count,
    /// Export the q-expansion as JSON lines.
    Theta,
    /// Check the transformation law on random generator words.
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Args)]
pub struct Opts {
    /// Square-free D > 1, or "rational".
    #[arg(long = "D", global = true, default_value = "rational")]
    pub d: String,
    /// Comma separated weights from {1/2, 3/2}, one per real place [default: all 1/2].
    #[arg(long, global = true)]
    pub weights: Option<String>,
    /// Trace cutoff for the q-expansion (integer, fraction or decimal).
    #[arg(long, global = true, default_value = "10")]
    pub bound: String,
    /// Relative tolerance for verification.
    #[arg(long, global = true, default_value_t = 1e-6)]
    pub tol: f64,
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Number of random words for verify.
    #[arg(long, global = true, default_value_t = 50)]
    pub words: usize,
    /// Random points per word for verify.
    #[arg(long, global = true, default_value_t = 5)]
    pub points: usize,
    /// Maximal word length for verify.
    #[arg(long = "max-len", global = true, default_value_t = 6)]
    pub max_len: usize,
    /// Write theta output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

/// Validated configuration.
#[derive(Debug, Clone)]
pub struct CommandConfig {
    pub field: FieldCtx,
    pub weights: Vec<Weight>,
    pub bound: Rational,
    pub tol: f64,
    pub seed: u64,
    pub format: Format,
    pub words: usize,
    pub points: usize,
    pub max_len: usize,
    pub out: Option<PathBuf>,
}

/// Failure with its exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Negative(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Tolerance(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Negative(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Tolerance(_) | CliError::Internal(_) => 3,
        }
    }
}

impl From<halftheta::Error> for CliError {
    fn from(e: halftheta::Error) -> Self {
        use halftheta::Error as E;
        match e {
            E::TwoNotSplit => CliError::Negative(REFUSAL.into()),
            E::InvalidField(_) | E::InvalidWeights(_) | E::DiscriminantOutOfRange(_) => CliError::Usage(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

/// Parses `7`, `121/24` or `5.25` exactly.
pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let t = s.trim();
    let bad = || CliError::Usage(format!("not a rational number: {t}"));
    if let Some((int, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
        let den: BigInt = Pow::pow(BigInt::from(10), frac.len());
        return Ok(Rational::new(digits, den));
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d == BigInt::from(0) {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    let n: BigInt = t.parse().map_err(|_| bad())?;
    Ok(Rational::new(n, BigInt::one()))
}

impl CommandConfig {
    pub fn from_opts(o: &Opts) -> Result<Self, CliError> {
        let field = FieldCtx::parse(&o.d)?;
        let weights = match &o.weights {
            Some(w) => Weight::parse_list(w, field)?,
            None => vec![Weight::Half; field.degree()],
        };
        let bound = parse_rational(&o.bound)?;
        if !(o.tol > 0.0 && o.tol.is_finite()) {
            return Err(CliError::Usage(format!("tolerance must be positive: {}", o.tol)));
        }
        if o.max_len == 0 {
            return Err(CliError::Usage("max-len must be at least 1".into()));
        }
        Ok(CommandConfig {
            field,
            weights,
            bound,
            tol: o.tol,
            seed: o.seed,
            format: o.format,
            words: o.words,
            points: o.points,
            max_len: o.max_len,
            out: o.out.clone(),
        })
    }
}
