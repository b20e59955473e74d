use std::f64::consts::TAU;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::numeric::ExtComplex;

/// Torus knot `T(p, q)` with coprime `p, q >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorusKnot {
    p: u32,
    q: u32,
}

impl TorusKnot {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p < 2 || q < 2 {
            return Err(Error::InvalidTorusKnot {
                p: p as i64,
                q: q as i64,
                reason: "both parameters must be at least 2",
            });
        }
        Self::degenerate(p, q)
    }

    /// Allows `p = 1` or `q = 1` (an unknot), for twist-knot experiments with
    /// Whitehead doubles. Never used by the acceptance checks.
    pub fn degenerate(p: u32, q: u32) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidTorusKnot { p: p as i64, q: q as i64, reason: "parameters must be positive" });
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidTorusKnot { p: p as i64, q: q as i64, reason: "parameters must be coprime" });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn pq(&self) -> i64 {
        self.p as i64 * self.q as i64
    }

    pub fn swapped(&self) -> Self {
        Self { p: self.q, q: self.p }
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.p, self.q)
    }
}

/// Which satellite pattern, if any, is applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    BareTorusKnot,
    TwistedWhiteheadLink,
    WhiteheadDouble,
}

/// A knot or link handled by the evaluators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KnotSpec {
    Torus(TorusKnot),
    WhiteheadLink { r: i64 },
    WhiteheadDouble { companion: TorusKnot, r: i64 },
}

impl KnotSpec {
    pub fn pattern(&self) -> Pattern {
        match self {
            KnotSpec::Torus(_) => Pattern::BareTorusKnot,
            KnotSpec::WhiteheadLink { .. } => Pattern::TwistedWhiteheadLink,
            KnotSpec::WhiteheadDouble { .. } => Pattern::WhiteheadDouble,
        }
    }

    pub fn companion(&self) -> Option<TorusKnot> {
        match self {
            KnotSpec::Torus(k) => Some(*k),
            KnotSpec::WhiteheadDouble { companion, .. } => Some(*companion),
            KnotSpec::WhiteheadLink { .. } => None,
        }
    }

    pub fn twist(&self) -> Option<i64> {
        match self {
            KnotSpec::Torus(_) => None,
            KnotSpec::WhiteheadLink { r } | KnotSpec::WhiteheadDouble { r, .. } => Some(*r),
        }
    }
}

impl fmt::Display for KnotSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotSpec::Torus(k) => write!(f, "{k}"),
            KnotSpec::WhiteheadLink { r } => write!(f, "WL({r})"),
            KnotSpec::WhiteheadDouble { companion, r } => write!(f, "WD({companion},{r})"),
        }
    }
}

/// A colored Jones value `J_{K,N}` together with the volume-conjecture quantities.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JonesValue {
    pub n: u64,
    pub value: ExtComplex,
    /// `log|J|`; negative infinity when the value is zero.
    pub log_abs: f64,
    /// `2 pi log|J| / N`.
    pub two_pi_log_over_n: f64,
}

impl JonesValue {
    pub fn new(n: u64, value: ExtComplex) -> Self {
        let log_abs = value.log_abs().unwrap_or(f64::NEG_INFINITY);
        Self { n, value, log_abs, two_pi_log_over_n: TAU * log_abs / n as f64 }
    }
}
