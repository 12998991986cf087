//! Code parameters shared by the formula, codec and verifier layers.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::{gcd, pow};
use crate::cyclotomic::DefiningRange;
use crate::error::{Error, Result};
use crate::field::PrimePower;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `n = q^m - 1`
    Primitive,
    /// `n = (q^m - 1)/(q - 1)`
    Projective,
    /// `n = q^m + 1`
    #[serde(rename = "qmplus1")]
    QmPlus1,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Primitive, Family::Projective, Family::QmPlus1];

    pub fn id(self) -> &'static str {
        match self {
            Family::Primitive => "primitive",
            Family::Projective => "projective",
            Family::QmPlus1 => "qmplus1",
        }
    }

    pub fn length(self, q: u64, m: u32) -> Result<u64> {
        let qm = q
            .checked_pow(m)
            .ok_or_else(|| Error::params(format!("{q}^{m} overflows")))?;
        Ok(match self {
            Family::Primitive => qm - 1,
            Family::Projective => (qm - 1) / (q - 1),
            Family::QmPlus1 => qm + 1,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "primitive" => Ok(Family::Primitive),
            "projective" => Ok(Family::Projective),
            "qmplus1" | "qm-plus-1" | "qm+1" => Ok(Family::QmPlus1),
            other => Err(Error::UnsupportedFamily(other.to_string())),
        }
    }
}

/// Parameters of the BCH code with defining set `{b, ..., b + delta - 2}`
/// modulo `n`. `delta` is always the designed distance of the code itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BchParams {
    pub family: Family,
    pub q: PrimePower,
    pub m: u32,
    pub n: u64,
    pub b: i64,
    pub delta: u64,
}

impl BchParams {
    pub fn new(family: Family, q: u64, m: u32, delta: u64, b: i64) -> Result<Self> {
        let qp = PrimePower::new(q)?;
        if m == 0 {
            return Err(Error::params("m must be at least 1"));
        }
        let n = family.length(q, m)?;
        if n < 2 {
            return Err(Error::params(format!(
                "{family} length for q={q}, m={m} is {n}"
            )));
        }
        if gcd(n, q) != 1 {
            return Err(Error::NotCoprime { n, q });
        }
        if delta < 2 || delta > n {
            return Err(Error::params(format!(
                "designed distance {delta} outside [2, {n}]"
            )));
        }
        Ok(BchParams {
            family,
            q: qp,
            m,
            n,
            b,
            delta,
        })
    }

    /// Detects the family from `n`, trying primitive, projective and
    /// `q^m + 1` in that order.
    pub fn from_length(q: u64, n: u64, delta: u64, b: i64) -> Result<Self> {
        let (family, m) = detect_family(q, n)?;
        Self::new(family, q, m, delta, b)
    }

    pub fn q(&self) -> u64 {
        self.q.q()
    }

    pub fn range(&self) -> DefiningRange {
        DefiningRange {
            n: self.n,
            b: self.b,
            delta: self.delta,
        }
    }

    /// Last element `b + delta - 2` of the defining interval.
    pub fn last(&self) -> i64 {
        self.b + self.delta as i64 - 2
    }
}

impl fmt::Display for BchParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} q={} m={} n={} delta={} b={}",
            self.family, self.q, self.m, self.n, self.delta, self.b
        )
    }
}

/// Finds `(family, m)` with `family.length(q, m) == n`.
pub fn detect_family(q: u64, n: u64) -> Result<(Family, u32)> {
    PrimePower::new(q)?;
    for family in Family::ALL {
        let mut m = 1u32;
        while let Ok(len) = family.length(q, m) {
            if len == n && len >= 2 {
                return Ok((family, m));
            }
            if len > n {
                break;
            }
            m += 1;
        }
    }
    Err(Error::UnsupportedFamily(format!(
        "length {n} is not q^m-1, (q^m-1)/(q-1) or q^m+1 for q={q}"
    )))
}

/// `q^k` for the small exponents used by the theorems.
pub(crate) fn qpow(q: u64, k: u32) -> u64 {
    pow(q, k)
}
