//! Closed-form dimension formulas. Each function checks its own hypotheses and
//! answers `OutOfRange` when they fail, so dense sweeps can tell "no claim"
//! apart from "wrong claim".
//!
//! `BchParams::delta` is always the designed distance of the code being
//! described. Where a statement is phrased through a different parameter
//! (the reversible projective codes use `2δ` with `b = 1 - δ`; the `b = 0`
//! codes of length `q^m + 1` use `δ + 1`), the statement's own `δ` is
//! recovered from the code parameters.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::digits;
use crate::cyclotomic::CosetIndex;
use crate::error::{Error, Result};
use crate::field::ord_mod;
use crate::params::{qpow, BchParams, Family};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    Aks,
    PrimitiveNarrowM2,
    PrimitiveNarrowEven,
    PrimitiveNarrowOdd,
    BPositiveGeneral,
    Bch2,
    Bch3,
    BNegativeGeneral,
    Bch4,
    ProjectiveNarrow,
    ProjectiveReversible,
    Qm1Even,
    Qm1Odd,
    Ding151,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::Aks,
        TheoremId::PrimitiveNarrowM2,
        TheoremId::PrimitiveNarrowEven,
        TheoremId::PrimitiveNarrowOdd,
        TheoremId::BPositiveGeneral,
        TheoremId::Bch2,
        TheoremId::Bch3,
        TheoremId::BNegativeGeneral,
        TheoremId::Bch4,
        TheoremId::ProjectiveNarrow,
        TheoremId::ProjectiveReversible,
        TheoremId::Qm1Even,
        TheoremId::Qm1Odd,
        TheoremId::Ding151,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TheoremId::Aks => "aks",
            TheoremId::PrimitiveNarrowM2 => "primitive-narrow-m2",
            TheoremId::PrimitiveNarrowEven => "primitive-narrow-even",
            TheoremId::PrimitiveNarrowOdd => "primitive-narrow-odd",
            TheoremId::BPositiveGeneral => "b-positive-general",
            TheoremId::Bch2 => "bch2",
            TheoremId::Bch3 => "bch3",
            TheoremId::BNegativeGeneral => "b-negative-general",
            TheoremId::Bch4 => "bch4",
            TheoremId::ProjectiveNarrow => "projective-narrow",
            TheoremId::ProjectiveReversible => "projective-reversible",
            TheoremId::Qm1Even => "qm1-even",
            TheoremId::Qm1Odd => "qm1-odd",
            TheoremId::Ding151 => "ding151",
        }
    }

    /// Whether the formula needs a coset index.
    pub fn needs_index(self) -> bool {
        matches!(self, TheoremId::BPositiveGeneral | TheoremId::BNegativeGeneral)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::Config(format!("unknown theorem id '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaKind {
    Dimension(i64),
    OutOfRange(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub theorem: TheoremId,
    pub kind: FormulaKind,
}

impl FormulaResult {
    fn dim(theorem: TheoremId, value: i64) -> Self {
        FormulaResult {
            theorem,
            kind: FormulaKind::Dimension(value),
        }
    }

    fn out(theorem: TheoremId, reason: impl Into<String>) -> Self {
        FormulaResult {
            theorem,
            kind: FormulaKind::OutOfRange(reason.into()),
        }
    }

    pub fn dimension(&self) -> Option<i64> {
        match self.kind {
            FormulaKind::Dimension(d) => Some(d),
            FormulaKind::OutOfRange(_) => None,
        }
    }
}

/// q-adic data of `δ - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaDecomposition {
    /// Digits of `δ - 1`, least significant first.
    pub digits: Vec<u64>,
    /// Integers in `[1, δ-1]` not divisible by q.
    pub delta_nq: i64,
}

impl DeltaDecomposition {
    pub fn new(delta: u64, q: u64, len: usize) -> Self {
        let d = delta - 1;
        DeltaDecomposition {
            digits: digits(d, q, len),
            delta_nq: (d - d / q) as i64,
        }
    }

    pub fn get(&self, i: usize) -> i64 {
        self.digits.get(i).copied().unwrap_or(0) as i64
    }
}

/// Integers in `[b, b+δ-2]` not divisible by q, for `b < 0 < b+δ-2`:
/// `δ - ⌊-b/q⌋ - ⌊(δ+b-2)/q⌋ - 2`.
pub fn delta_nq_signed(delta: u64, b: i64, q: u64) -> i64 {
    let q = q as i64;
    let last = b + delta as i64 - 2;
    delta as i64 - (-b).div_euclid(q) - last.div_euclid(q) - 2
}

type Out = FormulaResult;

fn require(cond: bool, t: TheoremId, why: impl FnOnce() -> String) -> std::result::Result<(), Out> {
    if cond {
        Ok(())
    } else {
        Err(Out::out(t, why()))
    }
}

fn family(p: &BchParams, f: Family, t: TheoremId) -> std::result::Result<(), Out> {
    require(p.family == f, t, || format!("needs family {f}, got {}", p.family))
}

fn odd(p: &BchParams, min: u32, t: TheoremId) -> std::result::Result<u32, Out> {
    require(p.m % 2 == 1 && p.m >= min, t, || {
        format!("needs odd m >= {min}, got {}", p.m)
    })?;
    Ok((p.m - 1) / 2)
}

fn even(p: &BchParams, min: u32, t: TheoremId) -> std::result::Result<u32, Out> {
    require(p.m % 2 == 0 && p.m >= min, t, || {
        format!("needs even m >= {min}, got {}", p.m)
    })?;
    Ok(p.m / 2)
}

fn narrow(p: &BchParams, t: TheoremId) -> std::result::Result<(), Out> {
    require(p.b == 1, t, || format!("needs b = 1, got {}", p.b))
}

fn unwrap(r: std::result::Result<Out, Out>) -> Out {
    r.unwrap_or_else(|e| e)
}

/// `n - m⌈(δ-1)(1-1/q)⌉` with `m = ord_n(q)`, for
/// `2 <= δ <= min(⌊n q^⌈m/2⌉/(q^m-1)⌋, n)`.
pub fn dim_aks(p: &BchParams) -> Out {
    let t = TheoremId::Aks;
    unwrap((|| {
        narrow(p, t)?;
        let q = p.q();
        let m = ord_mod(p.n, q).map_err(|e| Out::out(t, e.to_string()))?;
        let qm = (q as u128).pow(m);
        require(
            (q as u128).pow(m / 2) < p.n as u128 && p.n as u128 <= qm - 1,
            t,
            || "needs q^(m/2) < n <= q^m - 1".into(),
        )?;
        let bound = (p.n as u128 * (q as u128).pow(m.div_ceil(2)) / (qm - 1)).min(p.n as u128);
        require(p.delta as u128 <= bound, t, || {
            format!("δ={} exceeds the bound {bound}", p.delta)
        })?;
        // ⌈(δ-1)(q-1)/q⌉
        let d = (p.delta - 1) * (q - 1);
        let c = d.div_ceil(q) as i64;
        Ok(Out::dim(t, p.n as i64 - m as i64 * c))
    })())
}

/// `m = 2`, `b = 1`, `2 <= δ <= n - 1`.
pub fn dim_primitive_narrow_m2(p: &BchParams) -> Out {
    let t = TheoremId::PrimitiveNarrowM2;
    unwrap((|| {
        family(p, Family::Primitive, t)?;
        require(p.m == 2, t, || format!("needs m = 2, got {}", p.m))?;
        narrow(p, t)?;
        require(p.delta <= p.n - 1, t, || "needs δ <= n - 1".into())?;
        let q = p.q() as i64;
        let n = p.n as i64;
        let d = p.delta as i64 - 1;
        let (a1, a0) = (d / q, d % q);
        let v = if a0 < a1 {
            n - (2 * q * a1 - a1 * a1 - 1)
        } else {
            n - (2 * q * a1 - a1 * a1 + 2 * (a0 - a1))
        };
        Ok(Out::dim(t, v))
    })())
}

/// Even `m >= 4`, `b = 1`, `2 <= δ <= q^{h+1}`.
pub fn dim_primitive_narrow_even(p: &BchParams) -> Out {
    let t = TheoremId::PrimitiveNarrowEven;
    unwrap((|| {
        family(p, Family::Primitive, t)?;
        let h = even(p, 4, t)?;
        narrow(p, t)?;
        let q = p.q();
        require(p.delta <= qpow(q, h + 1), t, || "needs δ <= q^(h+1)".into())?;
        let dd = DeltaDecomposition::new(p.delta, q, h as usize + 1);
        let (n, m, nq) = (p.n as i64, p.m as i64, dd.delta_nq);
        let dh = dd.get(h as usize);
        let qh = qpow(q, h) as i64;
        let delta = p.delta as i64;
        let v = if delta <= qh + 1 {
            n - m * nq
        } else if delta - 1 >= dh * (qh + 1) {
            n - m * (2 * nq - dh * dh) / 2
        } else {
            n - m * (2 * nq - (dh - 1) * (dh - 1) - 2 * dd.get(0)) / 2
        };
        Ok(Out::dim(t, v))
    })())
}

/// Odd `m >= 5`, `b = 1`, `2 <= δ <= q^{h+2}`; five branches tried in order.
pub fn dim_primitive_narrow_odd(p: &BchParams) -> Out {
    let t = TheoremId::PrimitiveNarrowOdd;
    unwrap((|| {
        family(p, Family::Primitive, t)?;
        let h = odd(p, 5, t)?;
        narrow(p, t)?;
        let q = p.q();
        require(p.delta <= qpow(q, h + 2), t, || "needs δ <= q^(h+2)".into())?;
        let hu = h as usize;
        let dd = DeltaDecomposition::new(p.delta, q, hu + 2);
        let (n, m, nq) = (p.n as i64, p.m as i64, dd.delta_nq);
        let (qi, qh, qh1) = (q as i64, qpow(q, h) as i64, qpow(q, h + 1) as i64);
        let top = dd.get(hu + 1);
        let dh = dd.get(hu);
        let (d0, d1) = (dd.get(0), dd.get(1));
        let dm1 = p.delta as i64 - 1;
        let v = if p.delta as i64 <= qh1 + 1 {
            n - m * nq
        } else if dm1 < top * (qh1 + qi) {
            n - m * (nq - (qi - 1) * (top * (top - 1) + d1) - d0)
        } else if dm1 < top * qh1 + qh {
            n - m * (nq - (qi - 1) * top * top)
        } else if dm1 < top * qh1 + dh * qh + top {
            n - m * (nq - (qi - 1) * top * top - (dh - 1) * top - d0)
        } else if dh >= 1 {
            n - m * (nq - (qi - 1) * top * top - dh * top)
        } else {
            return Err(Out::out(t, "no branch applies"));
        };
        Ok(Out::dim(t, v))
    })())
}

/// Odd `m >= 3`, `1 <= b <= n-1`, `b+δ-2 <= q^{h+2}`, using leader sets.
pub fn dim_b_positive_general(p: &BchParams, idx: &CosetIndex) -> Out {
    let t = TheoremId::BPositiveGeneral;
    unwrap((|| {
        family(p, Family::Primitive, t)?;
        let h = odd(p, 3, t)?;
        require(idx.n() == p.n && idx.q() == p.q(), t, || "index mismatch".into())?;
        require(1 <= p.b && p.b <= p.n as i64 - 1, t, || "needs 1 <= b <= n-1".into())?;
        let last = p.last();
        require(last <= qpow(p.q(), h + 2) as i64, t, || {
            "needs b+δ-2 <= q^(h+2)".into()
        })?;
        let (n, m) = (p.n as i64, p.m as i64);
        let v = if p.b <= last.div_euclid(p.q() as i64) {
            n - m * idx.cl(1, last).len() as i64
        } else {
            n - m * (idx.cl(p.b, last).len() + idx.pcl_plus(p.b, last).len()) as i64
        };
        Ok(Out::dim(t, v))
    })())
}

/// Odd `m >= 3`, `b + δ - 2 = q^{h+1}`, `1 <= b <= q^{h+1}`.
pub fn dim_bch2(p: &BchParams) -> Out {
    let t = TheoremId::Bch2;
    unwrap((|| {
        family(p, Family::Primitive, t)?;
        let h = odd(p, 3, t)?;
        let q = p.q();
        let qh1 = qpow(q, h + 1) as i64;
        require(p.last() == qh1, t, || "needs b+δ-2 = q^(h+1)".into())?;
        require(1 <= p.b && p.b <= qh1, t, || "needs 1 <= b <= q^(h+1)".into())?;
        let (n, m) = (p.n as i64, p.m as i64);
        let qh = qpow(q, h) as i64;
        let v = if p.b <= qh {
            n - m * (qh1 - qh)
        } else {
            n - m * (p.delta as i64 - 1)
        };
        Ok(Out::dim(t, v))
    })())
}

/// Odd `m >= 5`, `b + δ - 2 = q^{h+2}`; either `b <= q^{h+1}+1` or
/// `b = kq^{h+1}+1` with `1 <= k <= q`.
pub fn dim_bch3(p: &BchParams) -> Out {
    let t = TheoremId::Bch3;
    unwrap((|| {
        family(p, Family::Primitive, t)?;
        let h = odd(p, 5, t)?;
        let q = p.q();
        let (qi, qh1, qh2) = (q as i64, qpow(q, h + 1) as i64, qpow(q, h + 2) as i64);
        require(p.last() == qh2, t, || "needs b+δ-2 = q^(h+2)".into())?;
        require(1 <= p.b && p.b <= qh2, t, || "needs 1 <= b <= q^(h+2)".into())?;
        let (n, m) = (p.n as i64, p.m as i64);
        if p.b <= qh1 + 1 {
            return Ok(Out::dim(t, n - m * (qh2 - qh1 - qi * (qi - 1) * (qi - 1))));
        }
        let k = (p.b - 1) / qh1;
        require((p.b - 1) % qh1 == 0 && 1 <= k && k <= qi, t, || {
            format!("b={} is not k q^(h+1) + 1", p.b)
        })?;
        Ok(Out::dim(t, n - m * (qh2 - k * qh1 - (qi - k) * (qi - k) * qi)))
    })())
}

/// Odd `m >= 3`, `-q^{h+2} <= b <= -1`, `1 <= b+δ-2 <= q^{h+2}`, using leader
/// sets. The zero coset is counted once.
pub fn dim_b_negative_general(p: &BchParams, idx: &CosetIndex) -> Out {
    let t = TheoremId::BNegativeGeneral;
    unwrap((|| {
        family(p, Family::Primitive, t)?;
        let h = odd(p, 3, t)?;
        require(idx.n() == p.n && idx.q() == p.q(), t, || "index mismatch".into())?;
        let qh2 = qpow(p.q(), h + 2) as i64;
        require(-qh2 <= p.b && p.b <= -1, t, || "needs -q^(h+2) <= b <= -1".into())?;
        let last = p.last();
        require(1 <= last && last <= qh2, t, || "needs 1 <= b+δ-2 <= q^(h+2)".into())?;
        let cl = idx.cl(p.b, last).len() as i64;
        let pcl = idx.pcl_minus(-p.b, last).len() as i64;
        Ok(Out::dim(t, p.n as i64 - p.m as i64 * (cl - pcl) - 1))
    })())
}

/// Odd `m >= 5`, `1 <= -b <= b+δ-2`; either `b+δ-2 <= q^{h+1}-q` or
/// `b+δ-2 = q^{h+1}` with four sub-branches on `-b`.
pub fn dim_bch4(p: &BchParams) -> Out {
    let t = TheoremId::Bch4;
    unwrap((|| {
        family(p, Family::Primitive, t)?;
        let h = odd(p, 5, t)?;
        let last = p.last();
        require(1 <= -p.b && -p.b <= last, t, || "needs 1 <= -b <= b+δ-2".into())?;
        let q = p.q();
        let (qi, qh, qh1) = (q as i64, qpow(q, h) as i64, qpow(q, h + 1) as i64);
        let (n, m) = (p.n as i64, p.m as i64);
        let nq = delta_nq_signed(p.delta, p.b, q);
        let nb = -p.b;
        let v = if last <= qh1 - qi {
            n - m * nq - 1
        } else if last == qh1 {
            if nb < qh - 1 {
                n - m * nq - 1
            } else if nb <= (qi - 1) * qh - 1 {
                n - m * (nq - (1 - p.b).div_euclid(qh)) - 1
            } else if (qi - 1) * qh <= nb && nb <= qh1 - qi {
                n - m * (nq - qi + 1) - 1
            } else if (1..qi).contains(&(nb - (qh1 - qi))) {
                let l = nb - (qh1 - qi);
                n - m * (nq - qi + 1 - l) - 1
            } else {
                return Err(Out::out(t, "-b outside every sub-branch"));
            }
        } else {
            return Err(Out::out(t, "needs b+δ-2 <= q^(h+1)-q or = q^(h+1)"));
        };
        Ok(Out::dim(t, v))
    })())
}

/// Three branches on `k` against `⌊q/2⌋`; `c` is the correction polynomial in `k`.
fn projective_branches(q: i64, k: i64, nq: i64, c: i64) -> i64 {
    if k <= q / 2 {
        nq - c
    } else if k <= q - 1 {
        nq - c + 2 * k - q
    } else {
        nq - c + 2 * k - 2
    }
}

fn projective_k(q: u64, h: u32, delta: u64) -> Option<i64> {
    let qh = qpow(q, h);
    let k = (delta - 1) / qh;
    ((delta - 1) % qh == 0 && 1 <= k && k <= q).then_some(k as i64)
}

/// Odd `m >= 5`, `b = 1`, `δ = kq^h + 1` with `1 <= k <= q`.
pub fn dim_projective_narrow(p: &BchParams) -> Out {
    let t = TheoremId::ProjectiveNarrow;
    unwrap((|| {
        family(p, Family::Projective, t)?;
        let h = odd(p, 5, t)?;
        narrow(p, t)?;
        let q = p.q();
        let k = projective_k(q, h, p.delta)
            .ok_or_else(|| Out::out(t, format!("δ={} is not k q^h + 1", p.delta)))?;
        let nq = DeltaDecomposition::new(p.delta, q, 1).delta_nq;
        let inner = projective_branches(q as i64, k, nq, k * (k - 1));
        Ok(Out::dim(t, p.n as i64 - p.m as i64 * inner))
    })())
}

/// The code with designed distance `2δ` and `b = 1 - δ`, where
/// `δ = kq^h + 1`, `1 <= k <= q`, odd `m >= 5`.
pub fn dim_projective_reversible(p: &BchParams) -> Out {
    let t = TheoremId::ProjectiveReversible;
    unwrap((|| {
        family(p, Family::Projective, t)?;
        let h = odd(p, 5, t)?;
        require(p.delta % 2 == 0, t, || "designed distance must be 2δ".into())?;
        let delta = p.delta / 2;
        require(p.b == 1 - delta as i64, t, || "needs b = 1 - δ".into())?;
        let q = p.q();
        let k = projective_k(q, h, delta)
            .ok_or_else(|| Out::out(t, format!("δ={delta} is not k q^h + 1")))?;
        let nq = DeltaDecomposition::new(delta, q, 1).delta_nq;
        let inner = projective_branches(q as i64, k, nq, (2 * k - 1) * (k - 1));
        Ok(Out::dim(t, p.n as i64 - 1 - 2 * p.m as i64 * inner))
    })())
}

/// Length `q^m + 1`, even `m >= 4`. For `b = 1`, `2 <= δ <= q^h`. For
/// `b = 0` the code's designed distance is `δ + 1` with `2 <= δ <= q^h`.
pub fn dim_qm1_even(p: &BchParams) -> Out {
    let t = TheoremId::Qm1Even;
    unwrap((|| {
        family(p, Family::QmPlus1, t)?;
        let h = even(p, 4, t)?;
        let q = p.q();
        let qh = qpow(q, h);
        let (m2, qm) = (2 * p.m as i64, p.n as i64 - 1);
        match p.b {
            1 => {
                require(p.delta <= qh, t, || "needs δ <= q^h".into())?;
                let d = p.delta as i64 - 1;
                Ok(Out::dim(t, qm + 1 - m2 * (d - d / q as i64)))
            }
            0 => {
                let d = p.delta as i64 - 1;
                require(2 <= d && d <= qh as i64, t, || "needs 2 <= δ <= q^h".into())?;
                Ok(Out::dim(t, qm - m2 * (d - d / q as i64)))
            }
            b => Err(Out::out(t, format!("needs b in {{0, 1}}, got {b}"))),
        }
    })())
}

/// Length `q^m + 1`, odd `m >= 3`, `b = 1`, `2 <= δ <= q^{h+1}`.
pub fn dim_qm1_odd(p: &BchParams) -> Out {
    let t = TheoremId::Qm1Odd;
    unwrap((|| {
        family(p, Family::QmPlus1, t)?;
        let h = odd(p, 3, t)?;
        narrow(p, t)?;
        let q = p.q() as i64;
        let qh1 = qpow(p.q(), h + 1) as i64;
        let delta = p.delta as i64;
        require(delta <= qh1, t, || "needs δ <= q^(h+1)".into())?;
        let m2 = 2 * p.m as i64;
        let n = p.n as i64;
        let fl = (delta - 1) / q;
        let v = if delta <= qh1 - q {
            n - m2 * (delta - 1 - fl)
        } else {
            n - m2 * (qh1 - q - fl)
        };
        Ok(Out::dim(t, v))
    })())
}

/// `[q^m - 1, n - m(2k(q^h - q^{h-1}) - (k-1)^2)/2, k(q^h + 1)]` for even `m`
/// and `1 <= k <= q - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CodeTriple {
    pub n: u64,
    pub dimension: i64,
    pub distance: u64,
}

pub fn params_ding151(q: u64, m: u32, k: u64) -> Result<CodeTriple> {
    if m == 0 || m % 2 == 1 {
        return Err(Error::range(format!("m={m} must be positive and even")));
    }
    if k < 1 || k + 1 > q {
        return Err(Error::range(format!("k={k} outside [1, {}]", q - 1)));
    }
    let h = m / 2;
    let n = qpow(q, m) - 1;
    let (qh, qh_1) = (qpow(q, h) as i64, qpow(q, h - 1) as i64);
    let k = k as i64;
    let dim = n as i64 - m as i64 * (2 * k * (qh - qh_1) - (k - 1) * (k - 1)) / 2;
    Ok(CodeTriple {
        n,
        dimension: dim,
        distance: (k * (qh + 1)) as u64,
    })
}

/// The dimension claimed by the family theorem for the code with designed
/// distance `k(q^h+1)`.
pub fn dim_ding151(p: &BchParams) -> Out {
    let t = TheoremId::Ding151;
    unwrap((|| {
        family(p, Family::Primitive, t)?;
        let h = even(p, 2, t)?;
        narrow(p, t)?;
        let q = p.q();
        let qh = qpow(q, h);
        let k = p.delta / (qh + 1);
        require(p.delta % (qh + 1) == 0 && 1 <= k && k < q, t, || {
            format!("δ={} is not k(q^h+1)", p.delta)
        })?;
        let triple = params_ding151(q, p.m, k).map_err(|e| Out::out(t, e.to_string()))?;
        Ok(Out::dim(t, triple.dimension))
    })())
}

/// Runs a theorem by id. Theorems that need leader sets get `idx`; it must
/// match `(n, q)`.
pub fn evaluate(theorem: TheoremId, p: &BchParams, idx: Option<&CosetIndex>) -> Out {
    match theorem {
        TheoremId::Aks => dim_aks(p),
        TheoremId::PrimitiveNarrowM2 => dim_primitive_narrow_m2(p),
        TheoremId::PrimitiveNarrowEven => dim_primitive_narrow_even(p),
        TheoremId::PrimitiveNarrowOdd => dim_primitive_narrow_odd(p),
        TheoremId::BPositiveGeneral | TheoremId::BNegativeGeneral => match idx {
            Some(idx) if theorem == TheoremId::BPositiveGeneral => dim_b_positive_general(p, idx),
            Some(idx) => dim_b_negative_general(p, idx),
            None => Out::out(theorem, "coset index required"),
        },
        TheoremId::Bch2 => dim_bch2(p),
        TheoremId::Bch3 => dim_bch3(p),
        TheoremId::Bch4 => dim_bch4(p),
        TheoremId::ProjectiveNarrow => dim_projective_narrow(p),
        TheoremId::ProjectiveReversible => dim_projective_reversible(p),
        TheoremId::Qm1Even => dim_qm1_even(p),
        TheoremId::Qm1Odd => dim_qm1_odd(p),
        TheoremId::Ding151 => dim_ding151(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CosetIndex;

    fn prim(q: u64, m: u32, delta: u64, b: i64) -> BchParams {
        BchParams::new(Family::Primitive, q, m, delta, b).unwrap()
    }

    /// Dimension from the coset sieve; shares no code with the formulas.
    fn oracle(p: &BchParams) -> i64 {
        let idx = CosetIndex::build(p.n, p.q()).unwrap();
        idx.dimension(&p.range()).unwrap() as i64
    }

    fn check(r: Out, p: &BchParams) {
        assert_eq!(r.dimension(), Some(oracle(p)), "{p}");
    }

    #[test]
    fn aks_examples() {
        let p = prim(2, 4, 4, 1);
        assert_eq!(dim_aks(&p).dimension(), Some(7));
        check(dim_aks(&p), &p);
        let p = BchParams::new(Family::QmPlus1, 2, 4, 2, 1).unwrap();
        assert!(dim_aks(&p).dimension().is_none());
        let p = prim(3, 4, 9, 1);
        assert_eq!(dim_aks(&p).dimension(), Some(56));
        check(dim_aks(&p), &p);
    }

    #[test]
    fn narrow_m2_examples() {
        for (q, d, want) in [(3, 4, 4), (3, 5, 3), (5, 2, 22)] {
            let p = prim(q, 2, d, 1);
            assert_eq!(dim_primitive_narrow_m2(&p).dimension(), Some(want));
            check(dim_primitive_narrow_m2(&p), &p);
        }
    }

    #[test]
    fn narrow_even_examples() {
        for (d, want) in [(5, 7), (7, 5), (6, 5)] {
            let p = prim(2, 4, d, 1);
            assert_eq!(dim_primitive_narrow_even(&p).dimension(), Some(want));
            check(dim_primitive_narrow_even(&p), &p);
        }
    }

    #[test]
    fn narrow_odd_examples() {
        for (d, want) in [(8, 11), (10, 11)] {
            let p = prim(2, 5, d, 1);
            assert_eq!(dim_primitive_narrow_odd(&p).dimension(), Some(want));
        }
        let p = prim(2, 5, 13, 1);
        check(dim_primitive_narrow_odd(&p), &p);
    }

    #[test]
    fn positive_b_examples() {
        let idx = CosetIndex::build(31, 2).unwrap();
        let p = prim(2, 5, 15, 2);
        let narrow = prim(2, 5, 16, 1);
        assert_eq!(dim_b_positive_general(&p, &idx).dimension(), Some(oracle(&narrow)));
        let p = prim(2, 5, 9, 9);
        check(dim_b_positive_general(&p, &idx), &p);

        assert_eq!(dim_bch2(&prim(2, 5, 8, 2)).dimension(), Some(11));
        assert_eq!(dim_bch2(&prim(2, 5, 5, 5)).dimension(), Some(11));
        let p = prim(3, 5, 19, 10);
        assert_eq!(dim_bch2(&p).dimension(), Some(152));
        check(dim_bch2(&p), &p);

        assert_eq!(dim_bch3(&prim(2, 5, 17, 1)).dimension(), Some(1));
        assert_eq!(dim_bch3(&prim(2, 5, 9, 9)).dimension(), Some(1));
        assert!(dim_bch3(&prim(2, 5, 12, 6)).dimension().is_some());
        assert!(dim_bch3(&prim(2, 5, 6, 12)).dimension().is_none());
    }

    #[test]
    fn negative_b_examples() {
        let idx = CosetIndex::build(31, 2).unwrap();
        for (d, b) in [(8, -3), (4, -1), (17, -7)] {
            let p = prim(2, 5, d, b);
            check(dim_b_negative_general(&p, &idx), &p);
        }
        for (d, b) in [(9, -2), (9, -1), (12, -2)] {
            let p = prim(2, 5, d, b);
            check(dim_bch4(&p), &p);
        }
        // b+δ-2 = 7 is neither <= q^(h+1)-q nor = q^(h+1)
        assert!(dim_bch4(&prim(2, 5, 10, -1)).dimension().is_none());
        assert_eq!(delta_nq_signed(9, -2, 2), 9 - 1 - 2 - 2);
    }

    #[test]
    fn projective_examples() {
        let pr = |d, b| BchParams::new(Family::Projective, 3, 5, d, b).unwrap();
        assert_eq!(dim_projective_narrow(&pr(10, 1)).dimension(), Some(91));
        assert_eq!(dim_projective_narrow(&pr(19, 1)).dimension(), Some(66));
        check(dim_projective_narrow(&pr(19, 1)), &pr(19, 1));
        assert!(dim_projective_narrow(&pr(11, 1)).dimension().is_none());
        assert_eq!(dim_projective_reversible(&pr(20, -9)).dimension(), Some(60));
        check(dim_projective_reversible(&pr(38, -18)), &pr(38, -18));
    }

    #[test]
    fn qm_plus1_examples() {
        let qp = |q, m, d, b| BchParams::new(Family::QmPlus1, q, m, d, b).unwrap();
        assert_eq!(dim_qm1_even(&qp(2, 4, 3, 1)).dimension(), Some(9));
        assert_eq!(dim_qm1_even(&qp(2, 4, 3, 0)).dimension(), Some(8));
        check(dim_qm1_even(&qp(2, 4, 3, 0)), &qp(2, 4, 3, 0));
        // C_3 = C_1, so only two cosets of size 8 are removed
        assert_eq!(dim_qm1_even(&qp(3, 4, 4, 1)).dimension(), Some(66));
        check(dim_qm1_even(&qp(3, 4, 4, 1)), &qp(3, 4, 4, 1));
        assert_eq!(dim_qm1_odd(&qp(2, 3, 3, 1)).dimension(), Some(3));
        assert_eq!(dim_qm1_odd(&qp(2, 5, 5, 1)).dimension(), Some(13));
        assert_eq!(dim_qm1_odd(&qp(3, 3, 5, 1)).dimension(), Some(10));
    }

    #[test]
    fn ding151_triples() {
        for q in [2u64, 3, 4, 5] {
            for k in 1..q {
                let t = params_ding151(q, 2, k).unwrap();
                assert_eq!(t.n, q * q - 1);
                assert_eq!(t.dimension, ((q - k) * (q - k)) as i64);
                assert_eq!(t.distance, k * (q + 1));
            }
        }
        let t = params_ding151(2, 4, 1).unwrap();
        assert_eq!((t.n, t.dimension, t.distance), (15, 7, 5));
        assert!(params_ding151(3, 2, 3).is_err());
    }
}
