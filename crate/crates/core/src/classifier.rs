//! Closed-form coset-leader predicates written purely in terms of q-adic
//! digits. Nothing here consults the coset sieve; the verifier compares these
//! claims against it.

use serde::Serialize;

use crate::arith::{digits, repunit};
use crate::error::{Error, Result};
use crate::params::{qpow, Family};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QAdicDigits {
    pub a: u64,
    pub q: u64,
    /// Least significant first.
    pub digits: Vec<u64>,
}

impl QAdicDigits {
    pub fn new(a: u64, q: u64, len: usize) -> Self {
        QAdicDigits {
            a,
            q,
            digits: digits(a, q, len),
        }
    }

    /// Digit `i`, zero beyond the stored length.
    pub fn get(&self, i: usize) -> u64 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    pub fn value(&self) -> u64 {
        self.digits.iter().rev().fold(0, |acc, &d| acc * self.q + d)
    }

    fn zero_between(&self, lo: usize, hi: usize) -> bool {
        (lo..hi).all(|i| self.get(i) == 0)
    }
}

/// Stable identifiers for the clauses a claim can come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Rule {
    #[serde(rename = "P-M3-SINGLETON")]
    PrimitiveM3Singleton,
    #[serde(rename = "P-M3-LEADER")]
    PrimitiveM3Leader,
    #[serde(rename = "P-M3-NL")]
    PrimitiveM3NonLeader,
    #[serde(rename = "P-ODD-NL-1")]
    PrimitiveOddNonLeader1,
    #[serde(rename = "P-ODD-NL-2")]
    PrimitiveOddNonLeader2,
    #[serde(rename = "P-ODD-NL-3")]
    PrimitiveOddNonLeader3,
    #[serde(rename = "P-ODD-LEADER")]
    PrimitiveOddLeader,
    #[serde(rename = "P-M2-LEADER")]
    PrimitiveM2Leader,
    #[serde(rename = "P-M2-NL")]
    PrimitiveM2NonLeader,
    #[serde(rename = "P-EVEN-LOW")]
    PrimitiveEvenLow,
    #[serde(rename = "P-EVEN-HALF")]
    PrimitiveEvenHalf,
    #[serde(rename = "P-EVEN-NL")]
    PrimitiveEvenNonLeader,
    #[serde(rename = "P-EVEN-LEADER")]
    PrimitiveEvenLeader,
    #[serde(rename = "J-ODD-NL-1")]
    ProjectiveOddNonLeader1,
    #[serde(rename = "J-ODD-NL-2")]
    ProjectiveOddNonLeader2,
    #[serde(rename = "J-ODD-NL-3")]
    ProjectiveOddNonLeader3,
    #[serde(rename = "J-ODD-LEADER")]
    ProjectiveOddLeader,
    #[serde(rename = "Q-EVEN-LEADER")]
    QmPlus1EvenLeader,
    #[serde(rename = "Q-ODD-NL")]
    QmPlus1OddNonLeader,
    #[serde(rename = "Q-ODD-LEADER")]
    QmPlus1OddLeader,
}

impl Rule {
    pub fn id(self) -> &'static str {
        use Rule::*;
        match self {
            PrimitiveM3Singleton => "P-M3-SINGLETON",
            PrimitiveM3Leader => "P-M3-LEADER",
            PrimitiveM3NonLeader => "P-M3-NL",
            PrimitiveOddNonLeader1 => "P-ODD-NL-1",
            PrimitiveOddNonLeader2 => "P-ODD-NL-2",
            PrimitiveOddNonLeader3 => "P-ODD-NL-3",
            PrimitiveOddLeader => "P-ODD-LEADER",
            PrimitiveM2Leader => "P-M2-LEADER",
            PrimitiveM2NonLeader => "P-M2-NL",
            PrimitiveEvenLow => "P-EVEN-LOW",
            PrimitiveEvenHalf => "P-EVEN-HALF",
            PrimitiveEvenNonLeader => "P-EVEN-NL",
            PrimitiveEvenLeader => "P-EVEN-LEADER",
            ProjectiveOddNonLeader1 => "J-ODD-NL-1",
            ProjectiveOddNonLeader2 => "J-ODD-NL-2",
            ProjectiveOddNonLeader3 => "J-ODD-NL-3",
            ProjectiveOddLeader => "J-ODD-LEADER",
            QmPlus1EvenLeader => "Q-EVEN-LEADER",
            QmPlus1OddNonLeader => "Q-ODD-NL",
            QmPlus1OddLeader => "Q-ODD-LEADER",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LeaderClaim {
    pub is_leader: bool,
    /// `None` when the clause says nothing about the size.
    pub coset_size: Option<u64>,
    pub rule: Rule,
}

impl LeaderClaim {
    fn new(is_leader: bool, coset_size: Option<u64>, rule: Rule) -> Self {
        LeaderClaim {
            is_leader,
            coset_size,
            rule,
        }
    }
}

/// Which reading of the first projective non-leader condition to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProjectiveCase1 {
    /// `q + a_0 - 2a_h <= 1`.
    Summary,
    /// `q + a_0 - 2a_h <= 0`, or `= 1` with `a_{h-1} + a_h >= q`.
    Proof,
}

fn check_q(q: u64) -> Result<()> {
    if q < 2 {
        return Err(Error::range(format!("q={q} is below 2")));
    }
    Ok(())
}

fn check_in(a: u64, lo: u64, hi: u64, q: u64) -> Result<()> {
    if a < lo || a > hi {
        return Err(Error::range(format!("a={a} outside [{lo}, {hi}]")));
    }
    if a % q == 0 {
        return Err(Error::range(format!("a={a} is divisible by q={q}")));
    }
    Ok(())
}

fn odd_m(m: u32, min: u32) -> Result<u32> {
    if m % 2 == 0 || m < min {
        return Err(Error::range(format!("m={m} must be odd and at least {min}")));
    }
    Ok((m - 1) / 2)
}

fn even_m(m: u32, min: u32) -> Result<u32> {
    if m % 2 == 1 || m < min {
        return Err(Error::range(format!("m={m} must be even and at least {min}")));
    }
    Ok(m / 2)
}

/// `n = q^3 - 1`, `1 <= a <= n - 1`.
pub fn classify_primitive_m3(q: u64, a: u64) -> Result<LeaderClaim> {
    check_q(q)?;
    check_in(a, 1, qpow(q, 3) - 2, q)?;
    if a % (q * q + q + 1) == 0 {
        return Ok(LeaderClaim::new(true, Some(1), Rule::PrimitiveM3Singleton));
    }
    let d = QAdicDigits::new(a, q, 3);
    let leader = d.get(2) < d.get(0).min(d.get(1));
    let rule = if leader {
        Rule::PrimitiveM3Leader
    } else {
        Rule::PrimitiveM3NonLeader
    };
    Ok(LeaderClaim::new(leader, Some(3), rule))
}

/// `n = q^m - 1`, `m >= 5` odd, `1 <= a <= q^{h+2}`.
pub fn classify_primitive_odd(q: u64, m: u32, a: u64) -> Result<LeaderClaim> {
    check_q(q)?;
    let h = odd_m(m, 5)? as usize;
    check_in(a, 1, qpow(q, h as u32 + 2), q)?;
    let d = QAdicDigits::new(a, q, h + 2);
    let (top, d0, d1, dh) = (d.get(h + 1), d.get(0), d.get(1), d.get(h));
    let size = Some(m as u64);
    let rule = if top >= 1 && d0 >= 1 && 1 <= d1 && d1 < top && d.zero_between(2, h + 1) {
        Some(Rule::PrimitiveOddNonLeader1)
    } else if top >= 1 && dh >= 1 && 1 <= d0 && d0 <= top && d.zero_between(1, h) {
        Some(Rule::PrimitiveOddNonLeader2)
    } else if top >= 1 && d0 >= 1 && d.zero_between(1, h + 1) {
        Some(Rule::PrimitiveOddNonLeader3)
    } else {
        None
    };
    Ok(match rule {
        Some(r) => LeaderClaim::new(false, size, r),
        None => LeaderClaim::new(true, size, Rule::PrimitiveOddLeader),
    })
}

/// `n = q^m - 1`, `m` even. For `m = 2` the range is `1 <= a <= n - 1`; for
/// `m >= 4` it is `1 <= a <= q^{h+1}`.
pub fn classify_primitive_even(q: u64, m: u32, a: u64) -> Result<LeaderClaim> {
    check_q(q)?;
    let h = even_m(m, 2)?;
    if m == 2 {
        check_in(a, 1, q * q - 2, q)?;
        let (a1, a0) = (a / q, a % q);
        return Ok(if a1 <= a0 {
            LeaderClaim::new(true, Some(if a0 == a1 { 1 } else { 2 }), Rule::PrimitiveM2Leader)
        } else {
            LeaderClaim::new(false, Some(2), Rule::PrimitiveM2NonLeader)
        });
    }
    check_in(a, 1, qpow(q, h + 1), q)?;
    let qh = qpow(q, h);
    let m = m as u64;
    if a <= qh {
        return Ok(LeaderClaim::new(true, Some(m), Rule::PrimitiveEvenLow));
    }
    if a % (qh + 1) == 0 && a / (qh + 1) <= q - 1 {
        return Ok(LeaderClaim::new(true, Some(m / 2), Rule::PrimitiveEvenHalf));
    }
    let (ah, a0) = (a / qh, a % q);
    if a == ah * qh + a0 && 1 <= a0 && a0 < ah && ah <= q - 1 {
        return Ok(LeaderClaim::new(false, Some(m), Rule::PrimitiveEvenNonLeader));
    }
    Ok(LeaderClaim::new(true, Some(m), Rule::PrimitiveEvenLeader))
}

/// `n = (q^m - 1)/(q - 1)`, `m >= 5` odd, `q^h <= a <= q^{h+1}`.
pub fn classify_projective_odd(
    q: u64,
    m: u32,
    a: u64,
    case1: ProjectiveCase1,
) -> Result<LeaderClaim> {
    check_q(q)?;
    let h = odd_m(m, 5)?;
    check_in(a, qpow(q, h), qpow(q, h + 1), q)?;
    let size = Some(m as u64);
    let qh = qpow(q, h);
    // q + q^2 + ... + q^h
    let s = repunit(q, h + 1) - 1;
    let r = repunit(q, h);

    for ah in 1..q {
        // case 1: a = a_h s + q + a_0
        if let Some(a0) = a.checked_sub(ah * s + q) {
            if (1..q).contains(&a0) {
                let t = (q + a0) as i64 - 2 * ah as i64;
                let fires = match case1 {
                    ProjectiveCase1::Summary => t <= 1,
                    ProjectiveCase1::Proof => {
                        let ahm1 = QAdicDigits::new(a, q, h as usize + 1).get(h as usize - 1);
                        t <= 0 || (t == 1 && ahm1 + ah >= q)
                    }
                };
                if fires {
                    return Ok(LeaderClaim::new(false, size, Rule::ProjectiveOddNonLeader1));
                }
            }
        }
        // case 2: a = a_h s + a_0 with a_h < a_0 <= 2 a_h
        if let Some(a0) = a.checked_sub(ah * s) {
            if a0 < q && ah < a0 && a0 <= 2 * ah {
                return Ok(LeaderClaim::new(false, size, Rule::ProjectiveOddNonLeader2));
            }
        }
        // case 3: a = a_h q^h + a_{h-1} r + 1
        for al in 0..q {
            if a == ah * qh + al * r + 1
                && (ah + al >= q || (ah + al == q - 1 && 2 * al >= q))
            {
                return Ok(LeaderClaim::new(false, size, Rule::ProjectiveOddNonLeader3));
            }
        }
    }
    Ok(LeaderClaim::new(true, size, Rule::ProjectiveOddLeader))
}

/// `n = q^m + 1`, `m >= 4` even, `q^{h-1} <= a <= q^h`.
pub fn classify_qm_plus1_even(q: u64, m: u32, a: u64) -> Result<LeaderClaim> {
    check_q(q)?;
    let h = even_m(m, 4)?;
    check_in(a, qpow(q, h - 1), qpow(q, h), q)?;
    Ok(LeaderClaim::new(true, Some(2 * m as u64), Rule::QmPlus1EvenLeader))
}

/// `n = q^m + 1`, `m >= 3` odd, `q^h <= a <= q^{h+1}`.
pub fn classify_qm_plus1_odd(q: u64, m: u32, a: u64) -> Result<LeaderClaim> {
    check_q(q)?;
    let h = odd_m(m, 3)?;
    let top = qpow(q, h + 1);
    check_in(a, qpow(q, h), top, q)?;
    let c = top - a;
    Ok(if (1..q).contains(&c) {
        LeaderClaim::new(false, None, Rule::QmPlus1OddNonLeader)
    } else {
        LeaderClaim::new(true, Some(2 * m as u64), Rule::QmPlus1OddLeader)
    })
}

/// Which closed form of the negative pseudo coset leader set to produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PclForm {
    /// `PCL^-(-q^{h+1}, q^{h+1})` for `n = q^m - 1`.
    Primitive,
    /// `PCL^-(-kq^h, kq^h)` for the projective length, with the second
    /// family's leading coefficient taken from `a_{h-1}`.
    Projective { k: u64 },
    /// The projective set with the second family exactly as typeset, i.e.
    /// `a_h (q^{h+1}-q)/(q-1) + a_{h-1} - a_h`.
    ProjectiveAsPrinted { k: u64 },
}

impl PclForm {
    /// Chooses the corrected closed form for a family. `k` is required for
    /// projective lengths and ignored otherwise.
    pub fn for_family(family: Family, k: Option<u64>) -> Result<Self> {
        match family {
            Family::Primitive => Ok(PclForm::Primitive),
            Family::Projective => k
                .map(|k| PclForm::Projective { k })
                .ok_or_else(|| Error::range("projective form needs k")),
            Family::QmPlus1 => Err(Error::UnsupportedFamily(
                "no closed form for negative pseudo coset leaders of length q^m+1".into(),
            )),
        }
    }

    /// The symmetric bound `B` such that the set equals `PCL^-(-B, B)`.
    pub fn bound(self, q: u64, m: u32) -> u64 {
        let h = (m - 1) / 2;
        match self {
            PclForm::Primitive => qpow(q, h + 1),
            PclForm::Projective { k } | PclForm::ProjectiveAsPrinted { k } => k * qpow(q, h),
        }
    }
}

/// Closed-form negative pseudo coset leaders, as negative integers, sorted
/// increasingly.
pub fn pcl_minus_formula(form: PclForm, q: u64, m: u32) -> Result<Vec<i64>> {
    check_q(q)?;
    let mut out: Vec<i64> = Vec::new();
    match form {
        PclForm::Primitive => {
            let h = odd_m(m, 3)?;
            let (qh, qh1) = (qpow(q, h) as i64, qpow(q, h + 1) as i64);
            for u in 1..q as i64 {
                out.push(-(qh1 - u));
                out.push(1 - u * qh);
            }
        }
        PclForm::Projective { k } | PclForm::ProjectiveAsPrinted { k } => {
            let h = odd_m(m, 5)?;
            if k < 1 || k > q {
                return Err(Error::range(format!("k={k} outside [1, {q}]")));
            }
            let swapped = matches!(form, PclForm::Projective { .. });
            let qh = qpow(q, h) as i64;
            let r = (qh - 1) / (q as i64 - 1);
            let s = (qpow(q, h + 1) as i64 - q as i64) / (q as i64 - 1);
            for ah in 0..k as i64 {
                for al in 1..k as i64 {
                    if ah == al {
                        continue;
                    }
                    out.push(-(ah * qh + al * r));
                    let lead = if swapped { al } else { ah };
                    out.push(-(lead * s + al - ah));
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digit_roundtrip() {
        let d = QAdicDigits::new(14, 3, 4);
        assert_eq!(d.digits, vec![2, 1, 1, 0]);
        assert_eq!(d.value(), 14);
    }

    #[test]
    fn primitive_m3_examples() {
        let c = classify_primitive_m3(3, 4).unwrap();
        assert!(c.is_leader);
        assert_eq!(c.coset_size, Some(3));
        let c = classify_primitive_m3(3, 13).unwrap();
        assert_eq!((c.is_leader, c.coset_size), (true, Some(1)));
        assert!(!classify_primitive_m3(3, 10).unwrap().is_leader);
        assert!(classify_primitive_m3(3, 3).is_err());
    }

    #[test]
    fn primitive_odd_examples() {
        let c = classify_primitive_odd(2, 5, 9).unwrap();
        assert_eq!((c.is_leader, c.rule), (false, Rule::PrimitiveOddNonLeader3));
        assert!(classify_primitive_odd(2, 5, 7).unwrap().is_leader);
        assert!(matches!(
            classify_primitive_odd(2, 3, 3),
            Err(Error::RangeViolation(_))
        ));
        assert!(classify_primitive_odd(2, 5, 17).is_err());
    }

    #[test]
    fn primitive_even_examples() {
        let c = classify_primitive_even(3, 4, 10).unwrap();
        assert_eq!((c.is_leader, c.coset_size), (true, Some(2)));
        assert!(!classify_primitive_even(3, 4, 19).unwrap().is_leader);
        assert!(classify_primitive_even(3, 2, 4).unwrap().is_leader);
        assert!(!classify_primitive_even(3, 2, 7).unwrap().is_leader);
    }

    #[test]
    fn projective_examples() {
        for v in [ProjectiveCase1::Summary, ProjectiveCase1::Proof] {
            let c = classify_projective_odd(3, 5, 14, v).unwrap();
            assert_eq!((c.is_leader, c.rule), (false, Rule::ProjectiveOddNonLeader2));
            assert!(classify_projective_odd(3, 5, 13, v).unwrap().is_leader);
        }
    }

    #[test]
    fn qm_plus1_examples() {
        let c = classify_qm_plus1_even(2, 4, 3).unwrap();
        assert_eq!((c.is_leader, c.coset_size), (true, Some(8)));
        assert_eq!(classify_qm_plus1_even(3, 4, 4).unwrap().coset_size, Some(8));
        assert!(classify_qm_plus1_even(2, 4, 2).is_err());
        assert!(!classify_qm_plus1_odd(2, 5, 7).unwrap().is_leader);
        let c = classify_qm_plus1_odd(2, 5, 5).unwrap();
        assert_eq!((c.is_leader, c.coset_size), (true, Some(10)));
    }

    #[test]
    fn pcl_closed_forms() {
        assert_eq!(
            pcl_minus_formula(PclForm::Primitive, 2, 5).unwrap(),
            vec![-7, -3]
        );
        assert_eq!(
            pcl_minus_formula(PclForm::Projective { k: 3 }, 3, 5)
                .unwrap()
                .len(),
            8
        );
        assert!(pcl_minus_formula(PclForm::Projective { k: 1 }, 3, 5)
            .unwrap()
            .is_empty());
        assert!(matches!(
            PclForm::for_family(Family::QmPlus1, None),
            Err(Error::UnsupportedFamily(_))
        ));
    }
}
