//! The catalogue of checks and how each one is evaluated on a `(q, m)` cell.

use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use serde::Serialize;
use serde_json::json;

use super::report::{Outcome, Params, Verdict};
use crate::arith::{checked_pow, gcd};
use crate::classifier::{
    classify_primitive_even, classify_primitive_m3, classify_primitive_odd,
    classify_projective_odd, classify_qm_plus1_even, classify_qm_plus1_odd, pcl_minus_formula,
    LeaderClaim, PclForm, ProjectiveCase1,
};
use crate::codec::{construct_min_weight_codeword, exhaustive_min_distance, BchCode, MinDistance};
use crate::cyclotomic::{CosetIndex, DEFAULT_INDEX_LIMIT};
use crate::error::{Error, Result};
use crate::field::{ord_mod, FieldContext, PrimePower};
use crate::formulas::{evaluate, params_ding151, FormulaKind, TheoremId};
use crate::params::{qpow, BchParams, Family};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    Dimension(TheoremId),
    ClassifyPrimitiveM3,
    ClassifyPrimitiveOdd,
    ClassifyPrimitiveEven,
    ClassifyProjectiveOdd(ProjectiveCase1),
    ClassifyQmPlus1Even,
    ClassifyQmPlus1Odd,
    CountPrimitiveOddNonLeaders,
    CountPrimitiveEvenNonLeaders,
    SmallestPrimitiveOdd,
    SmallestPrimitiveEven,
    SmallestProjectiveOdd,
    SmallestQmPlus1Odd,
    PclMinusPrimitive,
    PclMinusProjective,
    PclMinusProjectiveAsPrinted,
    PclMinusProjectiveCount,
    Ding151Distance,
    MinDistanceConstruction,
}

const NON_DIMENSION: [Check; 19] = [
    Check::ClassifyPrimitiveM3,
    Check::ClassifyPrimitiveOdd,
    Check::ClassifyPrimitiveEven,
    Check::ClassifyProjectiveOdd(ProjectiveCase1::Summary),
    Check::ClassifyProjectiveOdd(ProjectiveCase1::Proof),
    Check::ClassifyQmPlus1Even,
    Check::ClassifyQmPlus1Odd,
    Check::CountPrimitiveOddNonLeaders,
    Check::CountPrimitiveEvenNonLeaders,
    Check::SmallestPrimitiveOdd,
    Check::SmallestPrimitiveEven,
    Check::SmallestProjectiveOdd,
    Check::SmallestQmPlus1Odd,
    Check::PclMinusPrimitive,
    Check::PclMinusProjective,
    Check::PclMinusProjectiveAsPrinted,
    Check::PclMinusProjectiveCount,
    Check::Ding151Distance,
    Check::MinDistanceConstruction,
];

impl Check {
    pub fn all() -> Vec<Check> {
        TheoremId::ALL
            .iter()
            .map(|&t| Check::Dimension(t))
            .chain(NON_DIMENSION)
            .collect()
    }

    pub fn id(self) -> &'static str {
        use Check::*;
        match self {
            Dimension(t) => t.id(),
            ClassifyPrimitiveM3 => "classify-primitive-m3",
            ClassifyPrimitiveOdd => "classify-primitive-odd",
            ClassifyPrimitiveEven => "classify-primitive-even",
            ClassifyProjectiveOdd(ProjectiveCase1::Summary) => "classify-projective-odd-summary",
            ClassifyProjectiveOdd(ProjectiveCase1::Proof) => "classify-projective-odd-proof",
            ClassifyQmPlus1Even => "classify-qmplus1-even",
            ClassifyQmPlus1Odd => "classify-qmplus1-odd",
            CountPrimitiveOddNonLeaders => "count-primitive-odd-nonleaders",
            CountPrimitiveEvenNonLeaders => "count-primitive-even-nonleaders",
            SmallestPrimitiveOdd => "smallest-nonleader-primitive-odd",
            SmallestPrimitiveEven => "smallest-nonleader-primitive-even",
            SmallestProjectiveOdd => "smallest-nonleader-projective-odd",
            SmallestQmPlus1Odd => "smallest-nonleader-qmplus1-odd",
            PclMinusPrimitive => "pcl-minus-primitive",
            PclMinusProjective => "pcl-minus-projective",
            PclMinusProjectiveAsPrinted => "pcl-minus-projective-as-printed",
            PclMinusProjectiveCount => "pcl-minus-projective-count",
            Ding151Distance => "ding151-distance",
            MinDistanceConstruction => "min-distance-construction",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::all()
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::Config(format!("unknown check {s:?}")))
    }
}

/// Every code of a dimension theorem's sweep on the `(q, m)` cell: the
/// integer range of each hypothesis, densely.
pub fn dimension_points(t: TheoremId, q: u64, m: u32) -> Vec<BchParams> {
    let mut out = Vec::new();
    if PrimePower::new(q).is_err() || m == 0 || qpow_checked(q, m + 2).is_none() {
        return out;
    }
    let mut push = |f: Family, delta: i64, b: i64| {
        if delta >= 2 {
            if let Ok(p) = BchParams::new(f, q, m, delta as u64, b) {
                out.push(p);
            }
        }
    };
    let odd = m % 2 == 1;
    let h = if odd { (m - 1) / 2 } else { m / 2 };
    let qi = q as i64;
    let qh = qpow(q, h) as i64;
    let (qh1, qh2) = (qh * qi, qh * qi * qi);
    use TheoremId::*;
    match t {
        Aks => {
            for f in Family::ALL {
                let Ok(n) = f.length(q, m) else { continue };
                if n < 2 || gcd(n, q) != 1 {
                    continue;
                }
                let Ok(ord) = ord_mod(n, q) else { continue };
                let top = qpow_checked(q, ord.div_ceil(2)).map_or(n, |v| (v + 1).min(n));
                for d in 2..=top as i64 {
                    push(f, d, 1);
                }
            }
        }
        PrimitiveNarrowM2 if m == 2 => {
            for d in 2..(q * q - 1) as i64 {
                push(Family::Primitive, d, 1);
            }
        }
        PrimitiveNarrowEven if !odd && m >= 4 => {
            for d in 2..=qh1 {
                push(Family::Primitive, d, 1);
            }
        }
        PrimitiveNarrowOdd if odd && m >= 5 => {
            for d in 2..=qh2 {
                push(Family::Primitive, d, 1);
            }
        }
        BPositiveGeneral if odd => {
            for b in 1..=qh2 {
                for last in b..=qh2 {
                    push(Family::Primitive, last - b + 2, b);
                }
            }
        }
        Bch2 if odd => {
            for b in 1..=qh1 {
                push(Family::Primitive, qh1 - b + 2, b);
            }
        }
        Bch3 if odd && m >= 5 => {
            for b in 1..=qh2 {
                push(Family::Primitive, qh2 - b + 2, b);
            }
        }
        BNegativeGeneral if odd => {
            for b in -qh2..=-1 {
                for last in 1..=qh2 {
                    push(Family::Primitive, last - b + 2, b);
                }
            }
        }
        Bch4 if odd && m >= 5 => {
            for b in -qh1..=-1 {
                for last in -b..=qh1 {
                    push(Family::Primitive, last - b + 2, b);
                }
            }
        }
        ProjectiveNarrow if odd && m >= 5 && q >= 3 => {
            for k in 1..=qi {
                push(Family::Projective, k * qh + 1, 1);
            }
        }
        ProjectiveReversible if odd && m >= 5 && q >= 3 => {
            for k in 1..=qi {
                let d = k * qh + 1;
                push(Family::Projective, 2 * d, 1 - d);
            }
        }
        Qm1Even if !odd && m >= 4 => {
            for d in 2..=qh {
                push(Family::QmPlus1, d, 1);
            }
            for d in 3..=qh + 1 {
                push(Family::QmPlus1, d, 0);
            }
        }
        Qm1Odd if odd => {
            for d in 2..=qh1 {
                push(Family::QmPlus1, d, 1);
            }
        }
        Ding151 if !odd => {
            for k in 1..qi {
                push(Family::Primitive, k * (qh + 1), 1);
            }
        }
        _ => {}
    }
    out
}

fn qpow_checked(q: u64, k: u32) -> Option<u64> {
    checked_pow(q, k).filter(|&v| v < 1 << 40)
}

pub fn dimension_params(p: &BchParams) -> Params {
    Params::default()
        .with("family", p.family.id())
        .with("q", p.q())
        .with("m", p.m)
        .with("n", p.n)
        .with("b", p.b)
        .with("delta", p.delta)
}

fn cell(q: u64, m: u32) -> Params {
    Params::default().with("q", q).with("m", m)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
struct Observed {
    is_leader: bool,
    coset_size: u64,
}

/// Formula and oracle side of one dimension point.
#[derive(Debug, Clone)]
pub struct DimensionRow {
    pub params: BchParams,
    pub formula: FormulaKind,
    pub oracle: Option<u64>,
    pub verdict: Verdict,
}

/// Evaluates checks, caching coset indices across cells.
pub struct Runner {
    budget: u64,
    index_limit: u64,
    cache: HashMap<(u64, u64), std::result::Result<Rc<CosetIndex>, String>>,
}

impl Runner {
    pub fn new(budget: u64) -> Self {
        Runner {
            budget,
            index_limit: DEFAULT_INDEX_LIMIT,
            cache: HashMap::new(),
        }
    }

    pub fn with_index_limit(mut self, limit: u64) -> Self {
        self.index_limit = limit;
        self
    }

    fn index(&mut self, n: u64, q: u64) -> std::result::Result<Rc<CosetIndex>, String> {
        let limit = self.index_limit;
        self.cache
            .entry((n, q))
            .or_insert_with(|| {
                CosetIndex::build_with_limit(n, q, limit)
                    .map(Rc::new)
                    .map_err(|e| e.to_string())
            })
            .clone()
    }

    /// Runs one check on one `(q, m)` cell. A cell outside the check's
    /// scope yields a single `OutOfRange` outcome.
    pub fn run(&mut self, check: Check, q: u64, m: u32) -> Vec<Outcome> {
        use Check::*;
        let out = match check {
            Dimension(t) => dimension_points(t, q, m)
                .into_iter()
                .map(|p| {
                    let row = self.dimension_row(t, &p);
                    Outcome {
                        params: dimension_params(&p),
                        verdict: row.verdict,
                    }
                })
                .collect(),
            ClassifyPrimitiveM3
            | ClassifyPrimitiveOdd
            | ClassifyPrimitiveEven
            | ClassifyProjectiveOdd(_)
            | ClassifyQmPlus1Even
            | ClassifyQmPlus1Odd => self.classify(check, q, m),
            CountPrimitiveOddNonLeaders | CountPrimitiveEvenNonLeaders => {
                self.nonleader_count(check, q, m)
            }
            SmallestPrimitiveOdd | SmallestPrimitiveEven | SmallestProjectiveOdd
            | SmallestQmPlus1Odd => self.smallest(check, q, m),
            PclMinusPrimitive | PclMinusProjective | PclMinusProjectiveAsPrinted
            | PclMinusProjectiveCount => self.pcl(check, q, m),
            Ding151Distance => self.ding_distance(q, m),
            MinDistanceConstruction => self.construction(q, m),
        };
        if out.is_empty() {
            vec![Outcome {
                params: cell(q, m),
                verdict: Verdict::OutOfRange(format!("{check} has no points at q={q}, m={m}")),
            }]
        } else {
            out
        }
    }

    pub fn dimension_row(&mut self, t: TheoremId, p: &BchParams) -> DimensionRow {
        let idx = self.index(p.n, p.q());
        let (formula, oracle) = match &idx {
            Ok(idx) => (
                evaluate(t, p, Some(idx)).kind,
                idx.dimension(&p.range()).ok(),
            ),
            Err(_) => (evaluate(t, p, None).kind, None),
        };
        let verdict = match (&formula, oracle, idx) {
            (_, _, Err(why)) => Verdict::Skipped(why),
            (FormulaKind::OutOfRange(why), _, _) => Verdict::OutOfRange(why.clone()),
            (FormulaKind::Dimension(v), Some(o), _) => Verdict::compare(*v, o as i64),
            (FormulaKind::Dimension(_), None, _) => Verdict::Skipped("oracle failed".into()),
        };
        DimensionRow {
            params: *p,
            formula,
            oracle,
            verdict,
        }
    }

    fn classify(&mut self, check: Check, q: u64, m: u32) -> Vec<Outcome> {
        use Check::*;
        let odd = m % 2 == 1;
        let h = if odd { (m - 1) / 2 } else { m / 2 };
        let scope = match check {
            ClassifyPrimitiveM3 if m == 3 => Some((Family::Primitive, 1, qpow(q, 3) - 2)),
            ClassifyPrimitiveOdd if odd && m >= 5 => Some((Family::Primitive, 1, qpow(q, h + 2))),
            ClassifyPrimitiveEven if m == 2 => Some((Family::Primitive, 1, q * q - 2)),
            ClassifyPrimitiveEven if !odd => Some((Family::Primitive, 1, qpow(q, h + 1))),
            ClassifyProjectiveOdd(_) if odd && m >= 5 && q >= 3 => {
                Some((Family::Projective, qpow(q, h), qpow(q, h + 1)))
            }
            ClassifyQmPlus1Even if !odd && m >= 4 => {
                Some((Family::QmPlus1, qpow(q, h - 1), qpow(q, h)))
            }
            ClassifyQmPlus1Odd if odd => Some((Family::QmPlus1, qpow(q, h), qpow(q, h + 1))),
            _ => None,
        };
        let Some((family, lo, hi)) = scope else {
            return Vec::new();
        };
        let Some(n) = length(family, q, m) else {
            return Vec::new();
        };
        let idx = self.index(n, q);
        (lo..=hi)
            .filter(|a| a % q != 0)
            .map(|a| {
                let claim: Result<LeaderClaim> = match check {
                    ClassifyPrimitiveM3 => classify_primitive_m3(q, a),
                    ClassifyPrimitiveOdd => classify_primitive_odd(q, m, a),
                    ClassifyPrimitiveEven => classify_primitive_even(q, m, a),
                    ClassifyProjectiveOdd(v) => classify_projective_odd(q, m, a, v),
                    ClassifyQmPlus1Even => classify_qm_plus1_even(q, m, a),
                    _ => classify_qm_plus1_odd(q, m, a),
                };
                let verdict = match (&idx, claim) {
                    (Err(why), _) => Verdict::Skipped(why.clone()),
                    (_, Err(e)) => Verdict::OutOfRange(e.to_string()),
                    (Ok(idx), Ok(claim)) => {
                        let seen = Observed {
                            is_leader: idx.is_leader(a as i64),
                            coset_size: idx.coset_size(a as i64),
                        };
                        let agrees = claim.is_leader == seen.is_leader
                            && claim.coset_size.is_none_or(|s| s == seen.coset_size);
                        if agrees {
                            Verdict::Match
                        } else {
                            Verdict::Mismatch {
                                expected: json!({
                                    "is_leader": claim.is_leader,
                                    "coset_size": claim.coset_size,
                                    "rule": claim.rule.id(),
                                }),
                                actual: serde_json::to_value(seen).expect("serializes"),
                            }
                        }
                    }
                };
                Outcome {
                    params: cell(q, m).with("a", a),
                    verdict,
                }
            })
            .collect()
    }

    fn nonleader_count(&mut self, check: Check, q: u64, m: u32) -> Vec<Outcome> {
        let (lo, hi, expected) = match check {
            Check::CountPrimitiveOddNonLeaders if m % 2 == 1 && m >= 5 => {
                (1, qpow(q, (m + 3) / 2), q * (q - 1) * (q - 1))
            }
            Check::CountPrimitiveEvenNonLeaders if m % 2 == 0 && m >= 4 => {
                (qpow(q, m / 2) + 1, qpow(q, m / 2 + 1), (q - 1) * (q - 2) / 2)
            }
            _ => return Vec::new(),
        };
        let verdict = match self.index(qpow(q, m) - 1, q) {
            Err(why) => Verdict::Skipped(why),
            Ok(idx) => {
                let seen = (lo..=hi)
                    .filter(|a| a % q != 0 && !idx.is_leader(*a as i64))
                    .count() as u64;
                Verdict::compare(expected, seen)
            }
        };
        vec![Outcome {
            params: cell(q, m),
            verdict,
        }]
    }

    fn smallest(&mut self, check: Check, q: u64, m: u32) -> Vec<Outcome> {
        let odd = m % 2 == 1;
        let (family, expected) = match check {
            Check::SmallestPrimitiveOdd if odd && m >= 3 => {
                (Family::Primitive, qpow(q, (m + 1) / 2) + 1)
            }
            Check::SmallestPrimitiveEven if !odd => (Family::Primitive, 2 * qpow(q, m / 2) + 1),
            Check::SmallestProjectiveOdd if odd && m >= 3 && q >= 3 => {
                (Family::Projective, (qpow(q, (m + 1) / 2) - 1) / (q - 1) + 1)
            }
            Check::SmallestQmPlus1Odd if odd && m >= 3 => {
                (Family::QmPlus1, qpow(q, (m + 1) / 2) - q + 1)
            }
            _ => return Vec::new(),
        };
        let Some(n) = length(family, q, m) else {
            return Vec::new();
        };
        let verdict = match self.index(n, q) {
            Err(why) => Verdict::Skipped(why),
            Ok(idx) => {
                let seen = (1..n).find(|a| a % q != 0 && !idx.is_leader(*a as i64));
                Verdict::compare(Some(expected), seen)
            }
        };
        vec![Outcome {
            params: cell(q, m),
            verdict,
        }]
    }

    fn pcl(&mut self, check: Check, q: u64, m: u32) -> Vec<Outcome> {
        let odd = m % 2 == 1;
        let h = (m.max(1) - 1) / 2;
        if !odd {
            return Vec::new();
        }
        if check == Check::PclMinusPrimitive {
            if m < 3 {
                return Vec::new();
            }
            let n = qpow(q, m) - 1;
            let bound = PclForm::Primitive.bound(q, m) as i64;
            let verdict = match (self.index(n, q), pcl_minus_formula(PclForm::Primitive, q, m)) {
                (Err(why), _) => Verdict::Skipped(why),
                (_, Err(e)) => Verdict::OutOfRange(e.to_string()),
                (Ok(idx), Ok(set)) => Verdict::compare(set, idx.pcl_minus(bound, bound)),
            };
            return vec![Outcome {
                params: cell(q, m),
                verdict,
            }];
        }
        if m < 5 || q < 3 {
            return Vec::new();
        }
        let Some(n) = length(Family::Projective, q, m) else {
            return Vec::new();
        };
        let idx = self.index(n, q);
        (1..=q)
            .map(|k| {
                let bound = (k * qpow(q, h)) as i64;
                let form = if check == Check::PclMinusProjectiveAsPrinted {
                    PclForm::ProjectiveAsPrinted { k }
                } else {
                    PclForm::Projective { k }
                };
                let verdict = match &idx {
                    Err(why) => Verdict::Skipped(why.clone()),
                    Ok(idx) => {
                        let seen = idx.pcl_minus(bound, bound);
                        if check == Check::PclMinusProjectiveCount {
                            Verdict::compare(2 * (k - 1) * (k - 1), seen.len() as u64)
                        } else {
                            match pcl_minus_formula(form, q, m) {
                                Ok(set) => Verdict::compare(set, seen),
                                Err(e) => Verdict::OutOfRange(e.to_string()),
                            }
                        }
                    }
                };
                Outcome {
                    params: cell(q, m).with("k", k),
                    verdict,
                }
            })
            .collect()
    }

    fn ding_distance(&mut self, q: u64, m: u32) -> Vec<Outcome> {
        if m % 2 == 1 || PrimePower::new(q).is_err() {
            return Vec::new();
        }
        let budget = self.budget;
        (1..q)
            .map(|k| {
                let params = cell(q, m).with("k", k);
                let verdict = match ding_point(q, m, k, budget) {
                    Ok(v) => v,
                    Err(e) => Verdict::Skipped(e.to_string()),
                };
                Outcome { params, verdict }
            })
            .collect()
    }

    fn construction(&mut self, q: u64, m: u32) -> Vec<Outcome> {
        if m % 2 == 1 || PrimePower::new(q).is_err() {
            return Vec::new();
        }
        (1..q)
            .map(|k| {
                let params = cell(q, m).with("k", k);
                let verdict = match construction_point(q, m, k) {
                    Ok(v) => v,
                    Err(e @ Error::PreconditionViolation(_)) => Verdict::OutOfRange(e.to_string()),
                    Err(e) => Verdict::Skipped(e.to_string()),
                };
                Outcome { params, verdict }
            })
            .collect()
    }
}

fn length(family: Family, q: u64, m: u32) -> Option<u64> {
    family.length(q, m).ok().filter(|&n| n >= 2)
}

#[derive(Debug, PartialEq, Serialize)]
struct Triple {
    n: u64,
    dimension: i64,
    distance: u64,
}

fn ding_point(q: u64, m: u32, k: u64, budget: u64) -> Result<Verdict> {
    let claim = params_ding151(q, m, k)?;
    let params = BchParams::new(Family::Primitive, q, m, claim.distance, 1)?;
    let (ctx, code) = BchCode::build(&params)?;
    Ok(match exhaustive_min_distance(&ctx, &code, budget) {
        MinDistance::Exact(d) => Verdict::compare(
            Triple {
                n: claim.n,
                dimension: claim.dimension,
                distance: claim.distance,
            },
            Triple {
                n: params.n,
                dimension: code.dimension as i64,
                distance: d,
            },
        ),
        MinDistance::ZeroCode => Verdict::OutOfRange("zero code".into()),
        d @ MinDistance::Unknown { .. } => Verdict::Skipped(d.to_string()),
    })
}

#[derive(Debug, PartialEq, Serialize)]
struct Construction {
    weight: u64,
    in_code: bool,
}

fn construction_point(q: u64, m: u32, k: u64) -> Result<Verdict> {
    let n = qpow(q, m) - 1;
    let delta_b = qpow(q, m / 2) + 1;
    let params = BchParams::new(Family::Primitive, q, m, k * delta_b, 1)?;
    let ctx = FieldContext::for_length(params.q, n)?;
    let word = construct_min_weight_codeword(&ctx, n, delta_b, k)?;
    let (ctx, code) = BchCode::build(&params)?;
    Ok(Verdict::compare(
        Construction {
            weight: k * delta_b,
            in_code: true,
        },
        Construction {
            weight: word.weight as u64,
            in_code: code.contains(&ctx, &word.poly()),
        },
    ))
}
