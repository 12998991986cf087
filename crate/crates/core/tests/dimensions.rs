mod common;

use std::collections::BTreeSet;

use bchdim::codec::BchCode;
use bchdim::cyclotomic::CosetIndex;
use bchdim::formulas::{evaluate, params_ding151, FormulaKind, TheoremId};
use bchdim::params::{BchParams, Family};
use bchdim::verifier::checks::dimension_params;
use bchdim::verifier::{dimension_points, Check, Ledger, SuiteConfig};
use proptest::prelude::*;

fn ledger_points() -> BTreeSet<(String, String)> {
    Ledger::builtin()
        .findings
        .into_iter()
        .map(|f| (f.theorem_id, f.params.to_string()))
        .collect()
}

/// Cells of the default suite small enough for the brute-force oracle.
fn suite_cells() -> Vec<(TheoremId, u64, u32)> {
    let mut out = Vec::new();
    for spec in SuiteConfig::named("default").unwrap().checks {
        let Ok(Check::Dimension(t)) = spec.check.parse::<Check>() else {
            continue;
        };
        for &q in &spec.q {
            for &m in &spec.m {
                if q.pow(m) <= 1000 {
                    out.push((t, q, m));
                }
            }
        }
    }
    out
}

#[test]
fn every_formula_agrees_with_brute_force_off_the_ledger() {
    let known = ledger_points();
    let mut compared = 0;
    for (t, q, m) in suite_cells() {
        let idx: Vec<_> = Family::ALL
            .iter()
            .map(|f| f.length(q, m).ok().and_then(|n| CosetIndex::build(n, q).ok()))
            .collect();
        for p in dimension_points(t, q, m) {
            let fam = Family::ALL.iter().position(|f| *f == p.family).unwrap();
            let FormulaKind::Dimension(v) = evaluate(t, &p, idx[fam].as_ref()).kind else {
                continue;
            };
            let truth = common::dimension(p.n, q, p.b, p.delta) as i64;
            let key = (
                t.id().to_string(),
                serde_json::to_value(dimension_params(&p)).unwrap().to_string(),
            );
            if known.contains(&key) {
                assert_ne!(v, truth, "ledger entry {key:?} no longer disagrees");
            } else {
                assert_eq!(v, truth, "{t} at {p}");
                assert!((0..=p.n as i64).contains(&v));
            }
            compared += 1;
        }
    }
    assert!(compared > 2000, "only {compared} points compared");
}

#[test]
fn worked_values() {
    let dim = |t, f, q, m, delta, b| {
        let p = BchParams::new(f, q, m, delta, b).unwrap();
        let idx = CosetIndex::build(p.n, q).unwrap();
        (evaluate(t, &p, Some(&idx)).dimension(), common::dimension(p.n, q, b, delta) as i64)
    };
    use Family::*;
    use TheoremId::*;
    assert_eq!(dim(Aks, Primitive, 2, 4, 4, 1), (Some(7), 7));
    assert_eq!(dim(Aks, Primitive, 3, 4, 9, 1), (Some(56), 56));
    assert_eq!(dim(Aks, QmPlus1, 2, 4, 2, 1).0, None);
    assert_eq!(dim(PrimitiveNarrowM2, Primitive, 3, 2, 4, 1), (Some(4), 4));
    assert_eq!(dim(PrimitiveNarrowM2, Primitive, 5, 2, 2, 1), (Some(22), 22));
    assert_eq!(dim(PrimitiveNarrowOdd, Primitive, 2, 5, 10, 1), (Some(11), 11));
    assert_eq!(dim(Bch2, Primitive, 3, 5, 19, 10), (Some(152), 152));
    assert_eq!(dim(Bch3, Primitive, 2, 5, 9, 9), (Some(1), 1));
    assert_eq!(dim(ProjectiveNarrow, Projective, 3, 5, 19, 1), (Some(66), 66));
    assert_eq!(dim(ProjectiveReversible, Projective, 3, 5, 20, -9), (Some(60), 60));
    assert_eq!(dim(Qm1Even, QmPlus1, 2, 4, 3, 0), (Some(8), 8));
    assert_eq!(dim(Qm1Odd, QmPlus1, 3, 3, 5, 1), (Some(10), 10));
    assert_eq!(dim(BPositiveGeneral, Primitive, 2, 5, 15, 2), dim(PrimitiveNarrowOdd, Primitive, 2, 5, 16, 1));
}

#[test]
fn ding_triples() {
    // [q^2-1, (q-k)^2, k(q+1)]
    for q in [2u64, 3, 4, 5, 7, 8] {
        for k in 1..q {
            let t = params_ding151(q, 2, k).unwrap();
            assert_eq!((t.n, t.dimension, t.distance), (q * q - 1, ((q - k) * (q - k)) as i64, k * (q + 1)));
        }
    }
}

proptest! {
    #[test]
    fn dimension_shrinks_as_delta_grows(
        fam in prop::sample::select(Family::ALL.to_vec()),
        q in prop::sample::select(vec![2u64, 3, 4]),
        m in 2u32..5,
        b in -20i64..20,
        delta in 2u64..60,
    ) {
        let n = fam.length(q, m).unwrap();
        prop_assume!(n >= 3 && bchdim::arith::gcd(n, q) == 1 && delta < n);
        let idx = CosetIndex::build(n, q).unwrap();
        let at = |d| idx.dimension(&BchParams::new(fam, q, m, d, b).unwrap().range()).unwrap();
        prop_assert!(at(delta + 1) <= at(delta));
    }

    #[test]
    fn generator_degree_complements_dimension(
        fam in prop::sample::select(Family::ALL.to_vec()),
        q in prop::sample::select(vec![2u64, 3, 4, 5]),
        m in 2u32..4,
        b in -10i64..10,
        delta in 2u64..30,
    ) {
        let Ok(p) = BchParams::new(fam, q, m, delta, b) else { return Ok(()) };
        let (_, code) = BchCode::build(&p).unwrap();
        let deg = code.generator.degree().unwrap() as u64;
        prop_assert_eq!(code.dimension + deg, p.n);
        prop_assert_eq!(code.dimension, common::dimension(p.n, q, b, delta));
    }
}
