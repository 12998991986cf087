mod common;

use bchdim::codec::{
    build_code, construct_min_weight_codeword, exhaustive_min_distance, minimal_polynomial,
    BchCode, MinDistance, Poly, Subfield,
};
use bchdim::cyclotomic::CosetIndex;
use bchdim::field::{FieldContext, PrimePower};
use bchdim::params::{BchParams, Family};
use proptest::prelude::*;

fn ctx_for(q: u64, n: u64) -> FieldContext {
    FieldContext::for_length(PrimePower::new(q).unwrap(), n).unwrap()
}

#[test]
fn minimal_polynomials_multiply_to_x_n_minus_1() {
    for (q, n) in [(2u64, 15u64), (2, 17), (2, 63), (3, 80), (3, 121), (4, 65), (5, 124), (2, 1023), (3, 2186), (2, 4095), (7, 2400)] {
        let ctx = ctx_for(q, n);
        let idx = CosetIndex::build(n, q).unwrap();
        let mut prod = Poly::one();
        for (l, _) in idx.cosets() {
            prod = prod.mul(&minimal_polynomial(&ctx, n, l as i64).unwrap(), &ctx);
        }
        assert_eq!(prod, Poly::x_pow_minus_one(&ctx, n as usize), "q={q} n={n}");
    }
}

#[test]
fn generators_vanish_on_the_defining_set() {
    for (f, q, m, delta, b) in [
        (Family::Primitive, 2u64, 4u32, 5u64, 1i64),
        (Family::Primitive, 3, 3, 7, -3),
        (Family::Projective, 3, 5, 20, -9),
        (Family::QmPlus1, 2, 5, 5, 0),
        (Family::QmPlus1, 4, 3, 9, 2),
    ] {
        let p = BchParams::new(f, q, m, delta, b).unwrap();
        let (ctx, code) = BchCode::build(&p).unwrap();
        let beta = ctx.primitive_nth_root(p.n).unwrap();
        let (_, rem) = Poly::x_pow_minus_one(&ctx, p.n as usize)
            .div_rem(&code.generator, &ctx)
            .unwrap();
        assert!(rem.is_zero());
        for &i in &code.defining_set {
            assert!(code.generator.eval(ctx.pow(beta, i), &ctx).is_zero());
        }
        let roots = (0..p.n)
            .filter(|&j| code.generator.eval(ctx.pow(beta, j), &ctx).is_zero())
            .count() as u64;
        assert_eq!(roots, p.n - code.dimension);
    }
}

/// Gray-code search against a plain enumeration over GF(p).
#[test]
fn exhaustive_search_agrees_with_plain_enumeration() {
    for (f, q, m) in [(Family::Primitive, 2u64, 4u32), (Family::QmPlus1, 2, 4), (Family::Primitive, 3, 2), (Family::Projective, 3, 3), (Family::QmPlus1, 3, 2), (Family::Primitive, 5, 2)] {
        let n = f.length(q, m).unwrap();
        for b in 0..3i64 {
            for delta in 2..n.min(9) {
                let p = BchParams::new(f, q, m, delta, b).unwrap();
                let (ctx, code) = BchCode::build(&p).unwrap();
                if code.dimension == 0 || q.pow(code.dimension as u32) > 1 << 14 {
                    continue;
                }
                let g = Subfield::new(&ctx).labels(&code.generator);
                let rows: Vec<Vec<u64>> = (0..code.dimension as usize)
                    .map(|i| {
                        let mut r = vec![0u64; n as usize];
                        r[i..i + g.len()].copy_from_slice(&g);
                        r
                    })
                    .collect();
                let d = exhaustive_min_distance(&ctx, &code, 1 << 14);
                assert_eq!(d, MinDistance::Exact(common::min_weight_prime(&rows, q)), "{p}");
                assert!(d.exact().unwrap() >= delta, "BCH bound at {p}");
            }
        }
    }
}

#[test]
fn known_small_codes() {
    let d = |q, m, delta| {
        let (ctx, code) = BchCode::build(&BchParams::new(Family::Primitive, q, m, delta, 1).unwrap()).unwrap();
        (code.dimension, exhaustive_min_distance(&ctx, &code, 1 << 24).exact())
    };
    assert_eq!(d(2, 4, 5), (7, Some(5)));
    assert_eq!(d(2, 4, 7), (5, Some(7)));
    assert_eq!(d(3, 2, 4), (4, Some(4)));
    assert_eq!(d(2, 5, 5), (21, Some(5)));
    let (_, code) = BchCode::build(&BchParams::new(Family::QmPlus1, 2, 4, 3, 1).unwrap()).unwrap();
    assert_eq!(code.dimension, 9);
    let (_, code) = BchCode::build(&BchParams::new(Family::Projective, 3, 5, 10, 1).unwrap()).unwrap();
    assert_eq!(code.dimension, 91);
}

#[test]
fn constructed_words_reach_the_designed_distance() {
    for (q, m) in [(3u64, 2u32), (4, 2), (5, 2), (3, 4), (2, 4), (2, 6), (4, 4)] {
        let n = q.pow(m) - 1;
        let delta_b = q.pow(m / 2) + 1;
        let ctx = ctx_for(q, n);
        for k in 1..q {
            let w = construct_min_weight_codeword(&ctx, n, delta_b, k).unwrap();
            let p = BchParams::new(Family::Primitive, q, m, k * delta_b, 1).unwrap();
            let code = build_code(&ctx, &CosetIndex::build(n, q).unwrap(), &p).unwrap();
            assert!(code.contains(&ctx, &w.poly()));
            assert_eq!(w.weight as u64, k * delta_b);
            assert_eq!(w.symbols.len() as u64, n);
            if let Some(d) = exhaustive_min_distance(&ctx, &code, 1 << 20).exact() {
                assert_eq!(d, k * delta_b);
            }
        }
    }
}

proptest! {
    #[test]
    fn reversible_iff_defining_set_is_symmetric(
        fam in prop::sample::select(Family::ALL.to_vec()),
        q in prop::sample::select(vec![2u64, 3, 4, 5]),
        m in 2u32..5,
        b in -30i64..30,
        delta in 2u64..40,
    ) {
        let Ok(p) = BchParams::new(fam, q, m, delta, b) else { return Ok(()) };
        prop_assume!(p.n <= 700);
        let (ctx, code) = BchCode::build(&p).unwrap();
        let n = p.n;
        let idx = CosetIndex::build(n, q).unwrap();
        // root set of g: union of cosets of the range
        let roots: std::collections::BTreeSet<u64> = idx
            .leaders_in(&p.range())
            .unwrap()
            .into_iter()
            .flat_map(|l| common::orbit(n, q, l))
            .collect();
        let symmetric = roots.iter().all(|&r| roots.contains(&((n - r) % n)));
        prop_assert_eq!(code.is_reversible(&ctx), symmetric);
        if p.range().is_negation_closed() {
            prop_assert!(code.is_reversible(&ctx));
        }
    }
}
