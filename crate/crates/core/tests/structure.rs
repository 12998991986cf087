mod common;

use bchdim::arith::prime_factors;
use bchdim::codec::{minimal_polynomial, Poly};
use bchdim::cyclotomic::{CosetIndex, DefiningRange};
use bchdim::field::{make_field, FieldContext, FieldElement, PrimePower};
use proptest::prelude::*;

const SMALL_FIELDS: &[(u64, u32)] = &[(2, 1), (2, 4), (2, 8), (3, 2), (3, 4), (4, 3), (5, 2), (7, 2), (8, 2), (9, 2)];

fn field_strategy() -> impl Strategy<Value = FieldContext> {
    prop::sample::select(SMALL_FIELDS.to_vec())
        .prop_map(|(q, m)| make_field(PrimePower::new(q).unwrap(), m).unwrap())
}


proptest! {
    #[test]
    fn field_axioms(ctx in field_strategy(), seed in any::<[u64; 3]>()) {
        let pick = |s: u64| ctx.element(s % ctx.order()).unwrap();
        let (a, b, c) = (pick(seed[0]), pick(seed[1]), pick(seed[2]));
        prop_assert_eq!(ctx.add(a, b), ctx.add(b, a));
        prop_assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
        prop_assert_eq!(ctx.mul(a, ctx.mul(b, c)), ctx.mul(ctx.mul(a, b), c));
        prop_assert_eq!(ctx.add(a, ctx.add(b, c)), ctx.add(ctx.add(a, b), c));
        prop_assert_eq!(ctx.mul(a, ctx.add(b, c)), ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
        prop_assert_eq!(ctx.add(a, ctx.neg(a)), FieldElement::ZERO);
        prop_assert_eq!(ctx.mul(a, FieldElement::ONE), a);
        if !b.is_zero() {
            prop_assert_eq!(ctx.mul(ctx.div(a, b).unwrap(), b), a);
        }
        prop_assert!(ctx.in_base_field(ctx.pow(a, 0)));
    }

    #[test]
    fn frobenius_fixes_exactly_the_subfield(ctx in field_strategy(), v in any::<u64>()) {
        let a = ctx.element(v % ctx.order()).unwrap();
        let q = ctx.q().q();
        prop_assert_eq!(ctx.pow(a, q) == a, ctx.in_base_field(a));
    }

    #[test]
    fn partition_closure_and_divisibility(q in prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9]), n in 2u64..3000) {
        prop_assume!(bchdim::arith::gcd(n, q) == 1);
        let idx = CosetIndex::build(n, q).unwrap();
        let total: u64 = idx.cosets().map(|(_, s)| s).sum();
        prop_assert_eq!(total, n);
        for (l, s) in idx.cosets() {
            prop_assert_eq!(idx.ord() as u64 % s, 0);
            let members = common::orbit(n, q, l);
            prop_assert_eq!(members.len() as u64, s);
            prop_assert_eq!(*members.iter().min().unwrap(), l);
            for x in members {
                prop_assert_eq!(idx.leader((x * q % n) as i64), l);
            }
            prop_assert_eq!(idx.coset_size(-(l as i64)), s);
        }
    }

    #[test]
    fn leader_sets_stay_in_their_intervals(n_m in prop::sample::select(vec![(2u64, 5u32), (3, 5), (2, 7), (3, 3)]), b in 1i64..60, w in 0i64..60) {
        let (q, m) = n_m;
        let n = q.pow(m) - 1;
        let idx = CosetIndex::build(n, q).unwrap();
        let (b1, b2) = (b.min(n as i64 - 1), (b + w).min(n as i64 - 1));
        for x in idx.pcl_plus(b1, b2) {
            prop_assert!(1 <= x && x < b1);
            prop_assert!(idx.is_leader(x));
        }
        for x in idx.pcl_minus(b1, b2) {
            prop_assert!(-b1 <= x && x < 0);
            prop_assert!(idx.is_leader(-x));
        }
    }

    #[test]
    fn union_size_matches_brute_force(q in prop::sample::select(vec![2u64, 3, 4]), m in 2u32..6, b in -40i64..40, delta in 2u64..40) {
        let n = q.pow(m) - 1;
        prop_assume!(delta <= n);
        let idx = CosetIndex::build(n, q).unwrap();
        let range = DefiningRange::new(n, b, delta).unwrap();
        prop_assert_eq!(idx.dimension(&range).unwrap(), common::dimension(n, q, b, delta));
    }
}

#[test]
fn inverses_and_orders_exhaustive_up_to_2_16() {
    for (q, m) in [(2u64, 16u32), (2, 12), (3, 10), (4, 8), (5, 6), (7, 5), (16, 4), (13, 4), (251, 2), (256, 2)] {
        let ctx = make_field(PrimePower::new(q).unwrap(), m).unwrap();
        assert!(ctx.order() <= 1 << 16);
        let r = ctx.order() - 1;
        for x in ctx.elements().skip(1) {
            assert_eq!(ctx.mul(x, ctx.inv(x).unwrap()), FieldElement::ONE, "q={q} m={m}");
            assert_eq!(ctx.pow(x, r), FieldElement::ONE);
        }
    }
}

#[test]
fn nth_roots_have_exact_order() {
    for (q, n) in [(2u64, 15u64), (2, 17), (2, 9), (3, 8), (3, 121), (3, 28), (4, 13), (5, 31), (2, 33)] {
        let ctx = FieldContext::for_length(PrimePower::new(q).unwrap(), n).unwrap();
        let beta = ctx.primitive_nth_root(n).unwrap();
        assert_eq!(ctx.pow(beta, n), FieldElement::ONE);
        for d in prime_factors(n) {
            assert_ne!(ctx.pow(beta, n / d), FieldElement::ONE, "q={q} n={n} d={d}");
        }
    }
}

#[test]
fn minimal_polynomials_vanish_on_their_conjugates() {
    for (q, n) in [(2u64, 15u64), (3, 26), (4, 21), (2, 17), (3, 13)] {
        let ctx = FieldContext::for_length(PrimePower::new(q).unwrap(), n).unwrap();
        let beta = ctx.primitive_nth_root(n).unwrap();
        let idx = CosetIndex::build(n, q).unwrap();
        for (l, size) in idx.cosets() {
            let mp: Poly = minimal_polynomial(&ctx, n, l as i64).unwrap();
            assert_eq!(mp.degree(), Some(size as usize));
            assert_eq!(mp.leading(), FieldElement::ONE);
            for j in common::orbit(n, q, l) {
                assert!(mp.eval(ctx.pow(beta, j), &ctx).is_zero());
            }
            for j in (0..n).filter(|&j| idx.leader(j as i64) != l) {
                assert!(!mp.eval(ctx.pow(beta, j), &ctx).is_zero());
            }
        }
    }
}

#[test]
fn field_construction_is_deterministic() {
    for (q, m) in SMALL_FIELDS {
        let a = make_field(PrimePower::new(*q).unwrap(), *m).unwrap();
        let b = make_field(PrimePower::new(*q).unwrap(), *m).unwrap();
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.alpha(), b.alpha());
        let prods_a: Vec<_> = a.elements().map(|x| a.mul(x, a.alpha())).collect();
        let prods_b: Vec<_> = b.elements().map(|x| b.mul(x, b.alpha())).collect();
        assert_eq!(prods_a, prods_b);
    }
}

#[test]
fn large_index_partition() {
    for (n, q) in [(999_999u64, 2u64), (823_542, 7), (1_000_000, 3)] {
        let idx = CosetIndex::build(n, q).unwrap();
        assert_eq!(idx.cosets().map(|(_, s)| s).sum::<u64>(), n);
    }
}

