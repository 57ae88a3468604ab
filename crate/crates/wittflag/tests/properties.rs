//! Randomized invariants for the polynomial layer and the rank closed
//! forms. These are the algebraic laws everything downstream leans on.

use std::sync::Arc;

use proptest::prelude::*;

use wittflag::binom::{binom_exact, binom_mod2};
use wittflag::f2poly::{groebner, normal_form, Monomial, Poly2, Ring, Variable};
use wittflag::witt::ranks::{brute_exterior_ranks, exterior_ranks};

/// Fixed four-variable weighted ring, weights 1..4 like the family rings.
fn test_ring() -> Arc<Ring> {
    Ring::new((1u32..=4).map(|i| Variable::new(format!("x{i}"), i)).collect())
}

fn arb_monomial(nvars: usize) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0u32..3, nvars).prop_map(move |exps| {
        let mut m = Monomial::one(nvars);
        for (i, e) in exps.into_iter().enumerate() {
            for _ in 0..e {
                m = m.mul(&Monomial::var(nvars, i));
            }
        }
        m
    })
}

fn arb_poly(ring: Arc<Ring>) -> impl Strategy<Value = Poly2> {
    let nvars = ring.nvars();
    proptest::collection::vec(arb_monomial(nvars), 0..6)
        .prop_map(move |ms| Poly2::from_monomials(&ring, ms))
}

proptest! {
    #[test]
    fn addition_is_an_f2_group(
        p in arb_poly(test_ring()),
        q in arb_poly(test_ring()),
        r in arb_poly(test_ring()),
    ) {
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert!((&p + &p).is_zero());
    }

    #[test]
    fn multiplication_is_commutative_and_distributes(
        p in arb_poly(test_ring()),
        q in arb_poly(test_ring()),
        r in arb_poly(test_ring()),
    ) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn display_parse_round_trip(p in arb_poly(test_ring())) {
        let text = p.to_string();
        let back = Poly2::parse(p.ring(), &text).expect("rendered text parses");
        prop_assert_eq!(back, p);
    }

    #[test]
    fn normal_form_is_idempotent_and_additive(
        p in arb_poly(test_ring()),
        q in arb_poly(test_ring()),
        gens in proptest::collection::vec(arb_poly(test_ring()), 1..4),
    ) {
        let gb = groebner(&gens);
        let np = normal_form(&p, &gb);
        prop_assert_eq!(normal_form(&np, &gb), np.clone());
        // Reduction is linear over GF(2).
        let nq = normal_form(&q, &gb);
        prop_assert_eq!(normal_form(&(&p + &q), &gb), &np + &nq);
        // The residual differs from the input by an ideal member.
        prop_assert!(gb.contains_ideal_member(&(&p + &np)));
    }

    #[test]
    fn closed_form_ranks_match_expansion(f in 0u64..10, g in 0u64..10) {
        let closed = exterior_ranks(f, g);
        let brute = brute_exterior_ranks(f, g);
        prop_assert_eq!(closed.dims, brute.dims);
        prop_assert_eq!(closed.total(), 1u64 << (f + g));
    }

    #[test]
    fn binomial_parity_agrees_with_exact_value(n in 0u64..60, k in 0u64..60) {
        let parity = if k <= n { binom_exact(n, k) % 2 == 1 } else { false };
        prop_assert_eq!(binom_mod2(n, k as i64), parity);
    }
}
