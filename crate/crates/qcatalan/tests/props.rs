//! Property tests for the algebraic core: ring axioms, substitution round
//! trips, truncation stability, and the encode/decode pairs on random
//! inputs.

use proptest::prelude::*;

use qcatalan::maps::{motzkin_decode, motzkin_decode_fixed, motzkin_encode, motzkin_encode_fixed};
use qcatalan::paths::{gen_dyck, peak_to_tunnel, peak_to_tunnel_inv, DyckPath};
use qcatalan::polyarith::{qtx, ExpVec, MonomialSubst, MultiPoly, PolySeries};
use qcatalan::Permutation;

fn arb_poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(
        ((-3i32..=3, -3i32..=3, 0i32..=2), -5i64..=5),
        0..6,
    )
    .prop_map(|terms| {
        let mut p = MultiPoly::zero();
        for ((a, b, c), coef) in terms {
            p.add_term(ExpVec([a, b, c, 0]), &coef.into());
        }
        p
    })
}

fn arb_series(order: usize) -> impl Strategy<Value = PolySeries> {
    prop::collection::vec(arb_poly(), order + 1)
        .prop_map(move |coeffs| PolySeries::from_coeffs(coeffs, order))
}

fn arb_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_n).prop_flat_map(|n| {
        Just((1..=n as u32).collect::<Vec<u32>>())
            .prop_shuffle()
            .prop_map(|w| Permutation::new(w).expect("shuffle preserves the value set"))
    })
}

fn arb_dyck(max_n: usize) -> impl Strategy<Value = DyckPath> {
    (0..=max_n, 0usize..10_000).prop_map(|(n, idx)| {
        let count = gen_dyck(n).count();
        gen_dyck(n).nth(idx % count).expect("index is reduced mod the count")
    })
}

proptest! {
    #[test]
    fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(p.add(&q), q.add(&p));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert_eq!(p.sub(&p), MultiPoly::zero());
    }

    #[test]
    fn laurent_substitution_round_trip(p in arb_poly()) {
        // t -> qt then t -> q^{-1} t restores the polynomial
        let fwd = p
            .subst(&[None, Some(MonomialSubst::monomial(ExpVec([1, 1, 0, 0]))), None, None])
            .unwrap();
        let back = fwd
            .subst(&[None, Some(MonomialSubst::monomial(ExpVec([-1, 1, 0, 0]))), None, None])
            .unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn coefficient_reassembly(p in arb_poly()) {
        // sum over k of [t^k] p * t^k = p
        let mut rebuilt = MultiPoly::zero();
        if let Some((lo, hi)) = p.degree_range(qtx::T) {
            for k in lo..=hi {
                let tk = MultiPoly::monomial(1, ExpVec([0, k, 0, 0]));
                rebuilt = rebuilt.add(&p.coeff_of(qtx::T, k).mul(&tk));
            }
        }
        prop_assert_eq!(rebuilt, p);
    }

    #[test]
    fn truncated_product_is_stable(f in arb_series(6), g in arb_series(6)) {
        // coefficients up to order 4 agree when computed at order 6
        let full = f.mul(&g).unwrap();
        let low = f.truncated(4).mul(&g.truncated(4)).unwrap();
        prop_assert_eq!(full.truncated(4), low);
    }

    #[test]
    fn series_ring_identities(f in arb_series(5), g in arb_series(5)) {
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(f.mul(&PolySeries::one(5)).unwrap(), f.clone());
        prop_assert_eq!(f.sub(&f).unwrap(), PolySeries::zero(5));
    }

    #[test]
    fn avoidance_tests_agree(p in arb_perm(7)) {
        prop_assert_eq!(p.avoids_321(), !p.contains_321_direct());
        prop_assert_eq!(p.rotate180().rotate180(), p.clone());
    }

    #[test]
    fn encode_decode_round_trips(p in arb_perm(8)) {
        prop_assume!(p.avoids_321());
        prop_assert_eq!(p.val_pos().to_permutation().unwrap(), p.clone());
        if p.n() >= 1 {
            prop_assert_eq!(motzkin_decode(&motzkin_encode(&p).unwrap()), p.clone());
        }
        let fixed = motzkin_encode_fixed(&p).unwrap();
        prop_assert_eq!(motzkin_decode_fixed(&fixed).unwrap(), p.clone());
    }

    #[test]
    fn peak_tunnel_transfer(p in arb_dyck(7)) {
        let h = peak_to_tunnel(&p);
        prop_assert_eq!(h.sum_tunnels(), p.sum_peaks());
        prop_assert_eq!(p.semilength() - h.des(), p.num_peaks());
        prop_assert_eq!(peak_to_tunnel_inv(&h), p);
    }
}
