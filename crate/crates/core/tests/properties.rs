#![allow(clippy::needless_range_loop)]

use cosmetic_core::alexander::{
    from_seifert_matrix, lspace_form, second_derivative_at_one, second_derivative_from_gaps,
    GapSequence, SeifertMatrix, SymmetricLaurent,
};
use cosmetic_core::homology::{
    h1_group, h1_order, meridian_self_linking, watson_order, FramedLink,
};
use cosmetic_core::obstructions::{
    analyze, boyer_lines, KnotFlags, KnotRecord, KnotSource, Overall, Status, Tristate,
};
use cosmetic_core::slopes::{distance, linking_form_compatible, niwu_congruence};
use cosmetic_core::tables::{self, distance_bound, gordon_wu_slopes, SurgeryType, ToroidalFamily};
use cosmetic_core::{citations, Slope};
use num_integer::Integer;
use proptest::prelude::*;

fn arb_slope() -> impl Strategy<Value = Slope> {
    (-40i64..=40, 0i64..=40)
        .prop_filter("primitive", |&(p, q)| p.gcd(&q) == 1)
        .prop_map(|(p, q)| Slope::new(p, q).unwrap())
}

fn arb_polynomial() -> impl Strategy<Value = SymmetricLaurent> {
    prop::collection::vec(-30i64..=30, 0..=12).prop_map(|tail| {
        let mut c = vec![1 - 2 * tail.iter().sum::<i64>()];
        c.extend(tail);
        SymmetricLaurent::new(c).unwrap()
    })
}

/// `V = S + U` with `S` symmetric and `U − Uᵀ` the standard symplectic form,
/// so `det(V − Vᵀ) = 1`.
fn arb_seifert() -> impl Strategy<Value = SeifertMatrix> {
    (1usize..=3).prop_flat_map(|g| {
        let n = 2 * g;
        prop::collection::vec(-3i64..=3, n * (n + 1) / 2).prop_map(move |upper| {
            let mut v = vec![vec![0i64; n]; n];
            let mut it = upper.into_iter();
            for i in 0..n {
                for j in i..n {
                    let x = it.next().unwrap();
                    v[i][j] = x;
                    v[j][i] = x;
                }
            }
            for b in 0..g {
                v[2 * b][2 * b + 1] += 1;
            }
            SeifertMatrix::new(v).unwrap()
        })
    })
}

fn arb_link() -> impl Strategy<Value = FramedLink> {
    (1usize..=3).prop_flat_map(|n| {
        (
            prop::collection::vec(-6i64..=6, n * n),
            prop::collection::vec(arb_slope(), n),
        )
            .prop_map(move |(raw, fr)| {
                let mut lk = vec![vec![0i64; n]; n];
                for i in 0..n {
                    for j in i + 1..n {
                        lk[i][j] = raw[i * n + j];
                        lk[j][i] = raw[i * n + j];
                    }
                }
                FramedLink::new(lk, fr).unwrap()
            })
    })
}

proptest! {
    #[test]
    fn distance_is_symmetric(a in arb_slope(), b in arb_slope()) {
        prop_assert_eq!(distance(a, b), distance(b, a));
    }

    #[test]
    fn distance_zero_iff_equal(a in arb_slope(), b in arb_slope()) {
        prop_assert_eq!(distance(a, b) == 0, a == b);
        prop_assert_eq!(distance(a, a), 0);
    }

    #[test]
    fn identity_unit_always_matches(p in 1i64..200, q in -200i64..200) {
        prop_assume!(p.gcd(&q) == 1);
        prop_assert!(linking_form_compatible(p, q, q).unwrap());
    }

    #[test]
    fn niwu_depends_on_q_mod_p(p in 1i64..150, q in -300i64..300, k in -5i64..5) {
        prop_assume!(p.gcd(&q) == 1 && q != 0);
        let q2 = q + k * p;
        prop_assume!(q2 != 0);
        let a = niwu_congruence(Slope::new(p, q.abs()).unwrap());
        let b = niwu_congruence(Slope::new(p, q2.abs()).unwrap());
        // q and -q give the same square
        prop_assert_eq!(a, b);
    }

    #[test]
    fn invariant_factors_multiply_to_order(link in arb_link()) {
        // h1_group erases inf-framed components itself; h1_order expects them gone
        let g = h1_group(&link).unwrap();
        let order = h1_order(&link.erase_infinite()).unwrap();
        prop_assert_eq!(g.free_rank() > 0, order == 0);
        if g.free_rank() == 0 {
            prop_assert_eq!(g.invariant_factors().iter().product::<u64>(), order);
        }
        for w in g.invariant_factors().windows(2) {
            prop_assert_eq!(w[1] % w[0], 0);
        }
    }

    #[test]
    fn self_linkings_of_q_and_p_minus_q_cancel(p in 1i64..200, q in 1i64..200) {
        prop_assume!(q < p && p.gcd(&q) == 1);
        let sum = meridian_self_linking(p, q).unwrap() + meridian_self_linking(p, p - q).unwrap();
        prop_assert!(sum.is_integer());
    }

    #[test]
    fn watson_matches_knot_surgery(s in arb_slope()) {
        prop_assume!(!s.is_infinite());
        let link = FramedLink::knot(s);
        prop_assert_eq!(watson_order(1, Slope::integer(0), s), h1_order(&link).unwrap());
    }

    #[test]
    fn second_derivative_is_even(p in arb_polynomial()) {
        prop_assert_eq!(second_derivative_at_one(&p) % 2, 0);
    }

    #[test]
    fn seifert_polynomial_is_normalized_and_transpose_invariant(v in arb_seifert()) {
        let p = from_seifert_matrix(&v).unwrap();
        let c = p.coeffs();
        prop_assert_eq!(c[0] + 2 * c[1..].iter().sum::<i64>(), 1);
        prop_assert_eq!(from_seifert_matrix(&v.transpose()).unwrap(), p);
    }

    #[test]
    fn lspace_form_agrees_with_gaps(gaps in prop::collection::btree_set(1u64..=14, 1..6)) {
        let g = GapSequence::new(gaps.into_iter().collect()).unwrap();
        let p = g.to_polynomial();
        let back = lspace_form(&p).unwrap();
        prop_assert_eq!(&back, &g);
        let d2 = second_derivative_from_gaps(&g).unwrap();
        prop_assert_eq!(d2, second_derivative_at_one(&p));
        prop_assert_ne!(d2, 0);
        prop_assert_eq!(boyer_lines(&p).status, Status::Excludes);
    }

    #[test]
    fn lspace_form_implies_exclusion(p in arb_polynomial()) {
        if let Some(g) = lspace_form(&p) {
            if !g.is_empty() {
                prop_assert_eq!(boyer_lines(&p).status, Status::Excludes);
            }
        }
    }

    #[test]
    fn reports_are_deterministic_and_cited(
        p in arb_polynomial(),
        h in prop_oneof![Just(Tristate::Yes), Just(Tristate::No), Just(Tristate::Unknown)],
    ) {
        let flags = KnotFlags { hyperbolic: h, amphicheiral: Tristate::Unknown, nontrivial: !p.is_trivial() };
        let k = KnotRecord::new("k", KnotSource::Alexander(p), flags, None).unwrap();
        let (a, b) = (analyze(&k), analyze(&k));
        prop_assert_eq!(a.to_text(), b.to_text());
        prop_assert_eq!(a.to_machine(), b.to_machine());
        let dump = tables::dump_text();
        for v in &a.verdicts {
            prop_assert!(citations::lookup(v.citation.key).is_some());
            let needle = format!("# {}\t", v.citation.key);
            prop_assert!(dump.contains(&needle));
        }
        let excluded = a.verdicts.iter().any(|v| v.status == Status::Excludes);
        prop_assert_eq!(a.overall == Overall::Excluded, excluded);
        prop_assert!(!excluded || a.surviving_pairs.is_empty());
    }

    #[test]
    fn gordon_wu_distances(n in -200i64..200) {
        for f in ToroidalFamily::ALL {
            if let Ok((r, s)) = gordon_wu_slopes(f, n) {
                let d = distance(r, s);
                prop_assert!(d >= 4);
                if matches!(f, ToroidalFamily::L1 | ToroidalFamily::L2) {
                    prop_assert_eq!(d, 4);
                }
            }
        }
    }
}

#[test]
fn distance_bounds_symmetric_with_max_eight() {
    let mut max = 0;
    for a in SurgeryType::ALL {
        for b in SurgeryType::ALL {
            assert_eq!(distance_bound(a, b), distance_bound(b, a));
            max = max.max(distance_bound(a, b));
        }
    }
    assert_eq!(max, 8);
}

#[test]
fn unknot_is_never_excluded() {
    for h in [Tristate::Yes, Tristate::No, Tristate::Unknown] {
        let flags = KnotFlags {
            hyperbolic: h,
            amphicheiral: Tristate::Yes,
            nontrivial: false,
        };
        let k = KnotRecord::new(
            "unknot",
            KnotSource::Alexander(SymmetricLaurent::one()),
            flags,
            None,
        )
        .unwrap();
        assert!(analyze(&k)
            .verdicts
            .iter()
            .all(|v| v.status != Status::Excludes));
    }
}
