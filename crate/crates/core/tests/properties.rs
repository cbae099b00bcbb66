//! Property tests for the arithmetic and combinatorial invariants that
//! don't depend on any published value.

use proptest::prelude::*;

use primzono::num::{totient, totient_sum};
use primzono::{
    enumerate_vertices, greedy_max, grid_size, GeneratorSet, IntVec, MatroidOracle, Norm,
    SignedPermutation, UniformMatroid, DEFAULT_VERTEX_CAP,
};

fn int_vec(d: usize, bound: i64) -> impl Strategy<Value = IntVec> {
    prop::collection::vec(-bound..=bound, d).prop_map(IntVec)
}

fn signed_perm(d: usize) -> impl Strategy<Value = SignedPermutation> {
    (Just((0..d).collect::<Vec<usize>>()).prop_shuffle(), prop::collection::vec(prop::bool::ANY, d))
        .prop_map(|(perm, flips)| {
            let flips = flips.into_iter().map(|b| if b { -1 } else { 1 }).collect();
            SignedPermutation::new(perm, flips).unwrap()
        })
}

proptest! {
    #[test]
    fn gcd_invariant_under_signed_permutations(v in int_vec(4, 50), s in signed_perm(4)) {
        prop_assert_eq!(s.apply(&v).unwrap().gcd(), v.gcd());
    }

    #[test]
    fn norms_invariant_under_signed_permutations(
        v in int_vec(4, 50),
        s in signed_perm(4),
        p in 1u64..=60,
    ) {
        let w = s.apply(&v).unwrap();
        for q in [Norm::Finite(1), Norm::Finite(2), Norm::LInf] {
            prop_assert_eq!(w.norm_le(q, p).unwrap(), v.norm_le(q, p).unwrap());
        }
    }

    #[test]
    fn lex_positivity_is_exclusive(v in int_vec(5, 20)) {
        let neg = v.negated().unwrap();
        if v.is_zero() {
            prop_assert!(!v.is_lex_positive() && !neg.is_lex_positive());
        } else {
            prop_assert!(v.is_lex_positive() ^ neg.is_lex_positive());
        }
    }

    #[test]
    fn norm_bound_is_monotone(v in int_vec(3, 30), p in 1u64..=40) {
        for q in [Norm::Finite(1), Norm::Finite(2), Norm::Finite(3), Norm::LInf] {
            if v.norm_le(q, p).unwrap() {
                prop_assert!(v.norm_le(q, p + 1).unwrap());
            }
        }
    }

    #[test]
    fn primitive_vectors_have_unit_gcd(v in int_vec(4, 60)) {
        prop_assume!(!v.is_zero());
        prop_assert_eq!(v.primitive().gcd(), 1);
    }

    #[test]
    fn totient_is_multiplicative_on_coprimes(a in 1u64..=40, b in 1u64..=40) {
        prop_assume!(primzono::num::gcd_u64(a, b) == 1);
        prop_assert_eq!(totient(a * b).unwrap(), totient(a).unwrap() * totient(b).unwrap());
    }

    #[test]
    fn totient_sum_is_strictly_increasing(p in 1u64..=200) {
        prop_assert!(totient_sum(p + 1).unwrap() > totient_sum(p).unwrap());
    }

    #[test]
    fn greedy_scaling_invariance(
        weights in prop::collection::vec(-50i128..=50, 1..=10),
        r in 1usize..=10,
        scale in 1i128..=7,
    ) {
        let n = weights.len();
        let r = r.min(n);
        let m = UniformMatroid::new(n, r).unwrap();
        let scaled: Vec<i128> = weights.iter().map(|w| w * scale).collect();
        prop_assert_eq!(greedy_max(&m, &weights).unwrap(), greedy_max(&m, &scaled).unwrap());
    }

    #[test]
    fn greedy_returns_a_maximal_independent_set(
        weights in prop::collection::vec(-9i128..=9, 1..=9),
        r in 1usize..=9,
    ) {
        let n = weights.len();
        let r = r.min(n);
        let m = UniformMatroid::new(n, r).unwrap();
        let basis = greedy_max(&m, &weights).unwrap();
        prop_assert_eq!(basis.len(), r);
        prop_assert!(m.is_independent(&basis).unwrap());
    }
}

fn small_generator_set(seeds: Vec<IntVec>) -> Option<GeneratorSet> {
    let mut gens: Vec<IntVec> = seeds
        .into_iter()
        .filter(|v| !v.is_zero())
        .map(|v| {
            let v = v.primitive();
            if v.is_lex_positive() {
                v
            } else {
                v.negated().unwrap()
            }
        })
        .collect();
    gens.sort();
    gens.dedup();
    if gens.is_empty() {
        return None;
    }
    Some(GeneratorSet::from_vectors(3, 4, Norm::LInf, false, gens).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // The H-form vertices, shifted by the grid translation, all land in
    // the box [0, k]^d defining the grid embedding.
    #[test]
    fn grid_embedding_contains_all_h_vertices(
        seeds in prop::collection::vec(int_vec(3, 4), 1..=8),
    ) {
        let Some(g) = small_generator_set(seeds) else { return Ok(()); };
        let (k, translation) = grid_size(&g).unwrap();
        for r in enumerate_vertices(&g, DEFAULT_VERTEX_CAP).unwrap() {
            let shifted = r.h_point.checked_add(&translation).unwrap();
            prop_assert!(
                shifted.as_slice().iter().all(|&x| 0 <= x && x <= k),
                "vertex {:?} escapes [0,{k}]^3", shifted.0
            );
        }
    }

    // Witness normals strictly realize their sign vectors.
    #[test]
    fn witnesses_realize_their_sign_vectors(
        seeds in prop::collection::vec(int_vec(3, 4), 1..=8),
    ) {
        let Some(g) = small_generator_set(seeds) else { return Ok(()); };
        for r in enumerate_vertices(&g, DEFAULT_VERTEX_CAP).unwrap() {
            for (i, v) in g.iter().enumerate() {
                let dot = r.witness.dot(v).unwrap();
                prop_assert!(dot * r.signs.sign(i) as i128 > 0);
            }
        }
    }

    // Vertex sets of the symmetric families are closed under negation.
    #[test]
    fn z_vertices_are_centrally_symmetric(
        seeds in prop::collection::vec(int_vec(3, 4), 1..=8),
    ) {
        let Some(g) = small_generator_set(seeds) else { return Ok(()); };
        let points: Vec<IntVec> = enumerate_vertices(&g, DEFAULT_VERTEX_CAP)
            .unwrap()
            .into_iter()
            .map(|r| r.z_point)
            .collect();
        for p in &points {
            prop_assert!(points.contains(&p.negated().unwrap()));
        }
    }
}
