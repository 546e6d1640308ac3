mod common;

use std::collections::HashSet;

use common::mask_of;
use flagpair::density::{self, SearchLimits};
use flagpair::orbits;
use flagpair::parabolic;
use flagpair::weyl::{self, WeylElement};
use flagpair::{
    build_root_system, cartan_decomposition, CartanType, InvolutionSpec, RootDatum, Sign,
};
use proptest::prelude::*;

fn datum_strategy(max_rank: usize) -> impl Strategy<Value = RootDatum> {
    let types = CartanType::all_up_to(max_rank);
    (0..types.len()).prop_map(move |i| build_root_system(types[i].label, types[i].rank).unwrap())
}

fn word_element(d: &RootDatum, word: &[usize]) -> WeylElement {
    word.iter().fold(WeylElement::identity(d), |w, &i| {
        weyl::compose(&w, &weyl::simple_reflection(d, i % d.rank()).unwrap()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weyl_elements_respect_negation_and_sums(
        d in datum_strategy(6),
        word in prop::collection::vec(0usize..8, 0..12),
    ) {
        let w = word_element(&d, &word);
        for a in 0..d.num_roots() {
            prop_assert_eq!(w.apply(d.negate(a)), d.negate(w.apply(a)));
        }
        for a in (0..d.num_roots()).step_by(3) {
            for b in (0..d.num_roots()).step_by(5) {
                let image = d.root_sum(w.apply(a), w.apply(b)).unwrap();
                let direct = d.root_sum(a, b).unwrap().map(|s| w.apply(s));
                prop_assert_eq!(image, direct);
            }
        }
        prop_assert!(weyl::compose(&w, &w.inverse()).unwrap().is_identity());
    }

    #[test]
    fn reflections_are_involutions_fixing_orthogonal_roots(
        d in datum_strategy(5),
        pick in any::<prop::sample::Index>(),
    ) {
        let r = pick.index(d.num_roots());
        let s = weyl::reflection(&d, r).unwrap();
        prop_assert_eq!(s.apply(r), d.negate(r));
        prop_assert!(weyl::compose(&s, &s).unwrap().is_identity());
        for b in 0..d.num_roots() {
            if d.inner(b, r) == 0 {
                prop_assert_eq!(s.apply(b), b);
            }
        }
    }

    #[test]
    fn translate_is_a_group_action(
        d in datum_strategy(3),
        jmask in any::<u8>(),
        u in prop::collection::vec(0usize..3, 0..6),
        v in prop::collection::vec(0usize..3, 0..6),
    ) {
        let j: Vec<usize> = (0..d.rank()).filter(|&i| jmask & (1 << i) != 0).collect();
        let p = parabolic::standard_parabolic(&d, &j).unwrap();
        let (wu, wv) = (word_element(&d, &u), word_element(&d, &v));
        let step = parabolic::translate(&parabolic::translate(&p, &wv).unwrap(), &wu).unwrap();
        let once = parabolic::translate(&p, &weyl::compose(&wu, &wv).unwrap()).unwrap();
        prop_assert_eq!(step.roots(), once.roots());
        prop_assert!(parabolic::is_parabolic_set(&d, step.roots()));
        let sf = step.standard_form().unwrap();
        let base = parabolic::standard_parabolic(&d, &sf.j).unwrap();
        prop_assert_eq!(&sf.w.apply_set(base.roots()), step.roots());
    }

    #[test]
    fn coset_count_shrinks_as_j_grows(
        d in datum_strategy(4),
        grading in any::<u8>(),
        jmask in any::<u8>(),
        extra in any::<u8>(),
    ) {
        let n = d.rank();
        let g: Vec<u8> = (0..n).map(|i| (grading >> i) & 1).collect();
        prop_assume!(g.contains(&1));
        let dec = cartan_decomposition(&d, &InvolutionSpec::from_grading(&g)).unwrap();
        let j: Vec<usize> = (0..n).filter(|&i| jmask & (1 << i) != 0).collect();
        let bigger: Vec<usize> = (0..n).filter(|&i| (jmask | extra) & (1 << i) != 0).collect();
        let small = orbits::count_closed_orbits_single(&dec, &j).unwrap();
        let large = orbits::count_closed_orbits_single(&dec, &bigger).unwrap();
        prop_assert!(small >= large);
        let both = orbits::count_closed_orbits_double(&dec, &j, &bigger).unwrap();
        prop_assert_eq!(both.product, small as u128 * large as u128);
    }
}

/// Every Hermitian grading with rank at most `max_rank`.
fn hermitian_cases(max_rank: usize) -> Vec<(RootDatum, Vec<u8>)> {
    let mut out = Vec::new();
    for t in CartanType::all_up_to(max_rank) {
        for g in common::gradings(t.rank) {
            let d = build_root_system(t.label, t.rank).unwrap();
            if cartan_decomposition(&d, &InvolutionSpec::from_grading(&g))
                .unwrap()
                .is_hermitian()
            {
                out.push((d, g));
            }
        }
    }
    out
}

#[test]
fn s_plus_is_abelian_and_opposite_to_s_minus() {
    for (d, g) in hermitian_cases(7) {
        let dec = cartan_decomposition(&d, &InvolutionSpec::from_grading(&g)).unwrap();
        let (sp, sm) = (dec.s_plus().unwrap(), dec.s_minus().unwrap());
        assert_eq!(&d.negate_set(sp), sm);
        assert_eq!(&sp.union(sm), dec.delta_s());
        for a in sp.iter() {
            for b in sp.iter() {
                assert_eq!(d.root_sum(a, b).unwrap(), None, "{} {g:?}", d.cartan_type());
            }
        }
    }
}

#[test]
fn search_is_closed_under_swapping_members() {
    for (d, g) in hermitian_cases(3) {
        let dec = cartan_decomposition(&d, &InvolutionSpec::from_grading(&g)).unwrap();
        let cat = density::search_satisfying_pairs(&dec, None, SearchLimits::default()).unwrap();
        let pairs: HashSet<(u64, u64)> = cat
            .entries()
            .map(|e| (mask_of(e.p1.roots()), mask_of(e.p2.roots())))
            .collect();
        for &(a, b) in &pairs {
            assert!(pairs.contains(&(b, a)));
        }
    }
}

#[test]
fn satisfying_pairs_split_s_and_compact_blocks() {
    for (d, g) in hermitian_cases(3) {
        let dec = cartan_decomposition(&d, &InvolutionSpec::from_grading(&g)).unwrap();
        let cat = density::search_satisfying_pairs(&dec, None, SearchLimits::default()).unwrap();
        assert!(!cat.is_empty());
        assert!(cat.unmatched.is_empty(), "{} {g:?}", d.cartan_type());
        let (sp, sm) = (dec.s_plus().unwrap(), dec.s_minus().unwrap());
        for e in cat.entries() {
            let s1 = e.p1.roots().intersection(dec.delta_s());
            let s2 = e.p2.roots().intersection(dec.delta_s());
            assert!(&s1 == sp || &s1 == sm);
            assert_eq!(s1.union(&s2), *dec.delta_s());
            assert!(s1.is_disjoint(&s2));
            for block in dec.factor_partition() {
                assert!(block.is_subset(e.p1.roots()) || block.is_subset(e.p2.roots()));
            }
        }
    }
}

#[test]
fn constructors_produce_satisfying_pairs_for_every_compact_parabolic() {
    for (d, g) in hermitian_cases(4) {
        let dec = cartan_decomposition(&d, &InvolutionSpec::from_grading(&g)).unwrap();
        for subset in common::subsets(dec.compact_simple().len()) {
            let q = dec.standard_compact_parabolic(&subset).unwrap();
            for sign in [Sign::Plus, Sign::Minus] {
                let (p1, p2) = density::construct_type1(&dec, &q, sign).unwrap();
                let r = density::check_condition(&dec, &p1, &p2).unwrap();
                assert!(r.satisfied);
                assert_eq!(r.q_roots, q);
            }
        }
    }
}

#[test]
fn free_action_when_j_is_empty() {
    for t in CartanType::all_up_to(5) {
        let d = build_root_system(t.label, t.rank).unwrap();
        for g in common::gradings(t.rank) {
            let dec = cartan_decomposition(&d, &InvolutionSpec::from_grading(&g)).unwrap();
            let count = orbits::count_closed_orbits_single(&dec, &[]).unwrap() as u128;
            assert_eq!(
                count,
                t.weyl_order() / dec.compact_weyl_order(),
                "{t} {g:?}"
            );
        }
    }
}
