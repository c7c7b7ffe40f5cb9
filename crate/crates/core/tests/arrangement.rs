mod common;

use proptest::prelude::*;
use quivercert::oracle::{all_patterns, codim_by_definition, point_of_pattern, strata_by_brute_force};
use quivercert::{
    codim_at, codim_by_rank, codim_zero, enumerate_connected_data, enumerate_strata, generalized_roots,
    CodimPoint, Covector, ExactPoint, QuiverDatum, RootKind, StratumType,
};

#[test]
fn roots_of_small_data() {
    let d = QuiverDatum::from_edges(2, &[(0, 1)], vec![1, 1], vec![1, 0]).unwrap();
    let roots = generalized_roots(&d);
    assert_eq!(roots.len(), 2);
    assert_eq!(roots[0].kind, RootKind::EdgeWeight);
    assert_eq!(roots[0].covector, Covector::Difference { plus: 1, minus: 0 });
    assert_eq!(roots[1].covector, Covector::Unit { plus: 0 });

    let single = QuiverDatum::from_edges(1, &[], vec![2], vec![0]).unwrap();
    assert_eq!(generalized_roots(&single).len(), 2);
    let empty = QuiverDatum::from_edges(2, &[(0, 1)], vec![0, 0], vec![1, 1]).unwrap();
    assert!(generalized_roots(&empty).is_empty());
}

#[test]
fn strata_match_brute_force_on_all_small_shapes() {
    let shapes: Vec<QuiverDatum> = vec![
        QuiverDatum::from_edges(2, &[(0, 1)], vec![1, 1], vec![0, 0]).unwrap(),
        QuiverDatum::from_edges(1, &[], vec![1], vec![1]).unwrap(),
        QuiverDatum::from_edges(1, &[], vec![3], vec![0]).unwrap(),
        QuiverDatum::from_edges(1, &[(0, 0)], vec![2], vec![1]).unwrap(),
        QuiverDatum::from_edges(2, &[(0, 1)], vec![2, 2], vec![1, 0]).unwrap(),
        QuiverDatum::from_edges(3, &[(0, 1), (1, 2)], vec![2, 1, 2], vec![0, 1, 0]).unwrap(),
        QuiverDatum::from_edges(3, &[(0, 1), (1, 2), (2, 0)], vec![2, 1, 1], vec![0, 0, 0]).unwrap(),
        QuiverDatum::from_edges(3, &[(0, 1)], vec![1, 1, 2], vec![1, 0, 1]).unwrap(),
        QuiverDatum::from_edges(4, &[(0, 1), (0, 2), (0, 3)], vec![2, 1, 1, 1], vec![0, 0, 0, 1]).unwrap(),
    ];
    for d in &shapes {
        let n = d.total_dim();
        for bound in 0..=n {
            let ours: Vec<StratumType> = enumerate_strata(d, bound);
            let brute: Vec<StratumType> = strata_by_brute_force(d, bound).into_iter().collect();
            let mut sorted = ours.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), ours.len(), "duplicates for {d} at bound {bound}");
            assert_eq!(sorted, brute, "{d} at bound {bound}");
        }
    }
}

#[test]
fn stratum_counts_for_small_examples() {
    let edge = QuiverDatum::from_edges(2, &[(0, 1)], vec![1, 1], vec![0, 0]).unwrap();
    assert_eq!(enumerate_strata(&edge, 1).len(), 2);
    let framed = QuiverDatum::from_edges(1, &[], vec![1], vec![1]).unwrap();
    assert_eq!(enumerate_strata(&framed, 0).len(), 1);
}

#[test]
fn each_codim_level_up_to_the_origin_is_populated() {
    for family in enumerate_connected_data(3, true) {
        let framing: Vec<u32> = family.framed.iter().map(|&f| u32::from(f)).collect();
        let edges: Vec<(usize, usize)> = family.edges.iter().map(|&(a, b, _)| (a, b)).collect();
        let d = QuiverDatum::from_edges(family.vertex_count(), &edges, family.dims.clone(), framing).unwrap();
        let top = codim_at(&d, &ExactPoint::zero(d.total_dim())).unwrap();
        for k in 1..=top {
            let fresh = enumerate_strata(&d, k).len() - enumerate_strata(&d, k - 1).len();
            assert!(fresh > 0, "{d}: no stratum of codim {k}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn union_find_codim_equals_rank((d, p) in common::datum_with_point(4, 8, false)) {
        let uf = codim_at(&d, &p).unwrap();
        prop_assert_eq!(uf, codim_by_rank(&d, &CodimPoint::Exact(&p)).unwrap());
        prop_assert_eq!(uf, codim_by_definition(&d, &p));
    }

    #[test]
    fn codim_of_origin_for_connected_data(d in common::connected_datum(4, false)) {
        let n = d.total_dim();
        let expected = if d.has_framing() { n } else { n - 1 };
        prop_assert_eq!(codim_at(&d, &ExactPoint::zero(n)).unwrap(), expected);
        prop_assert_eq!(codim_zero(&d).unwrap(), expected);
    }

    #[test]
    fn coarsening_never_lowers_codim((d, p) in common::datum_with_point(3, 6, false), pick in any::<prop::sample::Index>()) {
        let pattern = p.pattern();
        let base = codim_at(&d, &pattern).unwrap();
        if pattern.blocks.len() >= 2 {
            let mut merged = pattern.clone();
            let k = pick.index(merged.blocks.len() - 1) + 1;
            let moved = merged.blocks.remove(k);
            merged.blocks[0].extend(moved);
            prop_assert!(codim_at(&d, &merged).unwrap() >= base);
        }
        if !pattern.blocks.is_empty() {
            let mut zeroed = pattern.clone();
            let k = pick.index(zeroed.blocks.len());
            let moved = zeroed.blocks.remove(k);
            zeroed.zero.get_or_insert_with(Vec::new).extend(moved);
            prop_assert!(codim_at(&d, &zeroed).unwrap() >= base);
        }
    }

    #[test]
    fn canonical_form_is_weyl_invariant((d, p) in common::datum_with_point(3, 6, false), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let offsets = d.slot_offsets();
        let mut values = p.0.clone();
        for i in 0..d.vertex_count() {
            values[offsets[i]..offsets[i + 1]].shuffle(&mut rng);
        }
        let permuted = ExactPoint(values);
        prop_assert_eq!(
            p.pattern().canonicalize(&d).unwrap(),
            permuted.pattern().canonicalize(&d).unwrap()
        );
    }

    #[test]
    fn every_low_codim_point_is_enumerated((d, p) in common::datum_with_point(3, 5, false)) {
        let codim = codim_at(&d, &p).unwrap();
        prop_assume!(codim <= 3);
        let strata = enumerate_strata(&d, 3);
        prop_assert!(strata.contains(&p.pattern().canonicalize(&d).unwrap()));
    }
}

#[test]
fn canonical_strata_have_the_codim_of_their_points() {
    let d = QuiverDatum::from_edges(3, &[(0, 1), (1, 2)], vec![2, 1, 2], vec![1, 0, 0]).unwrap();
    let n = d.total_dim();
    for pattern in all_patterns(n) {
        let c = pattern.canonicalize(&d).unwrap();
        assert_eq!(
            codim_at(&d, &c).unwrap(),
            codim_by_definition(&d, &point_of_pattern(&pattern, n))
        );
    }
}
