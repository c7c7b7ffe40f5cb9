mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use quivercert::oracle::codim_by_definition;
use quivercert::{codim_at, codim_zero, decompose_at, EigenvalueTag, ExactPoint, QuiverDatum};

fn check_conservation(d: &QuiverDatum, p: &ExactPoint) -> Result<(), TestCaseError> {
    let dec = decompose_at(d, p).unwrap();
    let trimmed = d.trim();
    let n = d.vertex_count();

    // slot embeddings partition the parent slots
    let mut all: Vec<usize> = dec.factors.iter().flat_map(|f| f.slot_embedding.iter().copied()).collect();
    all.sort_unstable();
    prop_assert_eq!(all, (0..d.total_dim()).collect::<Vec<_>>());

    // (i) dimension vectors add up
    let mut v = vec![0u32; n];
    for f in &dec.factors {
        for i in 0..n {
            v[i] += f.datum.v()[i];
        }
    }
    prop_assert_eq!(&v[..], d.v());

    // (ii) framing goes to at most one factor per vertex, in full
    for i in 0..n {
        let owners: Vec<u32> = dec.factors.iter().map(|f| f.datum.w()[i]).filter(|&x| x > 0).collect();
        prop_assert!(owners.len() <= 1);
        if let Some(&w) = owners.first() {
            prop_assert_eq!(w, trimmed.w()[i]);
        }
    }

    // connected, trimmed, framing only on the zero eigenvalue, one block each
    let pattern = p.pattern();
    let block_of = |slot: usize| -> Option<usize> {
        pattern.blocks.iter().position(|b| b.contains(&slot))
    };
    for f in &dec.factors {
        prop_assert!(f.datum.is_connected());
        prop_assert!(f.datum.is_trimmed());
        if f.datum.has_framing() {
            prop_assert_eq!(f.eigenvalue, EigenvalueTag::Zero);
        }
        let blocks: BTreeSet<Option<usize>> = f.slot_embedding.iter().map(|&s| block_of(s)).collect();
        prop_assert_eq!(blocks.len(), 1);
        let slot_vertex = d.slot_vertices();
        for (k, slot) in f.datum.slots().into_iter().enumerate() {
            prop_assert_eq!(slot.vertex, slot_vertex[f.slot_embedding[k]]);
        }
    }

    // (iv) codimension is additive, checked against a rank computed from
    // scratch on both sides
    let total: usize = dec
        .factors
        .iter()
        .map(|f| codim_by_definition(&f.datum, &ExactPoint::zero(f.datum.total_dim())))
        .sum();
    prop_assert_eq!(total, codim_by_definition(d, p));
    let by_formula: usize = dec.factors.iter().map(|f| codim_zero(&f.datum).unwrap()).sum();
    prop_assert_eq!(by_formula, codim_at(d, p).unwrap());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn conservation((d, p) in common::datum_with_point(4, 7, false)) {
        check_conservation(&d, &p)?;
    }

    #[test]
    fn weyl_equivariance((d, p) in common::datum_with_point(3, 6, false), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let offsets = d.slot_offsets();
        let mut values = p.0.clone();
        for i in 0..d.vertex_count() {
            values[offsets[i]..offsets[i + 1]].shuffle(&mut rng);
        }
        let a = decompose_at(&d, &p).unwrap();
        let b = decompose_at(&d, &ExactPoint(values)).unwrap();
        prop_assert_eq!(a.factor_data(), b.factor_data());
        let canon_a = decompose_at(&d, &a.stratum.canonicalize(&d).unwrap()).unwrap();
        let canon_b = decompose_at(&d, &b.stratum.canonicalize(&d).unwrap()).unwrap();
        prop_assert_eq!(canon_a, canon_b);
    }

    #[test]
    fn recomposition_reproduces_vanishing_weights((d, p) in common::datum_with_point(3, 6, false)) {
        // every weight column vanishing at p is a factor weight column pushed
        // through the slot embedding, and conversely
        let dec = decompose_at(&d, &p).unwrap();
        let dim = d.total_dim();
        let vanishing: BTreeSet<Vec<i64>> = d
            .trim()
            .weight_matrix()
            .columns()
            .into_iter()
            .filter(|c| c.iter().any(|&x| x != 0))
            .filter(|c| {
                let mut s = num_rational::BigRational::from_integer(0.into());
                for (k, &x) in c.iter().enumerate() {
                    s += num_rational::BigRational::from_integer(x.into()) * &p.0[k];
                }
                s == num_rational::BigRational::from_integer(0.into())
            })
            .collect();
        let mut pushed = BTreeSet::new();
        for f in &dec.factors {
            for col in f.datum.weight_matrix().columns() {
                if col.iter().all(|&x| x == 0) {
                    continue;
                }
                let mut full = vec![0i64; dim];
                for (k, &x) in col.iter().enumerate() {
                    full[f.slot_embedding[k]] = x;
                }
                pushed.insert(full);
            }
        }
        prop_assert_eq!(vanishing, pushed);
    }
}

#[test]
fn a3_examples() {
    let d = common::a3();
    let origin = decompose_at(&d, &ExactPoint::zero(6)).unwrap();
    assert_eq!(origin.factors.len(), 1);
    assert_eq!(origin.codim(), 6);
    let shifted = decompose_at(&d, &ExactPoint::from_integers(&[5, 0, 0, 0, 0, 0])).unwrap();
    assert_eq!(shifted.factor_data(), vec![(vec![1, 0, 0], vec![0, 0, 0]), (vec![2, 1, 2], vec![4, 0, 1])]);
    let generic = decompose_at(&d, &ExactPoint::from_integers(&[1, 2, 3, 4, 5, 6])).unwrap();
    assert_eq!(generic.factors.len(), 6);
    assert!(generic.factors.iter().all(|f| f.codim() == 0));
}
