#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use quivercert::{ExactPoint, QuiverDatum};

/// Random data on up to `max_vertices` vertices; loops and parallel edges
/// allowed unless `simple`. Total gauge dimension is capped at `max_total`.
pub fn datum(max_vertices: usize, max_total: u32, simple: bool) -> impl Strategy<Value = QuiverDatum> {
    (1..=max_vertices)
        .prop_flat_map(move |n| {
            let edges = prop::collection::vec((0..n, 0..n), 0..=n + 2);
            let v = prop::collection::vec(0..=3u32, n);
            let w = prop::collection::vec(0..=2u32, n);
            (Just(n), edges, v, w)
        })
        .prop_map(move |(n, mut edges, mut v, w)| {
            if simple {
                edges.retain(|&(s, t)| s != t);
                let mut seen = std::collections::BTreeSet::new();
                edges.retain(|&(s, t)| seen.insert((s.min(t), s.max(t))));
            }
            while v.iter().sum::<u32>() > max_total {
                let k = v.iter().position(|&x| x > 0).unwrap();
                v[k] -= 1;
            }
            QuiverDatum::from_edges(n, &edges, v, w).unwrap()
        })
}

/// A point whose coordinates are drawn from a small set of rationals, so
/// that coincidences and zeros are frequent.
pub fn point(dim: usize) -> impl Strategy<Value = ExactPoint> {
    prop::collection::vec((-2i64..=2, 1i64..=2), dim).prop_map(|xs| {
        ExactPoint(
            xs.into_iter()
                .map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
                .collect(),
        )
    })
}

pub fn datum_with_point(max_vertices: usize, max_total: u32, simple: bool) -> impl Strategy<Value = (QuiverDatum, ExactPoint)> {
    datum(max_vertices, max_total, simple).prop_flat_map(|d| {
        let n = d.total_dim();
        (Just(d), point(n))
    })
}

pub fn a3() -> QuiverDatum {
    QuiverDatum::from_edges(3, &[(0, 1), (2, 1)], vec![3, 1, 2], vec![4, 0, 1]).unwrap()
}

/// Connected data with every vertex in the support: a random tree plus
/// extra edges, loops and parallels allowed unless `simple`.
pub fn connected_datum(max_vertices: usize, simple: bool) -> impl Strategy<Value = QuiverDatum> {
    (1..=max_vertices)
        .prop_flat_map(move |n| {
            let parents = prop::collection::vec((any::<prop::sample::Index>(), any::<bool>()), n - 1);
            let extra = prop::collection::vec((0..n, 0..n), 0..=n);
            let v = prop::collection::vec(1..=3u32, n);
            let w = prop::collection::vec(0..=2u32, n);
            (Just(n), parents, extra, v, w)
        })
        .prop_map(move |(n, parents, extra, v, w)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(k, (p, flip))| {
                    let child = k + 1;
                    let parent = p.index(child);
                    if *flip { (child, parent) } else { (parent, child) }
                })
                .collect();
            edges.extend(extra);
            if simple {
                edges.retain(|&(s, t)| s != t);
                let mut seen = std::collections::BTreeSet::new();
                edges.retain(|&(s, t)| seen.insert((s.min(t), s.max(t))));
            }
            QuiverDatum::from_edges(n, &edges, v, w).unwrap()
        })
}
