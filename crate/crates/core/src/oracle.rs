//! Brute-force reference implementations and exhaustive data generators for
//! the test suites. Everything here is deliberately naive and shares no code
//! with the algorithms it checks.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::Zero;

use crate::arrangement::{ExactPoint, StratumType};
use crate::linalg::Matrix;
use crate::quiver::{QuiverDatum, Shape};

/// Rank over the rationals by plain Gaussian elimination.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let factor = &m[r][c] / &pivot;
                for k in c..cols {
                    let delta = &factor * &m[rank][k];
                    m[r][k] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Codimension from the definition: rank of the weight-matrix columns and
/// gauge roots that vanish at the point.
pub fn codim_by_definition(datum: &QuiverDatum, point: &ExactPoint) -> usize {
    let n = datum.total_dim();
    let mut covectors: Vec<Vec<i64>> = datum.weight_matrix().columns();
    let vertex_of = datum.slot_vertices();
    for a in 0..n {
        for b in 0..n {
            if a != b && vertex_of[a] == vertex_of[b] {
                let mut c = vec![0; n];
                c[a] = 1;
                c[b] = -1;
                covectors.push(c);
            }
        }
    }
    let vanishing: Vec<Vec<BigRational>> = covectors
        .into_iter()
        .filter(|c| c.iter().any(|&x| x != 0))
        .filter(|c| {
            let value: BigRational = c
                .iter()
                .zip(&point.0)
                .map(|(&k, x)| BigRational::from_integer(k.into()) * x)
                .fold(BigRational::zero(), |acc, t| acc + t);
            value.is_zero()
        })
        .map(|c| {
            c.into_iter()
                .map(|k| BigRational::from_integer(k.into()))
                .collect()
        })
        .collect();
    rational_rank(&vanishing)
}

/// A point realizing the pattern: zero block at 0, other blocks at 1, 2, ...
pub fn point_of_pattern(pattern: &StratumType, dim: usize) -> ExactPoint {
    let mut values = vec![BigRational::zero(); dim];
    for (k, block) in pattern.blocks.iter().enumerate() {
        for &p in block {
            values[p] = BigRational::from_integer((k as i64 + 1).into());
        }
    }
    ExactPoint(values)
}

/// Every set partition of `0..n`.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![Vec::new()];
    for x in 0..n {
        let mut next = Vec::new();
        for partition in out {
            for k in 0..partition.len() {
                let mut p: Vec<Vec<usize>> = partition.clone();
                p[k].push(x);
                next.push(p);
            }
            let mut p = partition.clone();
            p.push(vec![x]);
            next.push(p);
        }
        out = next;
    }
    out
}

/// Every pattern on `n` slots: a set partition with at most one block
/// designated zero.
pub fn all_patterns(n: usize) -> Vec<StratumType> {
    let mut out = Vec::new();
    for partition in set_partitions(n) {
        out.push(StratumType {
            zero: None,
            blocks: partition.clone(),
        });
        for k in 0..partition.len() {
            let mut blocks = partition.clone();
            let zero = blocks.remove(k);
            out.push(StratumType {
                zero: Some(zero),
                blocks,
            });
        }
    }
    out
}

/// Canonical strata of codimension at most `bound`, by running over every
/// pattern and measuring codimension from the definition.
pub fn strata_by_brute_force(datum: &QuiverDatum, bound: usize) -> BTreeSet<StratumType> {
    let n = datum.total_dim();
    all_patterns(n)
        .into_iter()
        .filter(|p| codim_by_definition(datum, &point_of_pattern(p, n)) <= bound)
        .map(|p| p.canonicalize(datum).expect("valid pattern"))
        .collect()
}

/// Every square minor in `{-1, 0, 1}`, by exhaustive determinant expansion.
pub fn tu_by_minors(m: &Matrix) -> bool {
    let (rows, cols) = (m.rows(), m.cols());
    for k in 1..=rows.min(cols) {
        for rs in (0..rows).combinations(k) {
            for cs in (0..cols).combinations(k) {
                let sub: Vec<Vec<i64>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[(r, c)]).collect())
                    .collect();
                if laplace_det(&sub).abs() > 1 {
                    return false;
                }
            }
        }
    }
    true
}

fn laplace_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0] as i128;
    }
    (0..n)
        .filter(|&c| m[0][c] != 0)
        .map(|c| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != c)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * m[0][c] as i128 * laplace_det(&minor)
        })
        .sum()
}

/// Shape by trying every ordering of the support as a path or a cycle.
pub fn shape_by_orderings(datum: &QuiverDatum) -> Shape {
    let support = datum.support();
    let mut edges: Vec<(usize, usize)> = datum
        .edges()
        .iter()
        .filter(|&&(s, t)| datum.in_support(s) && datum.in_support(t))
        .map(|&(s, t)| (s.min(t), s.max(t)))
        .collect();
    edges.sort();
    let n = support.len();
    for order in support.iter().copied().permutations(n) {
        let mut path: Vec<(usize, usize)> = order
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
            .collect();
        path.sort();
        if path == edges {
            return Shape::FiniteA;
        }
        if n >= 3 {
            let (a, b) = (order[0], order[n - 1]);
            path.push((a.min(b), a.max(b)));
            path.sort();
            if path == edges {
                return Shape::AffineA;
            }
        }
    }
    Shape::Other
}

/// Simple graphs on `n` vertices up to isomorphism, each edge oriented from
/// the smaller to the larger vertex.
pub fn simple_graphs(n: usize, connected_only: bool) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        if connected_only && !is_connected_graph(n, &edges) {
            continue;
        }
        let key = (0..n)
            .permutations(n)
            .map(|perm| {
                let mut e: Vec<(usize, usize)> = edges
                    .iter()
                    .map(|&(a, b)| (perm[a].min(perm[b]), perm[a].max(perm[b])))
                    .collect();
                e.sort();
                e
            })
            .min()
            .unwrap_or_default();
        if seen.insert(key) {
            out.push(edges);
        }
    }
    out
}

fn is_connected_graph(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut reached = vec![false; n];
    let mut stack = vec![0];
    reached[0] = true;
    while let Some(x) = stack.pop() {
        for &(a, b) in edges {
            for (p, q) in [(a, b), (b, a)] {
                if p == x && !reached[q] {
                    reached[q] = true;
                    stack.push(q);
                }
            }
        }
    }
    reached.into_iter().all(|r| r)
}

/// Every simple datum whose graph has `Σv ≤ max_total` vertices with
/// positive gauge dimension and per-vertex framing at most `max_w`. Labelled
/// dimensions are enumerated over unlabelled graphs, so isomorphic data can
/// repeat.
pub fn simple_data(max_total: u32, max_w: u32, connected_only: bool) -> Vec<QuiverDatum> {
    let mut out = Vec::new();
    for n in 1..=max_total as usize {
        for edges in simple_graphs(n, connected_only) {
            for total in n as u32..=max_total {
                for dims in positive_compositions(total, n) {
                    for w in (0..n).map(|_| 0..=max_w).multi_cartesian_product() {
                        out.push(
                            QuiverDatum::from_edges(n, &edges, dims.clone(), w)
                                .expect("valid datum"),
                        );
                    }
                }
            }
        }
    }
    out
}

fn positive_compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    (0..parts)
        .map(|_| 1..=total)
        .multi_cartesian_product()
        .filter(|c| c.iter().sum::<u32>() == total)
        .collect()
}
