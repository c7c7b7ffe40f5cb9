//! Fixed inputs shared by the benchmarks.

use quivercert::QuiverDatum;

/// `1 -> 2 <- 3` with `v = (3, 1, 2)`, `w = (4, 0, 1)`.
pub fn a3() -> QuiverDatum {
    QuiverDatum::from_edges(3, &[(0, 1), (2, 1)], vec![3, 1, 2], vec![4, 0, 1]).unwrap()
}

/// Oriented 3-cycle with `v = (2, 1, 1)`.
pub fn affine_triangle() -> QuiverDatum {
    QuiverDatum::from_edges(3, &[(0, 1), (1, 2), (2, 0)], vec![2, 1, 1], vec![0, 0, 0]).unwrap()
}

/// Framed type-A path of length `n` with all dimensions `dim`.
pub fn framed_path(n: usize, dim: u32) -> QuiverDatum {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    let mut w = vec![0; n];
    w[0] = dim;
    w[n - 1] = dim;
    QuiverDatum::from_edges(n, &edges, vec![dim; n], w).unwrap()
}

/// Star with a framed centre of dimension 2 and `leaves` dimension-1 leaves.
pub fn framed_star(leaves: usize) -> QuiverDatum {
    let edges: Vec<(usize, usize)> = (1..=leaves).map(|i| (0, i)).collect();
    let mut v = vec![1; leaves + 1];
    v[0] = 2;
    let mut w = vec![0; leaves + 1];
    w[0] = 1;
    QuiverDatum::from_edges(leaves + 1, &edges, v, w).unwrap()
}
