//! Small exact integer matrices: rank, determinant and integer solutions of
//! linear systems.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn from_columns(rows: usize, columns: &[Vec<i64>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {j} has wrong length");
            for (i, &x) in col.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<i64>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, x.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)];
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        rank(&self.row_vecs())
    }

    /// Panics if the matrix is not square.
    pub fn det(&self) -> i128 {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut rows: Vec<Vec<i128>> = self
            .row_vecs()
            .into_iter()
            .map(|r| r.into_iter().map(i128::from).collect())
            .collect();
        bareiss(&mut rows).1
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = i64;

    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Rank over the rationals of a list of integer row vectors.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    bareiss(&mut m).0
}

/// Fraction-free elimination in place. Returns the rank and, for square
/// input, the determinant (zero when singular).
fn bareiss(m: &mut [Vec<i128>]) -> (usize, i128) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = 1i128;
    let mut sign = 1i128;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = m[i][j]
                    .checked_mul(m[r][c])
                    .and_then(|x| x.checked_sub(m[i][c].checked_mul(m[r][j])?))
                    .expect("integer overflow in elimination");
                m[i][j] = num / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        r += 1;
    }
    let det = match (rows == cols, r == rows) {
        (true, true) if rows == 0 => 1,
        (true, true) => sign * m[rows - 1][cols - 1],
        _ => 0,
    };
    (r, det)
}

/// Some integer `x` with `a x = b`, or `None` if the system has no integer
/// solution.
///
/// Column-style Hermite reduction `a U = H` with `U` unimodular, followed by
/// forward substitution in `H` with divisibility checks. Free coordinates of
/// the reduced system are set to zero.
pub fn solve_integer(a: &Matrix, b: &[i64]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len(), "dimension mismatch");
    let m = a.rows();
    let n = a.cols();
    let mut h: Vec<Vec<BigInt>> = (0..m)
        .map(|i| a.row(i).iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();

    // pivots[k] = row of the k-th pivot column
    let mut pivots: Vec<usize> = Vec::new();
    let mut col = 0;
    for row in 0..m {
        if col == n {
            break;
        }
        // Euclid on columns col..n restricted to this row.
        loop {
            let nonzero: Vec<usize> = (col..n).filter(|&j| !h[row][j].is_zero()).collect();
            if nonzero.len() <= 1 {
                if let Some(&j) = nonzero.first() {
                    swap_columns(&mut h, &mut u, col, j);
                }
                break;
            }
            let &p = nonzero
                .iter()
                .min_by(|&&x, &&y| h[row][x].abs().cmp(&h[row][y].abs()))
                .expect("nonempty");
            swap_columns(&mut h, &mut u, col, p);
            for j in col + 1..n {
                if h[row][j].is_zero() {
                    continue;
                }
                let q = h[row][j].div_floor(&h[row][col]);
                add_column_multiple(&mut h, &mut u, j, col, &-q);
            }
        }
        if !h[row][col].is_zero() {
            pivots.push(row);
            col += 1;
        }
    }

    let rank = pivots.len();
    let mut y: Vec<BigInt> = vec![BigInt::zero(); n];
    let mut k = 0;
    for row in 0..m {
        let acc: BigInt = (0..k).map(|j| &h[row][j] * &y[j]).sum();
        let rest = BigInt::from(b[row]) - acc;
        if k < rank && pivots[k] == row {
            let (q, r) = rest.div_rem(&h[row][k]);
            if !r.is_zero() {
                return None;
            }
            y[k] = q;
            k += 1;
        } else if !rest.is_zero() {
            return None;
        }
    }
    let x = (0..n)
        .map(|i| (0..n).map(|j| &u[i][j] * &y[j]).sum())
        .collect();
    Some(x)
}

/// `solve_integer` with the solution narrowed to `i64`.
pub fn solve_integer_i64(a: &Matrix, b: &[i64]) -> Option<Vec<i64>> {
    solve_integer(a, b).map(|x| {
        x.iter()
            .map(|v| v.to_i64().expect("solution does not fit in i64"))
            .collect()
    })
}

fn swap_columns(h: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a == b {
        return;
    }
    for row in h.iter_mut().chain(u.iter_mut()) {
        row.swap(a, b);
    }
}

fn add_column_multiple(
    h: &mut [Vec<BigInt>],
    u: &mut [Vec<BigInt>],
    dst: usize,
    src: usize,
    k: &BigInt,
) {
    for row in h.iter_mut().chain(u.iter_mut()) {
        let delta = &row[src] * k;
        row[dst] += delta;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_det() {
        let m = Matrix::from_rows(&[vec![1, 1], vec![-1, 1]]);
        assert_eq!(m.det(), 2);
        assert_eq!(m.rank(), 2);
        let s = Matrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(s.rank(), 2);
        assert_eq!(s.det(), 0);
        assert_eq!(Matrix::zeros(0, 0).det(), 1);
        assert_eq!(rank(&[]), 0);
        let p = Matrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(p.det(), -1);
        let m3 = Matrix::from_rows(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!(m3.det(), 4);
    }

    #[test]
    fn integer_solutions() {
        let a = Matrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(solve_integer_i64(&a, &[4, 9]), Some(vec![2, 3]));
        assert_eq!(solve_integer_i64(&a, &[1, 0]), None);
        let a = Matrix::from_rows(&[vec![2, 4]]);
        let x = solve_integer_i64(&a, &[6]).unwrap();
        assert_eq!(2 * x[0] + 4 * x[1], 6);
        assert_eq!(solve_integer_i64(&a, &[3]), None);
        // inconsistent over the rationals
        let a = Matrix::from_rows(&[vec![1], vec![1]]);
        assert_eq!(solve_integer_i64(&a, &[1, 2]), None);
        assert_eq!(solve_integer_i64(&a, &[5, 5]), Some(vec![5]));
    }
}
