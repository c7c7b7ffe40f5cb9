use std::collections::HashMap;

use crate::linalg::Matrix;

/// Every square minor lies in `{-1, 0, 1}`.
///
/// Pivoting on a `±1` entry at `(r, c)` splits the minors into those avoiding
/// row `r`, those avoiding column `c`, and those through the pivot, whose
/// values are the minors of the Schur complement `D - ε c b` up to sign.
pub fn is_totally_unimodular(m: &Matrix) -> bool {
    let rows: Vec<Vec<i64>> = m.row_vecs();
    if rows.iter().flatten().any(|x| x.abs() > 1) {
        return false;
    }
    let mut memo = HashMap::new();
    tu(reduce(rows), &mut memo)
}

fn tu(rows: Vec<Vec<i64>>, memo: &mut HashMap<Vec<Vec<i64>>, bool>) -> bool {
    if rows.is_empty() || rows[0].is_empty() {
        return true;
    }
    if let Some(&known) = memo.get(&rows) {
        return known;
    }
    let (r, c) = (
        0,
        rows[0]
            .iter()
            .position(|&x| x != 0)
            .expect("reduced rows are nonzero"),
    );
    let eps = rows[r][c];
    let without_row: Vec<Vec<i64>> = rows
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != r)
        .map(|(_, row)| row.clone())
        .collect();
    let without_col: Vec<Vec<i64>> = rows.iter().map(|row| drop_index(row, c)).collect();
    let mut schur = Vec::with_capacity(rows.len() - 1);
    let mut entries_ok = true;
    for (i, row) in rows.iter().enumerate() {
        if i == r {
            continue;
        }
        let ci = row[c];
        let new_row: Vec<i64> = (0..row.len())
            .filter(|&j| j != c)
            .map(|j| row[j] - eps * ci * rows[r][j])
            .collect();
        if new_row.iter().any(|x| x.abs() > 1) {
            entries_ok = false;
            break;
        }
        schur.push(new_row);
    }
    let result = entries_ok
        && tu(reduce(without_row), memo)
        && tu(reduce(without_col), memo)
        && tu(reduce(schur), memo);
    memo.insert(rows, result);
    result
}

fn drop_index(row: &[i64], c: usize) -> Vec<i64> {
    row.iter()
        .enumerate()
        .filter(|&(j, _)| j != c)
        .map(|(_, &x)| x)
        .collect()
}

/// Removes zero lines, repeated lines up to sign, and lines with a single
/// nonzero entry, none of which change total unimodularity. Returns a
/// canonically sorted matrix.
fn reduce(mut rows: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    loop {
        let before = (rows.len(), rows.first().map_or(0, Vec::len));
        rows = reduce_rows(rows);
        let mut cols = reduce_rows(transpose(&rows));
        cols.sort();
        rows = transpose(&cols);
        rows.sort();
        if rows.is_empty() || rows[0].is_empty() {
            return Vec::new();
        }
        if (rows.len(), rows[0].len()) == before {
            return rows;
        }
    }
}

fn reduce_rows(rows: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = Vec::new();
    for row in rows {
        let support = row.iter().filter(|&&x| x != 0).count();
        if support <= 1 {
            continue;
        }
        let sign = row.iter().find(|&&x| x != 0).copied().unwrap_or(1);
        let normal: Vec<i64> = row.iter().map(|x| x * sign).collect();
        if !out.contains(&normal) {
            out.push(normal);
        }
    }
    out
}

fn transpose(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let cols = rows.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| rows.iter().map(|r| r[j]).collect())
        .collect()
}
