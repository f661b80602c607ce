//! Dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::rational::{Point, Rational};

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(mut rows: Vec<Point>, ncols: usize) -> (Vec<Point>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][col];
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= &factor * pv;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(rows: &[Point]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    rref(rows.to_vec(), first.len()).1.len()
}

/// Basis of `{x : row·x = 0 for every row}` in `Q^ncols`.
pub fn null_space(rows: &[Point], ncols: usize) -> Vec<Point> {
    let (reduced, pivots) = rref(rows.to_vec(), ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &pc) in reduced.iter().zip(&pivots) {
            v[pc] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solves the square system `a x = b`, or `None` when `a` is singular.
pub fn solve(a: &[Point], b: &[Rational]) -> Option<Point> {
    let n = a.len();
    let aug: Vec<Point> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| row.iter().cloned().chain(std::iter::once(bi.clone())).collect())
        .collect();
    let (reduced, pivots) = rref(aug, n + 1);
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(reduced.iter().map(|row| row[n].clone()).collect())
}

/// Inverse of a square matrix, or `None` when singular.
pub fn inverse(a: &[Point]) -> Option<Vec<Point>> {
    let n = a.len();
    let aug: Vec<Point> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let (reduced, pivots) = rref(aug, 2 * n);
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(reduced.into_iter().map(|row| row[n..].to_vec()).collect())
}
