use num_traits::Zero;

use super::{LinAlgError, ScalarMatrix};
use crate::qscalar::{Rational, RatFunc};

/// Result of [`row_reduce`].
#[derive(Clone, Debug)]
pub struct RowReduction {
    pub reduced: ScalarMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Complexity proxy used to choose among candidate pivots.
fn weight(x: &RatFunc) -> usize {
    x.numer().span() + x.denom().span()
}

/// Reduced row echelon form over Q(q).
///
/// Forward elimination is fraction-free (Bareiss): each update divides
/// exactly by the previous pivot, so polynomial inputs stay polynomial until
/// the final normalization. Columns are scanned left to right; among the
/// rows with a nonzero entry, the one with the simplest entry is the pivot.
pub fn row_reduce(a: &ScalarMatrix) -> RowReduction {
    let rows = a.rows();
    let cols = a.cols();
    let mut m: Vec<Vec<RatFunc>> = (0..rows).map(|i| a.row(i).to_vec()).collect();
    let mut prev = RatFunc::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows)
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| weight(&m[i][c]))
        else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        let (top, bottom) = m.split_at_mut(r + 1);
        let prow = &top[r];
        for row in bottom.iter_mut() {
            let f = row[c].clone();
            for k in c + 1..cols {
                let scaled = &pivot * &row[k];
                let val = if f.is_zero() || prow[k].is_zero() {
                    scaled
                } else {
                    &scaled - &(&f * &prow[k])
                };
                row[k] = if prev.is_one() { val } else { &val / &prev };
            }
            row[c] = RatFunc::zero();
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    let rank = r;
    // Back substitution to reduced form.
    for i in (0..rank).rev() {
        let c = pivots[i];
        let inv = m[i][c].inv().expect("pivot is nonzero");
        for x in m[i][c..cols].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let (upper, lower) = m.split_at_mut(i);
        let prow = &lower[0];
        for row in upper.iter_mut() {
            let f = row[c].clone();
            if f.is_zero() {
                continue;
            }
            for k in c..cols {
                if !prow[k].is_zero() {
                    row[k] = &row[k] - &(&f * &prow[k]);
                }
            }
        }
    }
    let reduced = ScalarMatrix::from_rows(m).expect("rectangular");
    RowReduction {
        reduced,
        rank,
        pivots,
    }
}

pub fn rank(a: &ScalarMatrix) -> usize {
    row_reduce(a).rank
}

/// Solution of a linear system `A x = b`.
#[derive(Clone, Debug)]
pub struct Solution {
    pub x: ScalarMatrix,
    /// True when `A` has full column rank, so `x` is the only solution.
    pub unique: bool,
}

/// One exact solution of `A x = b` (free variables set to zero).
pub fn solve(a: &ScalarMatrix, b: &ScalarMatrix) -> Result<Solution, LinAlgError> {
    if a.rows() != b.rows() {
        return Err(LinAlgError::ShapeMismatch(format!(
            "A has {} rows but b has {}",
            a.rows(),
            b.rows()
        )));
    }
    let n = a.cols();
    let k = b.cols();
    let aug = ScalarMatrix::from_fn(a.rows(), n + k, |i, j| {
        if j < n {
            a[(i, j)].clone()
        } else {
            b[(i, j - n)].clone()
        }
    });
    let rr = row_reduce(&aug);
    if rr.pivots.iter().any(|&c| c >= n) {
        return Err(LinAlgError::Inconsistent);
    }
    let mut x = ScalarMatrix::zeros(n, k);
    for (r, &c) in rr.pivots.iter().enumerate() {
        for j in 0..k {
            x[(c, j)] = rr.reduced[(r, n + j)].clone();
        }
    }
    Ok(Solution {
        x,
        unique: rr.rank == n,
    })
}

pub fn inverse(a: &ScalarMatrix) -> Result<ScalarMatrix, LinAlgError> {
    if !a.is_square() {
        return Err(LinAlgError::ShapeMismatch("inverse of a non-square matrix".into()));
    }
    let sol = solve(a, &ScalarMatrix::identity(a.rows())).map_err(|_| LinAlgError::Singular)?;
    if !sol.unique {
        return Err(LinAlgError::Singular);
    }
    let mut inv = sol.x;
    if let Some(shape) = a.shape() {
        inv = inv.with_shape(shape.to_vec());
    }
    Ok(inv)
}

/// Rank of a matrix over the rationals.
pub fn rational_rank(mut m: Vec<Vec<Rational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        let prow: Vec<Rational> = m[r].iter().map(|x| x * &inv).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for k in c..cols {
                if !prow[k].is_zero() {
                    row[k] -= &f * &prow[k];
                }
            }
        }
        m[r] = prow;
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}
