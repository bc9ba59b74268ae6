use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use rayon::prelude::*;

use super::LinAlgError;
use crate::qscalar::{Rational, RatFunc, ScalarError};

/// Dense matrix over Q(q), optionally tagged with a tensor-factor shape.
///
/// Composite indices are row-major mixed radix: for shape `[d1, d2, ..., dm]`
/// the leftmost factor is the most significant digit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    data: Vec<RatFunc>,
    shape: Option<Vec<usize>>,
}

impl ScalarMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ScalarMatrix {
            rows,
            cols,
            data: vec![RatFunc::zero(); rows * cols],
            shape: None,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = RatFunc::one();
        }
        m
    }

    /// Identity on `V^{⊗m}` with `dim V = n`, carrying the tensor shape.
    pub fn tensor_identity(n: usize, m: usize) -> Self {
        Self::identity(n.pow(m as u32)).with_shape(vec![n; m])
    }

    pub fn scalar(c: RatFunc) -> Self {
        let mut m = Self::zeros(1, 1);
        m[(0, 0)] = c;
        m
    }

    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Result<Self, LinAlgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinAlgError::ShapeMismatch("ragged rows".into()));
        }
        Ok(ScalarMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
            shape: None,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> RatFunc) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ScalarMatrix {
            rows,
            cols,
            data,
            shape: None,
        }
    }

    /// Matrix unit `E_ij` of size `n`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = RatFunc::one();
        m
    }

    /// Attaches a tensor shape. Panics if the factor product does not match.
    pub fn with_shape(mut self, shape: Vec<usize>) -> Self {
        assert_eq!(shape.iter().product::<usize>(), self.rows, "shape/rows mismatch");
        self.shape = Some(shape);
        self
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn shape(&self) -> Option<&[usize]> {
        self.shape.as_deref()
    }

    /// Tensor shape, defaulting to a single factor.
    pub fn factors(&self) -> Vec<usize> {
        self.shape.clone().unwrap_or_else(|| vec![self.rows])
    }

    pub fn data(&self) -> &[RatFunc] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[RatFunc] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// First position where `self` and `other` differ.
    pub fn first_difference(&self, other: &ScalarMatrix) -> Option<(usize, usize)> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.cols, k % self.cols))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone());
        if self.is_square() {
            t.shape = self.shape.clone();
        }
        t
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
            shape: self.shape.clone(),
        }
    }

    pub fn trace(&self) -> RatFunc {
        assert!(self.is_square());
        (0..self.rows).map(|i| &self[(i, i)]).sum()
    }

    pub fn matmul(&self, rhs: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!(self.cols, rhs.rows, "matmul dimension mismatch");
        let n = rhs.cols;
        let rows: Vec<Vec<RatFunc>> = (0..self.rows)
            .into_par_iter()
            .map(|i| {
                let mut out = vec![RatFunc::zero(); n];
                for (k, a) in self.row(i).iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in rhs.row(k).iter().enumerate() {
                        if !b.is_zero() {
                            out[j] += &(a * b);
                        }
                    }
                }
                out
            })
            .collect();
        let mut m = ScalarMatrix {
            rows: self.rows,
            cols: n,
            data: rows.into_iter().flatten().collect(),
            shape: None,
        };
        if m.is_square() {
            m.shape = self.shape.clone().or_else(|| rhs.shape.clone());
        }
        m
    }

    pub fn pow(&self, e: u32) -> ScalarMatrix {
        let mut acc = ScalarMatrix::identity(self.rows);
        acc.shape = self.shape.clone();
        for _ in 0..e {
            acc = acc.matmul(self);
        }
        acc
    }

    /// Kronecker product; the tensor shape is the concatenation of shapes.
    pub fn kron(&self, rhs: &ScalarMatrix) -> ScalarMatrix {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut m = ScalarMatrix::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = &rhs[(k, l)];
                        if !b.is_zero() {
                            m[(i * rhs.rows + k, j * rhs.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        if self.is_square() && rhs.is_square() {
            let mut shape = self.factors();
            shape.extend(rhs.factors());
            m.shape = Some(shape);
        }
        m
    }

    /// `I^{⊗(i-1)} ⊗ M ⊗ I^{⊗(m-i-1)}` for an `N²×N²` matrix `M` (1-based `i`).
    pub fn embed_factor(&self, i: usize, m: usize) -> Result<ScalarMatrix, LinAlgError> {
        let n = two_factor_dim(self)?;
        if i == 0 || i + 1 > m {
            return Err(LinAlgError::IndexOutOfRange { index: i, bound: m.saturating_sub(1) });
        }
        let core = self.clone().with_shape(vec![n, n]);
        let left = ScalarMatrix::tensor_identity(n, i - 1);
        let right = ScalarMatrix::tensor_identity(n, m - i - 1);
        let mut out = if i > 1 { left.kron(&core) } else { core };
        if m - i - 1 > 0 {
            out = out.kron(&right);
        }
        Ok(out.with_shape(vec![n; m]))
    }

    /// Traces out the (1-based) tensor factors in `traced`, keeping the rest
    /// in their original order.
    pub fn partial_trace(&self, traced: &[usize]) -> Result<ScalarMatrix, LinAlgError> {
        let shape = self.shape.as_ref().ok_or(LinAlgError::MissingShape)?;
        if !self.is_square() {
            return Err(LinAlgError::ShapeMismatch("partial trace of a non-square matrix".into()));
        }
        if traced.is_empty() {
            return Err(LinAlgError::ShapeMismatch("no factors to trace".into()));
        }
        let m = shape.len();
        let mut is_traced = vec![false; m];
        for &t in traced {
            if t == 0 || t > m {
                return Err(LinAlgError::IndexOutOfRange { index: t, bound: m });
            }
            is_traced[t - 1] = true;
        }
        let kept: Vec<usize> = (0..m).filter(|&f| !is_traced[f]).collect();
        let gone: Vec<usize> = (0..m).filter(|&f| is_traced[f]).collect();
        let kept_shape: Vec<usize> = kept.iter().map(|&f| shape[f]).collect();
        let gone_shape: Vec<usize> = gone.iter().map(|&f| shape[f]).collect();
        let out_dim: usize = kept_shape.iter().product();
        let sum_dim: usize = gone_shape.iter().product();

        // Stride of each factor in the composite index.
        let mut strides = vec![1usize; m];
        for f in (0..m.saturating_sub(1)).rev() {
            strides[f] = strides[f + 1] * shape[f + 1];
        }
        let offset = |digits_kept: &[usize], digits_gone: &[usize]| -> usize {
            kept.iter().zip(digits_kept).map(|(&f, &d)| d * strides[f]).sum::<usize>()
                + gone.iter().zip(digits_gone).map(|(&f, &d)| d * strides[f]).sum::<usize>()
        };
        let kept_digits: Vec<Vec<usize>> = (0..out_dim).map(|x| to_digits(x, &kept_shape)).collect();
        let gone_digits: Vec<Vec<usize>> = (0..sum_dim).map(|x| to_digits(x, &gone_shape)).collect();

        let mut out = ScalarMatrix::zeros(out_dim, out_dim);
        for (r, rd) in kept_digits.iter().enumerate() {
            for (c, cd) in kept_digits.iter().enumerate() {
                let mut acc = RatFunc::zero();
                for gd in &gone_digits {
                    let x = &self[(offset(rd, gd), offset(cd, gd))];
                    if !x.is_zero() {
                        acc += x;
                    }
                }
                out[(r, c)] = acc;
            }
        }
        if !kept_shape.is_empty() {
            out.shape = Some(kept_shape);
        }
        Ok(out)
    }

    /// Exchanges row and column index of the given (1-based) factors only.
    pub fn partial_transpose(&self, factors: &[usize]) -> Result<ScalarMatrix, LinAlgError> {
        let shape = self.shape.clone().ok_or(LinAlgError::MissingShape)?;
        let m = shape.len();
        for &f in factors {
            if f == 0 || f > m {
                return Err(LinAlgError::IndexOutOfRange { index: f, bound: m });
            }
        }
        let mut out = ScalarMatrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            let rd = to_digits(r, &shape);
            for c in 0..self.cols {
                let x = &self[(r, c)];
                if x.is_zero() {
                    continue;
                }
                let mut nr = rd.clone();
                let mut nc = to_digits(c, &shape);
                for &f in factors {
                    std::mem::swap(&mut nr[f - 1], &mut nc[f - 1]);
                }
                out[(from_digits(&nr, &shape), from_digits(&nc, &shape))] = x.clone();
            }
        }
        out.shape = Some(shape);
        Ok(out)
    }

    /// Entrywise value at `q = q0`.
    pub fn specialize(&self, q0: &Rational) -> Result<Vec<Vec<Rational>>, ScalarError> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.specialize(q0)).collect())
            .collect()
    }
}

fn two_factor_dim(m: &ScalarMatrix) -> Result<usize, LinAlgError> {
    if !m.is_square() {
        return Err(LinAlgError::ShapeMismatch("expected a square matrix".into()));
    }
    let n = (m.rows as f64).sqrt().round() as usize;
    if n * n != m.rows {
        return Err(LinAlgError::ShapeMismatch(format!(
            "{}x{} is not of the form N²×N²",
            m.rows, m.cols
        )));
    }
    Ok(n)
}

/// Mixed-radix digits of `x`, most significant first.
pub fn to_digits(mut x: usize, shape: &[usize]) -> Vec<usize> {
    let mut d = vec![0; shape.len()];
    for f in (0..shape.len()).rev() {
        d[f] = x % shape[f];
        x /= shape[f];
    }
    d
}

pub fn from_digits(digits: &[usize], shape: &[usize]) -> usize {
    digits.iter().zip(shape).fold(0, |acc, (&d, &s)| acc * s + d)
}

impl Index<(usize, usize)> for ScalarMatrix {
    type Output = RatFunc;
    fn index(&self, (i, j): (usize, usize)) -> &RatFunc {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ScalarMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut RatFunc {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &ScalarMatrix {
    type Output = ScalarMatrix;
    fn add(self, rhs: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
            shape: self.shape.clone().or_else(|| rhs.shape.clone()),
        }
    }
}

impl Sub for &ScalarMatrix {
    type Output = ScalarMatrix;
    fn sub(self, rhs: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        ScalarMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
            shape: self.shape.clone().or_else(|| rhs.shape.clone()),
        }
    }
}

impl Mul for &ScalarMatrix {
    type Output = ScalarMatrix;
    fn mul(self, rhs: &ScalarMatrix) -> ScalarMatrix {
        self.matmul(rhs)
    }
}

impl fmt::Display for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
