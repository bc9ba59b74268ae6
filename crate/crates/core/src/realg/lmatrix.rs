use rayon::prelude::*;

use super::NCPoly;
use crate::exactla::ScalarMatrix;
use crate::qscalar::RatFunc;

/// Square matrix with noncommutative polynomial entries, acting on `V^{⊗m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LMatrix {
    n: usize,
    size: usize,
    entries: Vec<NCPoly>,
}

impl LMatrix {
    pub fn zeros(n: usize, size: usize) -> Self {
        LMatrix {
            n,
            size,
            entries: vec![NCPoly::zero(n); size * size],
        }
    }

    /// Identity of the given size (entries are the constant 1).
    pub fn identity(n: usize, size: usize) -> Self {
        let mut m = Self::zeros(n, size);
        for i in 0..size {
            m.entries[i * size + i] = NCPoly::one(n);
        }
        m
    }

    /// The generating matrix `L = ‖l_i^j‖`.
    pub fn generating(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.entries[i * n + j] = NCPoly::generator(n, i, j);
            }
        }
        m
    }

    pub fn from_fn(n: usize, size: usize, f: impl Fn(usize, usize) -> NCPoly + Sync) -> Self {
        let entries = (0..size * size)
            .into_par_iter()
            .map(|k| f(k / size, k % size))
            .collect();
        LMatrix { n, size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Dimension `N` of `V`.
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &NCPoly {
        &self.entries[i * self.size + j]
    }

    pub fn entries(&self) -> &[NCPoly] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(NCPoly::is_zero)
    }

    /// `self ⊗ I_m`.
    pub fn kron_identity(&self, m: usize) -> Self {
        let size = self.size * m;
        Self::from_fn(self.n, size, |r, c| {
            if r % m == c % m {
                self.get(r / m, c / m).clone()
            } else {
                NCPoly::zero(self.n)
            }
        })
    }

    pub fn matmul(&self, rhs: &LMatrix) -> LMatrix {
        assert_eq!(self.size, rhs.size);
        let s = self.size;
        Self::from_fn(self.n, s, |i, j| {
            let mut acc = NCPoly::zero(self.n);
            for k in 0..s {
                let (a, b) = (self.get(i, k), rhs.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc.add_product(a, b);
                }
            }
            acc
        })
    }

    /// `A · self` for a scalar matrix `A`.
    pub fn left_scalar(&self, a: &ScalarMatrix) -> LMatrix {
        assert_eq!(a.cols(), self.size);
        let s = self.size;
        Self::from_fn(self.n, s, |i, j| {
            let mut acc = NCPoly::zero(self.n);
            for (k, x) in a.row(i).iter().enumerate() {
                if !x.is_zero() {
                    acc.add_scaled(self.get(k, j), x);
                }
            }
            acc
        })
    }

    /// `self · A` for a scalar matrix `A`.
    pub fn right_scalar(&self, a: &ScalarMatrix) -> LMatrix {
        assert_eq!(a.rows(), self.size);
        let s = self.size;
        Self::from_fn(self.n, s, |i, j| {
            let mut acc = NCPoly::zero(self.n);
            for k in 0..s {
                let x = &a[(k, j)];
                if !x.is_zero() {
                    acc.add_scaled(self.get(i, k), x);
                }
            }
            acc
        })
    }

    pub fn scale_entries(&self, c: &RatFunc) -> LMatrix {
        Self::from_fn(self.n, self.size, |i, j| self.get(i, j).scale(c))
    }

    pub fn sub(&self, rhs: &LMatrix) -> LMatrix {
        Self::from_fn(self.n, self.size, |i, j| self.get(i, j) - rhs.get(i, j))
    }

    pub fn add(&self, rhs: &LMatrix) -> LMatrix {
        Self::from_fn(self.n, self.size, |i, j| self.get(i, j) + rhs.get(i, j))
    }

    /// `p · self`, multiplying every entry on the left by `p`.
    pub fn left_poly(&self, p: &NCPoly) -> LMatrix {
        Self::from_fn(self.n, self.size, |i, j| p * self.get(i, j))
    }

    pub fn pow(&self, k: usize) -> LMatrix {
        let mut acc = LMatrix::identity(self.n, self.size);
        for _ in 0..k {
            acc = acc.matmul(self);
        }
        acc
    }

    pub fn trace(&self) -> NCPoly {
        let mut acc = NCPoly::zero(self.n);
        for i in 0..self.size {
            acc.add_scaled(self.get(i, i), &RatFunc::one());
        }
        acc
    }

    /// `Tr(W · self) = Σ_{a,b} W_ab self_ba`.
    pub fn weighted_trace(&self, w: &ScalarMatrix) -> NCPoly {
        let mut acc = NCPoly::zero(self.n);
        for a in 0..self.size {
            for (b, x) in w.row(a).iter().enumerate() {
                if !x.is_zero() {
                    acc.add_scaled(self.get(b, a), x);
                }
            }
        }
        acc
    }

    pub fn map(&self, f: impl Fn(&NCPoly) -> NCPoly + Sync) -> LMatrix {
        Self::from_fn(self.n, self.size, |i, j| f(self.get(i, j)))
    }
}
