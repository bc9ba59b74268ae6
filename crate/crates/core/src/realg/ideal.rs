use crate::exactla::{SparseEchelon, SparseVec};

use super::{LMatrix, NCPoly, RealgError};
use crate::hsym::HeckeSymmetry;

/// Entries of `R L_1 R L_1 - L_1 R L_1 R`, zero entries and exact
/// duplicates removed.
pub fn re_relations(s: &HeckeSymmetry) -> Vec<NCPoly> {
    let n = s.dim();
    let l1 = LMatrix::generating(n).kron_identity(n);
    let rl = l1.left_scalar(s.r());
    let lr = l1.right_scalar(s.r());
    let diff = rl.matmul(&rl).sub(&lr.matmul(&lr));
    let mut out: Vec<NCPoly> = Vec::new();
    for p in diff.entries() {
        if !p.is_zero() && !out.contains(p) {
            out.push(p.clone());
        }
    }
    out
}

/// Row-reduced basis of the degree-`d` component of the two-sided ideal.
#[derive(Clone, Debug)]
pub struct IdealBasis {
    n: usize,
    degree: usize,
    echelon: SparseEchelon,
}

impl IdealBasis {
    /// Span of `{u·r·v}` over monomials `u, v` with `|u| + |v| = d - 2` and a
    /// basis `r` of the quadratic relations.
    pub(crate) fn build(n: usize, relations: &SparseEchelon, degree: usize) -> IdealBasis {
        let mut echelon = SparseEchelon::new();
        if degree == 2 {
            echelon = relations.clone();
        } else if degree > 2 {
            let base = (n * n) as u64;
            let rows: Vec<SparseVec> = relations.basis().collect();
            let pad = degree - 2;
            for left in (0..=pad).rev() {
                let right = pad - left;
                let shift_r = base.pow(right as u32);
                let shift_u = base.pow((2 + right) as u32);
                for u in 0..base.pow(left as u32) {
                    for v in 0..shift_r {
                        for row in &rows {
                            let vec: SparseVec = row
                                .iter()
                                .map(|(&code, c)| {
                                    let k = u * shift_u + code as u64 * shift_r + v;
                                    (k as usize, c.clone())
                                })
                                .collect();
                            echelon.insert(vec);
                        }
                    }
                }
            }
        }
        IdealBasis { n, degree, echelon }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// `N^{2d} - rank`.
    pub fn quotient_dimension(&self) -> usize {
        (self.n * self.n).pow(self.degree as u32) - self.rank()
    }

    pub fn basis(&self) -> Vec<NCPoly> {
        self.echelon
            .basis()
            .map(|v| NCPoly::from_sparse(self.n, self.degree, &v))
            .collect()
    }

    /// Canonical representative of a homogeneous `p` of this degree.
    pub fn normal_form(&self, p: &NCPoly) -> Result<NCPoly, RealgError> {
        if p.is_zero() {
            return Ok(p.clone());
        }
        if !p.is_homogeneous() || p.degree() != Some(self.degree) {
            return Err(RealgError::DegreeMismatch {
                expected: self.degree,
                found: p.degree().unwrap_or(0),
            });
        }
        let v = self.echelon.reduce(p.to_sparse());
        Ok(NCPoly::from_sparse(self.n, self.degree, &v))
    }

    pub fn contains(&self, p: &NCPoly) -> Result<bool, RealgError> {
        Ok(self.normal_form(p)?.is_zero())
    }
}

pub(crate) fn relation_echelon(relations: &[NCPoly]) -> SparseEchelon {
    let mut e = SparseEchelon::new();
    for r in relations {
        e.insert(r.to_sparse());
    }
    e
}
