use serde::{Deserialize, Serialize};

use super::{NCPoly, ReAlgebra, RealgError};
use crate::exactla::{inverse, ScalarMatrix};
use crate::hecke::HeckeElement;
use crate::qscalar::{q_delta, RatFunc};

/// How the free tensor slot is contracted when turning the matrix
/// relation for `L_{\underline{k+1}}` into operators on `V^{⊗k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RepConvention {
    /// Use `J_{k+1}^{-1}` as is.
    Direct,
    /// Transpose `J_{k+1}^{-1}` in the last factor first.
    Transposed,
}

/// Operators of all generators `l_i^j` on `V^{⊗k}`, indexed by `i·N + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepGenerators {
    pub k: usize,
    pub n: usize,
    pub convention: RepConvention,
    pub ops: Vec<ScalarMatrix>,
}

impl RepGenerators {
    /// Operator of `l_i^j` (0-based).
    pub fn op(&self, i: usize, j: usize) -> &ScalarMatrix {
        &self.ops[i * self.n + j]
    }

    pub fn space_dim(&self) -> usize {
        self.n.pow(self.k as u32)
    }
}

/// Word `g_1 ⋯ g_d ↦ Op(g_1) ⋯ Op(g_d)`, extended linearly.
pub fn apply_rep(reps: &RepGenerators, p: &NCPoly) -> ScalarMatrix {
    let dim = reps.space_dim();
    let base = (reps.n * reps.n) as u64;
    let mut acc = ScalarMatrix::zeros(dim, dim);
    for (w, c) in p.terms() {
        let mut m = ScalarMatrix::identity(dim);
        for g in w.letters(base) {
            m = m.matmul(&reps.ops[g]);
        }
        acc = &acc + &m.scale(c);
    }
    if reps.k > 0 {
        acc = acc.with_shape(vec![reps.n; reps.k]);
    }
    acc
}

impl ReAlgebra {
    /// `J_{k+1}^{-1} = R_k^{-1} ⋯ R_2^{-1} R_1^{-2} R_2^{-1} ⋯ R_k^{-1}` on `V^{⊗(k+1)}`.
    fn jucys_murphy_inverse(&self, k: usize) -> Result<ScalarMatrix, RealgError> {
        let m = k + 1;
        let rinv = self.r_inverse();
        let gens: Vec<ScalarMatrix> = (1..=k).map(|i| rinv.embed_factor(i, m)).collect::<Result<_, _>>()?;
        let mut acc = ScalarMatrix::identity(self.dim().pow(m as u32));
        for g in gens.iter().rev() {
            acc = acc.matmul(g);
        }
        for g in &gens {
            acc = acc.matmul(g);
        }
        Ok(acc.with_shape(vec![self.dim(); m]))
    }

    /// Solves `Σ_{e,B} U_{(e,E)}^{(B,j)} Op(l_c^e)_{F B} = (U J^{-1})_{(c,E)}^{(F,j)}`
    /// with `U = R_1 ⋯ R_k`, which is `L_{\underline{k+1}} ▷ x = J_{k+1}^{-1} x`
    /// after multiplying by `U` on the left.
    fn rep_with(&self, k: usize, convention: RepConvention) -> Result<RepGenerators, RealgError> {
        let n = self.dim();
        if k == 0 {
            let ops = (0..n * n)
                .map(|g| {
                    let v = if g / n == g % n { RatFunc::one() } else { RatFunc::zero() };
                    ScalarMatrix::scalar(v)
                })
                .collect();
            return Ok(RepGenerators { k, n, convention, ops });
        }
        let m = k + 1;
        let nk = n.pow(k as u32);
        let mut u = ScalarMatrix::identity(n.pow(m as u32));
        for i in 1..=k {
            u = u.matmul(&self.symmetry().r_at(i, m)?);
        }
        let mut jinv = self.jucys_murphy_inverse(k)?;
        if convention == RepConvention::Transposed {
            jinv = jinv.partial_transpose(&[m])?;
        }
        let uj = u.matmul(&jinv);
        // Row (E, j) = E·N + j, column (e, B) = e·N^k + B.
        let mat = ScalarMatrix::from_fn(nk * n, nk * n, |row, col| {
            let (big_e, j) = (row / n, row % n);
            let (e, b) = (col / nk, col % nk);
            u[(e * nk + big_e, b * n + j)].clone()
        });
        let minv = inverse(&mat)?;
        let mut ops = vec![ScalarMatrix::zeros(nk, nk); n * n];
        for c in 0..n {
            let rhs = ScalarMatrix::from_fn(nk * n, nk, |row, f| {
                let (big_e, j) = (row / n, row % n);
                uj[(c * nk + big_e, f * n + j)].clone()
            });
            let y = minv.matmul(&rhs);
            for e in 0..n {
                let op = ScalarMatrix::from_fn(nk, nk, |f, b| y[(e * nk + b, f)].clone());
                ops[c * n + e] = op.with_shape(vec![n; k]);
            }
        }
        Ok(RepGenerators { k, n, convention, ops })
    }

    /// Whether `reps` (on `V`) is `l_i^j ▷ x_k = δ_i^j x_k - (q - q^{-1}) B_k^j x_i`.
    fn matches_vector_action(&self, reps: &RepGenerators) -> bool {
        let n = self.dim();
        let b = &self.skew_data().b;
        let delta = q_delta();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let op = reps.op(i, j);
                (0..n).all(|f| {
                    (0..n).all(|kk| {
                        let mut expect = if i == j && f == kk { RatFunc::one() } else { RatFunc::zero() };
                        if f == i {
                            expect -= &(&delta * &b[(kk, j)]);
                        }
                        op[(f, kk)] == expect
                    })
                })
            })
        })
    }

    /// The slot convention that reproduces the action on `V`, decided once.
    pub fn rep_convention(&self) -> Result<RepConvention, RealgError> {
        self.convention
            .get_or_init(|| {
                for c in [RepConvention::Direct, RepConvention::Transposed] {
                    if self.matches_vector_action(&self.rep_with(1, c)?) {
                        return Ok(c);
                    }
                }
                Err(RealgError::ConventionUnresolved)
            })
            .clone()
    }

    /// Operators of the generators on `V^{⊗k}`.
    pub fn rep_generators(&self, k: usize) -> Result<RepGenerators, RealgError> {
        let c = self.rep_convention()?;
        self.rep_with(k, c)
    }

    /// Whether the generators act on `V^{⊗k}` by operators commuting with
    /// `R_1, .., R_{k-1}`.
    pub fn schur_weyl_check(&self, k: usize) -> Result<bool, RealgError> {
        self.commutes_with_braiding(&self.rep_generators(k)?)
    }

    /// Whether every operator in `reps` commutes with `R_1, .., R_{k-1}`.
    pub fn commutes_with_braiding(&self, reps: &RepGenerators) -> Result<bool, RealgError> {
        let k = reps.k;
        for m in 1..k {
            let rm = self.symmetry().r_at(m, k)?;
            for op in &reps.ops {
                if op.matmul(&rm) != rm.matmul(op) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `ch_n(z)` evaluated in the representation without passing through
    /// polynomials: the generating matrix becomes the operator-valued matrix
    /// `Σ E_ij ⊗ Op(l_i^j)` acting on `V^{⊗n} ⊗ V^{⊗k}`.
    pub fn ch_operator(&self, reps: &RepGenerators, z: &HeckeElement) -> Result<ScalarMatrix, RealgError> {
        let n = self.dim();
        let deg = z.n();
        let outer = n.pow(deg as u32);
        let inner = reps.space_dim();
        let tail = n.pow(deg as u32 - 1);
        // L_{\bar 1} = L ⊗ I_{tail}, with operator entries.
        let mut bar = ScalarMatrix::zeros(outer * inner, outer * inner);
        for i in 0..n {
            for j in 0..n {
                let op = reps.op(i, j);
                for t in 0..tail {
                    let (row, col) = (i * tail + t, j * tail + t);
                    for f in 0..inner {
                        for g in 0..inner {
                            let x = &op[(f, g)];
                            if !x.is_zero() {
                                bar[(row * inner + f, col * inner + g)] = x.clone();
                            }
                        }
                    }
                }
            }
        }
        let id_inner = ScalarMatrix::identity(inner);
        let rinv = self.r_inverse();
        let mut product = bar.clone();
        for k in 1..deg {
            let rk = self.symmetry().r_at(k, deg)?.kron(&id_inner);
            let rk_inv = rinv.embed_factor(k, deg)?.kron(&id_inner);
            bar = rk.matmul(&bar).matmul(&rk_inv);
            product = product.matmul(&bar);
        }
        let w = self.c_power(deg).matmul(&self.symmetry().rho(z)?);
        // Σ_{a,b} W_ab P_{(b,F),(a,G)}.
        let mut out = ScalarMatrix::zeros(inner, inner);
        for a in 0..outer {
            for b in 0..outer {
                let x = &w[(a, b)];
                if x.is_zero() {
                    continue;
                }
                for f in 0..inner {
                    for g in 0..inner {
                        let y = &product[(b * inner + f, a * inner + g)];
                        if !y.is_zero() {
                            out[(f, g)] += &(x * y);
                        }
                    }
                }
            }
        }
        if reps.k > 0 {
            out = out.with_shape(vec![n; reps.k]);
        }
        Ok(out)
    }
}
