use std::sync::Arc;

use super::{LMatrix, NCPoly, ReAlgebra, RealgError};
use crate::exactla::ScalarMatrix;
use crate::hecke::{antisymmetrizer, primitive_idempotent, standard_tableaux, HeckeElement, Partition, StdTableau};
use crate::hsym::birank;
use crate::qscalar::{q_delta, RatFunc};

/// `Σ_{b,a} P_ba Y_ab`, the trace of `P·Y` without forming the product.
fn trace_of_product(p: &LMatrix, y: &LMatrix) -> NCPoly {
    let s = p.size();
    let mut acc = NCPoly::zero(p.dim());
    for b in 0..s {
        for a in 0..s {
            let (x, z) = (p.get(b, a), y.get(a, b));
            if !x.is_zero() && !z.is_zero() {
                acc.add_product(x, z);
            }
        }
    }
    acc
}

impl ReAlgebra {
    /// `R^{-1} = R - (q - q^{-1}) I`.
    pub(crate) fn r_inverse(&self) -> ScalarMatrix {
        let n = self.dim();
        (self.symmetry().r() - &ScalarMatrix::identity(n * n).scale(&q_delta())).with_shape(vec![n, n])
    }

    /// `L_{\bar 1}, .., L_{\bar n}` on `V^{⊗n}`.
    pub fn l_bar(&self, n: usize) -> Result<Vec<LMatrix>, RealgError> {
        let dim = self.dim();
        let mut out = vec![LMatrix::generating(dim).kron_identity(dim.pow(n as u32 - 1))];
        let rinv = self.r_inverse();
        for k in 1..n {
            let rk = self.symmetry().r_at(k, n)?;
            let rk_inv = rinv.embed_factor(k, n)?;
            let next = out[k - 1].left_scalar(&rk).right_scalar(&rk_inv);
            out.push(next);
        }
        Ok(out)
    }

    /// `L_{\bar 1}` .. `L_{\bar n}` and the product of all but the last.
    fn prefix(&self, n: usize) -> Result<Arc<(Vec<LMatrix>, LMatrix)>, RealgError> {
        if let Some(p) = self.prefixes.lock().expect("cache lock").get(&n) {
            return Ok(p.clone());
        }
        let bars = self.l_bar(n)?;
        let mut prod = LMatrix::identity(self.dim(), self.dim().pow(n as u32));
        for b in &bars[..n - 1] {
            prod = prod.matmul(b);
        }
        let entry = Arc::new((bars, prod));
        self.prefixes
            .lock()
            .expect("cache lock")
            .insert(n, entry.clone());
        Ok(entry)
    }

    /// `L_{\overline{1→n}} = L_{\bar 1} ⋯ L_{\bar n}`.
    pub fn l_product(&self, n: usize) -> Result<LMatrix, RealgError> {
        let pre = self.prefix(n)?;
        Ok(pre.1.matmul(&pre.0[n - 1]))
    }

    /// Characteristic map `ch_n(z) = Tr_{R(1..n)}(ρ_R(z) L_{\overline{1→n}})`.
    pub fn ch(&self, z: &HeckeElement) -> Result<NCPoly, RealgError> {
        let n = z.n();
        let w = self.c_power(n).matmul(&self.symmetry().rho(z)?);
        let pre = self.prefix(n)?;
        // Tr(W P L_n) = Tr(P (L_n W)).
        let y = pre.0[n - 1].right_scalar(&w);
        Ok(trace_of_product(&pre.1, &y))
    }

    /// `Tr_{R(1..n)}(L_{\overline{1→n}} ρ_R(z))`, computed from the full product.
    pub fn ch_right(&self, z: &HeckeElement) -> Result<NCPoly, RealgError> {
        let n = z.n();
        let w = self.symmetry().rho(z)?.matmul(&self.c_power(n));
        Ok(self.l_product(n)?.weighted_trace(&w))
    }

    /// `p_k = Tr_R(L^k)`; `p_0` is `Tr C`.
    pub fn power_sum(&self, k: usize) -> NCPoly {
        LMatrix::generating(self.dim())
            .pow(k)
            .weighted_trace(&self.skew_data().c)
    }

    /// `p_ν = p_{ν_1} ⋯ p_{ν_r}` in the order of the parts.
    pub fn power_sum_partition(&self, nu: &Partition) -> NCPoly {
        nu.parts()
            .iter()
            .fold(NCPoly::one(self.dim()), |acc, &k| &acc * &self.power_sum(k))
    }

    /// Quantum Schur polynomial from the idempotent of `tableau` (default:
    /// the row-reading tableau of `lambda`).
    pub fn schur(&self, lambda: &Partition, tableau: Option<&StdTableau>) -> Result<NCPoly, RealgError> {
        let t = match tableau {
            Some(t) if t.shape() != lambda => {
                return Err(RealgError::ShapeMismatch {
                    tableau: t.shape().to_string(),
                    partition: lambda.to_string(),
                })
            }
            Some(t) => t.clone(),
            None => standard_tableaux(lambda).into_iter().next().ok_or_else(|| {
                RealgError::ShapeMismatch {
                    tableau: "()".into(),
                    partition: lambda.to_string(),
                }
            })?,
        };
        self.ch(&primitive_idempotent(&t))
    }

    /// `e_k(L) = ch_k(a_k)`; `e_0 = 1`.
    pub fn elementary(&self, k: usize) -> Result<NCPoly, RealgError> {
        if k == 0 {
            return Ok(NCPoly::one(self.dim()));
        }
        self.ch(&antisymmetrizer(k))
    }

    /// Whether every generator commutes with `p` modulo the ideal.
    pub fn is_central(&self, p: &NCPoly) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let g = NCPoly::generator(n, i, j);
                self.is_zero_mod_ideal(&(&(&g * p) - &(p * &g)))
            })
        })
    }

    /// `Σ_{k=0}^{m} (-q)^k e_k(L) L^{m-k}` as a matrix of degree-`m` polynomials.
    pub fn cayley_hamilton_matrix(&self, m: usize) -> Result<LMatrix, RealgError> {
        let n = self.dim();
        let l = LMatrix::generating(n);
        let mut acc = LMatrix::zeros(n, n);
        for k in 0..=m {
            let coeff = (-RatFunc::q()).pow(k as i32).expect("nonzero base");
            let ek = self.elementary(k)?.scale(&coeff);
            acc = acc.add(&l.pow(m - k).left_poly(&ek));
        }
        Ok(acc)
    }

    /// The even Cayley-Hamilton identity, after confirming bi-rank `(m|0)`.
    pub fn cayley_hamilton_even(&self, m: usize) -> Result<bool, RealgError> {
        let b = birank(self.symmetry(), (m + 1).max(4))?;
        if b.r != m || b.s != 0 {
            return Err(RealgError::BiRankMismatch { m, r: b.r, s: b.s });
        }
        let ch = self.cayley_hamilton_matrix(m)?;
        Ok(ch.entries().iter().all(|p| self.is_zero_mod_ideal(p)))
    }
}
