use super::{HeckeSymmetry, HsymError, Projector};
use crate::exactla::ScalarMatrix;
use crate::hecke::HeckeElement;
use crate::qscalar::{q_int, RatFunc};

impl HeckeSymmetry {
    /// R-matrix representation `ρ_R(z)` on `V^{⊗n}`, `n = z.n()`.
    pub fn rho(&self, z: &HeckeElement) -> Result<ScalarMatrix, HsymError> {
        let n = z.n();
        let dim = self.dim().pow(n as u32);
        let gens: Vec<ScalarMatrix> = (1..n).map(|i| self.r_at(i, n)).collect::<Result<_, _>>()?;
        let mut acc = ScalarMatrix::zeros(dim, dim);
        for (w, c) in z.terms() {
            let word = w.reduced_word();
            // ρ(T_w) = R_{i1} R_{i2} ... R_{ik}, built right to left.
            let mut m = ScalarMatrix::identity(dim);
            for &i in word.iter().rev() {
                m = gens[i - 1].matmul(&m);
            }
            acc = &acc + &m.scale(c);
        }
        Ok(acc.with_shape(vec![self.dim(); n.max(1)]))
    }

    /// `ρ_R(a_k)` via the matrix form of the projector recursion.
    pub fn rho_antisymmetrizer(&self, k: usize) -> Result<ScalarMatrix, HsymError> {
        self.rho_projector(Projector::Anti, k)
    }

    /// `ρ_R(h_k)`.
    pub fn rho_symmetrizer(&self, k: usize) -> Result<ScalarMatrix, HsymError> {
        self.rho_projector(Projector::Sym, k)
    }

    pub(crate) fn rho_projector(&self, kind: Projector, k: usize) -> Result<ScalarMatrix, HsymError> {
        let n = self.dim();
        if k <= 1 {
            return Ok(ScalarMatrix::tensor_identity(n, k));
        }
        if let Some(m) = self.projectors.lock().expect("cache lock").get(&(kind, k)) {
            return Ok(m.clone());
        }
        let prev = self.rho_projector(kind, k - 1)?;
        let prev = prev.kron(&ScalarMatrix::identity(n)).with_shape(vec![n; k]);
        let (e_coeff, t_coeff) = match kind {
            Projector::Anti => (RatFunc::q_pow(k as i32 - 1), -q_int(k as i32 - 1)),
            Projector::Sym => (RatFunc::q_pow(1 - k as i32), q_int(k as i32 - 1)),
        };
        let middle = &ScalarMatrix::identity(n.pow(k as u32)).scale(&e_coeff)
            + &self.r_at(k - 1, k)?.scale(&t_coeff);
        let norm = q_int(k as i32).inv().expect("nonzero q-integer");
        let m = prev.matmul(&middle).matmul(&prev).scale(&norm).with_shape(vec![n; k]);
        self.projectors
            .lock()
            .expect("cache lock")
            .insert((kind, k), m.clone());
        Ok(m)
    }
}
