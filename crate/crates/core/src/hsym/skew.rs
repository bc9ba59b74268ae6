use super::{HeckeSymmetry, HsymError};
use crate::exactla::{inverse, ScalarMatrix};

/// Skew-inverse `Ψ` of `R` with its partial traces `B` and `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewInverseData {
    pub psi: ScalarMatrix,
    pub b: ScalarMatrix,
    pub c: ScalarMatrix,
}

/// Solves `Σ_{r,j} R_{ij}^{kr} Ψ_{rm}^{jn} = δ_m^k δ_i^n`.
///
/// For each fixed `(m, n)` this is a linear system in the `N²` unknowns
/// `Ψ_{rm}^{jn}` whose matrix `M_{(i,k),(r,j)} = R_{ij}^{kr}` does not depend
/// on `(m, n)`, so one inversion solves all of them.
pub fn skew_inverse(s: &HeckeSymmetry) -> Result<SkewInverseData, HsymError> {
    let n = s.dim();
    let r = s.r();
    let idx = |a: usize, b: usize| a * n + b;
    let m = ScalarMatrix::from_fn(n * n, n * n, |ik, rj| {
        let (i, k) = (ik / n, ik % n);
        let (rr, j) = (rj / n, rj % n);
        r[(idx(i, j), idx(k, rr))].clone()
    });
    let minv = inverse(&m).map_err(|_| HsymError::NotSkewInvertible)?;
    // Column (m, n) of the right-hand side is the unit vector at (i, k) = (n, m),
    // so the solution is column (n, m) of M^{-1}.
    let mut psi = ScalarMatrix::zeros(n * n, n * n);
    for rr in 0..n {
        for mm in 0..n {
            for j in 0..n {
                for nn in 0..n {
                    psi[(idx(rr, mm), idx(j, nn))] = minv[(idx(rr, j), idx(nn, mm))].clone();
                }
            }
        }
    }
    let psi = psi.with_shape(vec![n, n]);
    let b = ScalarMatrix::from_fn(n, n, |i, j| (0..n).map(|a| &psi[(idx(a, i), idx(a, j))]).sum());
    let c = ScalarMatrix::from_fn(n, n, |i, j| (0..n).map(|a| &psi[(idx(i, a), idx(j, a))]).sum());
    Ok(SkewInverseData { psi, b, c })
}

/// Multiple R-trace: multiply by `C` on each factor in `factors` (1-based),
/// then trace those factors out.
pub fn r_trace(
    data: &SkewInverseData,
    m: &ScalarMatrix,
    factors: &[usize],
) -> Result<ScalarMatrix, HsymError> {
    let n = data.c.rows();
    let shape = m
        .shape()
        .ok_or_else(|| HsymError::ShapeMismatch("matrix has no tensor shape".into()))?
        .to_vec();
    if shape.iter().any(|&d| d != n) {
        return Err(HsymError::ShapeMismatch(format!(
            "factors {shape:?} are not all of dimension {n}"
        )));
    }
    let k = shape.len();
    let mut twisted = m.clone();
    for &f in factors {
        if f == 0 || f > k {
            return Err(crate::exactla::LinAlgError::IndexOutOfRange { index: f, bound: k }.into());
        }
        twisted = apply_on_factor(&data.c, f, k).matmul(&twisted);
    }
    Ok(twisted.partial_trace(factors)?)
}

/// `I^{⊗(f-1)} ⊗ A ⊗ I^{⊗(k-f)}`.
pub(crate) fn apply_on_factor(a: &ScalarMatrix, f: usize, k: usize) -> ScalarMatrix {
    let n = a.rows();
    let mut out = if f > 1 {
        ScalarMatrix::tensor_identity(n, f - 1).kron(a)
    } else {
        a.clone().with_shape(vec![n])
    };
    if k > f {
        out = out.kron(&ScalarMatrix::tensor_identity(n, k - f));
    }
    out.with_shape(vec![n; k])
}
