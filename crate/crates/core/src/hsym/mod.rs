//! Skew-invertible Hecke symmetries `R: V⊗V → V⊗V` and their invariants.

mod birank;
mod builtin;
mod rep;
mod skew;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::exactla::{LinAlgError, ScalarMatrix};
use crate::hecke::HeckeError;
use crate::qscalar::{q_delta, RatFunc};

pub use birank::{birank, birank_with, check_identities, fit_series, BiRank, RankMode, SeriesFit};
pub use builtin::builtin;
pub use skew::{r_trace, skew_inverse, SkewInverseData};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HsymError {
    #[error("braid relation fails at entry ({row}, {col})")]
    BraidViolation { row: usize, col: usize },
    #[error("Hecke condition fails at entry ({row}, {col})")]
    HeckeViolation { row: usize, col: usize },
    #[error("R is not skew-invertible")]
    NotSkewInvertible,
    #[error("no rational series fits d_0..d_{kmax} = {coefficients:?}; raise kmax")]
    Inconclusive { kmax: usize, coefficients: Vec<u64> },
    #[error("bi-rank ({r}|{s}) contradicts the B/C identities: {detail}")]
    IdentityMismatch { r: usize, s: usize, detail: String },
    #[error("unknown built-in symmetry '{0}'")]
    UnknownBuiltin(String),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
}

/// Which q-projector a cached ρ image belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Projector {
    Anti,
    Sym,
}

/// A certified Hecke symmetry on `V` with `dim V = N`.
///
/// Derived data (skew-inverse, ρ images of the q-projectors) is computed on
/// first use and shared between clones.
#[derive(Clone, Debug)]
pub struct HeckeSymmetry {
    dim: usize,
    r: ScalarMatrix,
    name: Option<String>,
    skew: Arc<OnceLock<Result<SkewInverseData, HsymError>>>,
    projectors: Arc<Mutex<HashMap<(Projector, usize), ScalarMatrix>>>,
}

impl HeckeSymmetry {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn r(&self) -> &ScalarMatrix {
        &self.r
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// `R_i` acting on `V^{⊗m}`.
    pub fn r_at(&self, i: usize, m: usize) -> Result<ScalarMatrix, HsymError> {
        Ok(self.r.embed_factor(i, m)?)
    }

    /// Skew-inverse data, computed once.
    pub fn skew(&self) -> Result<&SkewInverseData, HsymError> {
        self.skew
            .get_or_init(|| skew_inverse(self))
            .as_ref()
            .map_err(Clone::clone)
    }
}

/// Checks the braid relation and the Hecke condition exactly.
pub fn validate(r: ScalarMatrix, n: usize) -> Result<HeckeSymmetry, HsymError> {
    if r.rows() != n * n || r.cols() != n * n {
        return Err(HsymError::ShapeMismatch(format!(
            "expected {}x{}, got {}x{}",
            n * n,
            n * n,
            r.rows(),
            r.cols()
        )));
    }
    let r = r.with_shape(vec![n, n]);
    let r12 = r.embed_factor(1, 3)?;
    let r23 = r.embed_factor(2, 3)?;
    let lhs = r12.matmul(&r23).matmul(&r12);
    let rhs = r23.matmul(&r12).matmul(&r23);
    if let Some((row, col)) = lhs.first_difference(&rhs) {
        return Err(HsymError::BraidViolation { row, col });
    }
    let sq = r.matmul(&r);
    let expect = &ScalarMatrix::identity(n * n) + &r.scale(&q_delta());
    if let Some((row, col)) = sq.first_difference(&expect) {
        return Err(HsymError::HeckeViolation { row, col });
    }
    Ok(HeckeSymmetry {
        dim: n,
        r,
        name: None,
        skew: Arc::new(OnceLock::new()),
        projectors: Arc::new(Mutex::new(HashMap::new())),
    })
}

/// `q^{s-r} (r-s)_q`, the expected value of `Tr C`.
pub fn expected_trace(r: usize, s: usize) -> RatFunc {
    let d = r as i32 - s as i32;
    &RatFunc::q_pow(-d) * &crate::qscalar::q_int(d)
}
