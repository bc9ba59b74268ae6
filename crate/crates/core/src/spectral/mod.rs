//! Eigenvalue-side formulas: quantum symmetric functions expressed through
//! formal commuting eigenvalues `μ_1..μ_m` (even) and `ν_1..ν_n` (odd).

mod functions;
mod poly;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::qscalar::ScalarError;

pub use functions::{
    classical_limit, eigen_relations, hall_littlewood_row, hl_compare, newton_check, power_sum_spectral,
    schur_spectral, supersymmetry_check, sym_poly, SymKind,
};
pub use poly::{Exponents, MultiPoly, RatExpr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error("invalid spectral family: {0}")]
    InvalidFamily(String),
    #[error("operation needs an even family, got {n} odd eigenvalues")]
    OddPartPresent { n: usize },
    #[error("operation needs both even and odd eigenvalues")]
    NotSuper,
    #[error("weighted sum did not simplify to a polynomial")]
    NonPolynomialResult,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Numbers of even and odd eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpectralFamily {
    m: usize,
    n: usize,
}

impl SpectralFamily {
    pub fn new(m: usize, n: usize) -> Result<Self, SpectralError> {
        if m + n == 0 {
            return Err(SpectralError::InvalidFamily("no eigenvalues".into()));
        }
        Ok(SpectralFamily { m, n })
    }

    /// Even part size.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Odd part size.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.m + self.n
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly::zero(self.m, self.n)
    }

    pub fn one(&self) -> MultiPoly {
        MultiPoly::one(self.m, self.n)
    }

    pub fn mu(&self, i: usize) -> MultiPoly {
        MultiPoly::mu(self.m, self.n, i)
    }

    pub fn nu(&self, j: usize) -> MultiPoly {
        MultiPoly::nu(self.m, self.n, j)
    }

    pub(crate) fn even_vars(&self) -> Vec<usize> {
        (0..self.m).collect()
    }

    pub(crate) fn odd_vars(&self) -> Vec<usize> {
        (self.m..self.m + self.n).collect()
    }
}

impl std::fmt::Display for SpectralFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}|{})", self.m, self.n)
    }
}

#[cfg(test)]
mod tests;
