//! The Reflection Equation algebra `L(R)`: graded normal forms modulo the
//! RE ideal, quantum symmetric polynomials and representations on `V^{⊗k}`.

mod ideal;
mod lmatrix;
mod ncpoly;
mod rep;
mod symfun;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::exactla::{LinAlgError, ScalarMatrix, SparseEchelon};
use crate::hecke::HeckeError;
use crate::hsym::{HeckeSymmetry, HsymError, SkewInverseData};

pub use ideal::{re_relations, IdealBasis};
pub use lmatrix::LMatrix;
pub use ncpoly::{NCPoly, Word};
pub use rep::{apply_rep, RepConvention, RepGenerators};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealgError {
    #[error("expected a homogeneous polynomial of degree {expected}, got degree {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("tableau of shape {tableau} does not match partition {partition}")]
    ShapeMismatch { tableau: String, partition: String },
    #[error("bi-rank is ({r}|{s}), expected ({m}|0)")]
    BiRankMismatch { m: usize, r: usize, s: usize },
    #[error("neither slot convention reproduces the action on V")]
    ConventionUnresolved,
    #[error(transparent)]
    Hsym(#[from] HsymError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

/// The RE algebra of a fixed symmetry, with caches for ideal components and
/// the L-embeddings.
/// The factors `L̄_1..L̄_n` with their product.
type PrefixProducts = (Vec<LMatrix>, LMatrix);

pub struct ReAlgebra {
    sym: HeckeSymmetry,
    data: SkewInverseData,
    relations: Vec<NCPoly>,
    relation_basis: SparseEchelon,
    ideals: Mutex<HashMap<usize, Arc<IdealBasis>>>,
    prefixes: Mutex<HashMap<usize, Arc<PrefixProducts>>>,
    c_powers: Mutex<HashMap<usize, Arc<ScalarMatrix>>>,
    convention: OnceLock<Result<RepConvention, RealgError>>,
}

impl ReAlgebra {
    pub fn new(sym: HeckeSymmetry) -> Result<Self, RealgError> {
        let data = sym.skew()?.clone();
        let relations = re_relations(&sym);
        debug_assert!(relations.iter().all(|r| r.is_homogeneous() && r.degree() == Some(2)));
        let relation_basis = ideal::relation_echelon(&relations);
        Ok(ReAlgebra {
            sym,
            data,
            relations,
            relation_basis,
            ideals: Mutex::new(HashMap::new()),
            prefixes: Mutex::new(HashMap::new()),
            c_powers: Mutex::new(HashMap::new()),
            convention: OnceLock::new(),
        })
    }

    pub fn symmetry(&self) -> &HeckeSymmetry {
        &self.sym
    }

    pub fn skew_data(&self) -> &SkewInverseData {
        &self.data
    }

    /// Dimension `N` of `V`.
    pub fn dim(&self) -> usize {
        self.sym.dim()
    }

    pub fn relations(&self) -> &[NCPoly] {
        &self.relations
    }

    /// Rank of the quadratic relations in the degree-2 word space.
    pub fn relation_rank(&self) -> usize {
        self.relation_basis.rank()
    }

    /// Degree-`d` component of the RE ideal, built once per degree.
    pub fn ideal_component(&self, d: usize) -> Arc<IdealBasis> {
        let mut cache = self.ideals.lock().expect("ideal cache lock");
        cache
            .entry(d)
            .or_insert_with(|| Arc::new(IdealBasis::build(self.dim(), &self.relation_basis, d)))
            .clone()
    }

    /// Normal form of each homogeneous component.
    pub fn normal_form(&self, p: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero(self.dim());
        for (d, comp) in p.components() {
            let nf = if d < 2 {
                comp
            } else {
                self.ideal_component(d)
                    .normal_form(&comp)
                    .expect("component is homogeneous of degree d")
            };
            out = &out + &nf;
        }
        out
    }

    /// Whether `p` vanishes in `L(R)`.
    pub fn is_zero_mod_ideal(&self, p: &NCPoly) -> bool {
        self.normal_form(p).is_zero()
    }

    /// `C^{⊗n}`.
    pub(crate) fn c_power(&self, n: usize) -> Arc<ScalarMatrix> {
        let mut cache = self.c_powers.lock().expect("cache lock");
        cache
            .entry(n)
            .or_insert_with(|| {
                let c = &self.data.c;
                let mut acc = ScalarMatrix::identity(1);
                for _ in 0..n {
                    acc = acc.kron(c);
                }
                Arc::new(acc.with_shape(vec![self.dim(); n]))
            })
            .clone()
    }
}
