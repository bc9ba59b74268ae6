use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::element::{all_perms, Perm};
use super::special::{coxeter_with_gaps, primitive_idempotent};
use super::{partitions, standard_tableaux, HeckeElement, HeckeError, Partition, StdTableau};
use crate::exactla::{ScalarMatrix, SparseEchelon, SparseVec};
use crate::qscalar::{q_delta, RatFunc};

/// Largest `n` handled by default in [`character_table`].
pub const DEFAULT_CHARACTER_BOUND: usize = 5;

/// The left ideal `H_n(q) e^λ` with an echelon basis, used to trace left
/// multiplication.
pub struct LeftIdeal {
    shape: Partition,
    index: HashMap<Perm, usize>,
    perms: Vec<Perm>,
    echelon: SparseEchelon,
    basis: Vec<(usize, HeckeElement)>,
}

impl LeftIdeal {
    pub fn new(shape: &Partition) -> Result<Self, HeckeError> {
        let n = shape.n();
        let tableau = standard_tableaux(shape)
            .into_iter()
            .next()
            .ok_or_else(|| HeckeError::InvalidPartition("empty partition".into()))?;
        Self::from_tableau(&tableau, n)
    }

    fn from_tableau(t: &StdTableau, n: usize) -> Result<Self, HeckeError> {
        let perms = all_perms(n);
        let index: HashMap<Perm, usize> = perms.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut ideal = LeftIdeal {
            shape: t.shape().clone(),
            index,
            perms,
            echelon: SparseEchelon::new(),
            basis: Vec::new(),
        };
        // Closure of the idempotent under left multiplication by generators.
        let mut queue = vec![primitive_idempotent(t)];
        while let Some(x) = queue.pop() {
            if ideal.echelon.insert(ideal.to_sparse(&x)) {
                for i in 1..n {
                    queue.push(x.left_mul_generator(i)?);
                }
            }
        }
        let expected = t.shape().dimension() as usize;
        if ideal.echelon.rank() != expected {
            return Err(HeckeError::DimensionSanity {
                expected,
                found: ideal.echelon.rank(),
            });
        }
        ideal.basis = ideal
            .echelon
            .basis()
            .zip(ideal.echelon.pivots().collect::<Vec<_>>())
            .map(|(v, p)| (p, ideal.element_of(&v, n)))
            .collect();
        Ok(ideal)
    }

    fn to_sparse(&self, x: &HeckeElement) -> SparseVec {
        x.terms().map(|(w, c)| (self.index[w], c.clone())).collect()
    }

    fn element_of(&self, v: &SparseVec, n: usize) -> HeckeElement {
        let mut x = HeckeElement::zero(n);
        for (&k, c) in v {
            x = &x + &HeckeElement::monomial(self.perms[k].clone(), c.clone());
        }
        x
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Trace of `x ↦ z·x` on the ideal.
    pub fn trace(&self, z: &HeckeElement) -> Result<RatFunc, HeckeError> {
        if z.n() != self.shape.n() {
            return Err(HeckeError::MismatchedN {
                left: z.n(),
                right: self.shape.n(),
            });
        }
        let mut acc = RatFunc::zero();
        for (pivot, b) in &self.basis {
            let zb = z.multiply(b)?;
            let (coords, rest) = self.echelon.decompose(self.to_sparse(&zb));
            debug_assert!(rest.is_empty(), "ideal is closed under left multiplication");
            if let Some(c) = coords.get(pivot) {
                acc += c;
            }
        }
        Ok(acc)
    }
}

/// Irreducible character `χ^λ(z)` as the trace of left multiplication on `H_n(q) e^λ`.
pub fn character(shape: &Partition, z: &HeckeElement) -> Result<RatFunc, HeckeError> {
    LeftIdeal::new(shape)?.trace(z)
}

/// Irreducible representation of `H_n(q)` in Young's seminormal basis.
///
/// The basis is indexed by standard tableaux; `j_k` acts diagonally by
/// `q^{2c(k)}`.
pub struct SeminormalRep {
    shape: Partition,
    generators: Vec<ScalarMatrix>,
}

impl SeminormalRep {
    pub fn new(shape: &Partition) -> Self {
        let tabs = standard_tableaux(shape);
        let pos: HashMap<&StdTableau, usize> = tabs.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let d = tabs.len();
        let n = shape.n();
        let delta = q_delta();
        let alpha = |t: &StdTableau, i: usize| {
            // (q - q^-1) / (1 - q^{2c(i)} / q^{2c(i+1)})
            let ratio = RatFunc::q_pow(2 * (t.content(i) - t.content(i + 1)));
            &delta * &(&RatFunc::one() - &ratio).inv().expect("contents differ")
        };
        let generators = (1..n)
            .map(|i| {
                let mut m = ScalarMatrix::zeros(d, d);
                for (a, t) in tabs.iter().enumerate() {
                    let (ri, ri1) = (t.row_of(i), t.row_of(i + 1));
                    if ri == ri1 {
                        m[(a, a)] = RatFunc::q();
                        continue;
                    }
                    let Some(s) = t.swap(i) else {
                        // i and i+1 in the same column
                        m[(a, a)] = -RatFunc::q_pow(-1);
                        continue;
                    };
                    let b = pos[&s];
                    let (at, as_) = (alpha(t, i), alpha(&s, i));
                    m[(a, a)] = at.clone();
                    // Column `a` holds the image of v_T.
                    m[(b, a)] = if ri < ri1 {
                        RatFunc::one()
                    } else {
                        &RatFunc::one() + &(&at * &as_)
                    };
                }
                m
            })
            .collect();
        SeminormalRep {
            shape: shape.clone(),
            generators,
        }
    }

    pub fn dimension(&self) -> usize {
        self.shape.dimension() as usize
    }

    /// Matrix of `τ_i` (1-based).
    pub fn generator(&self, i: usize) -> &ScalarMatrix {
        &self.generators[i - 1]
    }

    pub fn image(&self, z: &HeckeElement) -> ScalarMatrix {
        let d = self.dimension();
        let mut acc = ScalarMatrix::zeros(d, d);
        let mut cache: BTreeMap<Perm, ScalarMatrix> = BTreeMap::new();
        for (w, c) in z.terms() {
            let m = cache.entry(w.clone()).or_insert_with(|| {
                w.reduced_word()
                    .iter()
                    .fold(ScalarMatrix::identity(d), |acc, &i| acc.matmul(&self.generators[i - 1]))
            });
            acc = &acc + &m.scale(c);
        }
        acc
    }

    pub fn character(&self, z: &HeckeElement) -> Result<RatFunc, HeckeError> {
        if z.n() != self.shape.n() {
            return Err(HeckeError::MismatchedN {
                left: z.n(),
                right: self.shape.n(),
            });
        }
        Ok(self.image(z).trace())
    }
}

/// `χ^λ(z)` computed in the seminormal representation.
pub fn character_seminormal(shape: &Partition, z: &HeckeElement) -> Result<RatFunc, HeckeError> {
    SeminormalRep::new(shape).character(z)
}

/// Values `χ^λ(z_ν)`; rows `ν` and columns `λ` both in reverse
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub values: Vec<Vec<RatFunc>>,
}

impl CharacterTable {
    pub fn value(&self, nu: &Partition, lambda: &Partition) -> Option<&RatFunc> {
        let r = self.partitions.iter().position(|p| p == nu)?;
        let c = self.partitions.iter().position(|p| p == lambda)?;
        Some(&self.values[r][c])
    }
}

pub fn character_table(n: usize) -> Result<CharacterTable, HeckeError> {
    character_table_with_bound(n, DEFAULT_CHARACTER_BOUND)
}

/// Character table for `n ≤ bound`. Ranks up to the default bound use the
/// left-ideal trace; larger ranks use the seminormal representation.
pub fn character_table_with_bound(n: usize, bound: usize) -> Result<CharacterTable, HeckeError> {
    if n == 0 || n > bound {
        return Err(HeckeError::BoundExceeded { n, bound });
    }
    let parts = partitions(n);
    let zs: Vec<HeckeElement> = parts
        .iter()
        .map(coxeter_with_gaps)
        .collect::<Result<_, _>>()?;
    let columns: Vec<Vec<RatFunc>> = parts
        .par_iter()
        .map(|lambda| -> Result<Vec<RatFunc>, HeckeError> {
            if n <= DEFAULT_CHARACTER_BOUND {
                let ideal = LeftIdeal::new(lambda)?;
                zs.iter().map(|z| ideal.trace(z)).collect()
            } else {
                let rep = SeminormalRep::new(lambda);
                zs.iter().map(|z| rep.character(z)).collect()
            }
        })
        .collect::<Result<_, _>>()?;
    let values = (0..parts.len())
        .map(|r| columns.iter().map(|col| col[r].clone()).collect())
        .collect();
    Ok(CharacterTable {
        n,
        partitions: parts,
        values,
    })
}
