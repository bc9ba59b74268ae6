use std::collections::BTreeMap;

use crate::qscalar::RatFunc;

/// Sparse vector over Q(q), keyed by column.
pub type SparseVec = BTreeMap<usize, RatFunc>;

/// Incrementally built echelon basis of a subspace of Q(q)^n.
///
/// Every stored row has a distinct leading (largest) column, holding
/// coefficient 1. Reducing a vector eliminates pivot columns from the top
/// down, which yields the unique representative of its class modulo the
/// span that is supported on non-pivot columns.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    rows: BTreeMap<usize, Vec<(usize, RatFunc)>>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    /// Basis rows, each as a sparse vector.
    pub fn basis(&self) -> impl Iterator<Item = SparseVec> + '_ {
        self.rows.iter().map(|(&p, tail)| {
            let mut v: SparseVec = tail.iter().cloned().collect();
            v.insert(p, RatFunc::one());
            v
        })
    }

    /// Canonical representative of `v` modulo the span.
    pub fn reduce(&self, v: SparseVec) -> SparseVec {
        self.decompose(v).1
    }

    /// Splits `v` as `Σ c_p b_p + rest`, where `b_p` is the basis row with
    /// pivot `p` and `rest` is the canonical representative. Returns the
    /// coefficients `c_p` and `rest`.
    pub fn decompose(&self, mut v: SparseVec) -> (BTreeMap<usize, RatFunc>, SparseVec) {
        let mut coords = BTreeMap::new();
        let mut rest = SparseVec::new();
        while let Some((c, val)) = v.pop_last() {
            if val.is_zero() {
                continue;
            }
            match self.rows.get(&c) {
                Some(tail) => {
                    for (k, x) in tail {
                        let delta = &val * x;
                        match v.get_mut(k) {
                            Some(entry) => *entry -= &delta,
                            None => {
                                v.insert(*k, -delta);
                            }
                        }
                    }
                    coords.insert(c, val);
                }
                None => {
                    rest.insert(c, val);
                }
            }
        }
        (coords, rest)
    }

    /// Adds `v` to the span. Returns false if it was already contained.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut r = self.reduce(v);
        let Some((lead, lc)) = r.pop_last() else {
            return false;
        };
        let inv = lc.inv().expect("nonzero leading coefficient");
        let tail: Vec<(usize, RatFunc)> = r
            .into_iter()
            .rev()
            .map(|(k, x)| (k, &x * &inv))
            .collect();
        self.rows.insert(lead, tail);
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }
}
