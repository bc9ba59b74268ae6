use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exactla::SparseVec;
use crate::qscalar::RatFunc;

/// A word in the generators `l_i^j`, packed as base-`N²` digits with the
/// leftmost letter most significant. Ordering is degree-lexicographic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    len: u8,
    code: u64,
}

impl Word {
    pub const EMPTY: Word = Word { len: 0, code: 0 };

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn code(&self) -> u64 {
        self.code
    }

    pub fn from_code(len: usize, code: u64) -> Word {
        Word {
            len: len as u8,
            code,
        }
    }

    pub fn letter(g: usize) -> Word {
        Word {
            len: 1,
            code: g as u64,
        }
    }

    pub fn concat(&self, other: &Word, base: u64) -> Word {
        Word {
            len: self.len + other.len,
            code: self.code * base.pow(other.len as u32) + other.code,
        }
    }

    /// Generator labels, leftmost first.
    pub fn letters(&self, base: u64) -> Vec<usize> {
        let mut out = vec![0; self.len()];
        let mut c = self.code;
        for slot in out.iter_mut().rev() {
            *slot = (c % base) as usize;
            c /= base;
        }
        out
    }
}

/// Noncommutative polynomial in the `N²` generators `l_i^j`, generator
/// label `g = i·N + j` (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCPoly {
    n: usize,
    terms: BTreeMap<Word, RatFunc>,
}

impl NCPoly {
    pub fn zero(n: usize) -> Self {
        NCPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: RatFunc) -> Self {
        let mut p = Self::zero(n);
        p.add_term(Word::EMPTY, c);
        p
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, RatFunc::one())
    }

    /// The generator `l_i^j` (0-based indices).
    pub fn generator(n: usize, i: usize, j: usize) -> Self {
        assert!(i < n && j < n, "generator index out of range");
        let mut p = Self::zero(n);
        p.add_term(Word::letter(i * n + j), RatFunc::one());
        p
    }

    pub fn monomial(n: usize, w: Word, c: RatFunc) -> Self {
        let mut p = Self::zero(n);
        p.add_term(w, c);
        p
    }

    /// Matrix size `N` of the generating matrix.
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> u64 {
        (self.n * self.n) as u64
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatFunc)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> RatFunc {
        self.terms.get(w).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub(crate) fn add_term(&mut self, w: Word, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    /// Adds `c · other` in place.
    pub fn add_scaled(&mut self, other: &NCPoly, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.terms {
            self.add_term(*w, if c.is_one() { x.clone() } else { x * c });
        }
    }

    /// Adds `a · b` in place.
    pub fn add_product(&mut self, a: &NCPoly, b: &NCPoly) {
        let base = self.base();
        for (u, x) in &a.terms {
            for (v, y) in &b.terms {
                self.add_term(u.concat(v, base), x * y);
            }
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut p = Self::zero(self.n);
        p.add_scaled(self, c);
        p
    }

    /// Largest word length, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut lens = self.terms.keys().map(|w| w.len());
        match lens.next() {
            None => true,
            Some(d) => lens.all(|l| l == d),
        }
    }

    /// Homogeneous components keyed by degree.
    pub fn components(&self) -> BTreeMap<usize, NCPoly> {
        let mut out: BTreeMap<usize, NCPoly> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.len())
                .or_insert_with(|| NCPoly::zero(self.n))
                .terms
                .insert(*w, c.clone());
        }
        out
    }

    /// Coefficient vector of a homogeneous polynomial, indexed by word code.
    pub fn to_sparse(&self) -> SparseVec {
        self.terms.iter().map(|(w, c)| (w.code as usize, c.clone())).collect()
    }

    pub fn from_sparse(n: usize, degree: usize, v: &SparseVec) -> Self {
        let mut p = Self::zero(n);
        for (&k, c) in v {
            p.add_term(Word::from_code(degree, k as u64), c.clone());
        }
        p
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut p = self.clone();
        p.add_scaled(rhs, &RatFunc::one());
        p
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut p = self.clone();
        p.add_scaled(rhs, &-RatFunc::one());
        p
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&-RatFunc::one())
    }
}

impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        assert_eq!(self.n, rhs.n, "polynomials over different generator sets");
        let mut p = NCPoly::zero(self.n);
        p.add_product(self, rhs);
        p
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let base = self.base();
        let mut first = true;
        for (w, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let word: Vec<String> = w
                .letters(base)
                .iter()
                .map(|&g| format!("l({},{})", g / self.n + 1, g % self.n + 1))
                .collect();
            match (word.is_empty(), c.is_one()) {
                (true, _) => write!(f, "({c})")?,
                (false, true) => write!(f, "{}", word.join("*"))?,
                (false, false) => write!(f, "({c})*{}", word.join("*"))?,
            }
        }
        Ok(())
    }
}
