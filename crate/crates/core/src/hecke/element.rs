use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rayon::prelude::*;

use super::HeckeError;
use crate::qscalar::{q_delta, RatFunc};

/// Permutation of `{0, .., n-1}` in one-line notation: `w[i] = w(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    /// From 1-based one-line images, e.g. `[2, 1, 3]`.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return None;
            }
            seen[x - 1] = true;
        }
        Some(Perm(images.iter().map(|&x| (x - 1) as u8).collect()))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// 1-based one-line images.
    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
            .sum()
    }

    fn position(&self, value: u8) -> usize {
        self.0.iter().position(|&x| x == value).expect("value present")
    }

    /// Whether `s_i w` is shorter than `w` (0-based generator `i`).
    fn has_left_descent(&self, i: usize) -> bool {
        self.position(i as u8) > self.position(i as u8 + 1)
    }

    /// `s_i w`: exchange the values `i` and `i+1`.
    fn left_mul_simple(&self, i: usize) -> Perm {
        let mut w = self.0.clone();
        for x in w.iter_mut() {
            if *x == i as u8 {
                *x = i as u8 + 1;
            } else if *x == i as u8 + 1 {
                *x = i as u8;
            }
        }
        Perm(w)
    }

    /// `w s_i`: exchange the positions `i` and `i+1`.
    fn right_mul_simple(&self, i: usize) -> Perm {
        let mut w = self.0.clone();
        w.swap(i, i + 1);
        Perm(w)
    }

    /// A reduced word `[i1, .., ik]` (1-based generators) with `w = s_i1 ... s_ik`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (0..w.n().saturating_sub(1)).find(|&i| w.has_left_descent(i)) {
            word.push(i + 1);
            w = w.left_mul_simple(i);
        }
        word
    }

    /// The same permutation acting on `{0, .., m-1}`, fixing the new points.
    pub fn extend(&self, m: usize) -> Perm {
        let mut w = self.0.clone();
        w.extend(self.n() as u8..m as u8);
        Perm(w)
    }

    /// Lengths of the cycles, sorted decreasingly.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            if len > 0 {
                out.push(len);
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

/// All permutations of `{0, .., n-1}` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    fn rec(n: usize, cur: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if cur.len() == n {
            out.push(Perm(cur.clone()));
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x as u8);
                rec(n, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Element of `H_n(q)` in the basis `T_w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    n: usize,
    terms: BTreeMap<Perm, RatFunc>,
}

impl HeckeElement {
    pub fn zero(n: usize) -> Self {
        HeckeElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The unit `e = T_id`.
    pub fn identity(n: usize) -> Self {
        Self::basis(Perm::identity(n))
    }

    pub fn basis(w: Perm) -> Self {
        Self::monomial(w, RatFunc::one())
    }

    pub fn monomial(w: Perm, c: RatFunc) -> Self {
        let mut x = Self::zero(w.n());
        x.add_term(w, c);
        x
    }

    pub fn scalar(n: usize, c: RatFunc) -> Self {
        Self::monomial(Perm::identity(n), c)
    }

    /// Artin generator `τ_i`, `1 ≤ i ≤ n-1`.
    pub fn generator(n: usize, i: usize) -> Result<Self, HeckeError> {
        if i == 0 || i >= n {
            return Err(HeckeError::IndexOutOfRange {
                index: i,
                bound: n.saturating_sub(1),
            });
        }
        Ok(Self::basis(Perm::identity(n).left_mul_simple(i - 1)))
    }

    /// Product `τ_{i1} τ_{i2} ... τ_{ik}` of Artin generators.
    pub fn word(n: usize, word: &[usize]) -> Result<Self, HeckeError> {
        let mut x = Self::identity(n);
        for &i in word.iter().rev() {
            x = x.left_mul_generator(i)?;
        }
        Ok(x)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &RatFunc)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Perm) -> RatFunc {
        self.terms.get(w).cloned().unwrap_or_else(RatFunc::zero)
    }

    fn add_term(&mut self, w: Perm, c: RatFunc) {
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

    fn check_n(&self, other: &HeckeElement) -> Result<(), HeckeError> {
        if self.n != other.n {
            return Err(HeckeError::MismatchedN {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        HeckeElement {
            n: self.n,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    pub fn checked_add(&self, other: &HeckeElement) -> Result<Self, HeckeError> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    /// `τ_i · self` (1-based `i`).
    pub fn left_mul_generator(&self, i: usize) -> Result<Self, HeckeError> {
        if i == 0 || i >= self.n {
            return Err(HeckeError::IndexOutOfRange {
                index: i,
                bound: self.n.saturating_sub(1),
            });
        }
        let g = i - 1;
        let delta = q_delta();
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(w.left_mul_simple(g), c.clone());
            if w.has_left_descent(g) {
                out.add_term(w.clone(), c * &delta);
            }
        }
        Ok(out)
    }

    /// `self · τ_i` (1-based `i`).
    pub fn right_mul_generator(&self, i: usize) -> Result<Self, HeckeError> {
        if i == 0 || i >= self.n {
            return Err(HeckeError::IndexOutOfRange {
                index: i,
                bound: self.n.saturating_sub(1),
            });
        }
        let g = i - 1;
        let delta = q_delta();
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(w.right_mul_simple(g), c.clone());
            if w.0[g] > w.0[g + 1] {
                out.add_term(w.clone(), c * &delta);
            }
        }
        Ok(out)
    }

    /// `T_w · self`.
    fn left_mul_basis(&self, w: &Perm) -> Self {
        let mut x = self.clone();
        for &i in w.reduced_word().iter().rev() {
            x = x.left_mul_generator(i).expect("generator in range");
        }
        x
    }

    pub fn multiply(&self, other: &HeckeElement) -> Result<Self, HeckeError> {
        self.check_n(other)?;
        let n = self.n;
        let parts: Vec<HeckeElement> = self
            .terms
            .par_iter()
            .map(|(w, c)| other.left_mul_basis(w).scale(c))
            .collect();
        let mut out = Self::zero(n);
        for p in parts {
            for (w, c) in p.terms {
                out.add_term(w, c);
            }
        }
        Ok(out)
    }

    /// Image under the inclusion `H_n(q) ⊂ H_m(q)`, `m ≥ n`.
    pub fn embed(&self, m: usize) -> Self {
        assert!(m >= self.n, "cannot embed H_{} into H_{}", self.n, m);
        HeckeElement {
            n: m,
            terms: self.terms.iter().map(|(w, c)| (w.extend(m), c.clone())).collect(),
        }
    }

    /// Coefficients in the order of [`all_perms`].
    pub fn to_dense(&self, basis: &[Perm]) -> Vec<RatFunc> {
        basis.iter().map(|w| self.coeff(w)).collect()
    }
}

impl Add for &HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        self.checked_add(rhs).expect("Hecke elements of the same rank")
    }
}

impl Sub for &HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        self + &(-rhs)
    }
}

impl Neg for &HeckeElement {
    type Output = HeckeElement;
    fn neg(self) -> HeckeElement {
        HeckeElement {
            n: self.n,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Mul for &HeckeElement {
    type Output = HeckeElement;
    fn mul(self, rhs: &HeckeElement) -> HeckeElement {
        self.multiply(rhs).expect("Hecke elements of the same rank")
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let word = w.reduced_word();
            let name = if word.is_empty() {
                "e".to_string()
            } else {
                word.iter().map(|i| format!("τ{i}")).collect::<String>()
            };
            if c.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "({c})*{name}")?;
            }
        }
        Ok(())
    }
}
