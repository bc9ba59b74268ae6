use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::SpectralError;
use crate::qscalar::{RatFunc, Rational};

/// Exponent vector over `(μ_1..μ_m, ν_1..ν_n)`.
pub type Exponents = Vec<u32>;

/// Commutative polynomial in the even eigenvalues `μ_i` and the odd
/// eigenvalues `ν_j`, with coefficients in Q(q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    m: usize,
    n: usize,
    terms: BTreeMap<Exponents, RatFunc>,
}

impl MultiPoly {
    pub fn zero(m: usize, n: usize) -> Self {
        MultiPoly {
            m,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(m: usize, n: usize, c: RatFunc) -> Self {
        let mut p = Self::zero(m, n);
        p.add_term(vec![0; m + n], c);
        p
    }

    pub fn one(m: usize, n: usize) -> Self {
        Self::constant(m, n, RatFunc::one())
    }

    /// The variable with flat index `v` (μ's first, then ν's).
    pub fn var(m: usize, n: usize, v: usize) -> Self {
        let mut e = vec![0; m + n];
        e[v] = 1;
        let mut p = Self::zero(m, n);
        p.add_term(e, RatFunc::one());
        p
    }

    pub fn mu(m: usize, n: usize, i: usize) -> Self {
        Self::var(m, n, i)
    }

    pub fn nu(m: usize, n: usize, j: usize) -> Self {
        Self::var(m, n, m + j)
    }

    pub fn even_count(&self) -> usize {
        self.m
    }

    pub fn odd_count(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.m + self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &RatFunc)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> RatFunc {
        self.terms.get(e).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub(crate) fn add_term(&mut self, e: Exponents, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.m, self.n);
        }
        MultiPoly {
            m: self.m,
            n: self.n,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.m, self.n), |acc, _| &acc * self)
    }

    /// Total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide.
    pub fn exact_div(&self, d: &MultiPoly) -> Option<MultiPoly> {
        let (lead_e, lead_c) = d.terms.iter().next_back()?;
        let lead_inv = lead_c.inv().ok()?;
        let mut rem = self.clone();
        let mut quo = Self::zero(self.m, self.n);
        while let Some((e, c)) = rem.terms.iter().next_back() {
            let shift: Option<Exponents> = e
                .iter()
                .zip(lead_e)
                .map(|(&a, &b)| a.checked_sub(b))
                .collect();
            let shift = shift?;
            let f = c * &lead_inv;
            for (b, y) in &d.terms {
                let e = shift.iter().zip(b).map(|(s, t)| s + t).collect();
                rem.add_term(e, -(&f * y));
            }
            quo.add_term(shift, f);
        }
        Some(quo)
    }

    /// Applies `f` to each exponent vector, multiplying coefficients by the
    /// returned scalar. The new vectors may have a different length.
    pub(crate) fn map_terms(
        &self,
        m: usize,
        n: usize,
        f: impl Fn(&[u32]) -> (Exponents, RatFunc),
    ) -> MultiPoly {
        let mut out = MultiPoly::zero(m, n);
        for (e, c) in &self.terms {
            let (e2, s) = f(e);
            out.add_term(e2, c * &s);
        }
        out
    }

    /// Specializes every coefficient at `q = q0`.
    pub fn specialize(&self, q0: &Rational) -> Result<MultiPoly, SpectralError> {
        let mut out = Self::zero(self.m, self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), RatFunc::from_rational(c.specialize(q0)?));
        }
        Ok(out)
    }

    fn var_name(&self, v: usize) -> String {
        if v < self.m {
            format!("mu{}", v + 1)
        } else {
            format!("nu{}", v - self.m + 1)
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!((self.m, self.n), (rhs.m, rhs.n), "different variable sets");
        let mut p = self.clone();
        for (e, c) in &rhs.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &-rhs
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-RatFunc::one())
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!((self.m, self.n), (rhs.m, rhs.n), "different variable sets");
        let mut p = MultiPoly::zero(self.m, self.n);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e = a.iter().zip(b).map(|(s, t)| s + t).collect();
                p.add_term(e, x * y);
            }
        }
        p
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(v, &p)| match p {
                    1 => self.var_name(v),
                    _ => format!("{}^{p}", self.var_name(v)),
                })
                .collect();
            match (mono.is_empty(), c.is_one()) {
                (true, _) => write!(f, "({c})")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "({c})*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

/// A quotient of two polynomials, simplified only by exact division.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatExpr {
    pub num: MultiPoly,
    pub den: MultiPoly,
}

impl RatExpr {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, SpectralError> {
        if den.is_zero() {
            return Err(SpectralError::ZeroDenominator);
        }
        Ok(RatExpr { num, den })
    }

    /// The polynomial `num / den`, if the division is exact.
    pub fn to_poly(&self) -> Result<MultiPoly, SpectralError> {
        self.num
            .exact_div(&self.den)
            .ok_or(SpectralError::NonPolynomialResult)
    }
}
