use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::laurent::{poly_gcd, LaurentPoly};
use super::{Rational, ScalarError};

/// An element of Q(q), kept in lowest terms.
///
/// Canonical form: the denominator has lowest exponent 0 and leading
/// coefficient 1, and shares no nonunit factor with the numerator. Two equal
/// rational functions therefore have identical representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(k: i32) -> Self {
        Self::from_laurent(LaurentPoly::monomial(Rational::one(), k))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// `num / den` brought to canonical form. Fails if `den` is zero.
    pub fn from_parts(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero { pos: None });
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = poly_gcd(&num, &den);
        let (num, den) = if g.span() > 1 {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        } else {
            (num, den)
        };
        Self::normalize_unit(num, den)
    }

    /// Moves the monomial unit so that `den` is monic with lowest exponent 0.
    /// Assumes `num` and `den` are already coprime.
    fn normalize_unit(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let shift = -den.low();
        let lead = den.leading_coeff().expect("nonzero denominator").clone();
        if lead.is_one() {
            if shift == 0 {
                return RatFunc { num, den };
            }
            return RatFunc {
                num: num.shift(shift),
                den: den.shift(shift),
            };
        }
        let inv = lead.recip();
        RatFunc {
            num: num.scale(&inv).shift(shift),
            den: den.scale(&inv).shift(shift),
        }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.is_laurent().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero { pos: None });
        }
        Ok(Self::normalize_unit(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs();
        Ok(RatFunc {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        RatFunc {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    /// Substitutes `q -> q^-1`.
    pub fn invert_variable(&self) -> Self {
        Self::normalize_unit(self.num.invert_variable(), self.den.invert_variable())
    }

    /// Exact value at `q = q0`.
    pub fn specialize(&self, q0: &Rational) -> Result<Rational, ScalarError> {
        if q0.is_zero() {
            return Err(ScalarError::ZeroBase);
        }
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(ScalarError::PoleAtPoint {
                point: q0.to_string(),
            });
        }
        Ok(self.num.eval(q0) / d)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::from_int(n)
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_laurent(p)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return RatFunc::from_laurent(num);
            }
            return RatFunc::reduce(num, self.den.clone());
        }
        if rhs.den.is_one() {
            return RatFunc::reduce(&self.num + &(&rhs.num * &self.den), self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc::reduce(&(&self.num * &rhs.den) + &rhs.num, rhs.den.clone());
        }
        let g = poly_gcd(&self.den, &rhs.den);
        let (sa, sb) = if g.span() > 1 {
            (
                rhs.den.div_exact(&g).unwrap(),
                self.den.div_exact(&g).unwrap(),
            )
        } else {
            (rhs.den.clone(), self.den.clone())
        };
        let num = &(&self.num * &sa) + &(&rhs.num * &sb);
        let den = &self.den * &sa;
        RatFunc::reduce(num, den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_laurent(&self.num * &rhs.num);
        }
        // Cross-cancel so the product is already in lowest terms.
        let g1 = poly_gcd(&self.num, &rhs.den);
        let g2 = poly_gcd(&rhs.num, &self.den);
        let (an, bd) = if g1.span() > 1 {
            (
                self.num.div_exact(&g1).unwrap(),
                rhs.den.div_exact(&g1).unwrap(),
            )
        } else {
            (self.num.clone(), rhs.den.clone())
        };
        let (bn, ad) = if g2.span() > 1 {
            (
                rhs.num.div_exact(&g2).unwrap(),
                self.den.div_exact(&g2).unwrap(),
            )
        } else {
            (rhs.num.clone(), self.den.clone())
        };
        RatFunc::normalize_unit(&an * &bn, &ad * &bd)
    }
}

/// Panics on division by zero; use [`RatFunc::checked_div`] for a fallible form.
impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self + rhs;
    }
}

impl AddAssign for RatFunc {
    fn add_assign(&mut self, rhs: RatFunc) {
        *self += &rhs;
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        if rhs.is_zero() {
            return;
        }
        *self = &*self - rhs;
    }
}

impl MulAssign<&RatFunc> for RatFunc {
    fn mul_assign(&mut self, rhs: &RatFunc) {
        *self = &*self * rhs;
    }
}

impl Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> RatFunc {
        iter.fold(RatFunc::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a RatFunc> for RatFunc {
    fn sum<I: Iterator<Item = &'a RatFunc>>(iter: I) -> RatFunc {
        iter.fold(RatFunc::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap_num = self.num.terms().count() > 1 || self.num.coeff(self.num.low()) < Rational::zero();
        let num = if wrap_num {
            format!("({})", self.num)
        } else {
            self.num.to_string()
        };
        write!(f, "{}/({})", num, self.den)
    }
}

impl serde::Serialize for RatFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        super::parse_scalar(&s).map_err(serde::de::Error::custom)
    }
}
