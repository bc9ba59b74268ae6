//! Exact scalars: the field Q(q) of rational functions in one formal variable.

mod laurent;
mod parse;
mod ratfunc;

use thiserror::Error;

pub use laurent::LaurentPoly;
pub(crate) use laurent::poly_gcd;
pub use parse::parse_scalar;
pub use ratfunc::RatFunc;

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("division by the zero polynomial{}", .pos.map(|p| format!(" at offset {p}")).unwrap_or_default())]
    DivisionByZero { pos: Option<usize> },
    #[error("denominator vanishes at q = {point}")]
    PoleAtPoint { point: String },
    #[error("cannot specialize at q = 0")]
    ZeroBase,
}

/// The q-integer `(q^k - q^-k) / (q - q^-1)`.
pub fn q_int(k: i32) -> RatFunc {
    if k == 0 {
        return RatFunc::zero();
    }
    let n = k.abs();
    let sign = if k < 0 { -1 } else { 1 };
    let terms = (0..n).map(|i| (n - 1 - 2 * i, Rational::from_integer(sign.into())));
    RatFunc::from_laurent(LaurentPoly::from_terms(terms))
}

/// `q - q^-1`, the coefficient in the Hecke relation.
pub fn q_delta() -> RatFunc {
    &RatFunc::q() - &RatFunc::q_pow(-1)
}

/// Value of `f` at `q = q0`.
pub fn specialize(f: &RatFunc, q0: &Rational) -> Result<Rational, ScalarError> {
    f.specialize(q0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_int(1), RatFunc::one());
        assert_eq!(q_int(2), parse_scalar("q + q^-1").unwrap());
        assert!(q_int(0).is_zero());
        assert_eq!(q_int(-3), -q_int(3));
        // q_int(k) (q - q^-1) = q^k - q^-k
        for k in -6..=6 {
            let lhs = &q_int(k) * &q_delta();
            let rhs = &RatFunc::q_pow(k) - &RatFunc::q_pow(-k);
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    #[test]
    fn q_integers_classical_limit() {
        for k in -12..=12 {
            assert_eq!(q_int(k).specialize(&Rational::one()).unwrap(), rat(k as i64, 1));
        }
    }

    #[test]
    fn specialization_examples() {
        assert_eq!(specialize(&q_int(2), &rat(2, 1)).unwrap(), rat(5, 2));
        assert_eq!(specialize(&q_int(2), &rat(1, 1)).unwrap(), rat(2, 1));
        let pole = parse_scalar("1/(q-1)").unwrap();
        assert!(matches!(
            specialize(&pole, &Rational::one()),
            Err(ScalarError::PoleAtPoint { .. })
        ));
        assert_eq!(
            specialize(&RatFunc::one(), &Rational::zero()),
            Err(ScalarError::ZeroBase)
        );
    }

    #[test]
    fn canonical_form_is_syntactic() {
        let a = parse_scalar("(q^2 - 1)/(q^3 - q)").unwrap();
        assert_eq!(a, RatFunc::q_pow(-1));
        let b = parse_scalar("(2*q + 2)/(4*q^2 - 4)").unwrap();
        assert_eq!(b, parse_scalar("1/(2*q - 2)").unwrap());
        assert!(b.denom().low() == 0);
        assert!(b.denom().leading_coeff().unwrap().is_one());
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "q - q^-1",
            "-q^-1",
            "3/2*q^2 - 1/3",
            "(q^2 + 1)/(q^3 - 2)",
            "-q/(q^2 + q + 1)",
            "(q - 1)^-2",
            "0",
        ] {
            let f = parse_scalar(s).unwrap();
            let printed = f.to_string();
            assert_eq!(parse_scalar(&printed).unwrap(), f, "{s} printed as {printed}");
        }
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
        (-3i32..3, prop::collection::vec(-4i64..5, 1..4)).prop_map(|(low, cs)| {
            LaurentPoly::from_coeffs(low, cs.into_iter().map(|c| rat(c, 1)).collect())
        })
    }

    fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
        (arb_laurent(), arb_laurent()).prop_map(|(n, d)| {
            if d.is_zero() {
                RatFunc::from_laurent(n)
            } else {
                RatFunc::from_parts(n, d).unwrap()
            }
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), RatFunc::one());
            }
        }

        #[test]
        fn specialization_is_multiplicative(a in arb_ratfunc(), b in arb_ratfunc(), n in 1i64..7, d in 1i64..5) {
            let q0 = rat(n, d);
            let fa = a.specialize(&q0);
            let fb = b.specialize(&q0);
            if let (Ok(x), Ok(y)) = (fa, fb) {
                prop_assert_eq!((&a * &b).specialize(&q0).unwrap(), x.clone() * y.clone());
                prop_assert_eq!((&a + &b).specialize(&q0).unwrap(), x + y);
            }
        }
    }
}
