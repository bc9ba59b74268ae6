use std::fmt;

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use super::{expected_trace, HeckeSymmetry, HsymError};
use crate::exactla::{rank, rational_rank, solve, ScalarMatrix};
use crate::qscalar::{poly_gcd, LaurentPoly, RatFunc, Rational};

/// How ranks of `ρ(a_k)` are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMode {
    /// Over Q(q).
    Exact,
    /// Maximum rank at two pseudo-random rational values of q.
    Fast { seed: u64 },
}

/// `P(t)/Q(t)` with `Q(0) = 1`, coefficients in increasing degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesFit {
    pub numerator: Vec<Rational>,
    pub denominator: Vec<Rational>,
}

impl SeriesFit {
    pub fn r(&self) -> usize {
        self.numerator.len() - 1
    }

    pub fn s(&self) -> usize {
        self.denominator.len() - 1
    }
}

impl fmt::Display for SeriesFit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = factor_binomials(&self.numerator);
        if self.s() == 0 {
            write!(f, "{num}")
        } else {
            write!(f, "{num}/{}", factor_binomials(&self.denominator))
        }
    }
}

/// Writes a polynomial in `t` as a product of powers of `1+t` and `1-t`
/// times whatever is left over.
fn factor_binomials(p: &[Rational]) -> String {
    let mut rest: Vec<Rational> = p.to_vec();
    let mut out = String::new();
    for (sign, label) in [(1i64, "(1+t)"), (-1, "(1-t)")] {
        let mut power = 0;
        while rest.len() > 1 {
            // Divide by 1 + sign*t if the remainder vanishes.
            let mut quot = vec![Rational::zero(); rest.len() - 1];
            let mut carry = rest.clone();
            let lead = Rational::from_integer(sign.into());
            for k in (1..carry.len()).rev() {
                let c = &carry[k] / &lead;
                carry[k - 1] -= &c;
                carry[k] = Rational::zero();
                quot[k - 1] = c;
            }
            if !carry[0].is_zero() {
                break;
            }
            rest = quot;
            power += 1;
        }
        match power {
            0 => {}
            1 => out.push_str(label),
            _ => out.push_str(&format!("{label}^{power}")),
        }
    }
    let trivial = rest.len() == 1 && rest[0].is_one();
    if !trivial || out.is_empty() {
        let terms: Vec<String> = rest
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("{c}t"),
                _ => format!("{c}t^{k}"),
            })
            .collect();
        let body = terms.join(" + ");
        if out.is_empty() && terms.len() == 1 {
            out.push_str(&body);
        } else {
            out.push_str(&format!("({body})"));
        }
    }
    out
}

/// Detected bi-rank `(r|s)` with the dimension sequence it was read from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiRank {
    pub r: usize,
    pub s: usize,
    pub hp_coefficients: Vec<u64>,
    pub series: SeriesFit,
    pub probabilistic: bool,
}

impl fmt::Display for BiRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{}), series {}", self.r, self.s, self.series)
    }
}

fn rat(x: u64) -> Rational {
    Rational::from_integer(x.into())
}

/// Smallest `P/Q` (by `deg P + deg Q`, then `deg Q`) with `Q(0) = 1` that
/// reproduces `d_0..d_K`, using at least one more coefficient than it has
/// unknowns.
pub fn fit_series(d: &[u64]) -> Option<SeriesFit> {
    let kmax = d.len().checked_sub(1)?;
    let dk = |k: isize| if k < 0 { Rational::zero() } else { rat(d[k as usize]) };
    for total in 0..kmax {
        for s in 0..=total {
            let r = total - s;
            // Σ_{j=1..s} q_j d_{k-j} = -d_k for k = r+1..kmax.
            let rows = kmax - r;
            let a = ScalarMatrix::from_fn(rows, s, |row, j| {
                RatFunc::from_rational(dk((r + 1 + row) as isize - (j + 1) as isize))
            });
            let b = ScalarMatrix::from_fn(rows, 1, |row, _| {
                RatFunc::from_rational(-dk((r + 1 + row) as isize))
            });
            let qs: Vec<Rational> = if s == 0 {
                if (0..rows).any(|row| !b[(row, 0)].is_zero()) {
                    continue;
                }
                Vec::new()
            } else {
                let Ok(sol) = solve(&a, &b) else { continue };
                (0..s).map(|j| constant(&sol.x[(j, 0)])).collect()
            };
            let mut den = vec![Rational::one()];
            den.extend(qs);
            if s > 0 && den[s].is_zero() {
                continue;
            }
            let num: Vec<Rational> = (0..=r)
                .map(|k| (0..=s.min(k)).map(|j| &den[j] * dk((k - j) as isize)).sum())
                .collect();
            if num[r].is_zero() {
                continue;
            }
            let gcd = poly_gcd(
                &LaurentPoly::from_coeffs(0, num.clone()),
                &LaurentPoly::from_coeffs(0, den.clone()),
            );
            if gcd.high() > 0 {
                continue;
            }
            return Some(SeriesFit {
                numerator: num,
                denominator: den,
            });
        }
    }
    None
}

fn constant(x: &RatFunc) -> Rational {
    x.specialize(&Rational::one()).expect("constant rational function")
}

fn random_point(rng: &mut StdRng) -> Rational {
    loop {
        let a: i64 = rng.gen_range(2..=997);
        let b: i64 = rng.gen_range(1..=61);
        if a != b {
            return Rational::new(a.into(), b.into());
        }
    }
}

fn rank_of(m: &ScalarMatrix, mode: RankMode, salt: u64) -> usize {
    match mode {
        RankMode::Exact => rank(m),
        RankMode::Fast { seed } => {
            let mut rng = StdRng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15));
            let mut best = 0;
            let mut tried = 0;
            while tried < 2 {
                let q0 = random_point(&mut rng);
                if let Ok(vals) = m.specialize(&q0) {
                    best = best.max(rational_rank(vals));
                    tried += 1;
                }
            }
            best
        }
    }
}

pub fn birank(s: &HeckeSymmetry, kmax: usize) -> Result<BiRank, HsymError> {
    birank_with(s, kmax, RankMode::Exact)
}

/// Bi-rank from the ranks `d_k = rank ρ(a_k)`, `k = 0..=kmax`, cross-checked
/// against the B/C identities.
pub fn birank_with(s: &HeckeSymmetry, kmax: usize, mode: RankMode) -> Result<BiRank, HsymError> {
    if kmax < 2 {
        return Err(HsymError::ParameterOutOfRange(format!("kmax = {kmax} < 2")));
    }
    let projectors: Vec<ScalarMatrix> = (2..=kmax)
        .map(|k| s.rho_antisymmetrizer(k))
        .collect::<Result<_, _>>()?;
    let mut d: Vec<u64> = vec![1, s.dim() as u64];
    let ranks: Vec<u64> = projectors
        .par_iter()
        .enumerate()
        .map(|(i, m)| rank_of(m, mode, i as u64 + 2) as u64)
        .collect();
    d.extend(ranks);
    let series = fit_series(&d).ok_or_else(|| HsymError::Inconclusive {
        kmax,
        coefficients: d.clone(),
    })?;
    let (r, s_deg) = (series.r(), series.s());
    check_identities(s, r, s_deg)?;
    Ok(BiRank {
        r,
        s: s_deg,
        hp_coefficients: d,
        series,
        probabilistic: matches!(mode, RankMode::Fast { .. }),
    })
}

/// `BC = q^{-2(r-s)} I` and `Tr B = Tr C = q^{s-r}(r-s)_q`.
pub fn check_identities(sym: &HeckeSymmetry, r: usize, s: usize) -> Result<(), HsymError> {
    let data = sym.skew()?;
    let n = sym.dim();
    let mismatch = |detail: String| HsymError::IdentityMismatch { r, s, detail };
    let scale = RatFunc::q_pow(-2 * (r as i32 - s as i32));
    let bc = data.b.matmul(&data.c);
    if bc != ScalarMatrix::identity(n).scale(&scale) {
        return Err(mismatch(format!("BC = {}", bc.to_string().trim_end())));
    }
    let expect = expected_trace(r, s);
    for (label, m) in [("B", &data.b), ("C", &data.c)] {
        let t = m.trace();
        if t != expect {
            return Err(mismatch(format!("Tr {label} = {t}, expected {expect}")));
        }
    }
    Ok(())
}
