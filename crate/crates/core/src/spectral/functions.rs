use serde::{Deserialize, Serialize};

use super::{MultiPoly, RatExpr, SpectralError, SpectralFamily};
use crate::hecke::Partition;
use crate::qscalar::{q_int, RatFunc, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymKind {
    Elementary,
    Complete,
}

/// `e_r` or `h_r` of `scale·v` over the variables `vars` (flat indices).
pub fn sym_poly(f: &SpectralFamily, kind: SymKind, r: usize, vars: &[usize], scale: &RatFunc) -> MultiPoly {
    // Coefficients of Π(1 + x t) or Π 1/(1 - x t), truncated at t^r.
    let mut table = vec![f.zero(); r + 1];
    table[0] = f.one();
    for &v in vars {
        let x = MultiPoly::var(f.m(), f.n(), v).scale(scale);
        match kind {
            SymKind::Elementary => {
                for k in (1..=r).rev() {
                    table[k] = &table[k] + &(&x * &table[k - 1]);
                }
            }
            SymKind::Complete => {
                for k in 1..=r {
                    table[k] = &table[k] + &(&x * &table[k - 1]);
                }
            }
        }
    }
    table.swap_remove(r)
}

/// `e_k(L)` for `k = 1..m` in an even family: `e_k(q^{-1}μ)`, equivalent to
/// `q^k e_k(L) = e_k(μ)`.
pub fn eigen_relations(f: &SpectralFamily) -> Result<Vec<MultiPoly>, SpectralError> {
    if f.n() > 0 {
        return Err(SpectralError::OddPartPresent { n: f.n() });
    }
    let vars = f.even_vars();
    let qinv = RatFunc::q_pow(-1);
    Ok((1..=f.m())
        .map(|k| sym_poly(f, SymKind::Elementary, k, &vars, &qinv))
        .collect())
}

/// `Σ_w z_w^k · num_w / Π_{z ≠ z_w}(z_w - z)`, simplified over the
/// Vandermonde denominator of all variables.
fn interpolation_sum(
    f: &SpectralFamily,
    k: u32,
    vars: &[usize],
    numerator: impl Fn(usize) -> MultiPoly,
) -> Result<MultiPoly, SpectralError> {
    let var = |v: usize| MultiPoly::var(f.m(), f.n(), v);
    let diff = |a: usize, b: usize| &var(vars[a]) - &var(vars[b]);
    let mut vandermonde = f.one();
    for a in 0..vars.len() {
        for b in a + 1..vars.len() {
            vandermonde = &vandermonde * &diff(a, b);
        }
    }
    let mut total = f.zero();
    for w in 0..vars.len() {
        let mut cofactor = if w % 2 == 0 { f.one() } else { -&f.one() };
        for a in 0..vars.len() {
            for b in a + 1..vars.len() {
                if a != w && b != w {
                    cofactor = &cofactor * &diff(a, b);
                }
            }
        }
        let term = &(&var(vars[w]).pow(k) * &numerator(w)) * &cofactor;
        total = &total + &term;
    }
    RatExpr::new(total, vandermonde)?.to_poly()
}

/// `Σ μ_i^k d_i + Σ ν_j^k d̃_j`.
pub fn power_sum_spectral(f: &SpectralFamily, k: usize) -> Result<MultiPoly, SpectralError> {
    let m = f.m();
    let vars: Vec<usize> = (0..f.nvars()).collect();
    let var = |v: usize| MultiPoly::var(f.m(), f.n(), v);
    let (q2, qm2) = (RatFunc::q_pow(2), RatFunc::q_pow(-2));
    interpolation_sum(f, k as u32, &vars, |w| {
        let mut num = f.one();
        for p in 0..f.nvars() {
            if p == w {
                continue;
            }
            // (z_w - q^{-2} μ_p) or (z_w - q^2 ν_p)
            let s = if p < m { &qm2 } else { &q2 };
            num = &num * &(&var(w) - &var(p).scale(s));
        }
        let lead = if w < m { RatFunc::q_pow(-1) } else { -RatFunc::q() };
        num.scale(&lead)
    })
}

/// Super one-row function `Σ_r e_r(-qν) h_{k-r}(q^{-1}μ)`.
fn one_row(f: &SpectralFamily, k: usize) -> MultiPoly {
    let (even, odd) = (f.even_vars(), f.odd_vars());
    let (qinv, mq) = (RatFunc::q_pow(-1), -RatFunc::q());
    (0..=k).fold(f.zero(), |acc, r| {
        let e = sym_poly(f, SymKind::Elementary, r, &odd, &mq);
        let h = sym_poly(f, SymKind::Complete, k - r, &even, &qinv);
        &acc + &(&e * &h)
    })
}

/// Super one-column function `Σ_r e_r(q^{-1}μ) h_{k-r}(-qν)`.
fn one_column(f: &SpectralFamily, k: usize) -> MultiPoly {
    let (even, odd) = (f.even_vars(), f.odd_vars());
    let (qinv, mq) = (RatFunc::q_pow(-1), -RatFunc::q());
    (0..=k).fold(f.zero(), |acc, r| {
        let e = sym_poly(f, SymKind::Elementary, r, &even, &qinv);
        let h = sym_poly(f, SymKind::Complete, k - r, &odd, &mq);
        &acc + &(&e * &h)
    })
}

/// Determinant by Laplace expansion along the first row.
fn determinant(m: &[Vec<MultiPoly>], f: &SpectralFamily) -> MultiPoly {
    if m.is_empty() {
        return f.one();
    }
    let size = m.len();
    let mut acc = f.zero();
    for c in 0..size {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][c] * &determinant(&minor, f);
        acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Spectral Schur function: one-row and one-column shapes directly, other
/// shapes by the Jacobi-Trudi determinant `det[h_{λ_i - i + j}]`.
pub fn schur_spectral(f: &SpectralFamily, lambda: &Partition) -> MultiPoly {
    let parts = lambda.parts();
    match parts {
        [] => f.one(),
        [k] => one_row(f, *k),
        _ if parts.iter().all(|&p| p == 1) => one_column(f, parts.len()),
        _ => {
            let len = parts.len();
            let rows: Vec<MultiPoly> = (0..=parts[0] + len).map(|k| one_row(f, k)).collect();
            let matrix: Vec<Vec<MultiPoly>> = (0..len)
                .map(|i| {
                    (0..len)
                        .map(|j| {
                            let idx = parts[i] as isize - i as isize + j as isize;
                            if idx < 0 {
                                f.zero()
                            } else {
                                rows[idx as usize].clone()
                            }
                        })
                        .collect()
                })
                .collect();
            determinant(&matrix, f)
        }
    }
}

/// Whether `k_q e_k + Σ_{r=1}^k (-1)^r q^{k-r} e_{k-r} p_r` vanishes.
pub fn newton_check(f: &SpectralFamily, k: usize) -> Result<bool, SpectralError> {
    let e = |j: usize| schur_spectral(f, &Partition::new(vec![1; j]).expect("column shape"));
    let mut acc = e(k).scale(&q_int(k as i32));
    for r in 1..=k {
        let c = RatFunc::q_pow((k - r) as i32);
        let c = if r % 2 == 0 { c } else { -c };
        let term = (&e(k - r) * &power_sum_spectral(f, r)?).scale(&c);
        acc = &acc + &term;
    }
    Ok(acc.is_zero())
}

/// One-row Hall-Littlewood function `(1-t) Σ_i x_i^k Π_{j≠i}(x_i - t x_j)/(x_i - x_j)`
/// in the even eigenvalues.
pub fn hall_littlewood_row(f: &SpectralFamily, k: usize, t: &RatFunc) -> Result<MultiPoly, SpectralError> {
    if f.n() > 0 {
        return Err(SpectralError::OddPartPresent { n: f.n() });
    }
    let vars = f.even_vars();
    let var = |v: usize| MultiPoly::var(f.m(), f.n(), v);
    let sum = interpolation_sum(f, k as u32, &vars, |w| {
        (0..f.m())
            .filter(|&p| p != w)
            .fold(f.one(), |acc, p| &acc * &(&var(w) - &var(p).scale(t)))
    })?;
    Ok(sum.scale(&(&RatFunc::one() - t)))
}

/// Whether `(q - q^{-1}) p_k` equals the Hall-Littlewood function at `t = q^{-2}`.
pub fn hl_compare(f: &SpectralFamily, k: usize) -> Result<bool, SpectralError> {
    let hl = hall_littlewood_row(f, k, &RatFunc::q_pow(-2))?;
    let p = power_sum_spectral(f, k)?.scale(&crate::qscalar::q_delta());
    Ok(hl == p)
}

/// Whether `p` is symmetric in `q^{-1}μ` and in `qν` separately and loses
/// all dependence on `s` after `q^{-1}μ_1 = qν_1 = s`.
pub fn supersymmetry_check(p: &MultiPoly, f: &SpectralFamily) -> Result<bool, SpectralError> {
    let (m, n) = (f.m(), f.n());
    if m == 0 || n == 0 {
        return Err(SpectralError::NotSuper);
    }
    if (p.even_count(), p.odd_count()) != (m, n) {
        return Err(SpectralError::InvalidFamily(format!(
            "polynomial has ({}|{}) variables, family is {f}",
            p.even_count(),
            p.odd_count()
        )));
    }
    let swap = |a: usize| {
        p.map_terms(m, n, |e| {
            let mut e = e.to_vec();
            e.swap(a, a + 1);
            (e, RatFunc::one())
        })
    };
    let symmetric = (0..m.saturating_sub(1)).chain(m..m + n - 1).all(|a| swap(a) == *p);
    if !symmetric {
        return Ok(false);
    }
    // μ_1 = q s, ν_1 = q^{-1} s, with s stored in the μ_1 slot.
    let substituted = p.map_terms(m, n, |e| {
        let (a, b) = (e[0], e[m]);
        let mut e = e.to_vec();
        e[0] = a + b;
        e[m] = 0;
        (e, RatFunc::q_pow(a as i32 - b as i32))
    });
    let constant = substituted.terms().all(|(e, _)| e[0] == 0);
    Ok(constant)
}

/// Coefficientwise `q → 1`.
pub fn classical_limit(p: &MultiPoly) -> Result<MultiPoly, SpectralError> {
    p.specialize(&Rational::from_integer(1.into()))
}
