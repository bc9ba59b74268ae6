use super::{validate, HeckeSymmetry, HsymError};
use crate::exactla::ScalarMatrix;
use crate::qscalar::{q_delta, RatFunc};

/// Standard symmetry with diagonal signs: `ε_i = q` for the first `m` basis
/// vectors and `-q^{-1}` for the remaining `n`.
fn standard(m: usize, n: usize) -> ScalarMatrix {
    let dim = m + n;
    let delta = q_delta();
    let mut r = ScalarMatrix::zeros(dim * dim, dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            let row = i * dim + j;
            if i == j {
                r[(row, row)] = if i < m { RatFunc::q() } else { -RatFunc::q_pow(-1) };
            } else {
                r[(row, j * dim + i)] = RatFunc::one();
                if i < j {
                    r[(row, row)] = delta.clone();
                }
            }
        }
    }
    r
}

/// Built-in symmetries: `r2`, `r11`, `glN:<N>`, `glMN:<m>,<n>`.
pub fn builtin(name: &str) -> Result<HeckeSymmetry, HsymError> {
    let parse = |s: &str| -> Result<usize, HsymError> {
        s.trim()
            .parse()
            .map_err(|_| HsymError::ParameterOutOfRange(format!("'{s}' in '{name}'")))
    };
    let (m, n) = match name {
        "r2" => (2, 0),
        "r11" => (1, 1),
        _ => {
            if let Some(arg) = name.strip_prefix("glN:") {
                (parse(arg)?, 0)
            } else if let Some(arg) = name.strip_prefix("glMN:") {
                let (a, b) = arg
                    .split_once(',')
                    .ok_or_else(|| HsymError::ParameterOutOfRange(format!("expected m,n in '{name}'")))?;
                (parse(a)?, parse(b)?)
            } else {
                return Err(HsymError::UnknownBuiltin(name.to_string()));
            }
        }
    };
    let dim = m + n;
    if dim == 0 || dim > 4 {
        return Err(HsymError::ParameterOutOfRange(format!(
            "dimension {dim} of '{name}' outside 1..=4"
        )));
    }
    Ok(validate(standard(m, n), dim)?.with_name(name))
}
