//! Brute-force reference computations that share no code with the library.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn rat(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Permutations of `0..n` in one-line notation.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// `(a∘b)(i) = a(b(i))`.
fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

fn sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Cycle type, sorted decreasingly.
pub fn cycle_type(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let (mut len, mut i) = (0, s);
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Partitions of `n`, reverse lexicographic.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            go(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Permutations preserving each block of `blocks` (a set partition of `0..n`).
fn block_stabilizer(n: usize, blocks: &[Vec<usize>]) -> Vec<Vec<usize>> {
    permutations(n)
        .into_iter()
        .filter(|p| blocks.iter().all(|b| b.iter().all(|&i| b.contains(&p[i]))))
        .collect()
}

/// Reduced row echelon basis of a span of vectors, as (pivot, row) pairs.
fn rref_basis(mut rows: Vec<Vec<Q>>) -> Vec<(usize, Vec<Q>)> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut basis: Vec<(usize, Vec<Q>)> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        let prow: Vec<Q> = rows[r].iter().map(|x| x * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for k in 0..cols {
                    row[k] -= &f * &prow[k];
                }
            }
        }
        rows[r] = prow;
        r += 1;
    }
    for row in rows.into_iter().take(r) {
        let pivot = row.iter().position(|x| !x.is_zero()).unwrap();
        basis.push((pivot, row));
    }
    basis
}

/// Irreducible characters of `S_n` by tracing left multiplication on the
/// left ideal generated by a Young symmetrizer in `Q[S_n]`.
/// Returns `table[ν][λ]` with both indexed by reverse-lex partitions.
pub fn symmetric_group_characters(n: usize) -> Vec<Vec<Q>> {
    let perms = permutations(n);
    let index: BTreeMap<Vec<usize>, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let parts = partitions(n);
    let reps: Vec<Vec<usize>> = parts
        .iter()
        .map(|nu| perms.iter().find(|p| cycle_type(p) == *nu).unwrap().clone())
        .collect();
    let mut table = vec![vec![rat(0); parts.len()]; parts.len()];
    for (col, lambda) in parts.iter().enumerate() {
        // Row-reading tableau: rows and columns as blocks.
        let mut rows = Vec::new();
        let mut next = 0;
        for &len in lambda {
            rows.push((next..next + len).collect::<Vec<_>>());
            next += len;
        }
        let cols: Vec<Vec<usize>> = (0..lambda[0])
            .map(|j| rows.iter().filter(|r| r.len() > j).map(|r| r[j]).collect())
            .collect();
        let mut e = vec![rat(0); perms.len()];
        for a in block_stabilizer(n, &rows) {
            for b in block_stabilizer(n, &cols) {
                e[index[&compose(&a, &b)]] += rat(sign(&b));
            }
        }
        let left = |g: &[usize], v: &[Q]| {
            let mut out = vec![rat(0); v.len()];
            for (i, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    out[index[&compose(g, &perms[i])]] += x;
                }
            }
            out
        };
        let spanning: Vec<Vec<Q>> = perms.iter().map(|g| left(g, &e)).collect();
        let basis = rref_basis(spanning);
        for (row, g) in reps.iter().enumerate() {
            let mut tr = rat(0);
            for (pivot, b) in &basis {
                tr += &left(g, b)[*pivot];
            }
            table[row][col] = tr;
        }
    }
    table
}

/// Commutative polynomial with rational coefficients, keyed by exponents.
pub type Poly = BTreeMap<Vec<u32>, Q>;

pub fn poly_add(a: &Poly, b: &Poly, scale: &Q) -> Poly {
    let mut out = a.clone();
    for (e, c) in b {
        let x = out.entry(e.clone()).or_insert_with(|| rat(0));
        *x += c * scale;
        if x.is_zero() {
            out.remove(e);
        }
    }
    out
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let x = out.entry(e.clone()).or_insert_with(|| rat(0));
            *x += ca * cb;
            if x.is_zero() {
                out.remove(&e);
            }
        }
    }
    out
}

/// Fillings of `shape` with labels `0..m+n`; labels `< m` are even (weakly
/// increasing along rows, strictly down columns), the rest odd (strictly
/// along rows, weakly down columns). Even labels read as `x_i`, odd labels
/// as `-y_j`, giving the super-Schur function in `(x | y)`.
pub fn super_schur(shape: &[usize], m: usize, n: usize) -> Poly {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut out = Poly::new();
    let mut filling: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        m: usize,
        n: usize,
        filling: &mut BTreeMap<(usize, usize), usize>,
        out: &mut Poly,
    ) {
        if k == cells.len() {
            let mut e = vec![0u32; m + n];
            let mut odd = 0;
            for &v in filling.values() {
                e[v] += 1;
                if v >= m {
                    odd += 1;
                }
            }
            let c = if odd % 2 == 0 { rat(1) } else { rat(-1) };
            *out = poly_add(out, &Poly::from([(e, c)]), &rat(1));
            return;
        }
        let (r, c) = cells[k];
        for v in 0..m + n {
            let even = v < m;
            if c > 0 {
                let left = filling[&(r, c - 1)];
                if left > v || (left == v && !even) {
                    continue;
                }
            }
            if r > 0 {
                let up = filling[&(r - 1, c)];
                if up > v || (up == v && even) {
                    continue;
                }
            }
            filling.insert((r, c), v);
            fill(k + 1, cells, m, n, filling, out);
            filling.remove(&(r, c));
        }
    }
    fill(0, &cells, m, n, &mut filling, &mut out);
    out
}

/// Classical Schur polynomial in `k` variables.
pub fn schur(shape: &[usize], k: usize) -> Poly {
    super_schur(shape, k, 0)
}

/// Expansion of a symmetric polynomial in `k ≥ |degree|` variables in Schur
/// polynomials, by repeatedly stripping the dominant monomial.
pub fn schur_expansion(p: &Poly, k: usize) -> BTreeMap<Vec<usize>, Q> {
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while let Some((e, c)) = rest.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        let shape: Vec<usize> = e.iter().map(|&x| x as usize).filter(|&x| x > 0).collect();
        assert!(shape.windows(2).all(|w| w[0] >= w[1]), "not symmetric");
        rest = poly_add(&rest, &schur(&shape, k), &-c.clone());
        out.insert(shape, c);
    }
    out
}

/// Littlewood-Richardson coefficients of `s_a · s_b` in 6 variables.
pub fn lr_coefficients(a: &[usize], b: &[usize]) -> BTreeMap<Vec<usize>, Q> {
    schur_expansion(&poly_mul(&schur(a, 6), &schur(b, 6)), 6)
}

pub fn is_positive(x: &Q) -> bool {
    x.is_positive()
}

pub fn one() -> Q {
    Q::one()
}
