use super::{HeckeElement, HeckeError, Partition, StdTableau};
use crate::qscalar::{q_int, RatFunc};

/// Jucys-Murphy element `j_k` of `H_n(q)`: `j_1 = e`, `j_k = τ_{k-1} j_{k-1} τ_{k-1}`.
pub fn jucys_murphy(n: usize, k: usize) -> Result<HeckeElement, HeckeError> {
    if k == 0 || k > n {
        return Err(HeckeError::IndexOutOfRange { index: k, bound: n });
    }
    let mut j = HeckeElement::identity(n);
    for i in 1..k {
        j = j.left_mul_generator(i)?.right_mul_generator(i)?;
    }
    Ok(j)
}

fn projector_recursion(k: usize, mirror: bool) -> HeckeElement {
    let mut x = HeckeElement::identity(1);
    for m in 2..=k {
        let prev = x.embed(m);
        let (e_coeff, t_coeff) = if mirror {
            (RatFunc::q_pow(1 - m as i32), q_int(m as i32 - 1))
        } else {
            (RatFunc::q_pow(m as i32 - 1), -q_int(m as i32 - 1))
        };
        let middle = &HeckeElement::scalar(m, e_coeff)
            + &HeckeElement::generator(m, m - 1).expect("m ≥ 2").scale(&t_coeff);
        let norm = q_int(m as i32).inv().expect("q-integers are nonzero");
        x = (&(&prev * &middle) * &prev).scale(&norm);
    }
    x
}

/// q-antisymmetrizer `a_k ∈ H_k(q)`.
pub fn antisymmetrizer(k: usize) -> HeckeElement {
    projector_recursion(k.max(1), false)
}

/// q-symmetrizer `h_k ∈ H_k(q)`.
pub fn symmetrizer(k: usize) -> HeckeElement {
    projector_recursion(k.max(1), true)
}

/// Primitive idempotent attached to a standard tableau, built by
/// interpolating the eigenvalue of `j_n` along the chain of subtableaux.
pub fn primitive_idempotent(t: &StdTableau) -> HeckeElement {
    let n = t.n();
    let mut chain = vec![t.clone()];
    while let Some(sub) = chain.last().unwrap().restrict() {
        if sub.n() == 0 {
            break;
        }
        chain.push(sub);
    }
    let mut e = HeckeElement::identity(1);
    for sub in chain.iter().rev().skip(1) {
        let m = sub.n();
        let c = sub.content(m);
        let parent_shape = sub.restrict().map(|p| p.shape().clone());
        let addable = parent_shape
            .unwrap_or_else(|| Partition::new(vec![]).unwrap())
            .addable_contents();
        let jm = jucys_murphy(m, m).expect("m ≥ 1");
        let target = RatFunc::q_pow(2 * c);
        let mut x = e.embed(m);
        for &a in addable.iter().filter(|&&a| a != c) {
            let qa = RatFunc::q_pow(2 * a);
            let factor = (&jm - &HeckeElement::scalar(m, qa.clone()))
                .scale(&(&target - &qa).inv().expect("distinct contents"));
            x = &x * &factor;
        }
        e = x;
    }
    debug_assert_eq!(e.n(), n.max(1));
    e
}

/// Product of descending strings: one string `τ_{j1} τ_{j1-1} ... τ_{j2}` per
/// maximal run of consecutive kept generators.
pub fn coxeter_from_generators(n: usize, kept: &[usize]) -> Result<HeckeElement, HeckeError> {
    let mut gens = kept.to_vec();
    gens.sort_unstable();
    gens.dedup();
    if let Some(&g) = gens.iter().find(|&&g| g == 0 || g >= n) {
        return Err(HeckeError::IndexOutOfRange {
            index: g,
            bound: n.saturating_sub(1),
        });
    }
    let mut word = Vec::new();
    for run in runs(&gens) {
        word.extend(run.iter().rev());
    }
    HeckeElement::word(n, &word)
}

fn runs(gens: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for &g in gens {
        match out.last_mut() {
            Some(run) if *run.last().unwrap() + 1 == g => run.push(g),
            _ => out.push(vec![g]),
        }
    }
    out
}

/// Cyclic type of the Coxeter element with gaps keeping generators `kept`.
pub fn cyclic_type(n: usize, kept: &[usize]) -> Partition {
    let mut gens = kept.to_vec();
    gens.sort_unstable();
    gens.dedup();
    let mut parts: Vec<usize> = runs(&gens).iter().map(|r| r.len() + 1).collect();
    let used: usize = parts.iter().sum();
    parts.extend(std::iter::repeat_n(1, n - used));
    Partition::from_unsorted(parts).expect("positive parts")
}

/// Generators kept by the canonical placement: contiguous blocks, largest part first.
pub fn canonical_gap_placement(nu: &Partition) -> Vec<usize> {
    placement_for_order(nu.parts())
}

fn placement_for_order(parts: &[usize]) -> Vec<usize> {
    let mut kept = Vec::new();
    let mut b = 0;
    for &p in parts {
        kept.extend(b + 1..b + p);
        b += p;
    }
    kept
}

/// Canonical Coxeter element with gaps `z_ν`.
pub fn coxeter_with_gaps(nu: &Partition) -> Result<HeckeElement, HeckeError> {
    let n = nu.n();
    if n == 0 {
        return Err(HeckeError::InvalidPartition("empty partition".into()));
    }
    coxeter_from_generators(n, &canonical_gap_placement(nu))
}

/// Kept-generator sets for every ordering of the parts of `ν`; each has cyclic type `ν`.
pub fn gap_placements(nu: &Partition) -> Vec<Vec<usize>> {
    let mut orders: Vec<Vec<usize>> = Vec::new();
    fn rec(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        let mut tried = Vec::new();
        for i in 0..rest.len() {
            if tried.contains(&rest[i]) {
                continue;
            }
            tried.push(rest[i]);
            let p = rest.remove(i);
            cur.push(p);
            rec(rest, cur, out);
            cur.pop();
            rest.insert(i, p);
        }
    }
    rec(&mut nu.parts().to_vec(), &mut Vec::new(), &mut orders);
    orders.iter().map(|o| placement_for_order(o)).collect()
}
