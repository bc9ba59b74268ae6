mod common;

use common::{lr_coefficients, super_schur, symmetric_group_characters, Poly, Q};
use proptest::prelude::*;
use qfrob::hecke::{character_table, partitions, Partition};
use qfrob::qscalar::{RatFunc, Rational};
use qfrob::realg::ReAlgebra;
use qfrob::spectral::{classical_limit, power_sum_spectral, schur_spectral, MultiPoly, SpectralFamily};

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn limit(p: &MultiPoly) -> Poly {
    let one = Rational::from_integer(1.into());
    classical_limit(p)
        .unwrap()
        .terms()
        .map(|(e, c)| (e.clone(), c.specialize(&one).unwrap()))
        .collect()
}

fn lr_sum(terms: &[(Vec<usize>, Q)], f: impl Fn(&Partition, &RatFunc) -> MultiPoly, zero: MultiPoly) -> MultiPoly {
    terms
        .iter()
        .fold(zero, |acc, (shape, c)| &acc + &f(&part(shape), &RatFunc::from_rational(c.clone())))
}

#[test]
fn character_tables_specialize_to_symmetric_group() {
    let one = Rational::from_integer(1.into());
    for n in 1..=5 {
        let table = character_table(n).unwrap();
        let oracle = symmetric_group_characters(n);
        assert_eq!(table.partitions.len(), oracle.len());
        for (r, row) in table.values.iter().enumerate() {
            let got: Vec<Q> = row.iter().map(|x| x.specialize(&one).unwrap()).collect();
            assert_eq!(got, oracle[r], "n = {n}, row {}", table.partitions[r]);
        }
    }
}

#[test]
fn super_schur_limits() {
    for (m, n) in [(2, 0), (3, 0), (1, 1), (2, 1), (1, 2), (2, 2)] {
        let f = SpectralFamily::new(m, n).unwrap();
        for k in 1..=4 {
            for lambda in partitions(k) {
                let got = limit(&schur_spectral(&f, &lambda));
                assert_eq!(got, super_schur(lambda.parts(), m, n), "({m}|{n}), {lambda}");
            }
        }
    }
}

#[test]
fn power_sum_limits() {
    for (m, n) in [(1, 2), (2, 2), (3, 1)] {
        let f = SpectralFamily::new(m, n).unwrap();
        for k in 1..=4u32 {
            let expect: Poly = (0..m + n)
                .map(|v| {
                    let mut e = vec![0; m + n];
                    e[v] = k;
                    (e, common::rat(if v < m { 1 } else { -1 }))
                })
                .collect();
            assert_eq!(limit(&power_sum_spectral(&f, k as usize).unwrap()), expect);
        }
    }
}

#[test]
fn oracle_lr_coefficients() {
    let c = lr_coefficients(&[2, 1], &[2, 1]);
    let expect: Vec<(Vec<usize>, i64)> = vec![
        (vec![2, 2, 1, 1], 1),
        (vec![2, 2, 2], 1),
        (vec![3, 1, 1, 1], 1),
        (vec![3, 2, 1], 2),
        (vec![3, 3], 1),
        (vec![4, 1, 1], 1),
        (vec![4, 2], 1),
    ];
    let got: Vec<(Vec<usize>, i64)> = c
        .into_iter()
        .map(|(k, v)| (k, v.to_integer().try_into().unwrap()))
        .collect();
    let mut sorted = expect.clone();
    sorted.sort();
    assert_eq!(got, sorted);
}

#[test]
fn lr_in_the_algebra_degree_four() {
    let alg = ReAlgebra::new(qfrob::hsym::builtin("r2").unwrap()).unwrap();
    for (a, b) in [(vec![2], vec![2]), (vec![1, 1], vec![2]), (vec![2, 1], vec![1])] {
        let mut residue = &alg.schur(&part(&a), None).unwrap() * &alg.schur(&part(&b), None).unwrap();
        for (shape, c) in lr_coefficients(&a, &b) {
            let s = alg.schur(&part(&shape), None).unwrap();
            residue.add_scaled(&s, &-RatFunc::from_rational(c));
        }
        assert!(alg.is_zero_mod_ideal(&residue), "s{a:?} s{b:?}");
    }
}

fn small_partition() -> impl Strategy<Value = Vec<usize>> {
    (1usize..=3).prop_flat_map(|k| {
        let all: Vec<Vec<usize>> = partitions(k).into_iter().map(|p| p.parts().to_vec()).collect();
        proptest::sample::select(all)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn spectral_schur_products_follow_lr(
        a in small_partition(),
        b in small_partition(),
        fam in proptest::sample::select(vec![(2usize, 0usize), (1, 1), (2, 1), (1, 2)]),
    ) {
        let f = SpectralFamily::new(fam.0, fam.1).unwrap();
        let lhs = &schur_spectral(&f, &part(&a)) * &schur_spectral(&f, &part(&b));
        let terms: Vec<(Vec<usize>, Q)> = lr_coefficients(&a, &b).into_iter().collect();
        let rhs = lr_sum(&terms, |l, c| schur_spectral(&f, l).scale(c), f.zero());
        prop_assert_eq!(lhs, rhs);
    }
}
