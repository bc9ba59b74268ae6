use proptest::prelude::*;

use super::*;
use crate::qscalar::{parse_scalar, q_delta, q_int, RatFunc};

fn tau(n: usize, i: usize) -> HeckeElement {
    HeckeElement::generator(n, i).unwrap()
}

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn s(x: &str) -> RatFunc {
    parse_scalar(x).unwrap()
}

#[test]
fn quadratic_relation() {
    let t = tau(2, 1);
    let lhs = &t * &t;
    let rhs = &HeckeElement::identity(2) + &t.scale(&q_delta());
    assert_eq!(lhs, rhs);
}

#[test]
fn relations_hold_up_to_five() {
    for n in 2..=5 {
        let e = HeckeElement::identity(n);
        for i in 1..n {
            let t = tau(n, i);
            // (τ - q)(τ + q^-1) = 0
            let a = &t - &HeckeElement::scalar(n, RatFunc::q());
            let b = &t + &HeckeElement::scalar(n, RatFunc::q_pow(-1));
            assert!((&a * &b).is_zero());
            assert_eq!(&e * &t, t);
            for j in 1..n {
                let u = tau(n, j);
                if i + 1 == j {
                    assert_eq!(&(&t * &u) * &t, &(&u * &t) * &u, "braid {i},{j} in H_{n}");
                } else if i.abs_diff(j) >= 2 {
                    assert_eq!(&t * &u, &u * &t);
                }
            }
        }
    }
}

#[test]
fn mismatched_rank_is_an_error() {
    assert!(matches!(
        tau(2, 1).multiply(&tau(3, 1)),
        Err(HeckeError::MismatchedN { .. })
    ));
    assert!(HeckeElement::generator(3, 3).is_err());
}

#[test]
fn jucys_murphy_elements() {
    assert_eq!(jucys_murphy(4, 1).unwrap(), HeckeElement::identity(4));
    let j2 = jucys_murphy(3, 2).unwrap();
    assert_eq!(j2, &HeckeElement::identity(3) + &tau(3, 1).scale(&q_delta()));
    for n in 3..=4 {
        let js: Vec<_> = (1..=n).map(|k| jucys_murphy(n, k).unwrap()).collect();
        for a in &js {
            for b in &js {
                assert_eq!(a * b, b * a);
            }
        }
    }
    assert!(jucys_murphy(3, 4).is_err());
}

#[test]
fn projectors_of_rank_two() {
    let a2 = antisymmetrizer(2);
    let expect = (&HeckeElement::scalar(2, RatFunc::q()) - &tau(2, 1)).scale(&q_int(2).inv().unwrap());
    assert_eq!(a2, expect);
    assert_eq!(&a2 * &a2, a2);
    let h2 = symmetrizer(2);
    assert_eq!(&h2 * &h2, h2);
    assert!((&h2 * &a2).is_zero());
}

#[test]
fn projectors_are_idempotent() {
    for k in 3..=4 {
        let a = antisymmetrizer(k);
        let h = symmetrizer(k);
        assert_eq!(&a * &a, a);
        assert_eq!(&h * &h, h);
        assert!((&a * &h).is_zero());
        // τ_i a = -q^-1 a and τ_i h = q h
        for i in 1..k {
            assert_eq!(&tau(k, i) * &a, a.scale(&-RatFunc::q_pow(-1)));
            assert_eq!(&tau(k, i) * &h, h.scale(&RatFunc::q()));
        }
    }
}

#[test]
fn column_idempotent_is_antisymmetrizer() {
    let t = StdTableau::new(vec![vec![1], vec![2]]).unwrap();
    assert_eq!(primitive_idempotent(&t), antisymmetrizer(2));
    let row = StdTableau::new(vec![vec![1, 2]]).unwrap();
    let e = primitive_idempotent(&row);
    let j2 = jucys_murphy(2, 2).unwrap();
    assert_eq!(&j2 * &e, e.scale(&RatFunc::q_pow(2)));
}

#[test]
fn idempotents_are_eigenvectors_of_jucys_murphy() {
    for lambda in partitions(4) {
        for t in standard_tableaux(&lambda) {
            let e = primitive_idempotent(&t);
            for k in 1..=4 {
                let j = jucys_murphy(4, k).unwrap();
                let expect = e.scale(&RatFunc::q_pow(2 * t.content(k)));
                assert_eq!(&j * &e, expect, "{t}, k = {k}");
                assert_eq!(&e * &j, expect);
            }
        }
    }
}

#[test]
fn resolution_of_unity() {
    for n in 1..=4 {
        let idems: Vec<HeckeElement> = partitions(n)
            .iter()
            .flat_map(standard_tableaux)
            .map(|t| primitive_idempotent(&t))
            .collect();
        if n == 4 {
            assert_eq!(idems.len(), 10);
        }
        let mut sum = HeckeElement::zero(n);
        for e in &idems {
            sum = &sum + e;
        }
        assert_eq!(sum, HeckeElement::identity(n), "n = {n}");
        for (a, x) in idems.iter().enumerate() {
            for (b, y) in idems.iter().enumerate() {
                let p = x * y;
                if a == b {
                    assert_eq!(&p, x);
                } else {
                    assert!(p.is_zero());
                }
            }
        }
    }
}

#[test]
fn sum_of_squared_dimensions() {
    for n in 1..=6u64 {
        let total: u64 = partitions(n as usize).iter().map(|l| l.dimension().pow(2)).sum();
        assert_eq!(total, (1..=n).product::<u64>());
    }
}

#[test]
fn coxeter_elements() {
    assert_eq!(
        coxeter_with_gaps(&part(&[4])).unwrap(),
        HeckeElement::word(4, &[3, 2, 1]).unwrap()
    );
    assert_eq!(coxeter_with_gaps(&part(&[1, 1, 1])).unwrap(), HeckeElement::identity(3));
    let nu = part(&[4, 2, 1]);
    assert_eq!(canonical_gap_placement(&nu), vec![1, 2, 3, 5]);
    assert_eq!(
        coxeter_with_gaps(&nu).unwrap(),
        HeckeElement::word(7, &[3, 2, 1, 5]).unwrap()
    );
    assert_eq!(cyclic_type(7, &[1, 2, 3, 5]), nu);
    assert_eq!(cyclic_type(7, &[6, 4, 3, 2]), nu);
    assert_eq!(cyclic_type(7, &[6, 5, 3, 2, 1]), part(&[4, 3]));
    assert_eq!(
        coxeter_from_generators(7, &[6, 4, 3, 2]).unwrap(),
        HeckeElement::word(7, &[6, 4, 3, 2]).unwrap()
    );
}

#[test]
fn placements_have_the_right_type() {
    for n in 1..=6 {
        for nu in partitions(n) {
            let ps = gap_placements(&nu);
            assert!(ps.contains(&canonical_gap_placement(&nu)));
            for kept in ps {
                assert_eq!(cyclic_type(n, &kept), nu);
                let z = coxeter_from_generators(n, &kept).unwrap();
                let (w, _) = z.terms().next().unwrap();
                assert_eq!(w.cycle_type(), nu.parts());
            }
        }
    }
}

#[test]
fn characters_of_small_ranks() {
    let t = tau(2, 1);
    assert_eq!(character(&part(&[2]), &t).unwrap(), RatFunc::q());
    assert_eq!(character(&part(&[1, 1]), &t).unwrap(), -RatFunc::q_pow(-1));
    assert_eq!(
        character(&part(&[2, 1]), &HeckeElement::identity(3)).unwrap(),
        RatFunc::from_int(2)
    );
}

#[test]
fn table_of_rank_three() {
    let t = character_table(3).unwrap();
    let expect = [
        ["q^2", "-1", "q^-2"],
        ["q", "q - q^-1", "-q^-1"],
        ["1", "2", "1"],
    ];
    for (r, row) in expect.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            assert_eq!(t.values[r][c], s(x), "entry ({r},{c})");
        }
    }
}

#[test]
fn table_of_rank_two() {
    let t = character_table(2).unwrap();
    assert_eq!(t.values, vec![vec![s("q"), s("-q^-1")], vec![s("1"), s("1")]]);
}

#[test]
fn table_bound() {
    assert!(matches!(character_table(6), Err(HeckeError::BoundExceeded { .. })));
}

#[test]
fn seminormal_generators_satisfy_relations() {
    for n in 2..=6 {
        for lambda in partitions(n) {
            let rep = SeminormalRep::new(&lambda);
            let d = rep.dimension();
            let id = crate::exactla::ScalarMatrix::identity(d);
            for i in 1..n {
                let t = rep.generator(i);
                let quad = &t.matmul(t) - &(&id + &t.scale(&q_delta()));
                assert!(quad.is_zero(), "{lambda} quadratic τ{i}");
                if i + 1 < n {
                    let u = rep.generator(i + 1);
                    assert_eq!(t.matmul(u).matmul(t), u.matmul(t).matmul(u), "{lambda} braid {i}");
                }
                for j in i + 2..n {
                    let u = rep.generator(j);
                    assert_eq!(t.matmul(u), u.matmul(t));
                }
            }
        }
    }
}

#[test]
fn seminormal_agrees_with_left_ideal() {
    for n in 2..=4 {
        for lambda in partitions(n) {
            let ideal = LeftIdeal::new(&lambda).unwrap();
            let rep = SeminormalRep::new(&lambda);
            for w in all_perms(n) {
                let z = HeckeElement::basis(w);
                assert_eq!(ideal.trace(&z).unwrap(), rep.character(&z).unwrap(), "{lambda}");
            }
        }
    }
}

#[test]
fn character_is_independent_of_placement() {
    for nu in partitions(4) {
        let ps = gap_placements(&nu);
        for lambda in partitions(4) {
            let ideal = LeftIdeal::new(&lambda).unwrap();
            let vals: Vec<RatFunc> = ps
                .iter()
                .map(|k| ideal.trace(&coxeter_from_generators(4, k).unwrap()).unwrap())
                .collect();
            assert!(vals.windows(2).all(|w| w[0] == w[1]), "{nu} {lambda}");
        }
    }
}

fn arb_element(n: usize) -> impl Strategy<Value = HeckeElement> {
    let perms = all_perms(n);
    prop::collection::vec((0..perms.len(), -2i32..3, -2i64..3), 1..4).prop_map(move |ts| {
        let mut x = HeckeElement::zero(n);
        for (k, e, c) in ts {
            let coeff = RatFunc::q_pow(e).scale_rational(&crate::qscalar::Rational::from_integer(c.into()));
            x = &x + &HeckeElement::monomial(perms[k].clone(), coeff);
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn multiplication_is_associative(x in arb_element(4), y in arb_element(4), z in arb_element(4)) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&HeckeElement::identity(4) * &x, x.clone());
    }

    #[test]
    fn character_is_a_trace(x in arb_element(3), y in arb_element(3), l in 0usize..3) {
        let lambda = &partitions(3)[l];
        let ideal = LeftIdeal::new(lambda).unwrap();
        prop_assert_eq!(ideal.trace(&(&x * &y)).unwrap(), ideal.trace(&(&y * &x)).unwrap());
    }
}
