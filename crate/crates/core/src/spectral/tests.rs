use super::*;
use crate::hecke::{character_table, partitions, Partition};
use crate::qscalar::{q_delta, q_int, RatFunc};

fn fam(m: usize, n: usize) -> SpectralFamily {
    SpectralFamily::new(m, n).unwrap()
}

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn qp(k: i32) -> RatFunc {
    RatFunc::q_pow(k)
}

#[test]
fn elementary_and_complete() {
    let f = fam(2, 0);
    let (m1, m2) = (f.mu(0), f.mu(1));
    let e1 = sym_poly(&f, SymKind::Elementary, 1, &[0, 1], &qp(-1));
    assert_eq!(e1, (&m1 + &m2).scale(&qp(-1)));
    assert!(sym_poly(&f, SymKind::Elementary, 3, &[0, 1], &RatFunc::one()).is_zero());
    assert_eq!(sym_poly(&f, SymKind::Complete, 2, &[0], &RatFunc::one()), m1.pow(2));
    assert_eq!(sym_poly(&f, SymKind::Complete, 0, &[0, 1], &RatFunc::one()), f.one());
    let h2 = sym_poly(&f, SymKind::Complete, 2, &[0, 1], &RatFunc::one());
    assert_eq!(h2, &(&m1.pow(2) + &m2.pow(2)) + &(&m1 * &m2));
}

#[test]
fn eigenvalue_relations() {
    let f = fam(2, 0);
    let e = eigen_relations(&f).unwrap();
    assert_eq!(e[0].scale(&RatFunc::q()), &f.mu(0) + &f.mu(1));
    assert_eq!(e[1].scale(&qp(2)), &f.mu(0) * &f.mu(1));
    let g = fam(1, 0);
    assert_eq!(eigen_relations(&g).unwrap()[0], g.mu(0).scale(&qp(-1)));
    assert!(matches!(eigen_relations(&fam(1, 1)), Err(SpectralError::OddPartPresent { n: 1 })));
}

#[test]
fn even_rank_two_table() {
    let f = fam(2, 0);
    let (m1, m2) = (f.mu(0), f.mu(1));
    let sum = &m1 + &m2;
    let prod = &m1 * &m2;
    let cube = &m1.pow(3) + &m2.pow(3);
    assert_eq!(power_sum_spectral(&f, 1).unwrap(), sum.scale(&qp(-1)));
    let p2 = &(&m1.pow(2) + &m2.pow(2)).scale(&qp(-1)) + &prod.scale(&(&qp(-2) * &q_delta()));
    assert_eq!(power_sum_spectral(&f, 2).unwrap(), p2);
    let p3 = &cube.scale(&qp(-1)) + &(&prod * &sum).scale(&(&qp(-2) * &q_delta()));
    assert_eq!(power_sum_spectral(&f, 3).unwrap(), p3);
    let s3 = (&cube + &(&prod * &sum)).scale(&qp(-3));
    assert_eq!(schur_spectral(&f, &part(&[3])), s3);
    assert_eq!(schur_spectral(&f, &part(&[2, 1])), (&prod * &sum).scale(&qp(-3)));
    assert!(schur_spectral(&f, &part(&[1, 1, 1])).is_zero());
}

#[test]
fn super_rank_one_one_table() {
    let f = fam(1, 1);
    let (mu, nu) = (f.mu(0), f.nu(0));
    let p1 = &mu.scale(&qp(-1)) - &nu.scale(&RatFunc::q());
    assert_eq!(power_sum_spectral(&f, 1).unwrap(), p1);
    assert_eq!(power_sum_spectral(&f, 2).unwrap(), &(&mu + &nu) * &p1);
    let quad = &(&mu.pow(2) + &(&mu * &nu)) + &nu.pow(2);
    assert_eq!(power_sum_spectral(&f, 3).unwrap(), &quad * &p1);
    assert_eq!(schur_spectral(&f, &part(&[3])), (&mu.pow(2) * &p1).scale(&qp(-2)));
    assert_eq!(schur_spectral(&f, &part(&[2, 1])), -&(&(&mu * &nu) * &p1));
    assert_eq!(schur_spectral(&f, &part(&[1, 1, 1])), (&nu.pow(2) * &p1).scale(&qp(2)));
}

#[test]
fn power_sums_are_polynomial() {
    for m in 0..=4 {
        for n in 0..=4 - m {
            if m + n == 0 {
                continue;
            }
            let f = fam(m, n);
            for k in 1..=5 {
                assert!(power_sum_spectral(&f, k).is_ok(), "({m}|{n}), k = {k}");
            }
        }
    }
}

#[test]
fn frobenius_consistency() {
    for (m, n) in [(2, 0), (1, 1), (2, 1), (1, 2), (3, 0)] {
        let f = fam(m, n);
        for deg in 1..=4 {
            let table = character_table(deg).unwrap();
            let schurs: Vec<MultiPoly> = table.partitions.iter().map(|l| schur_spectral(&f, l)).collect();
            for (r, nu) in table.partitions.iter().enumerate() {
                let lhs = nu
                    .parts()
                    .iter()
                    .fold(f.one(), |acc, &k| &acc * &power_sum_spectral(&f, k).unwrap());
                let rhs = schurs
                    .iter()
                    .zip(&table.values[r])
                    .fold(f.zero(), |acc, (s, chi)| &acc + &s.scale(chi));
                assert_eq!(lhs, rhs, "({m}|{n}), {nu}");
            }
        }
    }
}

#[test]
fn newton_identities() {
    for m in 0..=4 {
        for n in 0..=4 - m {
            if m + n == 0 {
                continue;
            }
            let f = fam(m, n);
            for k in 1..=5 {
                assert!(newton_check(&f, k).unwrap(), "({m}|{n}), k = {k}");
            }
        }
    }
}

#[test]
fn hall_littlewood_one_row() {
    let f = fam(2, 0);
    let q1 = hall_littlewood_row(&f, 1, &qp(-2)).unwrap();
    assert_eq!(q1, (&f.mu(0) + &f.mu(1)).scale(&(&RatFunc::one() - &qp(-2))));
    assert!(hl_compare(&f, 1).unwrap());
    assert!(hl_compare(&f, 2).unwrap());
    assert!(hl_compare(&fam(3, 0), 3).unwrap());
    assert!(hl_compare(&fam(1, 1), 1).is_err());
}

#[test]
fn supersymmetry() {
    let f = fam(1, 1);
    for k in 1..=3 {
        assert!(supersymmetry_check(&power_sum_spectral(&f, k).unwrap(), &f).unwrap());
    }
    let g = fam(2, 1);
    assert!(supersymmetry_check(&schur_spectral(&g, &part(&[2, 1])), &g).unwrap());
    for lambda in partitions(3) {
        assert!(supersymmetry_check(&schur_spectral(&g, &lambda), &g).unwrap());
    }
    assert!(!supersymmetry_check(&(&f.mu(0) + &f.nu(0)), &f).unwrap());
    assert!(!supersymmetry_check(&(&g.mu(0) - &g.nu(0).scale(&qp(2))), &g).unwrap());
    assert!(matches!(
        supersymmetry_check(&fam(2, 0).one(), &fam(2, 0)),
        Err(SpectralError::NotSuper)
    ));
}

#[test]
fn classical_limits() {
    for (m, n) in [(2, 0), (1, 1), (2, 1)] {
        let f = fam(m, n);
        for k in 1..=3u32 {
            let mut expect = f.zero();
            for i in 0..m {
                expect = &expect + &f.mu(i).pow(k);
            }
            for j in 0..n {
                expect = &expect - &f.nu(j).pow(k);
            }
            let p = power_sum_spectral(&f, k as usize).unwrap();
            assert_eq!(classical_limit(&p).unwrap(), expect, "({m}|{n}), k = {k}");
        }
    }
    let f = fam(2, 0);
    let s2 = classical_limit(&schur_spectral(&f, &part(&[2]))).unwrap();
    assert_eq!(s2, &(&f.mu(0).pow(2) + &f.mu(1).pow(2)) + &(&f.mu(0) * &f.mu(1)));
    let c = classical_limit(&f.one().scale(&q_int(3))).unwrap();
    assert_eq!(c, f.one().scale(&RatFunc::from_int(3)));
    let pole = f.one().scale(&(&RatFunc::q() - &RatFunc::one()).inv().unwrap());
    assert!(matches!(classical_limit(&pole), Err(SpectralError::Scalar(_))));
}

#[test]
fn exact_division() {
    let f = fam(2, 1);
    let a = &f.mu(0) - &f.nu(0).scale(&qp(2));
    let b = &(&f.mu(1) + &f.one()).pow(2) - &f.mu(0);
    let prod = &a * &b;
    assert_eq!(prod.exact_div(&a).unwrap(), b);
    assert_eq!(prod.exact_div(&b).unwrap(), a);
    assert!((&prod + &f.one()).exact_div(&a).is_none());
    assert!(RatExpr::new(f.one(), f.zero()).is_err());
}
