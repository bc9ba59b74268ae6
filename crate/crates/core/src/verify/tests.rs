use super::*;
use crate::hsym::builtin;

fn alg(name: &str) -> ReAlgebra {
    ReAlgebra::new(builtin(name).unwrap()).unwrap()
}

#[test]
fn algebra_pipeline_small_degrees() {
    for name in ["r2", "r11"] {
        let a = alg(name);
        for n in 2..=3 {
            let r = frobenius_algebra(&a, n).unwrap();
            assert!(r.all_passed(), "{}", r.to_text());
            assert_eq!(r.checks.len(), partitions(n).len());
        }
    }
    assert!(matches!(
        frobenius_algebra(&alg("glN:3"), 4),
        Err(VerifyError::BoundExceeded { bound: 3, .. })
    ));
}

#[test]
fn rep_pipeline() {
    let a = alg("r2");
    for k in 0..=3 {
        assert!(frobenius_rep(&a, 3, k).unwrap().all_passed(), "k = {k}");
    }
    let b = alg("r11");
    for k in 1..=2 {
        assert!(frobenius_rep(&b, 3, k).unwrap().all_passed(), "k = {k}");
    }
}

#[test]
fn spectral_pipeline() {
    for (m, n, deg) in [(2, 0, 3), (1, 1, 3), (3, 0, 4), (2, 1, 4)] {
        let f = SpectralFamily::new(m, n).unwrap();
        let r = frobenius_spectral(&f, deg).unwrap();
        assert!(r.all_passed(), "{}", r.to_text());
    }
    let f = SpectralFamily::new(1, 0).unwrap();
    assert!(frobenius_spectral(&f, 6).is_err());
}

#[test]
fn cyclic_power_sum_cases() {
    let a = alg("r2");
    for nu in partitions(3).iter().chain(partitions(4).iter()) {
        assert!(cyclic_power_sum_check(&a, nu).unwrap(), "{nu}");
    }
    let b = alg("r11");
    for nu in partitions(3) {
        assert!(cyclic_power_sum_check(&b, &nu).unwrap(), "{nu}");
    }
}

#[test]
fn full_suite_builtins() {
    let config = VerifyConfig::default();
    let r = full_suite(&builtin("r2").unwrap(), &config);
    assert!(r.all_passed(), "{}", r.to_text());
    assert!(r.find("cayley_hamilton").all(|c| c.passed()));
    let r = full_suite(&builtin("r11").unwrap(), &config);
    assert!(r.all_passed(), "{}", r.to_text());
    let ch: Vec<_> = r.find("cayley_hamilton").collect();
    assert_eq!(ch.len(), 1);
    assert_eq!(ch[0].status, CheckStatus::Skipped);
    assert_eq!(ch[0].reason.as_deref(), Some("bi-rank (1|1)"));
    assert!(r.environment.slot_convention.is_some());
}

#[test]
fn full_suite_of_corrupted_matrix() {
    let sym = builtin("r2").unwrap();
    let mut m = sym.r().clone();
    m[(1, 2)] = &m[(1, 2)] + &RatFunc::one();
    let r = full_suite_matrix("mutant", m, 2, &VerifyConfig::default());
    assert!(!r.all_passed());
    let v: Vec<_> = r.find("validate").collect();
    assert_eq!(v[0].status, CheckStatus::Fail);
    assert!(v[0].witness.as_ref().unwrap().contains("braid") || v[0].witness.as_ref().unwrap().contains("Hecke"));
    assert!(r.checks[1..].iter().all(|c| c.status == CheckStatus::Skipped));
}

#[test]
fn reports_are_deterministic() {
    let config = VerifyConfig {
        n: 2,
        k: 2,
        ..VerifyConfig::default()
    };
    let sym = builtin("r11").unwrap();
    let mut a = full_suite(&sym, &config);
    let mut b = full_suite(&sym, &config);
    a.elapsed_ms = 0;
    b.elapsed_ms = 0;
    assert_eq!(a, b);
    let json = a.to_json();
    let back: VerificationReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, a);
}

#[test]
fn mode_restricts_pipelines() {
    let config = VerifyConfig {
        mode: Mode::Spectral,
        ..VerifyConfig::default()
    };
    let r = full_suite(&builtin("r11").unwrap(), &config);
    assert!(r.all_passed());
    assert_eq!(r.find("frobenius_algebra").count(), 0);
    assert_eq!(r.find("frobenius_rep").count(), 0);
    assert!(r.find("frobenius_spectral").count() > 0);
}
