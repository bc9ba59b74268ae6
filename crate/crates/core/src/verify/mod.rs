//! End-to-end verification of the q-Frobenius formula through three
//! independent pipelines (RE algebra, representations, eigenvalues) plus the
//! supporting identities.

mod report;

use std::time::Instant;

use rayon::prelude::*;
use thiserror::Error;

use crate::exactla::ScalarMatrix;
use crate::hecke::{
    character_table, coxeter_from_generators, coxeter_with_gaps, gap_placements, jucys_murphy, partitions,
    primitive_idempotent, standard_tableaux, CharacterTable, HeckeError, Partition,
};
use crate::hsym::{birank_with, check_identities, validate, BiRank, HeckeSymmetry, HsymError, RankMode};
use crate::qscalar::RatFunc;
use crate::realg::{apply_rep, ReAlgebra, RealgError};
use crate::spectral::{
    classical_limit, hl_compare, newton_check, power_sum_spectral, schur_spectral, supersymmetry_check, MultiPoly,
    SpectralError, SpectralFamily,
};

pub use report::{CheckResult, CheckStatus, ReportEnvironment, Summary, VerificationReport, REPORT_SCHEMA};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{what} = {value} exceeds the bound {bound}")]
    BoundExceeded { what: String, value: usize, bound: usize },
    #[error(transparent)]
    Realg(#[from] RealgError),
    #[error(transparent)]
    Hsym(#[from] HsymError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Which Frobenius pipelines [`full_suite`] runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Algebra,
    Rep,
    Spectral,
    #[default]
    All,
}

impl Mode {
    fn includes(self, other: Mode) -> bool {
        self == Mode::All || self == other
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest degree of the Frobenius checks.
    pub n: usize,
    /// Largest tensor power for the representation pipeline.
    pub k: usize,
    /// Largest `k` in the bi-rank dimension sequence.
    pub kmax: usize,
    pub mode: Mode,
    pub rank_mode: RankMode,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n: 3,
            k: 3,
            kmax: 4,
            mode: Mode::All,
            rank_mode: RankMode::Exact,
        }
    }
}

/// Largest number of words in a graded component we reduce against.
const WORD_SPACE_BOUND: usize = 1024;
/// Largest `dim V^{⊗(n+k)}` for the representation pipeline.
const REP_SPACE_BOUND: usize = 256;

/// Largest degree whose word space is within [`WORD_SPACE_BOUND`].
fn degree_bound(dim: usize) -> usize {
    let base = dim * dim;
    (1..).take_while(|&d| base.pow(d as u32) <= WORD_SPACE_BOUND).last().unwrap_or(1)
}

/// Bound on `n` in [`frobenius_algebra`] and [`frobenius_rep`]: 3, or 4 for `N = 2`.
pub fn algebra_degree_bound(dim: usize) -> usize {
    if dim <= 2 {
        4
    } else {
        3
    }
}

/// Bound on `n` in [`frobenius_spectral`].
pub const SPECTRAL_DEGREE_BOUND: usize = 5;

fn check_bound(what: &str, value: usize, bound: usize) -> Result<(), VerifyError> {
    if value > bound {
        return Err(VerifyError::BoundExceeded {
            what: what.into(),
            value,
            bound,
        });
    }
    Ok(())
}

fn subject_of(alg: &ReAlgebra) -> String {
    alg.symmetry().name().unwrap_or("custom").to_string()
}

fn environment(alg: Option<&ReAlgebra>, rank_mode: RankMode) -> ReportEnvironment {
    ReportEnvironment {
        monomial_order: "deglex, generators l(i,j) ordered by (i,j)".into(),
        slot_convention: alg.and_then(|a| a.rep_convention().ok()).map(|c| format!("{c:?}").to_lowercase()),
        rank_mode: match rank_mode {
            RankMode::Exact => "exact".into(),
            RankMode::Fast { seed } => format!("fast (probabilistic, seed {seed})"),
        },
        note: None,
    }
}

fn timed(f: impl FnOnce() -> VerificationReport) -> VerificationReport {
    let start = Instant::now();
    let mut r = f();
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    r
}

/// Schur polynomials `s_λ(L)` for every `λ ⊢ n`, in table order.
fn algebra_schurs(alg: &ReAlgebra, table: &CharacterTable) -> Result<Vec<crate::realg::NCPoly>, RealgError> {
    table.partitions.par_iter().map(|l| alg.schur(l, None)).collect()
}

/// `Σ_λ χ^λ_ν x_λ` for the row of `ν`.
fn combine<T, F>(table: &CharacterTable, row: usize, xs: &[T], zero: T, scale_add: F) -> T
where
    F: Fn(T, &T, &RatFunc) -> T,
{
    xs.iter()
        .zip(&table.values[row])
        .fold(zero, |acc, (x, chi)| scale_add(acc, x, chi))
}

fn frobenius_algebra_checks(alg: &ReAlgebra, n: usize) -> Result<Vec<CheckResult>, VerifyError> {
    check_bound("n", n, algebra_degree_bound(alg.dim()))?;
    let table = character_table(n)?;
    let schurs = algebra_schurs(alg, &table)?;
    let dim = alg.dim();
    Ok(table
        .partitions
        .par_iter()
        .enumerate()
        .map(|(row, nu)| {
            let rhs = combine(&table, row, &schurs, crate::realg::NCPoly::zero(dim), |mut acc, s, chi| {
                acc.add_scaled(s, chi);
                acc
            });
            let residue = alg.normal_form(&(&alg.power_sum_partition(nu) - &rhs));
            CheckResult::new("frobenius_algebra", [("n", n.to_string()), ("nu", nu.to_string())])
                .verdict((!residue.is_zero()).then(|| format!("residue {residue}")))
        })
        .collect())
}

/// `p_ν(L) ≡ Σ_λ χ^λ(z_ν) s_λ(L)` modulo the RE ideal, for every `ν ⊢ n`.
pub fn frobenius_algebra(alg: &ReAlgebra, n: usize) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let checks = frobenius_algebra_checks(alg, n)?;
    let mut r = VerificationReport::new(subject_of(alg), environment(None, RankMode::Exact), checks);
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(r)
}

fn matrix_witness(lhs: &ScalarMatrix, rhs: &ScalarMatrix) -> Option<String> {
    lhs.first_difference(rhs)
        .map(|(r, c)| format!("entry ({r}, {c}): {} vs {}", lhs[(r, c)], rhs[(r, c)]))
}

fn frobenius_rep_checks(alg: &ReAlgebra, n: usize, k: usize) -> Result<Vec<CheckResult>, VerifyError> {
    check_bound("n", n, algebra_degree_bound(alg.dim()))?;
    check_bound("k", k, 3)?;
    let table = character_table(n)?;
    let reps = alg.rep_generators(k)?;
    // Schur side: traces of the idempotents taken in the representation.
    let schurs: Vec<ScalarMatrix> = table
        .partitions
        .par_iter()
        .map(|l| {
            let t = &standard_tableaux(l)[0];
            alg.ch_operator(&reps, &primitive_idempotent(t))
        })
        .collect::<Result<_, _>>()?;
    // Power-sum side: images of the single power sums, multiplied.
    let singles: Vec<ScalarMatrix> = (1..=n).map(|j| apply_rep(&reps, &alg.power_sum(j))).collect();
    let size = reps.space_dim();
    Ok(table
        .partitions
        .par_iter()
        .enumerate()
        .map(|(row, nu)| {
            let lhs = nu
                .parts()
                .iter()
                .fold(ScalarMatrix::identity(size), |acc, &j| acc.matmul(&singles[j - 1]));
            let rhs = combine(&table, row, &schurs, ScalarMatrix::zeros(size, size), |acc, s, chi| {
                &acc + &s.scale(chi)
            });
            CheckResult::new(
                "frobenius_rep",
                [("n", n.to_string()), ("k", k.to_string()), ("nu", nu.to_string())],
            )
            .verdict(matrix_witness(&lhs, &rhs))
        })
        .collect())
}

/// The Frobenius identities as operator equalities on `V^{⊗k}`.
pub fn frobenius_rep(alg: &ReAlgebra, n: usize, k: usize) -> Result<VerificationReport, VerifyError> {
    let checks = frobenius_rep_checks(alg, n, k)?;
    Ok(timed(|| {
        VerificationReport::new(subject_of(alg), environment(Some(alg), RankMode::Exact), checks)
    }))
}

fn frobenius_spectral_checks(f: &SpectralFamily, n: usize) -> Result<Vec<CheckResult>, VerifyError> {
    check_bound("n", n, SPECTRAL_DEGREE_BOUND)?;
    let table = character_table(n)?;
    let schurs: Vec<MultiPoly> = table.partitions.par_iter().map(|l| schur_spectral(f, l)).collect();
    let singles: Vec<MultiPoly> = (1..=n).map(|j| power_sum_spectral(f, j)).collect::<Result<_, _>>()?;
    Ok(table
        .partitions
        .par_iter()
        .enumerate()
        .map(|(row, nu)| {
            let lhs = nu.parts().iter().fold(f.one(), |acc, &j| &acc * &singles[j - 1]);
            let rhs = combine(&table, row, &schurs, f.zero(), |acc, s, chi| &acc + &s.scale(chi));
            let diff = &lhs - &rhs;
            CheckResult::new(
                "frobenius_spectral",
                [("family", f.to_string()), ("n", n.to_string()), ("nu", nu.to_string())],
            )
            .verdict((!diff.is_zero()).then(|| format!("difference {diff}")))
        })
        .collect())
}

/// Exact polynomial equality of `p_ν` and `Σ_λ χ^λ_ν s_λ` in the eigenvalues.
pub fn frobenius_spectral(f: &SpectralFamily, n: usize) -> Result<VerificationReport, VerifyError> {
    let checks = frobenius_spectral_checks(f, n)?;
    Ok(timed(|| {
        let mut env = environment(None, RankMode::Exact);
        env.monomial_order = "lex on (mu_1..mu_m, nu_1..nu_n)".into();
        VerificationReport::new(format!("spectral family {f}"), env, checks)
    }))
}

/// `ch(z_ν) ≡ p_ν(L)` for the canonical placement of gaps and, when one
/// exists, for a second placement of the same cyclic type.
pub fn cyclic_power_sum_check(alg: &ReAlgebra, nu: &Partition) -> Result<bool, VerifyError> {
    Ok(cyclic_power_sum_witness(alg, nu)?.is_none())
}

fn cyclic_power_sum_witness(alg: &ReAlgebra, nu: &Partition) -> Result<Option<String>, VerifyError> {
    let n = nu.n();
    check_bound("n", n, algebra_degree_bound(alg.dim()))?;
    let p = alg.power_sum_partition(nu);
    let mut elements = vec![("canonical".to_string(), coxeter_with_gaps(nu)?)];
    let canonical = crate::hecke::canonical_gap_placement(nu);
    if let Some(other) = gap_placements(nu).into_iter().find(|g| *g != canonical) {
        elements.push((format!("{other:?}"), coxeter_from_generators(n, &other)?));
    }
    for (label, z) in elements {
        let residue = alg.normal_form(&(&alg.ch(&z)? - &p));
        if !residue.is_zero() {
            return Ok(Some(format!("placement {label}: residue {residue}")));
        }
    }
    Ok(None)
}

type Group<'a> = Box<dyn Fn() -> Vec<CheckResult> + Send + Sync + 'a>;

/// Turns an error inside a check group into a failed check.
fn guard(id: &str, f: impl FnOnce() -> Result<Vec<CheckResult>, VerifyError>) -> Vec<CheckResult> {
    f().unwrap_or_else(|e| vec![CheckResult::new(id, Vec::<(String, String)>::new()).fail(e.to_string())])
}

fn skipped(ids: &[&str], reason: &str) -> Vec<CheckResult> {
    ids.iter()
        .map(|id| CheckResult::new(id, Vec::<(String, String)>::new()).skip(reason))
        .collect()
}

const DOWNSTREAM: &[&str] = &[
    "skew_identities",
    "birank",
    "rep_convention",
    "schur_weyl",
    "centrality",
    "cyclic_power_sum",
    "littlewood_richardson",
    "frobenius_algebra",
    "frobenius_rep",
    "frobenius_spectral",
    "cayley_hamilton",
    "newton",
    "hall_littlewood",
    "supersymmetry",
    "classical_limit",
];

/// Every check for a validated symmetry.
pub fn full_suite(sym: &HeckeSymmetry, config: &VerifyConfig) -> VerificationReport {
    full_suite_matrix(
        sym.name().unwrap_or("custom"),
        sym.r().clone(),
        sym.dim(),
        config,
    )
}

/// [`full_suite`] starting from an unvalidated matrix; a failed validation is
/// reported and everything downstream is skipped.
pub fn full_suite_matrix(name: &str, r: ScalarMatrix, dim: usize, config: &VerifyConfig) -> VerificationReport {
    timed(|| {
        let mut checks = Vec::new();
        let sym = match validate(r, dim) {
            Ok(s) => {
                checks.push(CheckResult::new("validate", [("N", dim)]));
                s.with_name(name)
            }
            Err(e) => {
                checks.push(CheckResult::new("validate", [("N", dim)]).fail(e.to_string()));
                checks.extend(skipped(DOWNSTREAM, "validation failed"));
                return VerificationReport::new(name, environment(None, config.rank_mode), checks);
            }
        };
        let alg = match ReAlgebra::new(sym.clone()) {
            Ok(a) => a,
            Err(e) => {
                checks.push(CheckResult::new("skew_inverse", [("N", dim)]).fail(e.to_string()));
                checks.extend(skipped(&DOWNSTREAM[1..], "not skew-invertible"));
                return VerificationReport::new(name, environment(None, config.rank_mode), checks);
            }
        };
        let br = birank_with(&sym, config.kmax, config.rank_mode);
        checks.extend(birank_checks(&sym, &br, config));
        let groups = suite_groups(&alg, br.as_ref().ok(), config);
        let results: Vec<Vec<CheckResult>> = groups.par_iter().map(|g| g()).collect();
        checks.extend(results.into_iter().flatten());
        VerificationReport::new(name, environment(Some(&alg), config.rank_mode), checks)
    })
}

fn birank_checks(sym: &HeckeSymmetry, br: &Result<BiRank, HsymError>, config: &VerifyConfig) -> Vec<CheckResult> {
    match br {
        Ok(b) => {
            let identities = CheckResult::new("skew_identities", [("r", b.r), ("s", b.s)])
                .verdict(check_identities(sym, b.r, b.s).err().map(|e| e.to_string()));
            let dims: Vec<String> = b.hp_coefficients.iter().map(|d| d.to_string()).collect();
            let rank = CheckResult::new(
                "birank",
                [
                    ("kmax", config.kmax.to_string()),
                    ("dimensions", dims.join(",")),
                    ("result", b.to_string()),
                ],
            );
            vec![identities, rank]
        }
        Err(e) => vec![
            CheckResult::new("skew_identities", Vec::<(String, String)>::new()).skip("bi-rank unknown"),
            CheckResult::new("birank", [("kmax", config.kmax)]).fail(e.to_string()),
        ],
    }
}

fn suite_groups<'a>(alg: &'a ReAlgebra, br: Option<&'a BiRank>, config: &'a VerifyConfig) -> Vec<Group<'a>> {
    let dim = alg.dim();
    let dmax = degree_bound(dim);
    let mut groups: Vec<Group<'a>> = Vec::new();

    groups.push(Box::new(move || {
        guard("rep_convention", || {
            let c = alg.rep_convention()?;
            let mut out = vec![CheckResult::new("rep_convention", [("convention", format!("{c:?}").to_lowercase())])];
            for k in 2..=config.k.min(3) {
                let res = CheckResult::new("schur_weyl", [("k", k)]);
                out.push(if dim.pow(k as u32) > REP_SPACE_BOUND {
                    res.skip("dimension bound")
                } else {
                    res.verdict((!alg.schur_weyl_check(k)?).then(|| "an operator fails to commute with R".into()))
                });
            }
            Ok(out)
        })
    }));

    groups.push(Box::new(move || {
        guard("centrality", || {
            let mut items: Vec<(String, crate::realg::NCPoly)> = Vec::new();
            for j in 1..dmax {
                items.push((format!("p_{j}"), alg.power_sum(j)));
            }
            for deg in 2..dmax.min(4) {
                for l in partitions(deg) {
                    items.push((format!("s_{l}"), alg.schur(&l, None)?));
                }
                items.push((format!("ch(j_{deg})"), alg.ch(&jucys_murphy(deg, deg)?)?));
            }
            Ok(items
                .par_iter()
                .map(|(label, p)| {
                    CheckResult::new("centrality", [("element", label)])
                        .verdict((!alg.is_central(p)).then(|| "nonzero commutator with a generator".into()))
                })
                .collect())
        })
    }));

    groups.push(Box::new(move || {
        guard("cyclic_power_sum", || {
            if dmax < 3 {
                return Ok(skipped(&["cyclic_power_sum"], "degree bound"));
            }
            partitions(3)
                .par_iter()
                .map(|nu| Ok(CheckResult::new("cyclic_power_sum", [("nu", nu)]).verdict(cyclic_power_sum_witness(alg, nu)?)))
                .collect()
        })
    }));

    groups.push(Box::new(move || {
        guard("littlewood_richardson", || {
            if dmax < 3 {
                return Ok(skipped(&["littlewood_richardson"], "degree bound"));
            }
            let s = |p: &[usize]| alg.schur(&Partition::new(p.to_vec()).expect("partition"), None);
            let cases = [
                ("s_(1)*s_(1) = s_(2) + s_(1,1)", &s(&[1])? * &s(&[1])?, &s(&[2])? + &s(&[1, 1])?),
                ("s_(2)*s_(1) = s_(3) + s_(2,1)", &s(&[2])? * &s(&[1])?, &s(&[3])? + &s(&[2, 1])?),
            ];
            Ok(cases
                .iter()
                .map(|(label, lhs, rhs)| {
                    let residue = alg.normal_form(&(lhs - rhs));
                    CheckResult::new("littlewood_richardson", [("identity", label)])
                        .verdict((!residue.is_zero()).then(|| format!("residue {residue}")))
                })
                .collect())
        })
    }));

    if config.mode.includes(Mode::Algebra) {
        for n in 2..=config.n {
            groups.push(Box::new(move || {
                if n > dmax.min(algebra_degree_bound(dim)) {
                    return skipped(&["frobenius_algebra"], &format!("degree bound at n = {n}"));
                }
                guard("frobenius_algebra", || frobenius_algebra_checks(alg, n))
            }));
        }
    }
    if config.mode.includes(Mode::Rep) {
        for n in 1..=config.n {
            for k in 1..=config.k {
                groups.push(Box::new(move || {
                    if dim.pow((n + k) as u32) > REP_SPACE_BOUND || n > algebra_degree_bound(dim) || k > 3 {
                        return skipped(&["frobenius_rep"], &format!("dimension bound at n = {n}, k = {k}"));
                    }
                    guard("frobenius_rep", || frobenius_rep_checks(alg, n, k))
                }));
            }
        }
    }

    let Some(br) = br else {
        groups.push(Box::new(|| {
            skipped(
                &["frobenius_spectral", "cayley_hamilton", "newton", "hall_littlewood", "supersymmetry", "classical_limit"],
                "bi-rank unknown",
            )
        }));
        return groups;
    };
    let (r, s) = (br.r, br.s);

    groups.push(Box::new(move || {
        let res = CheckResult::new("cayley_hamilton", [("m", r)]);
        if s != 0 {
            return vec![res.skip(format!("bi-rank ({r}|{s})"))];
        }
        if r > dmax {
            return vec![res.skip("degree bound")];
        }
        guard("cayley_hamilton", || {
            let ok = alg.cayley_hamilton_even(r)?;
            Ok(vec![res.verdict((!ok).then(|| "an entry has nonzero normal form".into()))])
        })
    }));

    if r + s == 0 {
        return groups;
    }
    let family = SpectralFamily::new(r, s).expect("nonempty family");
    if config.mode.includes(Mode::Spectral) {
        groups.push(Box::new(move || {
            guard("frobenius_spectral", || {
                let mut out = Vec::new();
                for n in 1..=config.n.min(SPECTRAL_DEGREE_BOUND) {
                    out.extend(frobenius_spectral_checks(&family, n)?);
                }
                Ok(out)
            })
        }));
    }
    groups.push(Box::new(move || guard("newton", || spectral_identity_checks(&family))));
    groups
}

fn spectral_identity_checks(f: &SpectralFamily) -> Result<Vec<CheckResult>, VerifyError> {
    let mut out = Vec::new();
    let fam = [("family".to_string(), f.to_string())];
    let with = |k: usize| [fam[0].clone(), ("k".to_string(), k.to_string())];
    for k in 1..=5 {
        out.push(CheckResult::new("newton", with(k)).verdict((!newton_check(f, k)?).then(|| "nonzero".into())));
    }
    for k in 1..=4 {
        let res = CheckResult::new("hall_littlewood", with(k));
        out.push(if f.n() > 0 {
            res.skip("odd eigenvalues present")
        } else {
            res.verdict((!hl_compare(f, k)?).then(|| "functions differ".into()))
        });
    }
    if f.m() > 0 && f.n() > 0 {
        for k in 1..=3 {
            let p = power_sum_spectral(f, k)?;
            out.push(
                CheckResult::new("supersymmetry", [fam[0].clone(), ("element".to_string(), format!("p_{k}"))])
                    .verdict((!supersymmetry_check(&p, f)?).then(|| p.to_string())),
            );
        }
        for l in partitions(3) {
            let p = schur_spectral(f, &l);
            out.push(
                CheckResult::new("supersymmetry", [fam[0].clone(), ("element".to_string(), format!("s_{l}"))])
                    .verdict((!supersymmetry_check(&p, f)?).then(|| p.to_string())),
            );
        }
    } else {
        out.push(CheckResult::new("supersymmetry", fam.clone()).skip("needs even and odd eigenvalues"));
    }
    for k in 1..=3u32 {
        let limit = classical_limit(&power_sum_spectral(f, k as usize)?)?;
        let mut expect = f.zero();
        for i in 0..f.m() {
            expect = &expect + &f.mu(i).pow(k);
        }
        for j in 0..f.n() {
            expect = &expect - &f.nu(j).pow(k);
        }
        out.push(
            CheckResult::new("classical_limit", with(k as usize))
                .verdict((limit != expect).then(|| format!("limit {limit}"))),
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
