//! Command-line front end: symmetry files, checks, tables and bi-ranks.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactla::ScalarMatrix;
use crate::hecke::{character_table_with_bound, partitions, HeckeError, DEFAULT_CHARACTER_BOUND};
use crate::hsym::{birank_with, builtin, validate, HeckeSymmetry, HsymError, RankMode};
use crate::qscalar::{parse_scalar, ScalarError};
use crate::spectral::{power_sum_spectral, schur_spectral, MultiPoly, SpectralError, SpectralFamily};
use crate::verify::{full_suite, full_suite_matrix, Mode, VerificationReport, VerifyConfig};

/// Exit code: every check passed.
pub const EXIT_OK: i32 = 0;
/// Exit code: a verification failed.
pub const EXIT_FAILURE: i32 = 1;
/// Exit code: the input could not be read or parsed.
pub const EXIT_INPUT: i32 = 2;

/// Seed used by `--fast-rank`.
const FAST_RANK_SEED: u64 = 0x5eed;

/// On-disk form of a Hecke symmetry: `N` and the `N²×N²` entries, row-major
/// with the leftmost tensor factor most significant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryFile {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub entries: Vec<Vec<String>>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed symmetry file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("entry ({row}, {col}): {source}")]
    Entry {
        row: usize,
        col: usize,
        #[source]
        source: ScalarError,
    },
    #[error("expected {expected} entries per row and {expected} rows, found {found}")]
    Dimensions { expected: usize, found: String },
    #[error("invalid family '{0}', expected m,n")]
    Family(String),
    #[error(transparent)]
    Hsym(#[from] HsymError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

impl SymmetryFile {
    pub fn from_symmetry(sym: &HeckeSymmetry) -> Self {
        let r = sym.r();
        SymmetryFile {
            n: sym.dim(),
            name: sym.name().map(str::to_string),
            entries: (0..r.rows())
                .map(|i| (0..r.cols()).map(|j| r[(i, j)].to_string()).collect())
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("symmetry file serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    /// Parses the entries; the matrix is not validated.
    pub fn matrix(&self) -> Result<ScalarMatrix, CliError> {
        let size = self.n * self.n;
        if self.entries.len() != size || self.entries.iter().any(|r| r.len() != size) {
            let lens: Vec<String> = self.entries.iter().map(|r| r.len().to_string()).collect();
            return Err(CliError::Dimensions {
                expected: size,
                found: format!("{} rows of lengths [{}]", self.entries.len(), lens.join(", ")),
            });
        }
        let mut rows = Vec::with_capacity(size);
        for (i, row) in self.entries.iter().enumerate() {
            let mut out = Vec::with_capacity(size);
            for (j, s) in row.iter().enumerate() {
                out.push(parse_scalar(s).map_err(|source| CliError::Entry { row: i, col: j, source })?);
            }
            rows.push(out);
        }
        Ok(ScalarMatrix::from_rows(rows)
            .expect("rectangular")
            .with_shape(vec![self.n, self.n]))
    }

    pub fn symmetry(&self) -> Result<HeckeSymmetry, CliError> {
        let s = validate(self.matrix()?, self.n)?;
        Ok(match &self.name {
            Some(n) => s.with_name(n.clone()),
            None => s,
        })
    }
}

#[derive(Parser, Debug)]
#[command(name = "qfrob", version, about = "Exact checks of the q-Frobenius formula for Hecke symmetries")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run every verification for a built-in symmetry or a symmetry file.
    Check {
        /// Built-in name (r2, r11, glN:<N>, glMN:<m>,<n>) or path to a JSON symmetry file.
        input: String,
        /// Largest degree of the Frobenius checks.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Largest tensor power for the representation checks.
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Largest degree in the bi-rank dimension sequence.
        #[arg(long, default_value_t = 4)]
        kmax: usize,
        /// Which Frobenius pipelines to run.
        #[arg(long, value_enum, default_value_t = CliMode::All)]
        mode: CliMode,
        /// Write the structured report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Compute ranks at random rational values of q.
        #[arg(long)]
        fast_rank: bool,
    },
    /// Print a table of characters, spectral Schur functions or power sums.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        /// Degree of the character table.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Eigenvalue family as m,n.
        #[arg(long, default_value = "2,0")]
        family: String,
        /// Largest degree of spectral tables.
        #[arg(long, default_value_t = 3)]
        up_to: usize,
        /// Largest character table degree accepted.
        #[arg(long, default_value_t = DEFAULT_CHARACTER_BOUND)]
        bound: usize,
        /// Write the table as JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bi-rank of a symmetry from the dimensions of its antisymmetrizer images.
    Birank {
        input: String,
        #[arg(long, default_value_t = 4)]
        kmax: usize,
        #[arg(long)]
        fast_rank: bool,
    },
    /// Write a built-in symmetry as a JSON symmetry file.
    Export {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CliMode {
    Algebra,
    Rep,
    Spectral,
    All,
}

impl From<CliMode> for Mode {
    fn from(m: CliMode) -> Mode {
        match m {
            CliMode::Algebra => Mode::Algebra,
            CliMode::Rep => Mode::Rep,
            CliMode::Spectral => Mode::Spectral,
            CliMode::All => Mode::All,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Characters,
    Schur,
    PowerSums,
}

/// A resolved `input` argument.
enum Input {
    Symmetry(HeckeSymmetry),
    /// Parsed but not a valid Hecke symmetry; the failure belongs in a report.
    Unvalidated { name: String, matrix: ScalarMatrix, n: usize },
}

fn resolve(input: &str) -> Result<Input, CliError> {
    let path = Path::new(input);
    if !path.exists() {
        return Ok(Input::Symmetry(builtin(input)?));
    }
    let file = SymmetryFile::read(path)?;
    let matrix = file.matrix()?;
    let name = file.name.clone().unwrap_or_else(|| input.to_string());
    Ok(match validate(matrix.clone(), file.n) {
        Ok(s) => Input::Symmetry(s.with_name(name)),
        Err(_) => Input::Unvalidated {
            name,
            matrix,
            n: file.n,
        },
    })
}

fn parse_family(s: &str) -> Result<SpectralFamily, CliError> {
    let (m, n) = s.split_once(',').ok_or_else(|| CliError::Family(s.into()))?;
    let parse = |x: &str| x.trim().parse::<usize>().map_err(|_| CliError::Family(s.into()));
    Ok(SpectralFamily::new(parse(m)?, parse(n)?)?)
}

fn rank_mode(fast: bool) -> RankMode {
    if fast {
        RankMode::Fast { seed: FAST_RANK_SEED }
    } else {
        RankMode::Exact
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Output of a command: text for standard output and an exit code.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn check(input: &str, config: &VerifyConfig, out: Option<&Path>) -> Result<Outcome, CliError> {
    let report: VerificationReport = match resolve(input)? {
        Input::Symmetry(s) => full_suite(&s, config),
        Input::Unvalidated { name, matrix, n } => full_suite_matrix(&name, matrix, n, config),
    };
    if let Some(p) = out {
        write_file(p, &report.to_json())?;
    }
    Ok(Outcome {
        stdout: report.to_text(),
        code: if report.all_passed() { EXIT_OK } else { EXIT_FAILURE },
    })
}

/// Divides by `p_1` when that is exact and the family has odd eigenvalues,
/// which is how the super tables are usually written.
fn with_p1_factor(p: &MultiPoly, p1: &MultiPoly, f: &SpectralFamily) -> String {
    if f.n() > 0 && !p.is_zero() && p != p1 {
        if let Some(quo) = p.exact_div(p1) {
            return format!("{p}\n      = ({quo})*p_1");
        }
    }
    p.to_string()
}

fn table(kind: TableKind, n: usize, family: &str, up_to: usize, bound: usize) -> Result<(String, serde_json::Value), CliError> {
    let mut text = String::new();
    let json = match kind {
        TableKind::Characters => {
            let t = character_table_with_bound(n, bound)?;
            let labels: Vec<String> = t.partitions.iter().map(|p| p.to_string()).collect();
            let cells: Vec<Vec<String>> = t.values.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
            let width = cells
                .iter()
                .flatten()
                .chain(labels.iter())
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(1);
            let _ = writeln!(text, "characters chi^lambda(z_nu), rows nu, columns lambda, n = {n}");
            let _ = write!(text, "{:>w$}", "", w = width + 2);
            for l in &labels {
                let _ = write!(text, " {l:>width$}");
            }
            text.push('\n');
            for (label, row) in labels.iter().zip(&cells) {
                let _ = write!(text, "{:>w$}", format!("p_{label}"), w = width + 2);
                for c in row {
                    let _ = write!(text, " {c:>width$}");
                }
                text.push('\n');
            }
            serde_json::json!({ "kind": "characters", "n": n, "partitions": labels, "values": cells })
        }
        TableKind::Schur | TableKind::PowerSums => {
            let f = parse_family(family)?;
            let p1 = power_sum_spectral(&f, 1)?;
            let mut entries = Vec::new();
            let _ = writeln!(text, "family {f}");
            for k in 1..=up_to {
                if kind == TableKind::PowerSums {
                    let p = power_sum_spectral(&f, k)?;
                    let _ = writeln!(text, "p_{k} = {}", with_p1_factor(&p, &p1, &f));
                    entries.push(serde_json::json!({ "label": format!("p_{k}"), "value": p.to_string() }));
                } else {
                    for l in partitions(k) {
                        let s = schur_spectral(&f, &l);
                        let _ = writeln!(text, "s_{l} = {}", with_p1_factor(&s, &p1, &f));
                        entries.push(serde_json::json!({ "label": format!("s_{l}"), "value": s.to_string() }));
                    }
                }
            }
            let name = if kind == TableKind::Schur { "schur" } else { "power_sums" };
            serde_json::json!({ "kind": name, "family": f.to_string(), "entries": entries })
        }
    };
    Ok((text, json))
}

fn birank_text(input: &str, kmax: usize, fast: bool) -> Result<Outcome, CliError> {
    let sym = match resolve(input)? {
        Input::Symmetry(s) => s,
        Input::Unvalidated { matrix, n, .. } => validate(matrix, n)?,
    };
    let b = birank_with(&sym, kmax, rank_mode(fast))?;
    let dims: Vec<String> = b.hp_coefficients.iter().map(|d| d.to_string()).collect();
    let mut text = format!("dimensions {}\n{b}\n", dims.join(","));
    if b.probabilistic {
        text += "(ranks computed at random values of q)\n";
    }
    Ok(Outcome {
        stdout: text,
        code: EXIT_OK,
    })
}

/// Runs a parsed command line.
pub fn execute(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Check {
            input,
            n,
            k,
            kmax,
            mode,
            out,
            fast_rank,
        } => {
            let config = VerifyConfig {
                n,
                k,
                kmax,
                mode: mode.into(),
                rank_mode: rank_mode(fast_rank),
            };
            check(&input, &config, out.as_deref())
        }
        Command::Table {
            kind,
            n,
            family,
            up_to,
            bound,
            out,
        } => table(kind, n, &family, up_to, bound).and_then(|(text, json)| {
            if let Some(p) = out {
                write_file(&p, &serde_json::to_string_pretty(&json).expect("json"))?;
            }
            Ok(Outcome {
                stdout: text,
                code: EXIT_OK,
            })
        }),
        Command::Birank { input, kmax, fast_rank } => birank_text(&input, kmax, fast_rank),
        Command::Export { name, out } => builtin(&name).map_err(CliError::from).and_then(|s| {
            let json = SymmetryFile::from_symmetry(&s).to_json();
            match out {
                Some(p) => write_file(&p, &json).map(|_| Outcome {
                    stdout: format!("wrote {}\n", p.display()),
                    code: EXIT_OK,
                }),
                None => Ok(Outcome {
                    stdout: json + "\n",
                    code: EXIT_OK,
                }),
            }
        }),
    };
    result.unwrap_or_else(|e| Outcome {
        stdout: String::new(),
        code: error_code(&e, &e.to_string()),
    })
}

/// Verification errors exit with 1, input problems with 2. The message goes
/// to standard error.
fn error_code(e: &CliError, msg: &str) -> i32 {
    eprintln!("error: {msg}");
    match e {
        CliError::Hsym(HsymError::BraidViolation { .. } | HsymError::HeckeViolation { .. })
        | CliError::Hsym(HsymError::Inconclusive { .. } | HsymError::IdentityMismatch { .. }) => EXIT_FAILURE,
        _ => EXIT_INPUT,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            Outcome {
                stdout: if e.use_stderr() {
                    eprint!("{e}");
                    String::new()
                } else {
                    e.to_string()
                },
                code,
            }
        }
    }
}
