//! Python bindings. The extension module is named `qfrob`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use qfrob::cli::SymmetryFile;
use qfrob::hecke::{character_table as hecke_table, Partition};
use qfrob::hsym::{self, HeckeSymmetry};
use qfrob::qscalar;
use qfrob::realg::ReAlgebra;
use qfrob::spectral::{self, SpectralFamily};
use qfrob::verify::{self, Mode, VerificationReport, VerifyConfig};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn runtime_err(e: impl std::fmt::Display) -> PyErr {
    PyRuntimeError::new_err(e.to_string())
}

fn partition(parts: Vec<usize>) -> PyResult<Partition> {
    Partition::new(parts).map_err(value_err)
}

fn family(m: usize, n: usize) -> PyResult<SpectralFamily> {
    SpectralFamily::new(m, n).map_err(value_err)
}

/// A validated Hecke symmetry.
#[pyclass(name = "Symmetry", module = "qfrob", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySymmetry {
    inner: HeckeSymmetry,
}

#[pymethods]
impl PySymmetry {
    /// Built-in symmetry by name: `r2`, `r11`, `glN:<N>` or `glMN:<m>,<n>`.
    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        Ok(PySymmetry { inner: hsym::builtin(name).map_err(value_err)? })
    }

    /// Validates an `N² x N²` matrix given as rows of scalar strings.
    #[staticmethod]
    #[pyo3(signature = (n, entries, name=None))]
    fn from_entries(n: usize, entries: Vec<Vec<String>>, name: Option<String>) -> PyResult<Self> {
        let file = SymmetryFile { n, name, entries };
        Ok(PySymmetry { inner: file.symmetry().map_err(value_err)? })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let file = SymmetryFile::from_json(text).map_err(value_err)?;
        Ok(PySymmetry { inner: file.symmetry().map_err(value_err)? })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn name(&self) -> Option<String> {
        self.inner.name().map(str::to_owned)
    }

    fn entries(&self) -> Vec<Vec<String>> {
        SymmetryFile::from_symmetry(&self.inner).entries
    }

    fn to_json(&self) -> String {
        SymmetryFile::from_symmetry(&self.inner).to_json()
    }

    /// Returns `(r, s, dimensions)`.
    #[pyo3(signature = (kmax=4))]
    fn birank(&self, kmax: usize) -> PyResult<(usize, usize, Vec<u64>)> {
        let b = hsym::birank(&self.inner, kmax).map_err(runtime_err)?;
        Ok((b.r, b.s, b.hp_coefficients))
    }

    /// Whether `BC` and the traces of `B`, `C` match bi-rank `(r|s)`.
    fn skew_identities(&self, r: usize, s: usize) -> bool {
        hsym::check_identities(&self.inner, r, s).is_ok()
    }

    fn __repr__(&self) -> String {
        format!("Symmetry(name={:?}, dim={})", self.inner.name().unwrap_or("?"), self.inner.dim())
    }
}

/// Result of a verification run.
#[pyclass(name = "Report", module = "qfrob", frozen)]
struct PyReport {
    inner: VerificationReport,
}

#[pymethods]
impl PyReport {
    #[getter]
    fn passed(&self) -> usize {
        self.inner.summary.passed
    }

    #[getter]
    fn failed(&self) -> usize {
        self.inner.summary.failed
    }

    #[getter]
    fn skipped(&self) -> usize {
        self.inner.summary.skipped
    }

    fn all_passed(&self) -> bool {
        self.inner.all_passed()
    }

    /// Ids of the failing checks.
    fn failures(&self) -> Vec<String> {
        self.inner.failures().map(|c| c.id.clone()).collect()
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn __repr__(&self) -> String {
        let s = &self.inner.summary;
        format!("Report(passed={}, failed={}, skipped={})", s.passed, s.failed, s.skipped)
    }
}

/// The RE algebra of a symmetry.
#[pyclass(name = "Algebra", module = "qfrob", frozen)]
struct PyAlgebra {
    inner: ReAlgebra,
}

#[pymethods]
impl PyAlgebra {
    #[new]
    fn new(sym: &PySymmetry) -> PyResult<Self> {
        Ok(PyAlgebra { inner: ReAlgebra::new(sym.inner.clone()).map_err(runtime_err)? })
    }

    /// Dimension of the degree-`d` component of the quotient.
    fn quotient_dimension(&self, d: usize) -> usize {
        self.inner.ideal_component(d).quotient_dimension()
    }

    /// Frobenius formula in the algebra at degree `n`.
    fn frobenius(&self, n: usize) -> PyResult<PyReport> {
        let inner = verify::frobenius_algebra(&self.inner, n).map_err(runtime_err)?;
        Ok(PyReport { inner })
    }

    /// Frobenius formula on `V^{⊗k}` at degree `n`.
    fn frobenius_rep(&self, n: usize, k: usize) -> PyResult<PyReport> {
        let inner = verify::frobenius_rep(&self.inner, n, k).map_err(runtime_err)?;
        Ok(PyReport { inner })
    }

    /// `ch` of a Coxeter element of cyclic type `nu` equals `p_nu`.
    fn cyclic_power_sum(&self, nu: Vec<usize>) -> PyResult<bool> {
        verify::cyclic_power_sum_check(&self.inner, &partition(nu)?).map_err(runtime_err)
    }

    fn cayley_hamilton(&self, m: usize) -> PyResult<bool> {
        self.inner.cayley_hamilton_even(m).map_err(runtime_err)
    }

    fn schur_weyl(&self, k: usize) -> PyResult<bool> {
        self.inner.schur_weyl_check(k).map_err(runtime_err)
    }

    /// Normal form of the power sum `p_k`, as text.
    fn power_sum(&self, k: usize) -> String {
        self.inner.normal_form(&self.inner.power_sum(k)).to_string()
    }
}

/// Canonical form of a scalar in `Q(q)`.
#[pyfunction]
fn parse_scalar(text: &str) -> PyResult<String> {
    Ok(qscalar::parse_scalar(text).map_err(value_err)?.to_string())
}

type Table = (Vec<Vec<usize>>, Vec<Vec<String>>);

/// Returns `(partitions, values)` with `values[nu][lambda]` as strings.
#[pyfunction]
fn character_table(n: usize) -> PyResult<Table> {
    let t = hecke_table(n).map_err(value_err)?;
    let parts = t.partitions.iter().map(|p| p.parts().to_vec()).collect();
    let values = t
        .values
        .iter()
        .map(|row| row.iter().map(ToString::to_string).collect())
        .collect();
    Ok((parts, values))
}

/// Power sum `p_k` of the family `(m|n)` in its eigenvalues.
#[pyfunction]
fn power_sum(m: usize, n: usize, k: usize) -> PyResult<String> {
    let p = spectral::power_sum_spectral(&family(m, n)?, k).map_err(runtime_err)?;
    Ok(p.to_string())
}

/// Schur function `s_lambda` of the family `(m|n)` in its eigenvalues.
#[pyfunction]
fn schur(m: usize, n: usize, shape: Vec<usize>) -> PyResult<String> {
    Ok(spectral::schur_spectral(&family(m, n)?, &partition(shape)?).to_string())
}

#[pyfunction]
fn frobenius_spectral(m: usize, n: usize, degree: usize) -> PyResult<PyReport> {
    let inner = verify::frobenius_spectral(&family(m, n)?, degree).map_err(runtime_err)?;
    Ok(PyReport { inner })
}

/// Every check for `sym`, as run by `qfrob check`.
#[pyfunction]
#[pyo3(signature = (sym, n=3, k=3, kmax=4, mode="all"))]
fn verify_all(sym: &PySymmetry, n: usize, k: usize, kmax: usize, mode: &str) -> PyResult<PyReport> {
    let mode = match mode {
        "algebra" => Mode::Algebra,
        "rep" => Mode::Rep,
        "spectral" => Mode::Spectral,
        "all" => Mode::All,
        other => return Err(value_err(format!("unknown mode '{other}'"))),
    };
    let config = VerifyConfig { n, k, kmax, mode, ..VerifyConfig::default() };
    let inner = sym.inner.clone();
    Ok(PyReport { inner: verify::full_suite(&inner, &config) })
}

#[pymodule(name = "qfrob")]
pub fn qfrob_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySymmetry>()?;
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(parse_scalar, m)?)?;
    m.add_function(wrap_pyfunction!(character_table, m)?)?;
    m.add_function(wrap_pyfunction!(power_sum, m)?)?;
    m.add_function(wrap_pyfunction!(schur, m)?)?;
    m.add_function(wrap_pyfunction!(frobenius_spectral, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    Ok(())
}
