//! Python bindings, importable as `zdgpoly`.

use num_bigint::BigUint;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyComplex;
use zdgpoly::driver::{compute, scan_csv, scan_range, verify_range, Engine};
use zdgpoly::engines::DEFAULT_BRUTE_CAP;
use zdgpoly::roots::{DEFAULT_MAX_ITER, DEFAULT_TOL};

create_exception!(
    zdgpoly,
    ZdgError,
    PyValueError,
    "Base class for library errors."
);
create_exception!(
    zdgpoly,
    EmptyGraphError,
    ZdgError,
    "Z_n has no nonzero zero divisors."
);
create_exception!(
    zdgpoly,
    SizeCapError,
    ZdgError,
    "An engine or graph size cap was exceeded."
);

fn to_py(err: zdgpoly::Error) -> PyErr {
    let msg = err.to_string();
    match err {
        zdgpoly::Error::EmptyGraph(_) => EmptyGraphError::new_err(msg),
        zdgpoly::Error::SizeCap { .. } => SizeCapError::new_err(msg),
        _ => ZdgError::new_err(msg),
    }
}

/// Polynomial with nonnegative integer coefficients, index = exponent.
#[pyclass(name = "Polynomial", module = "zdgpoly", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPolynomial {
    inner: zdgpoly::DomPolynomial,
}

#[pymethods]
impl PyPolynomial {
    /// Build from a dense coefficient list (`coeffs[k]` multiplies `x^k`).
    #[new]
    fn new(coeffs: Vec<BigUint>) -> Self {
        Self {
            inner: zdgpoly::DomPolynomial::from_coeffs(coeffs),
        }
    }

    /// Parse a JSON polynomial file.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let file = zdgpoly::PolynomialFile::parse(text).map_err(to_py)?;
        Ok(Self {
            inner: file.polynomial,
        })
    }

    /// Render as a JSON polynomial file, optionally tagged with `n`.
    #[pyo3(signature = (n=None))]
    fn to_json(&self, n: Option<u64>) -> String {
        let mut file = zdgpoly::PolynomialFile::new(self.inner.clone());
        file.n = n;
        file.to_json()
    }

    #[getter]
    fn coeffs(&self) -> Vec<BigUint> {
        self.inner.coeffs().to_vec()
    }

    /// Nonzero `(exponent, coefficient)` pairs in ascending exponent order.
    fn terms(&self) -> Vec<(usize, BigUint)> {
        self.inner.terms().map(|(k, c)| (k, c.clone())).collect()
    }

    #[getter]
    fn degree(&self) -> Option<usize> {
        self.inner.degree()
    }

    /// Value at x = 1, the number of maximal independent sets.
    fn eval_one(&self) -> BigUint {
        self.inner.eval_one()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({})", self.inner)
    }
}

/// Shape verdicts on the coefficient sequence.
#[pyclass(name = "PropertyReport", module = "zdgpoly", frozen, get_all)]
struct PyPropertyReport {
    unimodal: bool,
    mode_index: Option<usize>,
    logconcave: bool,
    logconcave_witness: Option<usize>,
    logconcave_violations: Vec<usize>,
    newton: bool,
    newton_witness: Option<usize>,
    newton_violations: Vec<usize>,
    inc_runs: usize,
    dec_runs: usize,
    direction_changes: usize,
    eta: usize,
    has_internal_zeros: bool,
}

#[pymethods]
impl PyPropertyReport {
    fn __repr__(&self) -> String {
        format!(
            "PropertyReport(unimodal={}, logconcave={}, newton={}, eta={})",
            self.unimodal, self.logconcave, self.newton, self.eta
        )
    }
}

impl From<zdgpoly::PropertyReport> for PyPropertyReport {
    fn from(r: zdgpoly::PropertyReport) -> Self {
        Self {
            unimodal: r.unimodal,
            mode_index: r.mode_index,
            logconcave: r.logconcave,
            logconcave_witness: r.logconcave_witness,
            logconcave_violations: r.logconcave_violations,
            newton: r.newton,
            newton_witness: r.newton_witness,
            newton_violations: r.newton_violations,
            inc_runs: r.inc_runs,
            dec_runs: r.dec_runs,
            direction_changes: r.direction_changes,
            eta: r.eta,
            has_internal_zeros: r.has_internal_zeros,
        }
    }
}

/// Numeric zeros together with the exact real-zero count.
#[pyclass(name = "RootsReport", module = "zdgpoly", frozen)]
struct PyRootsReport {
    inner: zdgpoly::RootsReport,
}

#[pymethods]
impl PyRootsReport {
    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree
    }

    #[getter]
    fn origin_multiplicity(&self) -> usize {
        self.inner.origin_multiplicity
    }

    #[getter]
    fn converged(&self) -> bool {
        self.inner.converged
    }

    #[getter]
    fn iterations(&self) -> usize {
        self.inner.iterations
    }

    #[getter]
    fn distinct_real(&self) -> usize {
        self.inner.distinct_real_exact
    }

    #[getter]
    fn distinct_nonreal(&self) -> usize {
        self.inner.distinct_nonreal_exact
    }

    #[getter]
    fn squarefree_degree(&self) -> usize {
        self.inner.squarefree_degree
    }

    /// All zeros with multiplicity, origin copies first, as Python complex numbers.
    fn zeros<'py>(&self, py: Python<'py>) -> Vec<Bound<'py, PyComplex>> {
        let origin = std::iter::repeat_n((0.0, 0.0), self.inner.origin_multiplicity);
        origin
            .chain(self.inner.numeric_roots.iter().map(|z| (z.re, z.im)))
            .map(|(re, im)| PyComplex::from_doubles(py, re, im))
            .collect()
    }

    /// `(re, im, residual)` for each non-origin zero.
    fn numeric_roots(&self) -> Vec<(f64, f64, f64)> {
        self.inner
            .numeric_roots
            .iter()
            .map(|z| (z.re, z.im, z.residual))
            .collect()
    }

    fn max_residual(&self) -> f64 {
        self.inner.max_residual()
    }

    fn csv(&self) -> String {
        zdgpoly::plot::roots_csv(&self.inner)
    }

    #[pyo3(signature = (title="zeros"))]
    fn svg(&self, title: &str) -> String {
        zdgpoly::plot::roots_svg(&self.inner, title)
    }
}

/// Closed form versus the compressed engine for one `n`.
#[pyclass(name = "AuditRecord", module = "zdgpoly", frozen, get_all)]
struct PyAuditRecord {
    n: u64,
    family: String,
    closed: PyPolynomial,
    computed: PyPolynomial,
    /// `closed − computed`, rendered as signed text ("0" when equal).
    difference: String,
    matches: bool,
    known_discrepancy: bool,
}

#[pymethods]
impl PyAuditRecord {
    fn __repr__(&self) -> String {
        format!(
            "AuditRecord(n={}, family={}, difference={})",
            self.n, self.family, self.difference
        )
    }
}

fn parse_engine(engine: &str) -> PyResult<Engine> {
    engine.parse().map_err(to_py)
}

/// Prime factorization as `[(p, e), ...]`.
#[pyfunction]
fn factorize(n: u64) -> PyResult<Vec<(u64, u32)>> {
    Ok(zdgpoly::factorize(n).map_err(to_py)?.factors().to_vec())
}

#[pyfunction]
fn euler_phi(n: u64) -> u64 {
    zdgpoly::euler_phi(n)
}

/// Divisors `e` of `n` with `1 < e < n`, ascending.
#[pyfunction]
fn proper_divisors(n: u64) -> PyResult<Vec<u64>> {
    zdgpoly::proper_divisors(n).map_err(to_py)
}

/// Family tag such as `"PSquaredQ"` or `"PrimePowerEven"`.
#[pyfunction]
fn classify_family(n: u64) -> PyResult<String> {
    let f = zdgpoly::factorize(n).map_err(to_py)?;
    Ok(zdgpoly::classify_family(&f).tag().to_string())
}

/// Divisor classes as `[(divisor, size, is_clique), ...]` plus edges as divisor pairs.
#[pyfunction]
#[allow(clippy::type_complexity)]
fn class_graph(n: u64) -> PyResult<(Vec<(u64, u64, bool)>, Vec<(u64, u64)>)> {
    let cg = zdgpoly::build_class_graph(n).map_err(to_py)?;
    let classes = cg
        .classes()
        .iter()
        .map(|c| (c.divisor, c.size, c.is_clique))
        .collect();
    Ok((classes, cg.edges()))
}

/// Independent domination polynomial of Γ(Z_n).
#[pyfunction]
#[pyo3(signature = (n, engine="auto"))]
fn dipoly(py: Python<'_>, n: u64, engine: &str) -> PyResult<PyPolynomial> {
    let engine = parse_engine(engine)?;
    let c = py.detach(|| compute(n, engine)).map_err(to_py)?;
    Ok(PyPolynomial {
        inner: c.polynomial,
    })
}

#[pyfunction]
fn properties(p: &PyPolynomial) -> PyResult<PyPropertyReport> {
    Ok(zdgpoly::analyze(&p.inner).map_err(to_py)?.into())
}

#[pyfunction]
#[pyo3(signature = (p, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER))]
fn roots(py: Python<'_>, p: &PyPolynomial, tol: f64, max_iter: usize) -> PyResult<PyRootsReport> {
    let inner = py
        .detach(|| zdgpoly::roots_report(&p.inner, tol, max_iter))
        .map_err(to_py)?;
    Ok(PyRootsReport { inner })
}

/// Exact `(distinct_real, distinct_nonreal)` zero counts.
#[pyfunction]
fn count_real_roots(p: &PyPolynomial) -> PyResult<(usize, usize)> {
    let c = zdgpoly::count_real_roots_exact(&p.inner).map_err(to_py)?;
    Ok((c.distinct_real, c.distinct_nonreal))
}

#[pyfunction]
fn audit(n: u64) -> PyResult<PyAuditRecord> {
    let f = zdgpoly::factorize(n).map_err(to_py)?;
    let r = zdgpoly::audit_family(&f).map_err(to_py)?;
    Ok(PyAuditRecord {
        n: r.n,
        family: r.family.tag().to_string(),
        matches: r.matches(),
        known_discrepancy: r.is_known_discrepancy(),
        difference: r.difference.to_string(),
        closed: PyPolynomial { inner: r.closed },
        computed: PyPolynomial { inner: r.computed },
    })
}

/// One report line per composite `n` in `lo..=hi`.
#[pyfunction]
fn verify(py: Python<'_>, lo: u64, hi: u64) -> Vec<String> {
    py.detach(|| {
        verify_range(lo, hi, DEFAULT_BRUTE_CAP)
            .iter()
            .map(ToString::to_string)
            .collect()
    })
}

/// Scan table for `lo..=hi` as CSV text with a header row.
#[pyfunction]
#[pyo3(signature = (lo, hi, with_roots=false))]
fn scan(py: Python<'_>, lo: u64, hi: u64, with_roots: bool) -> String {
    py.detach(|| scan_csv(&scan_range(lo, hi, with_roots)))
}

#[pymodule]
#[pyo3(name = "zdgpoly")]
fn zdgpoly_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("ZdgError", py.get_type::<ZdgError>())?;
    m.add("EmptyGraphError", py.get_type::<EmptyGraphError>())?;
    m.add("SizeCapError", py.get_type::<SizeCapError>())?;
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyPropertyReport>()?;
    m.add_class::<PyRootsReport>()?;
    m.add_class::<PyAuditRecord>()?;
    m.add_function(wrap_pyfunction!(factorize, m)?)?;
    m.add_function(wrap_pyfunction!(euler_phi, m)?)?;
    m.add_function(wrap_pyfunction!(proper_divisors, m)?)?;
    m.add_function(wrap_pyfunction!(classify_family, m)?)?;
    m.add_function(wrap_pyfunction!(class_graph, m)?)?;
    m.add_function(wrap_pyfunction!(dipoly, m)?)?;
    m.add_function(wrap_pyfunction!(properties, m)?)?;
    m.add_function(wrap_pyfunction!(roots, m)?)?;
    m.add_function(wrap_pyfunction!(count_real_roots, m)?)?;
    m.add_function(wrap_pyfunction!(audit, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(scan, m)?)?;
    Ok(())
}
