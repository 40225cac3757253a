//! Python bindings: `import circulant`.

use std::collections::BTreeMap;

use circulant_core::{golden, multiplier, oracle, structural, Mode};
use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: circulant_core::Error) -> PyErr {
    use circulant_core::Error::*;
    match e {
        TooLarge(_) | InvariantViolated(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn parse_mode(mode: &str) -> PyResult<Mode> {
    mode.parse().map_err(|e: circulant_core::Error| to_py(e))
}

/// Integer polynomial in t with arbitrary-precision coefficients.
#[pyclass(name = "Polynomial", module = "circulant", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyPolynomial(circulant_core::Polynomial);

#[pymethods]
impl PyPolynomial {
    /// Build from a `{exponent: coefficient}` dict or from text such as `"t^2+3t+1"`.
    #[new]
    #[pyo3(signature = (value = None))]
    fn new(value: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        let Some(value) = value else {
            return Ok(Self(circulant_core::Polynomial::zero()));
        };
        if let Ok(s) = value.extract::<String>() {
            return s.parse().map(Self).map_err(to_py);
        }
        let terms: BTreeMap<u32, BigInt> = value.extract()?;
        Ok(Self(circulant_core::Polynomial::from_terms(terms)))
    }

    /// Nonzero coefficients keyed by exponent.
    fn coefficients(&self) -> BTreeMap<u32, BigInt> {
        self.0.terms().map(|(e, c)| (e, c.clone())).collect()
    }

    fn coeff(&self, exponent: u32) -> BigInt {
        self.0.coeff(exponent)
    }

    fn degree(&self) -> Option<u32> {
        self.0.degree()
    }

    fn evaluate(&self, x: BigInt) -> BigInt {
        self.0.evaluate(&x)
    }

    /// Value at t = 1.
    fn total(&self) -> BigInt {
        self.0.evaluate_i64(1)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        serde_json::from_str(s)
            .map(Self)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        Self(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial('{}')", self.0)
    }
}

/// Subproblem enumerators and their signed combination for one order.
#[pyclass(name = "EnumerationReport", module = "circulant", frozen)]
pub struct PyReport(multiplier::SubproblemReport);

#[pymethods]
impl PyReport {
    #[getter]
    fn p(&self) -> u64 {
        self.0.p
    }

    #[getter]
    fn k(&self) -> u32 {
        self.0.k
    }

    #[getter]
    fn mode(&self) -> String {
        self.0.mode.to_string()
    }

    #[getter]
    fn modulus(&self) -> u64 {
        self.0.modulus()
    }

    /// Number of isomorphism classes.
    fn total(&self) -> BigInt {
        self.0.total()
    }

    /// Generating function by valency.
    fn polynomial(&self) -> PyPolynomial {
        PyPolynomial(self.0.combined.clone())
    }

    /// Named subproblem or derived row; `"A"` is the combined polynomial.
    fn get(&self, name: &str) -> PyResult<PyPolynomial> {
        self.0
            .row(name)
            .map(PyPolynomial)
            .ok_or_else(|| PyValueError::new_err(format!("no row named {name:?}")))
    }

    /// All rows in display order as `(name, Polynomial)` pairs.
    fn rows(&self) -> Vec<(String, PyPolynomial)> {
        self.0
            .rows()
            .into_iter()
            .map(|(n, p)| (n, PyPolynomial(p)))
            .collect()
    }

    fn check_invariants(&self) -> PyResult<()> {
        self.0.check_invariants().map_err(to_py)
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        format!(
            "EnumerationReport(p={}, k={}, mode='{}', total={})",
            self.0.p,
            self.0.k,
            self.0.mode,
            self.0.total()
        )
    }
}

/// Enumerate circulants of order p^k.
#[pyfunction]
#[pyo3(signature = (p, k = 3, mode = "directed"))]
fn enumerate(py: Python<'_>, p: u64, k: u32, mode: &str) -> PyResult<PyReport> {
    let mode = parse_mode(mode)?;
    py.detach(|| multiplier::enumerate(p, k, mode))
        .map(PyReport)
        .map_err(to_py)
}

/// Self-complementary counts per row, plus `"total"`.
#[pyfunction]
#[pyo3(signature = (p, k = 3, mode = "directed"))]
fn self_complementary(
    py: Python<'_>,
    p: u64,
    k: u32,
    mode: &str,
) -> PyResult<BTreeMap<String, BigInt>> {
    let mode = parse_mode(mode)?;
    let sc = py
        .detach(|| multiplier::self_complementary(p, k, mode))
        .map_err(to_py)?;
    let mut out: BTreeMap<String, BigInt> = sc
        .rows
        .iter()
        .map(|(n, v)| {
            Ok((
                n.clone(),
                v.parse::<BigInt>()
                    .map_err(|e| PyValueError::new_err(e.to_string()))?,
            ))
        })
        .collect::<PyResult<_>>()?;
    out.insert("total".into(), sc.total());
    Ok(out)
}

/// Identity checks for order p^3 as `(name, statement, holds)` triples.
#[pyfunction]
#[pyo3(signature = (p, mode = "directed"))]
fn identities(py: Python<'_>, p: u64, mode: &str) -> PyResult<Vec<(String, String, bool)>> {
    let mode = parse_mode(mode)?;
    let checks = py
        .detach(|| multiplier::check_identities(p, mode))
        .map_err(to_py)?;
    Ok(checks
        .into_iter()
        .map(|c| (c.name, c.statement, c.holds))
        .collect())
}

type RingMap = BTreeMap<usize, (PyPolynomial, PyPolynomial)>;

/// Schur-ring enumeration for n = 9 or 27: `{label: (f, g)}` and the total g.
#[pyfunction]
#[pyo3(name = "structural", signature = (n, mode = "undirected"))]
fn structural_py(py: Python<'_>, n: u64, mode: &str) -> PyResult<(RingMap, PyPolynomial)> {
    let mode = parse_mode(mode)?;
    let report = py
        .detach(|| structural::structural_enumerate(n, mode))
        .map_err(to_py)?;
    let rings = report
        .rings
        .into_iter()
        .map(|r| (r.label, (PyPolynomial(r.f), PyPolynomial(r.g))))
        .collect();
    Ok((rings, PyPolynomial(report.total)))
}

/// Isomorphism classes by canonical forms (n <= 9).
#[pyfunction]
#[pyo3(signature = (n, mode = "directed"))]
fn brute_force(py: Python<'_>, n: u64, mode: &str) -> PyResult<PyPolynomial> {
    let mode = parse_mode(mode)?;
    py.detach(|| oracle::brute_iso_classes(n, mode))
        .map(PyPolynomial)
        .map_err(to_py)
}

/// Orbit count of connecting sets under the layer-multiplier criterion.
#[pyfunction]
#[pyo3(signature = (p, k, mode = "directed", long_run = false))]
fn criterion(py: Python<'_>, p: u64, k: u32, mode: &str, long_run: bool) -> PyResult<PyPolynomial> {
    let mode = parse_mode(mode)?;
    py.detach(|| oracle::criterion_orbit_count(p, k, mode, long_run))
        .map(PyPolynomial)
        .map_err(to_py)
}

/// Acceptance criteria as `(id, title, passed, detail)` tuples.
#[pyfunction]
#[pyo3(signature = (long_run = false))]
fn acceptance(py: Python<'_>, long_run: bool) -> Vec<(u32, String, bool, String)> {
    py.detach(|| golden::run_acceptance(long_run))
        .into_iter()
        .map(|r| (r.id, r.title, r.passed, r.detail))
        .collect()
}

#[pymodule]
fn circulant(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPolynomial>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(self_complementary, m)?)?;
    m.add_function(wrap_pyfunction!(identities, m)?)?;
    m.add_function(wrap_pyfunction!(structural_py, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force, m)?)?;
    m.add_function(wrap_pyfunction!(criterion, m)?)?;
    m.add_function(wrap_pyfunction!(acceptance, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn module_calls_through_interpreter() {
        Python::initialize();
        Python::attach(|py| {
            let m = PyModule::new(py, "circulant").unwrap();
            circulant(&m).unwrap();
            let rep = m
                .getattr("enumerate")
                .unwrap()
                .call1((3u64, 3u32, "u"))
                .unwrap();
            let total: u64 = rep.call_method0("total").unwrap().extract().unwrap();
            assert_eq!(total, 928);
            let err = m.getattr("enumerate").unwrap().call1((2u64,)).unwrap_err();
            assert!(err.is_instance_of::<PyValueError>(py));
            assert!(err.to_string().contains("p must be an odd prime"));
        });
    }

    #[test]
    fn error_mapping() {
        assert!(parse_mode("sideways").is_err());
        assert_eq!(parse_mode("d").unwrap(), Mode::Directed);
    }
}
