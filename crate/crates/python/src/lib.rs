//! Python bindings for the exact Takagi / D-node / digit-sum library.
//!
//! Exposes the `Dyadic` value type and every operation of the core crate as
//! plain functions. Build as a cdylib and import as `takagi_dyadic`; see
//! `python/smoke_test.py` at the workspace root for an end-to-end example.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use takagi_core as core;
use takagi_core::Error as CoreError;

fn to_py_err(e: CoreError) -> PyErr {
    match e {
        CoreError::Domain(_) | CoreError::Range(_) => PyValueError::new_err(e.to_string()),
        CoreError::Inconsistency(_) => PyRuntimeError::new_err(e.to_string()),
    }
}

/// An exact dyadic rational `num / 2^exp` in canonical form.
#[pyclass(
    frozen,
    eq,
    ord,
    hash,
    skip_from_py_object,
    name = "Dyadic",
    module = "takagi_dyadic"
)]
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Hash)]
struct PyDyadic {
    inner: core::Dyadic,
}

impl From<core::Dyadic> for PyDyadic {
    fn from(inner: core::Dyadic) -> Self {
        PyDyadic { inner }
    }
}

#[pymethods]
impl PyDyadic {
    #[new]
    fn new(num: i128, exp: u32) -> PyResult<Self> {
        Ok(core::Dyadic::new(num, exp).map_err(to_py_err)?.into())
    }

    #[getter]
    fn num(&self) -> i128 {
        self.inner.num()
    }

    #[getter]
    fn exp(&self) -> u32 {
        self.inner.exp()
    }

    /// Denominator `2^exp` as an integer.
    #[getter]
    fn den(&self) -> u128 {
        self.inner.den()
    }

    fn __float__(&self) -> f64 {
        self.inner.to_f64()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Dyadic({}, {})", self.inner.num(), self.inner.exp())
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        Ok(self.inner.try_add(&other.inner).map_err(to_py_err)?.into())
    }

    fn __sub__(&self, other: &Self) -> PyResult<Self> {
        Ok(self.inner.try_sub(&other.inner).map_err(to_py_err)?.into())
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        Ok(self.inner.try_mul(&other.inner).map_err(to_py_err)?.into())
    }

    /// Exact division by two.
    fn halve(&self) -> PyResult<Self> {
        Ok(self.inner.halve().map_err(to_py_err)?.into())
    }
}

/// Decompose n = 2^k + r; returns (k, r, x) with x = r/2^k as a Dyadic.
#[pyfunction]
fn decompose(n: u64) -> PyResult<(u32, u64, PyDyadic)> {
    let d = core::decompose(n).map_err(to_py_err)?;
    Ok((d.k(), d.r(), d.x().into()))
}

/// Index of the least-significant set bit of r.
#[pyfunction]
fn rho1(r: u64) -> PyResult<u32> {
    core::rho1(r).map_err(to_py_err)
}

/// D-node count of the divide-and-conquer tree on n leaves.
///
/// method: "recursive", "closed", "explicit", or "tree" (explicit oracle).
#[pyfunction]
#[pyo3(signature = (n, method = "closed"))]
fn delta(n: u64, method: &str) -> PyResult<u64> {
    match method {
        "recursive" => core::delta_recursive(n).map_err(to_py_err),
        "closed" => core::delta_closed(n).map_err(to_py_err),
        "explicit" => core::delta_explicit(n).map_err(to_py_err),
        "tree" => Ok(core::count_labels(&core::build_dnc_tree(n).map_err(to_py_err)?).1),
        _ => Err(PyValueError::new_err(format!(
            "unknown delta method '{method}'"
        ))),
    }
}

/// Per-depth D-node count lambda_i(n).
#[pyfunction]
fn lambda_level(n: u64, i: u32) -> PyResult<u64> {
    core::lambda_level(n, i).map_err(to_py_err)
}

/// delta(n+1) - delta(n) = floor(log2 n) - 2 s1(n) + 2.
#[pyfunction]
fn delta_step(n: u64) -> PyResult<i64> {
    core::delta_step(n).map_err(to_py_err)
}

/// Both sides of the delta neighbor-average identity: (lhs, rhs, holds).
#[pyfunction]
fn check_neighbor_identity(n: u64) -> PyResult<(PyDyadic, PyDyadic, bool)> {
    let c = core::check_neighbor_identity(n).map_err(to_py_err)?;
    Ok((c.lhs.into(), c.rhs.into(), c.holds))
}

/// tau(r / 2^k), exactly.
///
/// route: "dilation", "definition", "closed", "explicit", or "tent".
#[pyfunction]
#[pyo3(signature = (r, k, route = "dilation"))]
fn tau(r: u64, k: u32, route: &str) -> PyResult<PyDyadic> {
    let value = match route {
        "dilation" => core::takagi_dilation(r, k),
        "definition" => match core::definition_args(r, k) {
            Some((n, kd)) => core::takagi_definition(n, kd),
            None => {
                return Err(PyValueError::new_err(
                    "route 'definition' needs k >= 1 and r < 2^k",
                ))
            }
        },
        "closed" => core::takagi_closed(r, k),
        "explicit" => core::takagi_explicit(r, k),
        "tent" => core::Dyadic::new(r as i128, k).and_then(|x| core::tent_series(&x)),
        _ => {
            return Err(PyValueError::new_err(format!(
                "unknown tau route '{route}'"
            )))
        }
    };
    Ok(value.map_err(to_py_err)?.into())
}

/// The tent-sum definition with its own argument indexing: tau(n / 2^{k+1}).
#[pyfunction]
fn takagi_definition(n: u64, k: u32) -> PyResult<PyDyadic> {
    Ok(core::takagi_definition(n, k).map_err(to_py_err)?.into())
}

/// tau((r+1)/2^k) via the step recurrence from tau(r/2^k).
#[pyfunction]
fn takagi_step(r: u64, k: u32) -> PyResult<PyDyadic> {
    Ok(core::takagi_step(r, k).map_err(to_py_err)?.into())
}

/// Both sides of the Takagi neighbor identity: (lhs, rhs, holds).
#[pyfunction]
fn check_takagi_neighbor(r: u64, k: u32) -> PyResult<(PyDyadic, PyDyadic, bool)> {
    let c = core::check_takagi_neighbor(r, k).map_err(to_py_err)?;
    Ok((c.lhs.into(), c.rhs.into(), c.holds))
}

/// Boros inequality at the dyadic midpoint r/2^k: (lhs, rhs, strict).
#[pyfunction]
fn boros_check(r: u64, k: u32) -> PyResult<(PyDyadic, PyDyadic, bool)> {
    let b = core::boros_check(r, k).map_err(to_py_err)?;
    Ok((b.lhs.into(), b.rhs.into(), b.strict))
}

/// Independent tent-series oracle at a dyadic x in [0, 1].
#[pyfunction]
fn tent_series(x: &PyDyadic) -> PyResult<PyDyadic> {
    Ok(core::tent_series(&x.inner).map_err(to_py_err)?.into())
}

/// Hamming weight (population count).
#[pyfunction]
fn s1(n: u64) -> u32 {
    core::s1(n)
}

/// Hamming weight via the Takagi-function formula.
#[pyfunction]
fn s1_from_takagi(n: u64) -> PyResult<u32> {
    core::s1_from_takagi(n).map_err(to_py_err)
}

/// Hamming weight via the D-node formula.
#[pyfunction]
fn s1_from_delta(n: u64) -> PyResult<u32> {
    core::s1_from_delta(n).map_err(to_py_err)
}

/// S1(n) = sum of s1(i) for i in [0, n), by literal summation.
#[pyfunction]
fn s1_cumulative(n: u64) -> u128 {
    core::s1_cumulative(n)
}

/// S1(2^k) = k * 2^{k-1}.
#[pyfunction]
fn s1_cumulative_powtwo(k: u32) -> u128 {
    core::s1_cumulative_powtwo(k)
}

/// The three exact closed forms of S1(n); all equal.
#[pyfunction]
fn s1_cumulative_forms(n: u64) -> PyResult<(u128, u128, u128)> {
    core::s1_cumulative_forms(n).map_err(to_py_err)
}

/// Trollope's formula for S1(n) in floating arithmetic.
#[pyfunction]
fn s1_cumulative_trollope(n: u64) -> PyResult<f64> {
    core::s1_cumulative_trollope(n).map_err(to_py_err)
}

/// (s_count, d_count) of the divide-and-conquer tree on n leaves.
#[pyfunction]
fn tree_labels(n: u64) -> PyResult<(u64, u64)> {
    Ok(core::count_labels(
        &core::build_dnc_tree(n).map_err(to_py_err)?,
    ))
}

/// Per-depth D-node counts of the tree on n leaves.
#[pyfunction]
fn tree_level_d_counts(n: u64) -> PyResult<Vec<u64>> {
    let tree = core::build_dnc_tree(n).map_err(to_py_err)?;
    if n < 2 {
        return Ok(Vec::new());
    }
    Ok(core::level_d_counts(&tree).d_counts)
}

/// Deterministic DOT text for the tree on n leaves.
#[pyfunction]
fn tree_dot(n: u64) -> PyResult<String> {
    Ok(core::export_dot(
        &core::build_dnc_tree(n).map_err(to_py_err)?,
    ))
}

/// The identity catalog as (name, citation) pairs, in stable order.
#[pyfunction]
fn list_identities() -> Vec<(String, String)> {
    core::list_identities()
        .into_iter()
        .map(|(id, citation)| (id.name().to_string(), citation.to_string()))
        .collect()
}

/// Sweep one identity over [lo, hi] (defaults: the identity's own range).
///
/// Returns a dict with id, range kind, lo, hi, checked, passed, and
/// first_failure (None, or a dict with instance/lhs/rhs).
#[pyfunction]
#[pyo3(signature = (id, lo = None, hi = None))]
fn verify(py: Python<'_>, id: &str, lo: Option<u64>, hi: Option<u64>) -> PyResult<Py<PyDict>> {
    let identity = core::IdentityId::from_name(id)
        .ok_or_else(|| PyValueError::new_err(format!("unknown identity id '{id}'")))?;
    let (dlo, dhi) = identity.default_range();
    let report =
        core::verify_range(identity, lo.unwrap_or(dlo), hi.unwrap_or(dhi)).map_err(to_py_err)?;
    let dict = PyDict::new(py);
    dict.set_item("id", report.id.name())?;
    dict.set_item("range_kind", report.id.range_kind().label())?;
    dict.set_item("lo", report.lo)?;
    dict.set_item("hi", report.hi)?;
    dict.set_item("checked", report.checked)?;
    dict.set_item("passed", report.passed)?;
    match report.first_failure {
        Some(f) => {
            let failure = PyDict::new(py);
            failure.set_item("instance", f.instance)?;
            failure.set_item("lhs", f.lhs)?;
            failure.set_item("rhs", f.rhs)?;
            dict.set_item("first_failure", failure)?;
        }
        None => dict.set_item("first_failure", py.None())?,
    }
    Ok(dict.into())
}

#[pymodule]
fn takagi_dyadic(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("N_MAX", core::N_MAX)?;
    m.add("K_MAX", core::K_MAX)?;
    m.add("ORACLE_MAX", core::ORACLE_MAX)?;
    m.add_class::<PyDyadic>()?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(rho1, m)?)?;
    m.add_function(wrap_pyfunction!(delta, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_level, m)?)?;
    m.add_function(wrap_pyfunction!(delta_step, m)?)?;
    m.add_function(wrap_pyfunction!(check_neighbor_identity, m)?)?;
    m.add_function(wrap_pyfunction!(tau, m)?)?;
    m.add_function(wrap_pyfunction!(takagi_definition, m)?)?;
    m.add_function(wrap_pyfunction!(takagi_step, m)?)?;
    m.add_function(wrap_pyfunction!(check_takagi_neighbor, m)?)?;
    m.add_function(wrap_pyfunction!(boros_check, m)?)?;
    m.add_function(wrap_pyfunction!(tent_series, m)?)?;
    m.add_function(wrap_pyfunction!(s1, m)?)?;
    m.add_function(wrap_pyfunction!(s1_from_takagi, m)?)?;
    m.add_function(wrap_pyfunction!(s1_from_delta, m)?)?;
    m.add_function(wrap_pyfunction!(s1_cumulative, m)?)?;
    m.add_function(wrap_pyfunction!(s1_cumulative_powtwo, m)?)?;
    m.add_function(wrap_pyfunction!(s1_cumulative_forms, m)?)?;
    m.add_function(wrap_pyfunction!(s1_cumulative_trollope, m)?)?;
    m.add_function(wrap_pyfunction!(tree_labels, m)?)?;
    m.add_function(wrap_pyfunction!(tree_level_d_counts, m)?)?;
    m.add_function(wrap_pyfunction!(tree_dot, m)?)?;
    m.add_function(wrap_pyfunction!(list_identities, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
