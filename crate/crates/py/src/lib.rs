//! Python bindings. Exact values come back as `fractions.Fraction`.

use progdisc::chains::{all_chain_pairs, invariant_s as invariant_s_exact, verify_mirror};
use progdisc::discrim::{self, DiscriminationReport};
use progdisc::jordan;
use progdisc::oracle;
use progdisc::{Priors, Rational, Value};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyFloat, PyString};

fn value_error(e: progdisc::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn size(n: u32, m: u32) -> PyResult<progdisc::ProblemSize> {
    progdisc::ProblemSize::new(n, m).map_err(value_error)
}

fn fraction<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((q.to_string(),))
}

/// Accepts `str` ("1/2", "0.25"), `int`, `fractions.Fraction` or `float`.
fn priors(eta: &Bound<'_, PyAny>) -> PyResult<Priors> {
    if eta.is_instance_of::<PyFloat>() {
        return Priors::float(eta.extract()?).map_err(value_error);
    }
    let text = if eta.is_instance_of::<PyString>() {
        eta.extract::<String>()?
    } else if eta.hasattr("numerator")? && eta.hasattr("denominator")? {
        format!(
            "{}/{}",
            eta.getattr("numerator")?.str()?,
            eta.getattr("denominator")?.str()?
        )
    } else {
        return Err(PyValueError::new_err(
            "eta must be str, int, Fraction or float",
        ));
    };
    text.parse().map_err(value_error)
}

fn exact_or_none<'py>(py: Python<'py>, v: &Value) -> PyResult<Option<Bound<'py, PyAny>>> {
    v.exact().map(|q| fraction(py, &q)).transpose()
}

/// `(k, kappa, multiplicity, q, branch)`.
type PairRow<'py> = (u32, Bound<'py, PyAny>, u64, f64, String);

#[pyclass(frozen, name = "ProblemSize", module = "progdisc")]
struct PyProblemSize {
    inner: progdisc::ProblemSize,
}

#[pymethods]
impl PyProblemSize {
    #[new]
    fn new(n: u32, m: u32) -> PyResult<Self> {
        Ok(Self { inner: size(n, m)? })
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> u32 {
        self.inner.m()
    }

    #[getter]
    fn subspace_dim(&self) -> u64 {
        self.inner.subspace_dim()
    }

    #[getter]
    fn total_dim(&self) -> u64 {
        self.inner.total_dim()
    }

    #[getter]
    fn intersection_dim(&self) -> u64 {
        self.inner.intersection_dim()
    }

    fn __repr__(&self) -> String {
        format!("ProblemSize(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

#[pyclass(frozen, name = "Report", module = "progdisc")]
struct PyReport {
    inner: DiscriminationReport,
}

#[pymethods]
impl PyReport {
    #[getter]
    fn q_l(&self) -> f64 {
        self.inner.q_l.float
    }

    #[getter]
    fn p_success(&self) -> f64 {
        self.inner.p_success.float
    }

    #[getter]
    fn p_error(&self) -> f64 {
        self.inner.p_error.float
    }

    /// Exact success probability, or `None` when it is irrational.
    #[getter]
    fn p_success_exact<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyAny>>> {
        exact_or_none(py, &self.inner.p_success)
    }

    #[getter]
    fn p_error_exact<'py>(&self, py: Python<'py>) -> PyResult<Option<Bound<'py, PyAny>>> {
        exact_or_none(py, &self.inner.p_error)
    }

    #[getter]
    fn eta_in_validity(&self) -> bool {
        self.inner.eta_in_validity
    }

    #[getter]
    fn validity_interval<'py>(
        &self,
        py: Python<'py>,
    ) -> PyResult<(Bound<'py, PyAny>, Bound<'py, PyAny>)> {
        let (lo, hi) = &self.inner.validity_interval;
        Ok((fraction(py, lo)?, fraction(py, hi)?))
    }

    /// `(k, kappa, multiplicity, q, branch)` per Jordan pair.
    #[getter]
    fn pairs<'py>(&self, py: Python<'py>) -> PyResult<Vec<PairRow<'py>>> {
        self.inner
            .per_pair
            .iter()
            .map(|p| {
                Ok((
                    p.k,
                    fraction(py, &p.kappa)?,
                    p.multiplicity,
                    p.q.float,
                    p.branch.to_string(),
                ))
            })
            .collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "Report({}, eta={}, p_success={}, p_error={})",
            self.inner.size,
            self.inner.priors,
            self.inner.p_success.float,
            self.inner.p_error.float
        )
    }
}

/// `[(k, kappa, multiplicity), ...]` with `kappa` a `Fraction`.
#[pyfunction]
fn spectrum<'py>(py: Python<'py>, n: u32, m: u32) -> PyResult<Vec<(u32, Bound<'py, PyAny>, u64)>> {
    jordan::spectrum(size(n, m)?)
        .entries
        .iter()
        .map(|e| Ok((e.k, fraction(py, &e.kappa)?, e.multiplicity)))
        .collect()
}

#[pyfunction]
fn invariant_s<'py>(py: Python<'py>, total: u32, n: u32, m: u32) -> PyResult<Bound<'py, PyAny>> {
    fraction(
        py,
        &invariant_s_exact(total, size(n, m)?).map_err(value_error)?,
    )
}

#[pyfunction]
fn validity_interval<'py>(
    py: Python<'py>,
    n: u32,
    m: u32,
) -> PyResult<(Bound<'py, PyAny>, Bound<'py, PyAny>)> {
    let (lo, hi) = discrim::validity_interval(size(n, m)?);
    Ok((fraction(py, &lo)?, fraction(py, &hi)?))
}

#[pyfunction]
fn unambiguous(n: u32, m: u32, eta: &Bound<'_, PyAny>) -> PyResult<PyReport> {
    Ok(PyReport {
        inner: discrim::report(size(n, m)?, &priors(eta)?),
    })
}

#[pyfunction]
fn min_error(n: u32, m: u32, eta: &Bound<'_, PyAny>) -> PyResult<f64> {
    Ok(discrim::min_error(size(n, m)?, &priors(eta)?).float)
}

/// One dict per chain pair: total, size, invariant_s, mirror, v, v_prime.
#[pyfunction]
fn chains<'py>(py: Python<'py>, n: u32, m: u32) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let s = size(n, m)?;
    let pairs = all_chain_pairs(s).map_err(value_error)?;
    pairs
        .iter()
        .map(|c| {
            let d = PyDict::new(py);
            d.set_item("total", c.total())?;
            d.set_item("size", c.len())?;
            d.set_item(
                "invariant_s",
                fraction(py, &invariant_s_exact(c.total(), s).map_err(value_error)?)?,
            )?;
            d.set_item("mirror", verify_mirror(c))?;
            d.set_item(
                "v",
                c.elements_v()
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>(),
            )?;
            d.set_item(
                "v_prime",
                c.elements_vp()
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>(),
            )?;
            Ok(d)
        })
        .collect()
}

/// Singular values of the dense cross-Gram matrix, descending.
#[pyfunction]
fn global_svd(n: u32, m: u32) -> PyResult<Vec<f64>> {
    Ok(oracle::global_jordan_svd(size(n, m)?))
}

#[pyfunction]
fn helstrom_numeric(n: u32, m: u32, eta: &Bound<'_, PyAny>) -> PyResult<f64> {
    Ok(oracle::helstrom_numeric(size(n, m)?, &priors(eta)?))
}

#[pymodule]
#[pyo3(name = "progdisc")]
fn progdisc_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyProblemSize>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(invariant_s, m)?)?;
    m.add_function(wrap_pyfunction!(validity_interval, m)?)?;
    m.add_function(wrap_pyfunction!(unambiguous, m)?)?;
    m.add_function(wrap_pyfunction!(min_error, m)?)?;
    m.add_function(wrap_pyfunction!(chains, m)?)?;
    m.add_function(wrap_pyfunction!(global_svd, m)?)?;
    m.add_function(wrap_pyfunction!(helstrom_numeric, m)?)?;
    Ok(())
}
