//! Python bindings: exact Q(√n) numbers plus the chain builders, the
//! square solver, the floating-point oracle and the SVG renderer.
//! Structured results cross the boundary as JSON strings carrying the
//! same schema as the CLI.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use chaingeo::qfield::parse_rational;
use chaingeo::{
    build_ca, build_cb, incircle_delta, rejected_root_gap_cb, render_svg, square_in_delta,
    verify_config, ChainConfig, RenderOptions,
};

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An exact element p + q·√n of Q(√n). `p` and `q` are rational
/// strings like "3" or "-2/7".
#[pyclass(name = "QNum", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyQNum {
    inner: chaingeo::QNum,
}

#[pymethods]
impl PyQNum {
    #[new]
    #[pyo3(signature = (p, q = "0", radicand = 1))]
    fn new(p: &str, q: &str, radicand: u64) -> PyResult<Self> {
        Ok(PyQNum {
            inner: chaingeo::QNum::new(
                parse_rational(p).map_err(err)?,
                parse_rational(q).map_err(err)?,
                radicand,
            ),
        })
    }

    #[getter]
    fn p(&self) -> String {
        format!("{}/{}", self.inner.p().numer(), self.inner.p().denom())
    }

    #[getter]
    fn q(&self) -> String {
        format!("{}/{}", self.inner.q().numer(), self.inner.q().denom())
    }

    #[getter]
    fn radicand(&self) -> u64 {
        self.inner.radicand()
    }

    fn sign(&self) -> i32 {
        self.inner.sign()
    }

    /// Principal square root within the field, or None when it does not
    /// exist there.
    fn sqrt(&self) -> PyResult<Option<PyQNum>> {
        Ok(self.inner.sqrt().map_err(err)?.map(|inner| PyQNum { inner }))
    }

    fn __add__(&self, other: &PyQNum) -> PyResult<PyQNum> {
        Ok(PyQNum { inner: self.inner.try_add(&other.inner).map_err(err)? })
    }

    fn __sub__(&self, other: &PyQNum) -> PyResult<PyQNum> {
        Ok(PyQNum { inner: self.inner.try_sub(&other.inner).map_err(err)? })
    }

    fn __mul__(&self, other: &PyQNum) -> PyResult<PyQNum> {
        Ok(PyQNum { inner: self.inner.try_mul(&other.inner).map_err(err)? })
    }

    fn __truediv__(&self, other: &PyQNum) -> PyResult<PyQNum> {
        Ok(PyQNum { inner: self.inner.try_div(&other.inner).map_err(err)? })
    }

    fn __neg__(&self) -> PyQNum {
        PyQNum { inner: -&self.inner }
    }

    fn __float__(&self) -> f64 {
        self.inner.to_f64()
    }

    fn __eq__(&self, other: &PyQNum) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("QNum({})", self.inner)
    }
}

fn parse_a(a: &str, radicand: u64) -> PyResult<chaingeo::QNum> {
    Ok(chaingeo::QNum::rational(parse_rational(a).map_err(err)?, radicand))
}

fn build(kind: &str, n: u32, a: &str) -> PyResult<ChainConfig> {
    match kind {
        "CB" => build_cb(n, &parse_a(a, n as u64)?).map_err(err),
        "CA" => build_ca(n, &parse_a(a, 1)?).map_err(err),
        _ => Err(PyValueError::new_err("kind must be \"CB\" or \"CA\"")),
    }
}

/// Build a configuration and return its full JSON document, including
/// the per-identity verification report.
#[pyfunction]
#[pyo3(name = "build_config")]
fn py_build_config(kind: &str, n: u32, a: &str) -> PyResult<String> {
    Ok(build(kind, n, a)?.to_json().to_string())
}

/// True iff every exact identity holds on the freshly built config.
#[pyfunction]
#[pyo3(name = "verify")]
fn py_verify(kind: &str, n: u32, a: &str) -> PyResult<bool> {
    Ok(verify_config(&build(kind, n, a)?).overall())
}

/// Side and vertices of the inscribed square, as JSON.
#[pyfunction]
#[pyo3(name = "square_in_delta")]
fn py_square(a: &str) -> PyResult<String> {
    Ok(square_in_delta(&parse_a(a, 1)?).map_err(err)?.to_json().to_string())
}

/// Incircle of the curvilinear triangle, as JSON.
#[pyfunction]
#[pyo3(name = "incircle_delta")]
fn py_incircle(a: &str) -> PyResult<String> {
    Ok(incircle_delta(&parse_a(a, 1)?).map_err(err)?.to_json().to_string())
}

/// Sign of 2b − d⁻ for the rejected root of the |AB| quadratic.
#[pyfunction]
#[pyo3(name = "rejected_root_gap_sign")]
fn py_rejected_root_gap_sign(n: u32, a: &str) -> PyResult<i32> {
    Ok(rejected_root_gap_cb(n, &parse_a(a, n as u64)?).map_err(err)?.sign())
}

#[pyfunction]
#[pyo3(name = "oracle_chain_radius_cb")]
#[pyo3(signature = (n, a, tol = 1e-12))]
fn py_oracle_cb(n: u32, a: f64, tol: f64) -> PyResult<(f64, u32, f64)> {
    let r = chaingeo::oracle_chain_radius_cb(n, a, tol).map_err(err)?;
    Ok((r.value, r.iterations, r.residual))
}

#[pyfunction]
#[pyo3(name = "oracle_chain_radius_ca")]
#[pyo3(signature = (n, a, tol = 1e-12))]
fn py_oracle_ca(n: u32, a: f64, tol: f64) -> PyResult<(f64, u32, f64)> {
    let r = chaingeo::oracle_chain_radius_ca(n, a, tol).map_err(err)?;
    Ok((r.value, r.iterations, r.residual))
}

#[pyfunction]
#[pyo3(name = "oracle_square_side")]
#[pyo3(signature = (a, tol = 1e-12))]
fn py_oracle_square(a: f64, tol: f64) -> PyResult<(f64, u32, f64)> {
    let r = chaingeo::oracle_square_side(a, tol).map_err(err)?;
    Ok((r.value, r.iterations, r.residual))
}

/// Render a configuration as a standalone SVG document.
#[pyfunction]
#[pyo3(name = "render_svg")]
#[pyo3(signature = (kind, n, a, width = 800, labels = false, square = false, decimals = 4))]
fn py_render_svg(
    kind: &str,
    n: u32,
    a: &str,
    width: u32,
    labels: bool,
    square: bool,
    decimals: usize,
) -> PyResult<String> {
    let cfg = build(kind, n, a)?;
    let opts = RenderOptions {
        width_px: width,
        show_labels: labels,
        show_square: square,
        decimals,
        ..RenderOptions::default()
    };
    render_svg(&cfg, &opts).map_err(err)
}

#[pymodule]
fn chaingeo_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyQNum>()?;
    m.add_function(wrap_pyfunction!(py_build_config, m)?)?;
    m.add_function(wrap_pyfunction!(py_verify, m)?)?;
    m.add_function(wrap_pyfunction!(py_square, m)?)?;
    m.add_function(wrap_pyfunction!(py_incircle, m)?)?;
    m.add_function(wrap_pyfunction!(py_rejected_root_gap_sign, m)?)?;
    m.add_function(wrap_pyfunction!(py_oracle_cb, m)?)?;
    m.add_function(wrap_pyfunction!(py_oracle_ca, m)?)?;
    m.add_function(wrap_pyfunction!(py_oracle_square, m)?)?;
    m.add_function(wrap_pyfunction!(py_render_svg, m)?)?;
    Ok(())
}
