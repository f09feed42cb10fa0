//! Python bindings: the label calculus, closed-form bounds, constructions,
//! the stripe oracle, and the exhaustive verifiers.
//!
//! Structured results (bounds reports, verification reports, breakdowns)
//! cross the boundary as plain dicts mirroring the CLI's JSON schema.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use tricircle as core;
use tricircle::calculus::TripartiteSpec as Spec;

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn spec(m: u32, n: u32, p: u32) -> PyResult<Spec> {
    Spec::new(m, n, p).map_err(err)
}

fn json_to_py<'py>(py: Python<'py>, value: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match value {
        serde_json::Value::Null => py.None().into_bound(py),
        serde_json::Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.into_any()
            } else if let Some(u) = n.as_u64() {
                u.into_pyobject(py)?.into_any()
            } else {
                n.as_f64().unwrap().into_pyobject(py)?.into_any()
            }
        }
        serde_json::Value::String(s) => s.into_pyobject(py)?.into_any(),
        serde_json::Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_any()
        }
        serde_json::Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, v) in map {
                dict.set_item(k, json_to_py(py, v)?)?;
            }
            dict.into_any()
        }
    })
}

fn to_py_dict<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let json = serde_json::to_value(value)
        .map_err(|e| PyValueError::new_err(format!("serialization failed: {e}")))?;
    json_to_py(py, &json)
}

/// Vertex counts (m, n, p) of K_{m,n,p}, with bound and construction
/// evaluators attached.
#[pyclass(name = "TripartiteSpec", skip_from_py_object)]
#[derive(Clone)]
struct PySpec {
    inner: Spec,
}

#[pymethods]
impl PySpec {
    #[new]
    fn new(m: u32, n: u32, p: u32) -> PyResult<Self> {
        Ok(PySpec {
            inner: spec(m, n, p)?,
        })
    }

    #[getter]
    fn m(&self) -> u32 {
        self.inner.m()
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.n()
    }

    #[getter]
    fn p(&self) -> u32 {
        self.inner.p()
    }

    fn lower_general(&self) -> u64 {
        core::closed_forms::lower_general(&self.inner)
    }

    fn lower_improved(&self) -> u64 {
        core::closed_forms::lower_improved(&self.inner)
    }

    fn upper_general(&self) -> u64 {
        core::closed_forms::upper_general(&self.inner)
    }

    /// Best bounds with all candidate producers, as a dict.
    fn best_bounds<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py_dict(py, &core::closed_forms::best_bounds(&self.inner))
    }

    /// Crossing breakdown of the linear construction, as a dict.
    fn linear_breakdown<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let labels = core::constructions::linear_labels(&self.inner);
        to_py_dict(py, &core::calculus::total_count(&labels))
    }

    /// Independent inversion recount of the linear construction.
    fn stripe_oracle_count(&self) -> PyResult<u64> {
        let model = core::constructions::linear_stripe_model(&self.inner);
        core::stripes::stripe_oracle(&model).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "TripartiteSpec(m={}, n={}, p={})",
            self.inner.m(),
            self.inner.n(),
            self.inner.p()
        )
    }
}

#[pyfunction]
fn binom(n: u64, k: u64) -> u64 {
    core::calculus::binom(n, k)
}

#[pyfunction]
fn cyclic_distance(n: u32, k: u32, l: u32) -> PyResult<u32> {
    core::calculus::cyclic_distance(n, k, l).map_err(err)
}

#[pyfunction]
fn f(n: u32, u: u32, v: u32) -> PyResult<u64> {
    core::calculus::f(n, u, v).map_err(err)
}

/// Minimum of f over label pairs: (value, optimal_offsets, gap).
#[pyfunction]
fn f_min(n: u32) -> PyResult<(u64, Vec<u32>, u64)> {
    let m = core::calculus::f_min(n).map_err(err)?;
    Ok((m.value, m.optimal_offsets, m.gap))
}

#[pyfunction]
fn cr2(m: u32, n: u32) -> u64 {
    core::closed_forms::cr2(m, n)
}

#[pyfunction]
fn cr2_balanced(n: u32) -> u64 {
    core::closed_forms::cr2_balanced(n)
}

#[pyfunction]
fn lower_general(m: u32, n: u32, p: u32) -> PyResult<u64> {
    Ok(core::closed_forms::lower_general(&spec(m, n, p)?))
}

#[pyfunction]
fn lower_improved(m: u32, n: u32, p: u32) -> PyResult<u64> {
    Ok(core::closed_forms::lower_improved(&spec(m, n, p)?))
}

#[pyfunction]
fn upper_general(m: u32, n: u32, p: u32) -> PyResult<u64> {
    Ok(core::closed_forms::upper_general(&spec(m, n, p)?))
}

#[pyfunction]
fn balanced_bounds(n: u32) -> PyResult<(u64, u64)> {
    core::closed_forms::balanced_bounds(n).map_err(err)
}

#[pyfunction]
fn k22n_exact(n: u32) -> PyResult<u64> {
    core::closed_forms::k22n_exact(n).map_err(err)
}

#[pyfunction]
fn improved_upper_balanced<'py>(py: Python<'py>, n: u32) -> PyResult<Bound<'py, PyAny>> {
    let iu = core::closed_forms::improved_upper_balanced(n).map_err(err)?;
    to_py_dict(py, &iu)
}

#[pyfunction]
fn harary_hill(n: u32) -> u64 {
    core::closed_forms::harary_hill(n)
}

#[pyfunction]
fn lower_via_complete(m: u32, n: u32, p: u32) -> PyResult<Option<u64>> {
    Ok(core::closed_forms::lower_via_complete(&spec(m, n, p)?))
}

#[pyfunction]
fn best_bounds<'py>(py: Python<'py>, m: u32, n: u32, p: u32) -> PyResult<Bound<'py, PyAny>> {
    to_py_dict(py, &core::closed_forms::best_bounds(&spec(m, n, p)?))
}

/// Lower bound for balanced restricted 3-circle drawings of K_N, as a dict
/// with the Harary-Hill comparison.
#[pyfunction]
fn bcr3_balanced_lower<'py>(py: Python<'py>, n: u32) -> PyResult<Bound<'py, PyAny>> {
    let b = core::closed_forms::bcr3_balanced_lower(n).map_err(err)?;
    to_py_dict(py, &b)
}

/// The crossing-minimal K_{2,2,n} drawing: dict with labels and counts.
#[pyfunction]
fn k22n_construction<'py>(py: Python<'py>, n: u32) -> PyResult<Bound<'py, PyAny>> {
    let d = core::constructions::k22n_construction(n).map_err(err)?;
    let dict = PyDict::new(py);
    dict.set_item("n", n)?;
    dict.set_item("type", d.drawing_type())?;
    dict.set_item("x", d.x().to_vec())?;
    dict.set_item("y", d.y().to_vec())?;
    dict.set_item("red", core::constructions::k22n_red_count(&d))?;
    dict.set_item("green", core::constructions::k22n_green_count(&d))?;
    dict.set_item("total", core::constructions::k22n_total(&d))?;
    Ok(dict.into_any())
}

#[pyfunction]
fn render_linear_svg(m: u32, n: u32, p: u32, width: u32, height: u32) -> PyResult<String> {
    Ok(core::render::render_linear(&spec(m, n, p)?, width, height))
}

#[pyfunction]
fn render_k22n_svg(n: u32, width: u32, height: u32) -> PyResult<String> {
    core::render::render_k22n(n, width, height).map_err(err)
}

#[pyfunction]
fn verify_fmin<'py>(py: Python<'py>, n_max: u32) -> PyResult<Bound<'py, PyAny>> {
    to_py_dict(py, &core::verifiers::verify_fmin(n_max).map_err(err)?)
}

#[pyfunction]
fn verify_three_terms<'py>(py: Python<'py>, n: u32) -> PyResult<Bound<'py, PyAny>> {
    to_py_dict(py, &core::verifiers::verify_three_terms(n).map_err(err)?)
}

#[pyfunction]
fn verify_mixed<'py>(py: Python<'py>, n: u32) -> PyResult<Bound<'py, PyAny>> {
    to_py_dict(py, &core::verifiers::verify_mixed(n).map_err(err)?)
}

#[pyfunction]
fn verify_ys<'py>(py: Python<'py>, n: u32) -> PyResult<Bound<'py, PyAny>> {
    to_py_dict(py, &core::verifiers::verify_ys(n).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (n, allow_large = false))]
fn verify_k22n_lower<'py>(
    py: Python<'py>,
    n: u32,
    allow_large: bool,
) -> PyResult<Bound<'py, PyAny>> {
    to_py_dict(
        py,
        &core::verifiers::verify_k22n_lower(n, allow_large).map_err(err)?,
    )
}

#[pyfunction]
fn verify_bichromatic_min<'py>(
    py: Python<'py>,
    a: u32,
    b: u32,
    c: u32,
) -> PyResult<Bound<'py, PyAny>> {
    to_py_dict(
        py,
        &core::verifiers::verify_bichromatic_min(a, b, c).map_err(err)?,
    )
}

#[pyfunction]
fn verify_table<'py>(py: Python<'py>, n_max: u32) -> PyResult<Bound<'py, PyAny>> {
    to_py_dict(py, &core::verifiers::verify_table(n_max).map_err(err)?)
}

#[pyfunction]
fn verify_hh<'py>(py: Python<'py>, n: u32) -> PyResult<Bound<'py, PyAny>> {
    to_py_dict(py, &core::verifiers::verify_hh(n).map_err(err)?)
}

#[pyfunction]
fn verify_construction<'py>(py: Python<'py>, n_max: u32) -> PyResult<Bound<'py, PyAny>> {
    to_py_dict(
        py,
        &core::verifiers::verify_construction(n_max).map_err(err)?,
    )
}

#[pymodule]
fn tricircle_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySpec>()?;
    m.add_function(wrap_pyfunction!(binom, m)?)?;
    m.add_function(wrap_pyfunction!(cyclic_distance, m)?)?;
    m.add_function(wrap_pyfunction!(f, m)?)?;
    m.add_function(wrap_pyfunction!(f_min, m)?)?;
    m.add_function(wrap_pyfunction!(cr2, m)?)?;
    m.add_function(wrap_pyfunction!(cr2_balanced, m)?)?;
    m.add_function(wrap_pyfunction!(lower_general, m)?)?;
    m.add_function(wrap_pyfunction!(lower_improved, m)?)?;
    m.add_function(wrap_pyfunction!(upper_general, m)?)?;
    m.add_function(wrap_pyfunction!(balanced_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(k22n_exact, m)?)?;
    m.add_function(wrap_pyfunction!(improved_upper_balanced, m)?)?;
    m.add_function(wrap_pyfunction!(harary_hill, m)?)?;
    m.add_function(wrap_pyfunction!(lower_via_complete, m)?)?;
    m.add_function(wrap_pyfunction!(best_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(bcr3_balanced_lower, m)?)?;
    m.add_function(wrap_pyfunction!(k22n_construction, m)?)?;
    m.add_function(wrap_pyfunction!(render_linear_svg, m)?)?;
    m.add_function(wrap_pyfunction!(render_k22n_svg, m)?)?;
    m.add_function(wrap_pyfunction!(verify_fmin, m)?)?;
    m.add_function(wrap_pyfunction!(verify_three_terms, m)?)?;
    m.add_function(wrap_pyfunction!(verify_mixed, m)?)?;
    m.add_function(wrap_pyfunction!(verify_ys, m)?)?;
    m.add_function(wrap_pyfunction!(verify_k22n_lower, m)?)?;
    m.add_function(wrap_pyfunction!(verify_bichromatic_min, m)?)?;
    m.add_function(wrap_pyfunction!(verify_table, m)?)?;
    m.add_function(wrap_pyfunction!(verify_hh, m)?)?;
    m.add_function(wrap_pyfunction!(verify_construction, m)?)?;
    Ok(())
}
