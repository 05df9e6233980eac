//! Python bindings. Every function returns canonical JSON text; the
//! `kzduality` Python package decodes it.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde_json::json;

use kzduality::asep_poly::mpa_f_rank2;
use kzduality::combinatorics::staircase as staircase_of;
use kzduality::masep::h_on_window;
use kzduality::reduction::{psi_table as build_psi_table, reduce_expand};
use kzduality::serialize::{psi_table_to_json, reduction_to_json, to_canonical_string, zpoly_to_json};
use kzduality::suite::run_criterion;
use kzduality::Engine;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// E_μ as JSON.
#[pyfunction]
fn e_mu(mu: Vec<u32>) -> PyResult<String> {
    let e = Engine::new().e(&mu).map_err(value_error)?;
    Ok(to_canonical_string(&zpoly_to_json(&e)))
}

/// f_μ as JSON. With `method="mpa"` the matrix product formula is computed
/// too and a mismatch raises.
#[pyfunction]
#[pyo3(signature = (mu, method = "recursion"))]
fn f_mu(mu: Vec<u32>, method: &str) -> PyResult<String> {
    let f = Engine::new().f(&mu).map_err(value_error)?;
    match method {
        "recursion" => {}
        "mpa" => {
            if mpa_f_rank2(&mu).map_err(value_error)? != *f {
                return Err(PyValueError::new_err("matrix product formula disagrees with the recursion"));
            }
        }
        other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    }
    Ok(to_canonical_string(&zpoly_to_json(&f)))
}

/// Resonant-sector expansion of the pole of order `p` of f_μ at q = t^{-m}.
#[pyfunction]
#[pyo3(signature = (mu, m, p = 1))]
fn reduce(mu: Vec<u32>, m: u32, p: u32) -> PyResult<String> {
    let red = reduce_expand(&Engine::new(), &mu, m, p).map_err(value_error)?;
    Ok(to_canonical_string(&reduction_to_json(&red)))
}

#[pyfunction]
#[pyo3(signature = (delta, m, p = 1))]
fn psi_table(delta: Vec<u32>, m: u32, p: u32) -> PyResult<String> {
    let table = build_psi_table(&Engine::new(), &delta, m, p).map_err(value_error)?;
    Ok(to_canonical_string(&psi_table_to_json(&table)))
}

/// H(ν, μ) on a common window, as its pretty form.
#[pyfunction]
fn h_eval(nu: Vec<u32>, mu: Vec<u32>) -> PyResult<String> {
    if nu.len() != mu.len() || nu.iter().any(|&v| v > 1) {
        return Err(PyValueError::new_err("nu must be rank one and as long as mu"));
    }
    Ok(h_on_window(&nu, &mu).to_string())
}

#[pyfunction]
fn staircase(mu: Vec<u32>, m: i32) -> Vec<i32> {
    staircase_of(&mu, m)
}

/// One acceptance criterion (1 to 10) as a JSON report.
#[pyfunction]
fn criterion(id: u32) -> PyResult<String> {
    let c = run_criterion(&Engine::new(), id).ok_or_else(|| PyValueError::new_err(format!("no criterion {id}")))?;
    Ok(to_canonical_string(&json!({ "criterion": c.id, "title": c.title, "report": c.report.to_json() })))
}

#[pymodule]
fn _kzduality(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(e_mu, m)?)?;
    m.add_function(wrap_pyfunction!(f_mu, m)?)?;
    m.add_function(wrap_pyfunction!(reduce, m)?)?;
    m.add_function(wrap_pyfunction!(psi_table, m)?)?;
    m.add_function(wrap_pyfunction!(h_eval, m)?)?;
    m.add_function(wrap_pyfunction!(staircase, m)?)?;
    m.add_function(wrap_pyfunction!(criterion, m)?)?;
    Ok(())
}
