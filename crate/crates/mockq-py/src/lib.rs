//! Python bindings: `import mockq`.

use mockq_core::lfunc::{self, LMethod};
use mockq_core::wrt::{wrt_invariant, Method};
use mockq_core::{catalog, chars, Error};
use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Lookup { .. } => PyKeyError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    use serde_json::Value as J;
    Ok(match v {
        J::Null => py.None().into_bound(py),
        J::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        J::Number(n) => match n.as_i64() {
            Some(i) => i.into_pyobject(py)?.into_any(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        J::String(s) => s.into_pyobject(py)?.into_any(),
        J::Array(a) => {
            let l = PyList::empty(py);
            for x in a {
                l.append(to_py(py, x)?)?;
            }
            l.into_any()
        }
        J::Object(o) => {
            let d = PyDict::new(py);
            for (k, x) in o {
                d.set_item(k, to_py(py, x)?)?;
            }
            d.into_any()
        }
    })
}

fn json<T: serde::Serialize>(x: &T) -> serde_json::Value {
    serde_json::to_value(x).expect("serializable")
}

/// Nonzero terms below q^order as (exponent, coefficient) string pairs.
pub fn expand_terms(id: &str, order: i64, variant: Option<&str>) -> mockq_core::Result<Vec<(String, String)>> {
    let s = catalog::expand(id, order, variant)?;
    let d = s.den() as i64;
    Ok(s.terms()
        .map(|(n, c)| {
            let e = mockq_core::cyclo::q_frac(*n, d);
            (e.to_string(), c.as_rational().map_or_else(|| c.to_string(), |q| q.to_string()))
        })
        .collect())
}

#[pyfunction]
#[pyo3(signature = (id, order, variant = None))]
fn expand(id: &str, order: i64, variant: Option<&str>) -> PyResult<Vec<(String, String)>> {
    expand_terms(id, order, variant).map_err(py_err)
}

/// Verify one identity (or group) and return the report as a dict.
#[pyfunction]
#[pyo3(signature = (id, order = None))]
fn verify<'py>(py: Python<'py>, id: &str, order: Option<i64>) -> PyResult<Bound<'py, PyAny>> {
    let t = match order {
        Some(t) => t,
        None => catalog::identity_records()
            .iter()
            .filter(|r| r.id == id || r.id.starts_with(&format!("{id}/")))
            .map(|r| r.default_truncation)
            .max()
            .ok_or_else(|| py_err(Error::Lookup { kind: "identity", name: id.into() }))?,
    };
    let r = catalog::verify_identity(id, t).map_err(py_err)?;
    to_py(py, &json(&r))
}

#[pyfunction]
#[pyo3(signature = (manifold, n, method = "eichler_limit"))]
fn wrt<'py>(py: Python<'py>, manifold: &str, n: u64, method: &str) -> PyResult<Bound<'py, PyAny>> {
    let m: Method = method.parse().map_err(py_err)?;
    let r = wrt_invariant(manifold, n, m).map_err(py_err)?;
    to_py(py, &json(&r))
}

/// L(−2k, χ) as a rational string.
#[pyfunction]
#[pyo3(signature = (chi, k, method = "bernoulli"))]
fn l_value(chi: &str, k: usize, method: &str) -> PyResult<String> {
    let m: LMethod = method.parse().map_err(py_err)?;
    let c = chars::character(chi).map_err(py_err)?;
    lfunc::l_value(&c, k, m).map(|q| q.to_string()).map_err(py_err)
}

#[pymodule]
#[pyo3(name = "mockq")]
fn mockq(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_function(wrap_pyfunction!(expand, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(wrt, m)?)?;
    m.add_function(wrap_pyfunction!(l_value, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terms() {
        let t = expand_terms("chi0_star", 6, None).unwrap();
        assert_eq!(t[0], ("0".to_string(), "1".to_string()));
        assert!(matches!(expand_terms("nope", 5, None), Err(Error::Lookup { .. })));
    }
}
