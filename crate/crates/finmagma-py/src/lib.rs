//! Python bindings: `import pyfinmagma`.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

use finmagma::classify::{classify as classify_magma, default_flavor};
use finmagma::harness::checks::{run_check, Overrides, ParamRange};
use finmagma::harness::report::{classify_text, subs_text};
use finmagma::harness::{self, Built};
use finmagma::identity::IdentityName;
use finmagma::neutro::{extend, Flavor};
use finmagma::nstruct::{classify_taxon, n_classify};
use finmagma::{build_loop_ln, check_identity, serial, LoopFamilySpec};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn flavor(f: Option<&str>) -> PyResult<Option<Flavor>> {
    f.map(|s| s.parse::<Flavor>().map_err(err)).transpose()
}

#[pyclass(name = "Magma", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyMagma(finmagma::Magma);

#[pymethods]
impl PyMagma {
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        serial::from_text(text).map(PyMagma).map_err(err)
    }

    #[getter]
    fn name(&self) -> String {
        self.0.name().to_string()
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn kind(&self) -> String {
        self.0.kind().to_string()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.0.labels()
    }

    fn op(&self, a: &str, b: &str) -> PyResult<String> {
        self.0.apply_labels(a, b).map(str::to_string).map_err(err)
    }

    fn table(&self) -> Vec<Vec<String>> {
        (0..self.0.order()).map(|a| self.0.row(a).iter().map(|&c| self.0.label(c).to_string()).collect()).collect()
    }

    fn identity(&self) -> Option<String> {
        self.0.identity().map(|e| self.0.label(e).to_string())
    }

    fn is_commutative(&self) -> bool {
        self.0.is_commutative()
    }

    fn is_associative(&self) -> bool {
        self.0.is_associative()
    }

    /// (holds, witness labels)
    fn check_identity(&self, name: &str) -> PyResult<(bool, Option<Vec<String>>)> {
        let id: IdentityName = name.parse().map_err(err)?;
        let v = check_identity(&self.0, id).map_err(err)?;
        let w = v.witness.map(|w| w.iter().map(|&x| self.0.label(x).to_string()).collect());
        Ok((v.holds, w))
    }

    /// Closed subsets as label lists.
    fn closed_subsets(&self) -> PyResult<Vec<Vec<String>>> {
        let subs = self.0.all_closed_subsets().map_err(err)?;
        Ok(subs.iter().map(|s| s.iter().map(|x| self.0.label(x).to_string()).collect()).collect())
    }

    fn neutrosophic(&self) -> PyResult<PyMagma> {
        extend(&self.0).map(|nm| PyMagma(nm.extended)).map_err(err)
    }

    /// Lagrange, Sylow and Cauchy tags.
    #[pyo3(signature = (flavor=None))]
    fn classify(&self, flavor: Option<&str>) -> PyResult<BTreeMap<String, String>> {
        let f = self::flavor(flavor)?.unwrap_or_else(|| default_flavor(&self.0));
        let r = classify_magma(&self.0, f).map_err(err)?;
        Ok(BTreeMap::from([
            ("flavor".to_string(), r.flavor.to_string()),
            ("lagrange".to_string(), r.lagrange.tag.to_string()),
            ("sylow".to_string(), r.sylow.tag.to_string()),
            ("cauchy".to_string(), r.cauchy.tag.to_string()),
        ]))
    }

    fn to_text(&self) -> String {
        serial::to_text(&self.0)
    }

    fn __repr__(&self) -> String {
        format!("Magma({}, order={}, kind={})", self.0.name(), self.0.order(), self.0.kind())
    }
}

#[pyclass(name = "MultiStructure", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyMulti(finmagma::MultiStructure);

#[pymethods]
impl PyMulti {
    #[getter]
    fn name(&self) -> String {
        self.0.name().to_string()
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn components(&self) -> Vec<PyMagma> {
        self.0.components().iter().map(|c| PyMagma(c.magma.clone())).collect()
    }

    fn classes(&self) -> Vec<String> {
        self.0.classes().iter().map(|c| c.tag()).collect()
    }

    fn taxa(&self) -> Vec<String> {
        classify_taxon(&self.0).iter().map(|t| t.tag().to_string()).collect()
    }

    #[pyo3(signature = (flavor=None))]
    fn classify(&self, flavor: Option<&str>) -> PyResult<BTreeMap<String, String>> {
        let f = self::flavor(flavor)?.unwrap_or(Flavor::Neutrosophic);
        let r = n_classify(&self.0, f).map_err(err)?;
        Ok(BTreeMap::from([
            ("flavor".to_string(), r.flavor.to_string()),
            ("lagrange".to_string(), r.lagrange.tag.to_string()),
            ("sylow".to_string(), r.sylow.tag.to_string()),
            ("cauchy".to_string(), r.cauchy.tag.to_string()),
        ]))
    }

    fn __repr__(&self) -> String {
        format!("MultiStructure({}, N={}, order={})", self.0.name(), self.0.n(), self.0.order())
    }
}

/// Builds from the constructor grammar; U(...) gives a MultiStructure.
#[pyfunction]
fn build(py: Python<'_>, spec: &str) -> PyResult<Py<PyAny>> {
    match harness::parse(spec).map_err(err)? {
        Built::Magma(m) => Ok(Py::new(py, PyMagma(m))?.into_any()),
        Built::Multi(ms) => Ok(Py::new(py, PyMulti(ms))?.into_any()),
    }
}

#[pyfunction]
fn loop_ln(n: u64, m: u64) -> PyResult<PyMagma> {
    LoopFamilySpec::new(n, m).and_then(build_loop_ln).map(PyMagma).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (spec, flavor=None, deficit=false))]
fn subs(spec: &str, flavor: Option<&str>, deficit: bool) -> PyResult<String> {
    let b = harness::parse(spec).map_err(err)?;
    subs_text(&b, self::flavor(flavor)?, deficit).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (spec, flavor=None))]
fn classify(spec: &str, flavor: Option<&str>) -> PyResult<String> {
    let b = harness::parse(spec).map_err(err)?;
    classify_text(&b, self::flavor(flavor)?).map_err(err)
}

fn check_dict(r: finmagma::harness::CheckResult) -> BTreeMap<String, Vec<String>> {
    BTreeMap::from([
        ("id".to_string(), vec![r.id]),
        ("status".to_string(), vec![if r.passed { "pass" } else { "fail" }.to_string()]),
        ("range".to_string(), vec![r.range.to_string()]),
        ("counterexamples".to_string(), r.counterexamples),
    ])
}

/// One registered check; `range` uses the a..b / a..=b syntax.
#[pyfunction]
#[pyo3(signature = (id, range=None))]
fn verify(id: &str, range: Option<&str>) -> PyResult<BTreeMap<String, Vec<String>>> {
    let range = range.map(|r| r.parse::<ParamRange>().map_err(err)).transpose()?;
    match run_check(id, &Overrides { range, budget: None }) {
        Ok(r) => Ok(check_dict(r)),
        Err(harness::HarnessError::UnknownId(id)) => Err(PyKeyError::new_err(id)),
        Err(e) => Err(err(e)),
    }
}

#[pyfunction]
fn check_ids() -> Vec<&'static str> {
    harness::registry().iter().map(|c| c.id).collect()
}

type Cell = (String, String, String, String, bool);

/// (row, column, generated, transcribed, documented) per mismatching cell.
#[pyfunction]
fn regenerate_and_diff(table_id: &str) -> PyResult<Vec<Cell>> {
    let d = harness::regenerate_and_diff(table_id).map_err(err)?;
    Ok(d.mismatches.into_iter().map(|c| (c.row, c.col, c.generated, c.transcribed, c.documented)).collect())
}

#[pymodule]
fn pyfinmagma(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMagma>()?;
    m.add_class::<PyMulti>()?;
    m.add_function(wrap_pyfunction!(build, m)?)?;
    m.add_function(wrap_pyfunction!(loop_ln, m)?)?;
    m.add_function(wrap_pyfunction!(subs, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(check_ids, m)?)?;
    m.add_function(wrap_pyfunction!(regenerate_and_diff, m)?)?;
    Ok(())
}
