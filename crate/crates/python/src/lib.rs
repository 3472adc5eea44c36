//! Python bindings: `import foulkes`.
//!
//! Partitions may be passed as `Partition` objects or as lists of ints.
//! Family tuples cross the boundary as `FamilyTuple` objects, which read and
//! write the same JSON layout as the command line.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use foulkes::constituents::{constituents, Extremum};
use foulkes::families::{enumerate_closed_families, is_minimal_tuple};
use foulkes::special;
use foulkes::{BlockKind, CharacterSpec, DominanceRelation, Flavor, InnerFlavor, PlethysmOracle};
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(
    foulkes,
    DegreeGuardError,
    PyValueError,
    "Oracle degree exceeds the guard."
);

fn to_py(e: foulkes::Error) -> PyErr {
    match e {
        foulkes::Error::DegreeGuard { .. } => DegreeGuardError::new_err(e.to_string()),
        foulkes::Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// An integer partition.
#[pyclass(name = "Partition", module = "foulkes", frozen, eq, ord, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PyPartition(foulkes::Partition);

fn partition_arg(obj: &Bound<'_, PyAny>) -> PyResult<foulkes::Partition> {
    if let Ok(p) = obj.cast::<PyPartition>() {
        return Ok(p.get().0.clone());
    }
    if let Ok(s) = obj.extract::<String>() {
        return s.parse().map_err(to_py);
    }
    let parts: Vec<u32> = obj.extract()?;
    foulkes::Partition::new(parts).map_err(to_py)
}

fn parse_enum<T: std::str::FromStr<Err = foulkes::Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(to_py)
}

fn inner_flavor(s: &str) -> PyResult<InnerFlavor> {
    match s {
        "row" => Ok(InnerFlavor::Row),
        "column" => Ok(InnerFlavor::Column),
        other => Err(PyValueError::new_err(format!("unknown flavor {other:?}"))),
    }
}

#[pymethods]
impl PyPartition {
    #[new]
    fn new(parts: &Bound<'_, PyAny>) -> PyResult<Self> {
        partition_arg(parts).map(PyPartition)
    }

    #[getter]
    fn parts(&self) -> Vec<u32> {
        self.0.parts().to_vec()
    }

    #[getter]
    fn weight(&self) -> u32 {
        self.0.weight()
    }

    fn conjugate(&self) -> Self {
        PyPartition(self.0.conjugate())
    }

    fn dominates(&self, other: &Bound<'_, PyAny>) -> PyResult<bool> {
        self.0.dominates(&partition_arg(other)?).map_err(to_py)
    }

    /// One of "below", "equal", "above", "incomparable".
    fn dominance(&self, other: &Bound<'_, PyAny>) -> PyResult<&'static str> {
        Ok(
            match self.0.dominance_compare(&partition_arg(other)?).map_err(to_py)? {
                DominanceRelation::StrictlyBelow => "below",
                DominanceRelation::Equal => "equal",
                DominanceRelation::StrictlyAbove => "above",
                DominanceRelation::Incomparable => "incomparable",
            },
        )
    }

    fn dimension(&self) -> String {
        self.0.dimension().to_string()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.0.hash(&mut h);
        h.finish()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.0.parts())
    }

    fn __str__(&self) -> String {
        format!("{:?}", self.0)
    }
}

/// A tuple of families of m-sets or m-multisets.
#[pyclass(name = "FamilyTuple", module = "foulkes", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
pub struct PyFamilyTuple(foulkes::FamilyTuple);

#[pymethods]
impl PyFamilyTuple {
    #[new]
    fn new(m: u32, kind: &str, families: Vec<Vec<Vec<u32>>>) -> PyResult<Self> {
        foulkes::FamilyTuple::from_lists(m, parse_enum(kind)?, families)
            .map(PyFamilyTuple)
            .map_err(to_py)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text)
            .map(PyFamilyTuple)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn to_json(&self) -> String {
        self.0.to_json_value().to_string()
    }

    #[getter]
    fn m(&self) -> u32 {
        self.0.m()
    }

    #[getter]
    fn kind(&self) -> String {
        self.0.kind().to_string()
    }

    #[getter]
    fn families(&self) -> Vec<Vec<Vec<u32>>> {
        self.0.families().iter().map(|f| f.to_lists()).collect()
    }

    fn shapes(&self) -> Vec<usize> {
        self.0.shapes()
    }

    fn is_closed(&self) -> bool {
        self.0.is_closed()
    }

    fn closure(&self) -> Self {
        PyFamilyTuple(self.0.closure())
    }

    /// The type, or None when the occurrence counts are not a partition.
    fn tuple_type(&self) -> Option<PyPartition> {
        self.0.tuple_type().map(PyPartition)
    }

    fn is_minimal(&self) -> PyResult<bool> {
        is_minimal_tuple(&self.0).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("FamilyTuple.from_json('{}')", self.to_json())
    }
}

/// A constituent label with its certifying tuple.
#[pyclass(
    name = "Constituent",
    module = "foulkes",
    frozen,
    get_all,
    skip_from_py_object
)]
pub struct PyConstituent {
    label: PyPartition,
    witness: PyFamilyTuple,
}

#[pymethods]
impl PyConstituent {
    fn __repr__(&self) -> String {
        format!(
            "Constituent({}, {})",
            self.label.__str__(),
            self.witness.to_json()
        )
    }
}

fn report(
    m: u32,
    nu: &Bound<'_, PyAny>,
    character: &str,
    extremum: Extremum,
) -> PyResult<Vec<PyConstituent>> {
    let spec = CharacterSpec::new(m, partition_arg(nu)?, parse_enum(character)?).map_err(to_py)?;
    let r = constituents(&spec, extremum).map_err(to_py)?;
    Ok(r.constituents
        .into_iter()
        .map(|c| PyConstituent {
            label: PyPartition(c.label),
            witness: PyFamilyTuple(c.witness),
        })
        .collect())
}

/// Dominance-minimal constituents, in descending lex order.
#[pyfunction]
#[pyo3(signature = (m, nu, character = "phi"))]
fn min_constituents(m: u32, nu: &Bound<'_, PyAny>, character: &str) -> PyResult<Vec<PyConstituent>> {
    report(m, nu, character, Extremum::Minimal)
}

/// Dominance-maximal constituents, in descending lex order.
#[pyfunction]
#[pyo3(signature = (m, nu, character = "phi"))]
fn max_constituents(m: u32, nu: &Bound<'_, PyAny>, character: &str) -> PyResult<Vec<PyConstituent>> {
    report(m, nu, character, Extremum::Maximal)
}

fn oracle(guard: u32, cache: Option<String>) -> PlethysmOracle {
    let o = PlethysmOracle::new().with_guard(guard);
    match cache {
        Some(dir) => o.with_cache_dir(dir),
        None => o,
    }
}

/// Full Schur expansion from the oracle, as `{parts tuple: multiplicity}`.
#[pyfunction]
#[pyo3(signature = (m, nu, flavor = "row", guard = foulkes::oracle::DEFAULT_GUARD, cache = None))]
fn expand<'py>(
    py: Python<'py>,
    m: u32,
    nu: &Bound<'py, PyAny>,
    flavor: &str,
    guard: u32,
    cache: Option<String>,
) -> PyResult<Bound<'py, PyDict>> {
    let nu = partition_arg(nu)?;
    let flavor = inner_flavor(flavor)?;
    let e = py
        .detach(|| oracle(guard, cache).expansion(&nu, m, flavor))
        .map_err(to_py)?;
    let d = PyDict::new(py);
    for (lambda, c) in e.terms() {
        d.set_item(pyo3::types::PyTuple::new(py, lambda.parts())?, c)?;
    }
    Ok(d)
}

/// A single Schur coefficient from the oracle.
#[pyfunction]
#[pyo3(signature = (m, nu, lam, flavor = "row", guard = foulkes::oracle::DEFAULT_GUARD, cache = None))]
fn multiplicity(
    py: Python<'_>,
    m: u32,
    nu: &Bound<'_, PyAny>,
    lam: &Bound<'_, PyAny>,
    flavor: &str,
    guard: u32,
    cache: Option<String>,
) -> PyResult<u64> {
    let nu = partition_arg(nu)?;
    let lam = partition_arg(lam)?;
    let flavor = inner_flavor(flavor)?;
    py.detach(|| oracle(guard, cache).multiplicity(&nu, m, &lam, flavor))
        .map_err(to_py)
}

/// Whether the extremal constituents from the rules match the oracle for
/// both characters.
#[pyfunction]
#[pyo3(signature = (m, nu, guard = foulkes::oracle::DEFAULT_GUARD))]
fn verify(py: Python<'_>, m: u32, nu: &Bound<'_, PyAny>, guard: u32) -> PyResult<bool> {
    let nu = partition_arg(nu)?;
    py.detach(|| -> foulkes::Result<bool> {
        let mut o = oracle(guard, None);
        for flavor in [Flavor::Phi, Flavor::Psi] {
            let spec = CharacterSpec::new(m, nu.clone(), flavor)?;
            let e = o.expansion(&nu, m, flavor.inner())?;
            if constituents(&spec, Extremum::Minimal)?.labels() != e.minimal_support()
                || constituents(&spec, Extremum::Maximal)?.labels() != e.maximal_support()
            {
                return Ok(false);
            }
        }
        Ok(true)
    })
    .map_err(to_py)
}

/// Lexicographically least type of `n` blocks, from the greedy formula.
#[pyfunction]
#[pyo3(signature = (m, n, kind = "set"))]
fn agaoka(m: u32, n: u32, kind: &str) -> PyResult<PyPartition> {
    special::agaoka_lex_least(m, n, parse_enum(kind)?)
        .map(|d| PyPartition(d.assembled))
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (m, nu, character = "phi"))]
fn lex_least(m: u32, nu: &Bound<'_, PyAny>, character: &str) -> PyResult<PyPartition> {
    special::lex_least_constituent(m, &partition_arg(nu)?, parse_enum(character)?)
        .map(PyPartition)
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (m, nu, character = "phi"))]
fn lex_greatest(m: u32, nu: &Bound<'_, PyAny>, character: &str) -> PyResult<PyConstituent> {
    let c =
        special::lex_greatest_constituent(m, &partition_arg(nu)?, parse_enum(character)?).map_err(to_py)?;
    Ok(PyConstituent {
        label: PyPartition(c.label),
        witness: PyFamilyTuple(c.witness),
    })
}

/// Labels of the decomposition of `s_(1^n) ∘ s_(2)`; all multiplicities are 1.
#[pyfunction]
fn theta(n: u32) -> PyResult<Vec<PyPartition>> {
    let e = special::theta_decomposition(n).map_err(to_py)?;
    Ok(e.support().into_iter().map(PyPartition).collect())
}

/// Closed families of `n` blocks, each as a list of blocks.
#[pyfunction]
#[pyo3(signature = (m, n, kind = "set"))]
fn closed_families(m: u32, n: u32, kind: &str) -> PyResult<Vec<Vec<Vec<u32>>>> {
    let kind: BlockKind = parse_enum(kind)?;
    let mut out: Vec<_> = enumerate_closed_families(m, n, kind).collect();
    out.sort();
    Ok(out.iter().map(|f| f.to_lists()).collect())
}

/// The constituent of the character certified by a closed tuple.
#[pyfunction]
#[pyo3(signature = (tuple, nu, character = "phi"))]
fn certificate(tuple: &PyFamilyTuple, nu: &Bound<'_, PyAny>, character: &str) -> PyResult<PyPartition> {
    let spec = CharacterSpec::new(tuple.0.m(), partition_arg(nu)?, parse_enum(character)?).map_err(to_py)?;
    foulkes::certificate_from_closed_tuple(&spec, &tuple.0)
        .map(PyPartition)
        .map_err(to_py)
}

#[pymodule]
#[pyo3(name = "foulkes")]
fn foulkes_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("DegreeGuardError", m.py().get_type::<DegreeGuardError>())?;
    m.add_class::<PyPartition>()?;
    m.add_class::<PyFamilyTuple>()?;
    m.add_class::<PyConstituent>()?;
    m.add_function(wrap_pyfunction!(min_constituents, m)?)?;
    m.add_function(wrap_pyfunction!(max_constituents, m)?)?;
    m.add_function(wrap_pyfunction!(expand, m)?)?;
    m.add_function(wrap_pyfunction!(multiplicity, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(agaoka, m)?)?;
    m.add_function(wrap_pyfunction!(lex_least, m)?)?;
    m.add_function(wrap_pyfunction!(lex_greatest, m)?)?;
    m.add_function(wrap_pyfunction!(theta, m)?)?;
    m.add_function(wrap_pyfunction!(closed_families, m)?)?;
    m.add_function(wrap_pyfunction!(certificate, m)?)?;
    Ok(())
}
