//! Python bindings: graphs, recognition, validation and the corpus tools.

use comb_core::corpus::{self, CombParams};
use comb_core::{self as core, RecognitionResult};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyBytes;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An undirected simple graph on vertices `0..vertex_count`.
#[pyclass(name = "Graph", module = "combgraph", frozen, skip_from_py_object, eq)]
#[derive(Clone, PartialEq)]
pub struct PyGraph {
    inner: core::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        core::Graph::new(n, &edges).map(|inner| PyGraph { inner }).map_err(value_err)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        core::parse_graph6(text).map(|inner| PyGraph { inner }).map_err(value_err)
    }

    #[staticmethod]
    fn from_edgelist(text: &str) -> PyResult<Self> {
        core::parse_edgelist(text).map(|inner| PyGraph { inner }).map_err(value_err)
    }

    fn to_graph6(&self) -> String {
        core::write_graph6(&self.inner)
    }

    fn to_edgelist(&self) -> String {
        core::write_edgelist(&self.inner)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.vertex_count() && v < self.inner.vertex_count() && self.inner.has_edge(u, v)
    }

    fn neighborhood(&self, v: usize) -> PyResult<Vec<usize>> {
        self.inner.neighborhood(v).map(|s| s.to_vec()).map_err(value_err)
    }

    fn complement(&self) -> Self {
        PyGraph { inner: self.inner.complement() }
    }

    fn __len__(&self) -> usize {
        self.inner.vertex_count()
    }

    fn __repr__(&self) -> String {
        format!("Graph({:?})", self.to_graph6())
    }
}

/// An induced copy of a fixed pattern; `vertices[i]` plays pattern vertex `i`.
#[pyclass(name = "Witness", module = "combgraph", frozen, skip_from_py_object, get_all)]
#[derive(Clone)]
pub struct PyWitness {
    kind: String,
    vertices: Vec<usize>,
}

impl From<core::Witness> for PyWitness {
    fn from(w: core::Witness) -> Self {
        PyWitness { kind: w.kind.name().to_string(), vertices: w.vertices }
    }
}

#[pymethods]
impl PyWitness {
    fn __repr__(&self) -> String {
        format!("Witness({}, {:?})", self.kind, self.vertices)
    }
}

/// A comb decomposition. Set lists follow the JSON schema: `a[i]` is A_i,
/// `x[j]` is X_{j+1}, `m[i]` is M_{i+1}, `y[i]` is Y_{i+2}.
#[pyclass(name = "CombDecomposition", module = "combgraph", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyDecomposition {
    inner: core::CombDecomposition,
}

fn lists(sets: &[core::VertexSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.to_vec()).collect()
}

#[pymethods]
impl PyDecomposition {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        serde_json::from_str(text).map(|inner| PyDecomposition { inner }).map_err(value_err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("decompositions serialize")
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn l(&self) -> usize {
        self.inner.l
    }

    #[getter]
    fn k0(&self) -> usize {
        self.inner.k0
    }

    #[getter]
    fn a(&self) -> Vec<Vec<usize>> {
        lists(&self.inner.a)
    }

    #[getter]
    fn x(&self) -> Vec<Vec<usize>> {
        lists(&self.inner.x)
    }

    #[getter]
    fn m(&self) -> Vec<Vec<usize>> {
        lists(&self.inner.m)
    }

    #[getter]
    fn y(&self) -> Vec<Vec<usize>> {
        lists(&self.inner.y)
    }

    #[getter]
    fn matchings(&self) -> Vec<Vec<(usize, usize)>> {
        self.inner.matchings.clone()
    }

    fn __repr__(&self) -> String {
        format!("CombDecomposition(n={}, l={}, k0={})", self.inner.n, self.inner.l, self.inner.k0)
    }
}

/// Returns a `CombDecomposition` or a `Witness` of a forbidden pattern.
#[pyfunction]
fn comb_decompose(py: Python<'_>, g: &PyGraph) -> PyResult<Py<PyAny>> {
    Ok(match core::comb_decompose(&g.inner).map_err(value_err)? {
        RecognitionResult::Decomposition(d) => Py::new(py, PyDecomposition { inner: d })?.into_any(),
        RecognitionResult::Witness(w) => Py::new(py, PyWitness::from(w))?.into_any(),
    })
}

#[pyfunction]
fn is_comb(g: &PyGraph) -> bool {
    core::is_comb(&g.inner)
}

#[pyfunction]
fn is_split(g: &PyGraph) -> bool {
    core::is_split(&g.inner)
}

#[pyfunction]
fn is_threshold(g: &PyGraph) -> bool {
    core::is_threshold(&g.inner)
}

#[pyfunction]
fn find_any_forbidden(g: &PyGraph) -> Option<PyWitness> {
    core::find_any_forbidden(&g.inner).map(PyWitness::from)
}

/// Violations as `(code, vertices, detail)` tuples; empty when valid.
#[pyfunction]
fn validate_comb(g: &PyGraph, dec: &PyDecomposition) -> Vec<(String, Vec<usize>, String)> {
    core::validate_comb(&g.inner, &dec.inner)
        .into_iter()
        .map(|v| (v.code.to_string(), v.vertices, v.detail))
        .collect()
}

#[pyfunction]
fn lemma1_mirror_holds(g: &PyGraph, m: usize, b: usize, b2: usize, m2: usize) -> PyResult<bool> {
    core::lemma1_mirror_holds(&g.inner, m, b, b2, m2).map_err(value_err)
}

/// Builds a comb from a JSON parameter object; returns `(graph, decomposition)`.
#[pyfunction]
#[pyo3(signature = (params_json, seed=None))]
fn generate_comb(params_json: &str, seed: Option<u64>) -> PyResult<(PyGraph, PyDecomposition)> {
    let mut params: CombParams = serde_json::from_str(params_json).map_err(value_err)?;
    if let Some(seed) = seed {
        params.seed = seed;
    }
    let (g, d) = corpus::generate_comb(&params).map_err(value_err)?;
    Ok((PyGraph { inner: g }, PyDecomposition { inner: d }))
}

#[pyfunction]
fn random_graph(n: usize, p: f64, seed: u64) -> PyResult<PyGraph> {
    corpus::random_graph(n, p, seed).map(|inner| PyGraph { inner }).map_err(value_err)
}

#[pyfunction]
fn canonical_code<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyBytes>> {
    let code = corpus::canonical_code(&g.inner).map_err(value_err)?;
    Ok(PyBytes::new(py, &code))
}

#[pyfunction]
fn enumerate_graphs(n: usize, up_to_iso: bool) -> PyResult<Vec<PyGraph>> {
    let graphs = corpus::enumerate_graphs(n, up_to_iso).map_err(value_err)?;
    Ok(graphs.into_iter().map(|inner| PyGraph { inner }).collect())
}

/// Rows `(n, total, split, threshold, comb)`.
#[pyfunction]
fn census(max_n: usize) -> PyResult<Vec<(usize, usize, usize, usize, usize)>> {
    let rows = corpus::census(max_n).map_err(value_err)?;
    Ok(rows.into_iter().map(|r| (r.n, r.total, r.split, r.threshold, r.comb)).collect())
}

#[pymodule]
fn combgraph(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyWitness>()?;
    m.add_class::<PyDecomposition>()?;
    m.add_function(wrap_pyfunction!(comb_decompose, m)?)?;
    m.add_function(wrap_pyfunction!(is_comb, m)?)?;
    m.add_function(wrap_pyfunction!(is_split, m)?)?;
    m.add_function(wrap_pyfunction!(is_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(find_any_forbidden, m)?)?;
    m.add_function(wrap_pyfunction!(validate_comb, m)?)?;
    m.add_function(wrap_pyfunction!(lemma1_mirror_holds, m)?)?;
    m.add_function(wrap_pyfunction!(generate_comb, m)?)?;
    m.add_function(wrap_pyfunction!(random_graph, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_code, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    Ok(())
}
