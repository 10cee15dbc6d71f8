use ::compid as core;
use core::ident::{self, Config, Mode};
use core::{census, transforms, DirectedGraph};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyAny;

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py, T: serde::Serialize + ?Sized>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// Simple digraph on vertices 1..=n; vertex 1 is the input-output compartment.
#[pyclass(name = "Graph", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph(DirectedGraph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        DirectedGraph::new(n, edges).map(PyGraph).map_err(err)
    }

    /// Reads the JSON or the plain-text edge-list format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        DirectedGraph::parse(text).map(PyGraph).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    fn is_strongly_connected(&self) -> bool {
        self.0.is_strongly_connected()
    }

    fn exchanges(&self) -> Vec<usize> {
        self.0.exchanges()
    }

    fn to_text(&self) -> String {
        self.0.to_text()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, {})", self.0.n(), self.0)
    }
}

fn config(prime: Option<u64>, trials: usize, seed: u64, mode: &str) -> PyResult<Config> {
    let mode = match mode {
        "fast" => Mode::Fast,
        "structural" => Mode::Structural,
        "audit" => Mode::Audit,
        "rank-only" => Mode::RankOnly,
        other => return Err(PyValueError::new_err(format!("unknown mode {other:?}"))),
    };
    let mut cfg = Config {
        trials,
        seed,
        mode,
        ..Config::default()
    };
    if let Some(p) = prime {
        cfg.prime = p;
    }
    Ok(cfg)
}

/// Verdict as a dict with answer, certificate, prime, trials, seed and ranks.
#[pyfunction]
#[pyo3(signature = (graph, *, prime=None, trials=3, seed=0, mode="fast"))]
fn decide<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    prime: Option<u64>,
    trials: usize,
    seed: u64,
    mode: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let v = core::decide(&graph.0, &config(prime, trials, seed, mode)?).map_err(err)?;
    to_py(py, &v)
}

/// (rank, |L|, full_rank) of B(G) over random evaluations.
#[pyfunction]
#[pyo3(signature = (graph, *, trials=3, seed=0))]
fn b_rank(graph: &PyGraph, trials: usize, seed: u64) -> (usize, usize, bool) {
    let r = ident::b_rank(&graph.0, &core::algebra::PrimeField::default(), trials, seed);
    (r.rank, r.l_size, r.full_rank)
}

/// (rank, expected) of the Jacobian of the double characteristic polynomial map.
#[pyfunction]
#[pyo3(signature = (graph, *, trials=3, seed=0))]
fn jacobian_rank(graph: &PyGraph, trials: usize, seed: u64) -> (usize, bool) {
    let r = ident::jacobian_rank(&graph.0, &core::algebra::PrimeField::default(), trials, seed);
    (r.rank, r.expected)
}

#[pyfunction]
fn condition_support(graph: &PyGraph) -> Option<(usize, usize)> {
    ident::condition_support(&graph.0)
}

/// Ears as vertex lists, or None when no nontrivial decomposition exists.
#[pyfunction]
fn find_nontrivial_ear_decomposition(graph: &PyGraph) -> PyResult<Option<Vec<Vec<usize>>>> {
    let ed = core::find_nontrivial_ear_decomposition(&graph.0).map_err(err)?;
    Ok(ed.map(|ed| ed.ears().iter().map(|e| e.vertices.clone()).collect()))
}

#[pyfunction]
fn is_minimally_strongly_connected(graph: &PyGraph) -> PyResult<bool> {
    core::is_minimally_strongly_connected(&graph.0).map_err(err)
}

#[pyfunction]
fn inductive_ordering(graph: &PyGraph) -> PyResult<Option<Vec<usize>>> {
    core::inductive_ordering(&graph.0).map_err(err)
}

/// Canonical representative up to relabelling of vertices 2..n.
#[pyfunction]
fn canonical_representative(graph: &PyGraph) -> PyResult<PyGraph> {
    core::canonical_representative(&graph.0).map(PyGraph).map_err(err)
}

#[pyfunction]
fn add_exchange_vertex(graph: &PyGraph) -> PyGraph {
    PyGraph(transforms::add_exchange_vertex(&graph.0))
}

/// (graph, relabel) where relabel[v - 1] is the new label of old vertex v.
#[pyfunction]
fn collapse_exchange(graph: &PyGraph, i: usize) -> PyResult<(PyGraph, Vec<usize>)> {
    let c = transforms::collapse_exchange(&graph.0, i).map_err(err)?;
    Ok((PyGraph(c.graph), c.relabel))
}

#[pyfunction]
fn subdivide_edge(graph: &PyGraph, edge: (usize, usize)) -> PyResult<PyGraph> {
    transforms::subdivide_edge(&graph.0, edge)
        .map(PyGraph)
        .map_err(err)
}

#[pyfunction]
fn add_line_segment(graph: &PyGraph, k: usize, l: usize, s: usize) -> PyResult<PyGraph> {
    transforms::add_line_segment(&graph.0, k, l, s)
        .map(PyGraph)
        .map_err(err)
}

#[pyfunction]
fn union_at_vertex(g1: &PyGraph, g2: &PyGraph, v: usize) -> PyResult<PyGraph> {
    transforms::union_at_vertex(&g1.0, &g2.0, v)
        .map(PyGraph)
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (graph, *, seed=0))]
fn repair<'py>(py: Python<'py>, graph: &PyGraph, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let r = transforms::repair(&graph.0, &Config::with_seed(seed)).map_err(err)?;
    to_py(py, &r)
}

#[pyfunction]
fn enumerate_class(n: usize) -> PyResult<Vec<PyGraph>> {
    Ok(census::enumerate_class(n)
        .map_err(err)?
        .into_iter()
        .map(PyGraph)
        .collect())
}

/// (|G|, |G*|, |G_c|, |G_ISC|, |G_MSC|) for graphs on n vertices.
#[pyfunction]
#[pyo3(signature = (n, *, seed=0))]
fn census_row(py: Python<'_>, n: usize, seed: u64) -> PyResult<(usize, usize, usize, usize, usize)> {
    let row = py
        .detach(|| census::classify(n, &Config::with_seed(seed)))
        .map_err(err)?;
    Ok(row.counts())
}

#[pymodule]
#[pyo3(name = "compid")]
fn compid_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(decide, m)?)?;
    m.add_function(wrap_pyfunction!(b_rank, m)?)?;
    m.add_function(wrap_pyfunction!(jacobian_rank, m)?)?;
    m.add_function(wrap_pyfunction!(condition_support, m)?)?;
    m.add_function(wrap_pyfunction!(find_nontrivial_ear_decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(is_minimally_strongly_connected, m)?)?;
    m.add_function(wrap_pyfunction!(inductive_ordering, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_representative, m)?)?;
    m.add_function(wrap_pyfunction!(add_exchange_vertex, m)?)?;
    m.add_function(wrap_pyfunction!(collapse_exchange, m)?)?;
    m.add_function(wrap_pyfunction!(subdivide_edge, m)?)?;
    m.add_function(wrap_pyfunction!(add_line_segment, m)?)?;
    m.add_function(wrap_pyfunction!(union_at_vertex, m)?)?;
    m.add_function(wrap_pyfunction!(repair, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_class, m)?)?;
    m.add_function(wrap_pyfunction!(census_row, m)?)?;
    Ok(())
}
