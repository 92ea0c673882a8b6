//! Python bindings. Integers cross the boundary as Python ints (arbitrary
//! precision); reports come back as dicts parsed from the JSON the Rust side
//! emits, so big values stay decimal strings there.

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyModule;

use unicyclic::correlate::correlation_table;
use unicyclic::edgelist::{read_edge_list, write_edge_list};
use unicyclic::families;
use unicyclic::invariants::closed_form as forms;
use unicyclic::verification::{check_lemma, check_theorem_with_workers, reproduce_counterexamples, Params, TheoremId};
use unicyclic::{Anchor, ClassFilter, SegmentSequence};

fn value_error(e: unicyclic::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

trait OrRaise<T> {
    fn or_raise(self) -> PyResult<T>;
}

impl<T> OrRaise<T> for unicyclic::Result<T> {
    fn or_raise(self) -> PyResult<T> {
        self.map_err(value_error)
    }
}

#[pyclass(name = "Graph", module = "pyunicyclic", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph(unicyclic::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        unicyclic::Graph::new(n, &edges).map(PyGraph).or_raise()
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        read_edge_list(text).map(PyGraph).or_raise()
    }

    fn to_edge_list(&self) -> String {
        write_edge_list(&self.0)
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.vertex_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    fn is_tree(&self) -> bool {
        self.0.is_tree()
    }

    fn is_unicyclic(&self) -> bool {
        self.0.is_unicyclic()
    }

    fn girth(&self) -> PyResult<usize> {
        self.0.cycle_info().map(|c| c.girth).or_raise()
    }

    fn segment_sequence(&self) -> PyResult<Vec<usize>> {
        self.0.segment_sequence().map(|s| s.lengths().to_vec()).or_raise()
    }

    fn canonical_key(&self) -> PyResult<String> {
        unicyclic::canonical_key(&self.0).map(|k| k.to_hex()).or_raise()
    }

    fn is_isomorphic(&self, other: &PyGraph) -> PyResult<bool> {
        unicyclic::is_isomorphic(&self.0, &other.0).or_raise()
    }

    fn __repr__(&self) -> String {
        format!("Graph({}, {:?})", self.0.vertex_count(), self.0.edges())
    }
}

#[pyfunction]
fn subtree_count(g: &PyGraph) -> PyResult<BigUint> {
    unicyclic::subtree_count(&g.0).or_raise()
}

/// `profile[k]` counts the subtrees on `k` vertices; `profile[0] = 1`.
#[pyfunction]
fn subtree_profile(g: &PyGraph) -> PyResult<Vec<BigUint>> {
    unicyclic::subtree_profile(&g.0).map(|p| p.counts().to_vec()).or_raise()
}

/// Subtrees containing every listed vertex and edge.
#[pyfunction]
#[pyo3(signature = (g, vertices = Vec::new(), edges = Vec::new()))]
fn rooted_subtree_count(g: &PyGraph, vertices: Vec<usize>, edges: Vec<(usize, usize)>) -> PyResult<BigUint> {
    let anchors: Vec<Anchor> = vertices.into_iter().map(Anchor::Vertex).chain(edges.into_iter().map(|(u, v)| Anchor::Edge(u, v))).collect();
    unicyclic::rooted_subtree_count(&g.0, &anchors).or_raise()
}

#[pyfunction]
fn wiener(g: &PyGraph) -> PyResult<BigUint> {
    unicyclic::wiener(&g.0).or_raise()
}

#[pyfunction]
fn merrifield_simmons(g: &PyGraph) -> BigUint {
    unicyclic::merrifield_simmons(&g.0)
}

#[pyfunction]
fn hosoya(g: &PyGraph) -> BigUint {
    unicyclic::hosoya(&g.0)
}

#[pyfunction]
fn closed_form(family: &str, params: Vec<u64>) -> PyResult<BigUint> {
    forms::closed_form(family, &params).or_raise()
}

#[pyfunction]
fn path(n: usize) -> PyResult<PyGraph> {
    families::path(n).map(PyGraph).or_raise()
}

#[pyfunction]
fn cycle(n: usize) -> PyResult<PyGraph> {
    families::cycle(n).map(PyGraph).or_raise()
}

#[pyfunction]
fn star(n: usize) -> PyResult<PyGraph> {
    families::star(n).map(PyGraph).or_raise()
}

#[pyfunction]
#[pyo3(signature = (n, girth = 3))]
fn us(n: usize, girth: usize) -> PyResult<PyGraph> {
    families::us(n, girth).map(PyGraph).or_raise()
}

#[pyfunction]
#[pyo3(signature = (n, girth = 3))]
fn up(n: usize, girth: usize) -> PyResult<PyGraph> {
    families::up(n, girth).map(PyGraph).or_raise()
}

/// `U_index` over the segment lengths; `index` is 1-based.
#[pyfunction]
fn u_cycle_seg(lengths: Vec<usize>, index: usize) -> PyResult<PyGraph> {
    families::u_cycle_seg(&lengths, index).map(PyGraph).or_raise()
}

#[pyfunction]
fn u_two_branch(li: usize, lj: usize, left: Vec<usize>, right: Vec<usize>) -> PyResult<PyGraph> {
    families::u_two_branch(li, lj, &left, &right).map(PyGraph).or_raise()
}

#[pyfunction]
fn u1n(n: usize) -> PyResult<PyGraph> {
    families::u1n(n).map(PyGraph).or_raise()
}

#[pyfunction]
fn starlike(lengths: Vec<usize>) -> PyResult<PyGraph> {
    families::starlike(&lengths).map(PyGraph).or_raise()
}

fn filter(order: Option<usize>, girth: Option<usize>, segments: Option<Vec<usize>>, segment_count: Option<usize>) -> PyResult<ClassFilter> {
    let segments = segments.map(SegmentSequence::new);
    let order = order
        .or_else(|| segments.as_ref().map(|s| s.total()))
        .ok_or_else(|| PyValueError::new_err("give order or segments"))?;
    Ok(ClassFilter { order, girth, segment_sequence: segments, segment_count })
}

/// Unicyclic classes matching the filter, one representative each.
#[pyfunction]
#[pyo3(signature = (order = None, girth = None, segments = None, segment_count = None))]
fn enumerate_unicyclic(order: Option<usize>, girth: Option<usize>, segments: Option<Vec<usize>>, segment_count: Option<usize>) -> PyResult<Vec<PyGraph>> {
    let f = filter(order, girth, segments, segment_count)?;
    unicyclic::unicyclic(&f).map(|ms| ms.into_iter().map(|m| PyGraph(m.graph)).collect()).or_raise()
}

#[pyfunction]
#[pyo3(signature = (order = None, girth = None, segments = None, segment_count = None))]
fn class_count(order: Option<usize>, girth: Option<usize>, segments: Option<Vec<usize>>, segment_count: Option<usize>) -> PyResult<usize> {
    unicyclic::class_count(&filter(order, girth, segments, segment_count)?).or_raise()
}

#[pyfunction]
fn enumerate_trees(n: usize) -> PyResult<Vec<PyGraph>> {
    unicyclic::trees(n).map(|ms| ms.into_iter().map(|m| PyGraph(m.graph)).collect()).or_raise()
}

fn json_to_py<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    PyModule::import(py, "json")?.call_method1("loads", (text,))
}

/// Run a theorem checker or lemma suite; returns the verdict as a dict.
#[pyfunction]
#[pyo3(signature = (theorem, n = None, girth = None, segments = None, segment_count = None, seed = None, count = None, workers = 1))]
#[allow(clippy::too_many_arguments)]
fn verify<'py>(
    py: Python<'py>,
    theorem: &str,
    n: Option<usize>,
    girth: Option<usize>,
    segments: Option<Vec<usize>>,
    segment_count: Option<usize>,
    seed: Option<u64>,
    count: Option<usize>,
    workers: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let id: TheoremId = theorem.parse().or_raise()?;
    let params = Params { n, girth, segments: segments.map(SegmentSequence::new), segment_count, seed, count };
    let verdict = if id.is_theorem() { check_theorem_with_workers(id, &params, workers) } else { check_lemma(id, &params) }.or_raise()?;
    json_to_py(py, &verdict.to_json())
}

#[pyfunction]
fn counterexamples(py: Python<'_>) -> PyResult<Bound<'_, PyAny>> {
    let report = reproduce_counterexamples().or_raise()?;
    json_to_py(py, &report.to_json())
}

/// CSV table of the four indices over a class, with Kendall tau-b footer.
#[pyfunction]
#[pyo3(signature = (order = None, girth = None, segments = None, segment_count = None, workers = 1))]
fn correlate(order: Option<usize>, girth: Option<usize>, segments: Option<Vec<usize>>, segment_count: Option<usize>, workers: usize) -> PyResult<String> {
    correlation_table(&filter(order, girth, segments, segment_count)?, workers).map(|t| t.to_csv()).or_raise()
}

#[pymodule]
fn pyunicyclic(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(subtree_count, m)?)?;
    m.add_function(wrap_pyfunction!(subtree_profile, m)?)?;
    m.add_function(wrap_pyfunction!(rooted_subtree_count, m)?)?;
    m.add_function(wrap_pyfunction!(wiener, m)?)?;
    m.add_function(wrap_pyfunction!(merrifield_simmons, m)?)?;
    m.add_function(wrap_pyfunction!(hosoya, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(path, m)?)?;
    m.add_function(wrap_pyfunction!(cycle, m)?)?;
    m.add_function(wrap_pyfunction!(star, m)?)?;
    m.add_function(wrap_pyfunction!(us, m)?)?;
    m.add_function(wrap_pyfunction!(up, m)?)?;
    m.add_function(wrap_pyfunction!(u_cycle_seg, m)?)?;
    m.add_function(wrap_pyfunction!(u_two_branch, m)?)?;
    m.add_function(wrap_pyfunction!(u1n, m)?)?;
    m.add_function(wrap_pyfunction!(starlike, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_unicyclic, m)?)?;
    m.add_function(wrap_pyfunction!(class_count, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_trees, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(counterexamples, m)?)?;
    m.add_function(wrap_pyfunction!(correlate, m)?)?;
    Ok(())
}
