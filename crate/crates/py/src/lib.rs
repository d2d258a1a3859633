//! Python bindings. Rationals cross the boundary as `fractions.Fraction`
//! on the way out and as `int`, `str` or `Fraction` on the way in.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

use canrel::indexed::{self, IndexMode};
use canrel::json::{parse_scalar, Json};
use canrel::linalg::{Matrix, Scalar};
use canrel::path::{self, StepFactorization};
use canrel::relations::{self, CanonicalRelation};
use canrel::symplectic::{self, ReductionData, SymplecticSpace};
use canrel::verify::{run_suite, VerifyConfig};

create_exception!(canrel, CanrelError, PyValueError);

fn err(e: canrel::Error) -> PyErr {
    CanrelError::new_err(e.to_string())
}

trait OrRaise<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> OrRaise<T> for canrel::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(err)
    }
}

fn mode(extended: bool) -> IndexMode {
    if extended {
        IndexMode::Extended
    } else {
        IndexMode::Standard
    }
}

fn scalar(x: &Bound<'_, PyAny>) -> PyResult<Scalar> {
    parse_scalar(&x.str()?.to_string()).py()
}

fn vectors(rows: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Vec<Vec<Scalar>>> {
    rows.iter().map(|r| r.iter().map(scalar).collect()).collect()
}

fn fractions<'py>(py: Python<'py>, rows: Vec<Vec<Scalar>>) -> PyResult<Vec<Vec<Bound<'py, PyAny>>>> {
    let frac = py.import("fractions")?.getattr("Fraction")?;
    rows.iter()
        .map(|r| r.iter().map(|x| frac.call1((x.to_string(),))).collect())
        .collect()
}

fn to_py<'py>(py: Python<'py>, v: &impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    let s = serde_json::to_string(v).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (s,))
}

fn loads<T: Json>(s: &str) -> PyResult<T> {
    T::from_json_str(s).py()
}

fn indent(i: Option<usize>) -> Option<usize> {
    i.filter(|&n| n > 0)
}

/// A symplectic vector space given by its Gram matrix.
#[pyclass(name = "Space", module = "canrel", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySpace(SymplecticSpace);

#[pymethods]
impl PySpace {
    #[new]
    fn new(form: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Self> {
        let n = form.len();
        let m = Matrix::from_rows(n, vectors(form)?).py()?;
        Ok(Self(SymplecticSpace::new(m).py()?))
    }

    #[staticmethod]
    fn standard(n: usize) -> Self {
        Self(SymplecticSpace::standard(n))
    }

    #[staticmethod]
    fn unit() -> Self {
        Self(SymplecticSpace::unit())
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn half_dim(&self) -> usize {
        self.0.half_dim()
    }

    fn form<'py>(&self, py: Python<'py>) -> PyResult<Vec<Vec<Bound<'py, PyAny>>>> {
        fractions(py, self.0.form().row_vecs())
    }

    fn dual(&self) -> Self {
        Self(self.0.dual())
    }

    fn product(&self, other: &PySpace) -> Self {
        Self(self.0.product(&other.0))
    }

    fn complement(&self, w: &PySubspace) -> PyResult<PySubspace> {
        Ok(PySubspace(self.0.complement(&w.0).py()?))
    }

    fn is_isotropic(&self, w: &PySubspace) -> PyResult<bool> {
        self.0.is_isotropic(&w.0).py()
    }

    fn is_coisotropic(&self, w: &PySubspace) -> PyResult<bool> {
        self.0.is_coisotropic(&w.0).py()
    }

    fn is_lagrangian(&self, w: &PySubspace) -> PyResult<bool> {
        self.0.is_lagrangian(&w.0).py()
    }

    fn chow_distance(&self, l1: &PySubspace, l2: &PySubspace) -> PyResult<usize> {
        symplectic::chow_distance(&self.0, &l1.0, &l2.0).py()
    }

    /// Reduction by a coisotropic subspace.
    fn reduction(&self, coisotropic: &PySubspace) -> PyResult<PyReduction> {
        Ok(PyReduction(symplectic::reduction_data(&self.0, &coisotropic.0).py()?))
    }

    #[pyo3(signature = (indent = None))]
    fn to_json(&self, indent: Option<usize>) -> String {
        self.0.to_json_string(self::indent(indent))
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        loads(s).map(Self)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Space(dim={})", self.0.dim())
    }
}

/// A linear subspace of Q^n in canonical (reduced row echelon) form.
#[pyclass(name = "Subspace", module = "canrel", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySubspace(canrel::linalg::Subspace);

#[pymethods]
impl PySubspace {
    #[new]
    fn new(ambient: usize, vectors: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Self> {
        Ok(Self(canrel::linalg::Subspace::span(ambient, self::vectors(vectors)?).py()?))
    }

    #[staticmethod]
    fn zero(ambient: usize) -> Self {
        Self(canrel::linalg::Subspace::zero(ambient))
    }

    #[staticmethod]
    fn full(ambient: usize) -> Self {
        Self(canrel::linalg::Subspace::full(ambient))
    }

    #[staticmethod]
    fn coordinate(ambient: usize, axes: Vec<usize>) -> Self {
        Self(canrel::linalg::Subspace::coordinate(ambient, &axes))
    }

    #[getter]
    fn ambient(&self) -> usize {
        self.0.ambient()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn basis<'py>(&self, py: Python<'py>) -> PyResult<Vec<Vec<Bound<'py, PyAny>>>> {
        fractions(py, self.0.basis_vectors())
    }

    fn sum(&self, other: &Self) -> PyResult<Self> {
        Ok(Self(self.0.sum(&other.0).py()?))
    }

    fn intersect(&self, other: &Self) -> PyResult<Self> {
        Ok(Self(self.0.intersect(&other.0).py()?))
    }

    fn contains(&self, v: Vec<Bound<'_, PyAny>>) -> PyResult<bool> {
        let v: Vec<Scalar> = v.iter().map(scalar).collect::<PyResult<_>>()?;
        self.0.contains(&v).py()
    }

    fn leq(&self, other: &Self) -> PyResult<bool> {
        self.0.leq(&other.0).py()
    }

    #[pyo3(signature = (indent = None))]
    fn to_json(&self, indent: Option<usize>) -> String {
        self.0.to_json_string(self::indent(indent))
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        loads(s).map(Self)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Subspace(ambient={}, dim={})", self.0.ambient(), self.0.dim())
    }
}

/// Coisotropic reduction `X ⊇ C → X^C = C/C⊥`.
#[pyclass(name = "Reduction", module = "canrel", frozen)]
struct PyReduction(ReductionData);

#[pymethods]
impl PyReduction {
    #[getter]
    fn reduced(&self) -> PySpace {
        PySpace(self.0.reduced.clone())
    }

    #[getter]
    fn perp(&self) -> PySubspace {
        PySubspace(self.0.perp.clone())
    }

    fn reduce(&self, l: &PySubspace) -> PyResult<PySubspace> {
        Ok(PySubspace(symplectic::reduce_lagrangian(&self.0, &l.0).py()?))
    }

    fn reduce_indexed(&self, a: &PyIndexedLagrangian) -> PyResult<PyIndexedLagrangian> {
        Ok(PyIndexedLagrangian(indexed::indexed_reduce(&self.0, &a.0).py()?))
    }

    /// The reduction as a relation `X^C ← X`.
    fn relation(&self) -> PyRelation {
        PyRelation(relations::reduction_relation(&self.0))
    }

    fn __repr__(&self) -> String {
        format!("Reduction({} -> {})", self.0.ambient.dim(), self.0.reduced.dim())
    }
}

/// A linear canonical relation `target ← source`.
#[pyclass(name = "Relation", module = "canrel", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyRelation(CanonicalRelation);

#[pymethods]
impl PyRelation {
    #[new]
    fn new(target: &PySpace, source: &PySpace, body: &PySubspace) -> PyResult<Self> {
        Ok(Self(CanonicalRelation::new(target.0.clone(), source.0.clone(), body.0.clone()).py()?))
    }

    #[staticmethod]
    fn identity(x: &PySpace) -> Self {
        Self(CanonicalRelation::identity(&x.0))
    }

    #[staticmethod]
    fn from_lagrangian(x: &PySpace, l: &PySubspace) -> PyResult<Self> {
        Ok(Self(CanonicalRelation::from_lagrangian(&x.0, &l.0).py()?))
    }

    #[getter]
    fn target(&self) -> PySpace {
        PySpace(self.0.target().clone())
    }

    #[getter]
    fn source(&self) -> PySpace {
        PySpace(self.0.source().clone())
    }

    #[getter]
    fn body(&self) -> PySubspace {
        PySubspace(self.0.body().clone())
    }

    fn transpose(&self) -> Self {
        Self(self.0.transpose())
    }

    fn dual(&self) -> Self {
        Self(self.0.dual_morphism())
    }

    fn product(&self, other: &Self) -> Self {
        Self(self.0.product(&other.0))
    }

    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &self.0.classify())
    }

    /// `(middle, reduction, coreduction)` with `reduction ∘ coreduction = self`.
    #[pyo3(signature = (method = "minimal"))]
    fn factor(&self, method: &str) -> PyResult<(PySpace, PyRelation, PyRelation)> {
        let f = match method {
            "minimal" => relations::factor_minimal(&self.0).py()?,
            "product" => relations::factor(&self.0),
            other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
        };
        Ok((PySpace(f.middle), PyRelation(f.reduction), PyRelation(f.coreduction)))
    }

    #[pyo3(signature = (indent = None))]
    fn to_json(&self, indent: Option<usize>) -> String {
        self.0.to_json_string(self::indent(indent))
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        loads(s).map(Self)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Relation({} <- {})", self.0.target().dim(), self.0.source().dim())
    }
}

/// A canonical relation carrying a nonnegative (or, in extended mode, any) index.
#[pyclass(name = "IndexedRelation", module = "canrel", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyIndexedRelation(indexed::IndexedCanonicalRelation);

#[pymethods]
impl PyIndexedRelation {
    #[new]
    #[pyo3(signature = (relation, index = 0, extended = false))]
    fn new(relation: &PyRelation, index: i64, extended: bool) -> PyResult<Self> {
        Ok(Self(indexed::IndexedCanonicalRelation::new(relation.0.clone(), index, mode(extended)).py()?))
    }

    #[getter]
    fn relation(&self) -> PyRelation {
        PyRelation(self.0.relation().clone())
    }

    #[getter]
    fn index(&self) -> i64 {
        self.0.index()
    }

    fn compose(&self, other: &Self) -> PyResult<Self> {
        Ok(Self(indexed::icompose(&self.0, &other.0).py()?))
    }

    fn product(&self, other: &Self) -> Self {
        Self(indexed::iproduct(&self.0, &other.0))
    }

    fn invert(&self) -> PyResult<Self> {
        Ok(Self(indexed::iinvert(&self.0).py()?))
    }

    fn trace(&self) -> PyResult<i64> {
        indexed::itrace(&self.0).py()
    }

    #[pyo3(signature = (indent = None))]
    fn to_json(&self, indent: Option<usize>) -> String {
        self.0.to_json_string(self::indent(indent))
    }

    #[staticmethod]
    #[pyo3(signature = (s, extended = false))]
    fn from_json(s: &str, extended: bool) -> PyResult<Self> {
        let v: serde_json::Value = serde_json::from_str(s).map_err(|e| CanrelError::new_err(e.to_string()))?;
        Ok(Self(canrel::json::indexed_relation_from_json(&v, mode(extended)).py()?))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0.same_value(&other.0)
    }

    fn __repr__(&self) -> String {
        let r = self.0.relation();
        format!("IndexedRelation({} <- {}, index={})", r.target().dim(), r.source().dim(), self.0.index())
    }
}

/// A Lagrangian subspace with an integer index.
#[pyclass(name = "IndexedLagrangian", module = "canrel", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyIndexedLagrangian(indexed::IndexedLagrangian);

#[pymethods]
impl PyIndexedLagrangian {
    #[new]
    #[pyo3(signature = (space, lagrangian, index = 0))]
    fn new(space: &PySpace, lagrangian: &PySubspace, index: i64) -> PyResult<Self> {
        Ok(Self(indexed::IndexedLagrangian::new(space.0.clone(), lagrangian.0.clone(), index).py()?))
    }

    #[getter]
    fn space(&self) -> PySpace {
        PySpace(self.0.space().clone())
    }

    #[getter]
    fn lagrangian(&self) -> PySubspace {
        PySubspace(self.0.lagrangian().clone())
    }

    #[getter]
    fn index(&self) -> i64 {
        self.0.index()
    }

    /// The Sabot order `self ≤ other`.
    fn leq(&self, other: &Self) -> PyResult<bool> {
        indexed::sabot_leq(&self.0, &other.0).py()
    }

    fn shift(&self, j: i64) -> Self {
        Self(indexed::ishift(&self.0, j))
    }

    #[pyo3(signature = (indent = None))]
    fn to_json(&self, indent: Option<usize>) -> String {
        self.0.to_json_string(self::indent(indent))
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        loads(s).map(Self)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("IndexedLagrangian(dim={}, index={})", self.0.space().dim(), self.0.index())
    }
}

/// A composable sequence of relations, leftmost step first.
#[pyclass(name = "Path", module = "canrel", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPath(path::Path);

#[pymethods]
impl PyPath {
    #[new]
    fn new(steps: Vec<PyRef<'_, PyRelation>>) -> PyResult<Self> {
        Ok(Self(path::Path::new(steps.iter().map(|s| s.0.clone()).collect()).py()?))
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn steps(&self) -> Vec<PyRelation> {
        self.0.steps().iter().cloned().map(PyRelation).collect()
    }

    /// `(shadow, excess)`.
    fn normalize(&self) -> PyResult<(PyRelation, usize)> {
        let nf = path::ww_normalize(&self.0).py()?;
        Ok((PyRelation(nf.shadow), nf.excess))
    }

    /// Fold with indexed composition; `order` is left, right or balanced.
    #[pyo3(signature = (order = "left"))]
    fn fold(&self, order: &str) -> PyResult<PyIndexedRelation> {
        let r = match order {
            "left" => path::fold_left(&self.0),
            "right" => path::fold_right(&self.0),
            "balanced" => path::fold_balanced(&self.0),
            other => return Err(PyValueError::new_err(format!("unknown order {other:?}"))),
        };
        Ok(PyIndexedRelation(r.py()?))
    }

    #[pyo3(signature = (method = "minimal"))]
    fn factorize(&self, method: &str) -> PyResult<(PySpace, PyRelation, PyRelation)> {
        let m = match method {
            "minimal" => StepFactorization::Minimal,
            "product" => StepFactorization::Product,
            other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
        };
        let f = path::path_factorize_with(&self.0, m).py()?;
        Ok((PySpace(f.middle), PyRelation(f.reduction), PyRelation(f.coreduction)))
    }

    #[pyo3(signature = (indent = None))]
    fn to_json(&self, indent: Option<usize>) -> String {
        self.0.to_json_string(self::indent(indent))
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        loads(s).map(Self)
    }

    fn __repr__(&self) -> String {
        format!("Path(len={})", self.0.len())
    }
}

/// `f ∘ g` for `f : X ← Y` and `g : Y ← Z`.
#[pyfunction]
fn compose(f: &PyRelation, g: &PyRelation) -> PyResult<PyRelation> {
    Ok(PyRelation(relations::compose(&f.0, &g.0).py()?))
}

#[pyfunction]
fn pair_excess(f: &PyRelation, g: &PyRelation) -> PyResult<usize> {
    relations::pair_excess(&f.0, &g.0).py()
}

/// `(monic, transversal)` for a composable pair.
#[pyfunction]
fn congeniality(f: &PyRelation, g: &PyRelation) -> PyResult<(bool, bool)> {
    let c = relations::congeniality(&f.0, &g.0).py()?;
    Ok((c.monic, c.transversal))
}

/// Unit and counit of the duality on `x`.
#[pyfunction]
fn unit_counit(x: &PySpace) -> (PyRelation, PyRelation) {
    let (d, e) = relations::unit_counit(&x.0);
    (PyRelation(d), PyRelation(e))
}

#[pyfunction]
fn graph(f: &PyRelation) -> PyRelation {
    PyRelation(relations::graph(&f.0))
}

/// Runs a verification suite and returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (suite = "all", trials = 20, max_dim = 8, seed = 0, extended = false))]
fn verify<'py>(
    py: Python<'py>,
    suite: &str,
    trials: u64,
    max_dim: usize,
    seed: u64,
    extended: bool,
) -> PyResult<Bound<'py, PyAny>> {
    let cfg = VerifyConfig {
        seed,
        trials,
        max_dim,
        mode: mode(extended),
    };
    let report = py.detach(|| run_suite(suite, &cfg)).py()?;
    to_py(py, &report)
}

#[pymodule]
#[pyo3(name = "canrel")]
fn canrel_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("CanrelError", m.py().get_type::<CanrelError>())?;
    m.add_class::<PySpace>()?;
    m.add_class::<PySubspace>()?;
    m.add_class::<PyReduction>()?;
    m.add_class::<PyRelation>()?;
    m.add_class::<PyIndexedRelation>()?;
    m.add_class::<PyIndexedLagrangian>()?;
    m.add_class::<PyPath>()?;
    for f in [
        wrap_pyfunction!(compose, m)?,
        wrap_pyfunction!(pair_excess, m)?,
        wrap_pyfunction!(congeniality, m)?,
        wrap_pyfunction!(unit_counit, m)?,
        wrap_pyfunction!(graph, m)?,
        wrap_pyfunction!(verify, m)?,
    ] {
        m.add_function(f)?;
    }
    Ok(())
}
