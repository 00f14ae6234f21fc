//! Python bindings. Scalars cross the boundary as `fractions.Fraction`;
//! inputs may be ints, Fractions or strings such as `"-3/4"`.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyList;

use splitalg_core::algebra::{AlgebraSpec, LinearMapSpec, RepresentationSpec, Signature};
use splitalg_core::constructions;
use splitalg_core::document::Document as CoreDocument;
use splitalg_core::identity::{check as check_identities, CheckOptions, ViolationReport, QUADRI_COLLAPSE};
use splitalg_core::linalg::{format_rational, parse_rational, Matrix, Rational, Vector};
use splitalg_core::operators::{self, OperatorKind, Subject, DEFAULT_SEARCH_CAP};
use splitalg_core::quotients;
use splitalg_core::samples;

create_exception!(splitalg, SplitalgError, PyValueError);

fn err(e: splitalg_core::error::Error) -> PyErr {
    SplitalgError::new_err(e.to_string())
}

fn to_rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let text = obj.str()?.to_string();
    parse_rational(&text).ok_or_else(|| SplitalgError::new_err(format!("not a rational: {text}")))
}

fn to_fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((format_rational(r),))
}

fn vector_out<'py>(py: Python<'py>, v: &Vector) -> PyResult<Bound<'py, PyList>> {
    let items = v.iter().map(|r| to_fraction(py, r)).collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

fn vector_in(obj: &Bound<'_, PyAny>) -> PyResult<Vector> {
    obj.try_iter()?.map(|x| to_rational(&x?)).collect()
}

type ViolationTuple<'py> = (String, Vec<usize>, Bound<'py, PyList>);

/// Outcome of an identity or operator check.
#[pyclass(frozen, module = "splitalg")]
struct Report {
    inner: ViolationReport,
}

#[pymethods]
impl Report {
    #[getter]
    fn passed(&self) -> bool {
        self.inner.passed()
    }

    #[getter]
    fn checked(&self) -> usize {
        self.inner.checked
    }

    #[getter]
    fn violation_count(&self) -> usize {
        self.inner.violation_count()
    }

    /// `(id, witness, residual)` for each retained violation.
    fn violations<'py>(&self, py: Python<'py>) -> PyResult<Vec<ViolationTuple<'py>>> {
        self.inner
            .violations
            .iter()
            .map(|v| Ok((v.id.clone(), v.witness.clone(), vector_out(py, &v.residual)?)))
            .collect()
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn __str__(&self) -> String {
        self.inner.render_text()
    }

    fn __bool__(&self) -> bool {
        self.inner.passed()
    }

    fn __repr__(&self) -> String {
        format!(
            "Report(passed={}, checked={}, violations={})",
            self.inner.passed(),
            self.inner.checked,
            self.inner.violation_count()
        )
    }
}

#[pyclass(frozen, from_py_object, module = "splitalg")]
#[derive(Clone)]
struct Algebra {
    inner: AlgebraSpec,
}

#[pymethods]
impl Algebra {
    /// A zero algebra of the given signature.
    #[staticmethod]
    fn zero(dimension: usize, signature: &str) -> PyResult<Self> {
        let sig = signature.parse().map_err(err)?;
        Ok(Algebra { inner: AlgebraSpec::zero(dimension, sig) })
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    #[getter]
    fn signature(&self) -> &'static str {
        self.inner.signature().name()
    }

    #[getter]
    fn operations(&self) -> Vec<String> {
        self.inner.operations().keys().cloned().collect()
    }

    /// `e_i op e_j` as a coefficient list.
    fn product<'py>(&self, py: Python<'py>, op: &str, i: usize, j: usize) -> PyResult<Bound<'py, PyList>> {
        let table = self.inner.op(op).map_err(err)?;
        let n = self.inner.dimension();
        if i >= n || j >= n {
            return Err(SplitalgError::new_err(format!("basis index out of range for dimension {n}")));
        }
        vector_out(py, table.product(i, j))
    }

    fn evaluate<'py>(
        &self,
        py: Python<'py>,
        op: &str,
        x: &Bound<'py, PyAny>,
        y: &Bound<'py, PyAny>,
    ) -> PyResult<Bound<'py, PyList>> {
        let v = self.inner.op(op).map_err(err)?.evaluate(&vector_in(x)?, &vector_in(y)?).map_err(err)?;
        vector_out(py, &v)
    }

    #[pyo3(signature = (catalog, paranoid = false))]
    fn check(&self, catalog: &str, paranoid: bool) -> PyResult<Report> {
        let options = CheckOptions { paranoid, ..CheckOptions::default() };
        let inner = py_detach(|| check_identities(&self.inner, catalog, options)).map_err(err)?;
        Ok(Report { inner })
    }

    fn __repr__(&self) -> String {
        format!("Algebra(dimension={}, signature={:?})", self.inner.dimension(), self.inner.signature().name())
    }

    fn __eq__(&self, other: &Algebra) -> bool {
        self.inner == other.inner
    }
}

fn py_detach<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    Python::attach(|py| py.detach(f))
}

#[pyclass(frozen, from_py_object, module = "splitalg")]
#[derive(Clone)]
struct LinearMap {
    inner: LinearMapSpec,
}

#[pymethods]
impl LinearMap {
    /// Builds a map from its matrix rows; column `j` is the image of `e_j`.
    #[new]
    fn new(rows: &Bound<'_, PyAny>) -> PyResult<Self> {
        let rows: Vec<Vector> = rows.try_iter()?.map(|r| vector_in(&r?)).collect::<PyResult<_>>()?;
        let cols = rows.first().map_or(0, Vector::len);
        let matrix = Matrix::from_rows(cols, rows.into_iter().map(Vector::into_inner).collect()).map_err(err)?;
        Ok(LinearMap { inner: LinearMapSpec::new(matrix) })
    }

    #[staticmethod]
    fn identity(n: usize) -> Self {
        LinearMap { inner: LinearMapSpec::identity(n) }
    }

    #[getter]
    fn shape(&self) -> (usize, usize) {
        (self.inner.matrix().rows(), self.inner.matrix().cols())
    }

    fn rows<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyList>>> {
        self.inner.matrix().row_vectors().iter().map(|r| vector_out(py, r)).collect()
    }

    fn apply<'py>(&self, py: Python<'py>, v: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyList>> {
        vector_out(py, &self.inner.apply(&vector_in(v)?).map_err(err)?)
    }

    fn __repr__(&self) -> String {
        let (r, c) = self.shape();
        format!("LinearMap(shape=({r}, {c}))")
    }

    fn __eq__(&self, other: &LinearMap) -> bool {
        self.inner.matrix() == other.inner.matrix()
    }
}

/// A parsed JSON document of named algebras and maps.
#[pyclass(module = "splitalg")]
struct Document {
    inner: CoreDocument,
}

#[pymethods]
impl Document {
    #[new]
    fn new() -> Self {
        Document { inner: CoreDocument::default() }
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Document { inner: CoreDocument::parse(text).map_err(err)? })
    }

    #[getter]
    fn algebras(&self) -> Vec<String> {
        self.inner.algebras.keys().cloned().collect()
    }

    #[getter]
    fn maps(&self) -> Vec<String> {
        self.inner.maps.keys().cloned().collect()
    }

    fn algebra(&self, name: &str) -> PyResult<Algebra> {
        Ok(Algebra { inner: self.inner.algebra(name).map_err(err)?.clone() })
    }

    fn map(&self, name: &str) -> PyResult<LinearMap> {
        Ok(LinearMap { inner: self.inner.map(name).map_err(err)?.clone() })
    }

    fn insert_algebra(&mut self, name: &str, algebra: &Algebra) -> PyResult<()> {
        self.inner.insert_algebra(name, algebra.inner.clone()).map_err(err)
    }

    fn insert_map(&mut self, name: &str, map: &LinearMap) {
        self.inner.insert_map(name, map.inner.clone());
    }

    fn to_json(&self) -> String {
        self.inner.to_canonical_string()
    }
}

/// Checks `map` as an operator of `kind` on `algebra`. Relative kinds use
/// the adjoint representation.
#[pyfunction]
fn check_operator(algebra: &Algebra, kind: &str, map: &LinearMap) -> PyResult<Report> {
    let kind: OperatorKind = kind.parse().map_err(err)?;
    let verdict = py_detach(|| operators::check_operator(Subject::Algebra(&algebra.inner), kind, &map.inner)).map_err(err)?;
    Ok(Report { inner: verdict.report })
}

/// All square maps with entries from `grid` that pass `kind`, in row-major
/// lexicographic order.
#[pyfunction]
#[pyo3(signature = (algebra, kind, grid, cap = DEFAULT_SEARCH_CAP))]
fn search_operators(algebra: &Algebra, kind: &str, grid: &Bound<'_, PyAny>, cap: u64) -> PyResult<Vec<LinearMap>> {
    let kind: OperatorKind = kind.parse().map_err(err)?;
    let grid = vector_in(grid)?.into_inner();
    let found =
        py_detach(|| operators::search_operators(Subject::Algebra(&algebra.inner), kind, &grid, cap)).map_err(err)?;
    Ok(found.into_iter().map(|inner| LinearMap { inner }).collect())
}

#[pyfunction]
fn truncated_polynomials(degree: usize) -> Algebra {
    Algebra { inner: samples::truncated_polynomials(degree) }
}

#[pyfunction]
fn integration_map(degree: usize) -> LinearMap {
    LinearMap { inner: samples::integration_map(degree) }
}

#[pyfunction]
fn polynomial_dendriform() -> PyResult<Algebra> {
    Ok(Algebra { inner: samples::polynomial_dendriform().map_err(err)? })
}

#[pyfunction]
fn aguiar_dendriform(assoc: &Algebra, r: &LinearMap) -> PyResult<Algebra> {
    Ok(Algebra { inner: constructions::aguiar_dendriform(&assoc.inner, &r.inner).map_err(err)? })
}

#[pyfunction]
fn aguiar_diassociative(assoc: &Algebra, h: &LinearMap) -> PyResult<Algebra> {
    Ok(Algebra { inner: constructions::aguiar_diassociative(&assoc.inner, &h.inner).map_err(err)? })
}

/// Quadri-dendriform algebra on the adjoint module of `d` induced by `t`.
#[pyfunction]
fn induced_quadri(d: &Algebra, t: &LinearMap) -> PyResult<Algebra> {
    let rep = RepresentationSpec::adjoint(&d.inner).map_err(err)?;
    Ok(Algebra { inner: constructions::induced_quadri(&rep, &t.inner).map_err(err)? })
}

#[pyfunction]
fn sum_collapse(q: &Algebra) -> PyResult<Algebra> {
    let inner = if q.inner.signature() == Signature::Six {
        constructions::sum_collapse_six(&q.inner)
    } else {
        constructions::sum_collapse_quadri(&q.inner)
    };
    Ok(Algebra { inner: inner.map_err(err)? })
}

#[pyfunction]
fn promote_to_six(d: &Algebra) -> PyResult<Algebra> {
    Ok(Algebra { inner: constructions::promote_to_six(&d.inner).map_err(err)? })
}

/// Rank of the splitting ideal of a quadri-dendriform algebra.
#[pyfunction]
fn splitting_ideal_rank(q: &Algebra) -> PyResult<usize> {
    Ok(quotients::splitting_ideal(&q.inner).map_err(err)?.rank())
}

/// The dendriform quotient of `q` by its splitting ideal, with the
/// projection map.
#[pyfunction]
fn splitting_quotient(q: &Algebra) -> PyResult<(Algebra, LinearMap)> {
    let ideal = quotients::splitting_ideal(&q.inner).map_err(err)?;
    let quotient = quotients::quotient_algebra(&q.inner, &ideal, &QUADRI_COLLAPSE).map_err(err)?;
    Ok((Algebra { inner: quotient.algebra }, LinearMap { inner: quotient.map }))
}

#[pymodule]
#[pyo3(name = "splitalg")]
pub fn splitalg_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("SplitalgError", m.py().get_type::<SplitalgError>())?;
    m.add_class::<Algebra>()?;
    m.add_class::<LinearMap>()?;
    m.add_class::<Document>()?;
    m.add_class::<Report>()?;
    m.add_function(wrap_pyfunction!(check_operator, m)?)?;
    m.add_function(wrap_pyfunction!(search_operators, m)?)?;
    m.add_function(wrap_pyfunction!(truncated_polynomials, m)?)?;
    m.add_function(wrap_pyfunction!(integration_map, m)?)?;
    m.add_function(wrap_pyfunction!(polynomial_dendriform, m)?)?;
    m.add_function(wrap_pyfunction!(aguiar_dendriform, m)?)?;
    m.add_function(wrap_pyfunction!(aguiar_diassociative, m)?)?;
    m.add_function(wrap_pyfunction!(induced_quadri, m)?)?;
    m.add_function(wrap_pyfunction!(sum_collapse, m)?)?;
    m.add_function(wrap_pyfunction!(promote_to_six, m)?)?;
    m.add_function(wrap_pyfunction!(splitting_ideal_rank, m)?)?;
    m.add_function(wrap_pyfunction!(splitting_quotient, m)?)?;
    Ok(())
}
