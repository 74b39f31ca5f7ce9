use std::collections::BTreeMap;

use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use tcfa_core::conf::{self, SpaceCohomology};
use tcfa_core::format::{self, SchurMap, SpaceFile};
use tcfa_core::stability::{self, StabilityReport};
use tcfa_core::{koszul, oracle, verify, Error, FBCharacter};

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Calibration(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

type Piece = (usize, i64, i64, BTreeMap<String, i64>);

/// A tri-graded Frobenius character with pieces indexed by `(k, c, w)`.
#[pyclass(name = "Character", module = "tcfa")]
struct PyCharacter {
    inner: FBCharacter,
}

impl From<FBCharacter> for PyCharacter {
    fn from(inner: FBCharacter) -> Self {
        PyCharacter { inner }
    }
}

#[pymethods]
impl PyCharacter {
    #[getter]
    fn max_degree(&self) -> usize {
        self.inner.max_degree()
    }

    /// `(k, c, w, {partition: multiplicity})` for every nonzero piece.
    fn pieces(&self) -> PyResult<Vec<Piece>> {
        self.inner
            .pieces()
            .map(|(t, f)| {
                let schur = SchurMap::from_symfunc(f).map_err(py_err)?;
                let map = schur.0.iter().map(|(p, m)| (p.to_string(), *m)).collect();
                Ok((t.k, t.c, t.w, map))
            })
            .collect()
    }

    /// `{(c, w): dimension}` of graded degree `k`.
    fn dimension(&self, k: usize) -> BTreeMap<(i64, i64), BigInt> {
        self.inner.dimension(k)
    }

    fn total_dimension(&self, k: usize) -> BigInt {
        self.inner.total_dimension(k)
    }

    fn is_effective(&self) -> bool {
        self.inner.is_effective()
    }

    fn shift(&self, dc: i64, dw: i64) -> PyCharacter {
        self.inner.shift(dc, dw).into()
    }

    fn truncate(&self, max_degree: usize) -> PyCharacter {
        self.inner.truncate(max_degree).into()
    }

    fn induction_product(&self, other: PyRef<'_, PyCharacter>) -> PyCharacter {
        self.inner.induction_product(&other.inner).into()
    }

    fn super_adams(&self, r: usize) -> PyResult<PyCharacter> {
        self.inner.super_adams(r).map(Into::into).map_err(py_err)
    }

    fn sym_exp(&self) -> PyResult<PyCharacter> {
        self.inner.sym_exp().map(Into::into).map_err(py_err)
    }

    fn sym_log(&self) -> PyResult<PyCharacter> {
        self.inner.sym_log().map(Into::into).map_err(py_err)
    }

    fn table(&self) -> String {
        format::character_table(&self.inner)
    }

    fn __add__(&self, other: PyRef<'_, PyCharacter>) -> PyCharacter {
        self.inner.add(&other.inner).into()
    }

    fn __sub__(&self, other: PyRef<'_, PyCharacter>) -> PyCharacter {
        self.inner.sub(&other.inner).into()
    }

    fn __mul__(&self, other: PyRef<'_, PyCharacter>) -> PyCharacter {
        self.inner.induction_product(&other.inner).into()
    }

    fn __eq__(&self, other: PyRef<'_, PyCharacter>) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Character(max_degree={}, pieces={})", self.inner.max_degree(), self.inner.pieces().count())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

/// Cohomology of a space `X` with renormalized dualizing coefficients.
#[pyclass(name = "Space", module = "tcfa")]
struct PySpace {
    inner: SpaceCohomology,
}

#[pymethods]
impl PySpace {
    #[new]
    #[pyo3(signature = (dimension, classes, irreducible=false, trivial_multiplication=false, top_triv=0, gap_s=0))]
    fn new(
        dimension: usize,
        classes: Vec<(i64, i64, u64)>,
        irreducible: bool,
        trivial_multiplication: bool,
        top_triv: usize,
        gap_s: usize,
    ) -> PyResult<Self> {
        let inner = SpaceCohomology::new(dimension, classes)
            .and_then(|s| s.with_flags(irreducible, trivial_multiplication, top_triv, gap_s))
            .map_err(py_err)?;
        Ok(PySpace { inner })
    }

    /// Affine space `A^d`.
    #[staticmethod]
    fn affine(d: usize) -> Self {
        PySpace {
            inner: SpaceCohomology::affine(d),
        }
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let (inner, _) = SpaceFile::parse(text).map_err(py_err)?;
        Ok(PySpace { inner })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&SpaceFile::from_space(&self.inner)).expect("space files always serialize")
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.inner.d
    }

    fn classes(&self) -> Vec<(i64, i64, u64)> {
        self.inner.classes().iter().map(|(&(c, w), &dim)| (c, w, dim)).collect()
    }

    fn character(&self, max_degree: usize) -> PyCharacter {
        self.inner.character(max_degree).into()
    }

    fn disjoint_union(&self, other: PyRef<'_, PySpace>) -> PyResult<PySpace> {
        let inner = self.inner.disjoint_union(&other.inner).map_err(py_err)?;
        Ok(PySpace { inner })
    }

    fn __repr__(&self) -> String {
        format!("Space({})", self.to_json())
    }
}

/// Characters of the dual coalgebra `a_n` and its renormalization.
#[pyfunction]
#[pyo3(signature = (n, d, max_degree=6))]
fn koszul_character(n: usize, d: usize, max_degree: usize) -> PyResult<(PyCharacter, PyCharacter)> {
    let a = koszul::an_character(n, d, max_degree).map_err(py_err)?;
    Ok((a.character.into(), a.renormalized.into()))
}

#[pyfunction]
#[pyo3(signature = (space, n, max_degree=6, include_unit=true))]
fn conf_character(space: PyRef<'_, PySpace>, n: usize, max_degree: usize, include_unit: bool) -> PyResult<PyCharacter> {
    let cc = conf::conf_cohomology(&space.inner, n, max_degree, include_unit).map_err(py_err)?;
    Ok(cc.character.into())
}

/// `{exponent: coefficient}` of the Poincaré polynomial of graded degree `k`.
#[pyfunction]
fn poincare(space: PyRef<'_, PySpace>, n: usize, k: usize) -> PyResult<BTreeMap<i64, BigInt>> {
    let cc = conf::conf_cohomology(&space.inner, n, k, true).map_err(py_err)?;
    let p = conf::poincare(&cc, k).map_err(py_err)?;
    Ok(p.terms().map(|(e, c)| (e, c.clone())).collect())
}

/// `{exponent: coefficient}` of the E-polynomial of graded degree `k`.
#[pyfunction]
fn e_polynomial(space: PyRef<'_, PySpace>, n: usize, k: usize) -> PyResult<BTreeMap<i64, BigInt>> {
    let cc = conf::conf_cohomology(&space.inner, n, k, true).map_err(py_err)?;
    let p = conf::e_polynomial(&cc, k).map_err(py_err)?;
    Ok(p.terms().map(|(e, c)| (e, c.clone())).collect())
}

/// Points of `P_n^k(A^d)` over the field with `q` elements.
#[pyfunction]
fn point_count(q: u64, d: usize, k: usize, n: usize) -> PyResult<BigInt> {
    let query = oracle::CountQuery::new(q, d, k, n).map_err(py_err)?;
    oracle::point_count(&query).map_err(py_err)
}

/// Stability report as a dictionary with the same layout as the CLI output.
#[pyfunction]
#[pyo3(signature = (space, mode, c0=None, m=None, i=None, n=2, max_degree=6))]
#[allow(clippy::too_many_arguments)]
fn stability_report<'py>(
    py: Python<'py>,
    space: PyRef<'_, PySpace>,
    mode: &str,
    c0: Option<i64>,
    m: Option<usize>,
    i: Option<i64>,
    n: usize,
    max_degree: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let missing = |flag: &str| PyValueError::new_err(format!("mode {mode} needs {flag}"));
    let report: StabilityReport = match mode {
        "iterate" => stability::iterate_indecomposables(&space.inner, n, c0.ok_or_else(|| missing("c0"))?, max_degree),
        "toptriv" if n != 2 => Err(Error::Hypothesis(format!("the operator splitting needs n = 2, got n = {n}"))),
        "toptriv" => stability::toptriv_split(&space.inner, m.ok_or_else(|| missing("m"))?, max_degree),
        "figen" => stability::finite_generation_report(
            &space.inner,
            n,
            c0.ok_or_else(|| missing("c0"))?,
            i.ok_or_else(|| missing("i"))?,
        ),
        other => return Err(PyValueError::new_err(format!("unknown mode {other:?}"))),
    }
    .map_err(py_err)?;
    let entry = format::report_entry(&report).map_err(py_err)?;
    let text = serde_json::to_string(&entry).expect("reports always serialize");
    py.import("json")?.call_method1("loads", (text,))
}

/// `[(name, passed, detail)]` for a verification suite.
#[pyfunction]
#[pyo3(signature = (suite="all", max_degree=6))]
fn run_verify(suite: &str, max_degree: usize) -> PyResult<Vec<(String, bool, String)>> {
    let suite: verify::Suite = suite.parse().map_err(py_err)?;
    Ok(verify::run(suite, max_degree)
        .into_iter()
        .map(|r| (r.name, r.passed, r.detail))
        .collect())
}

#[pymodule]
fn tcfa(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCharacter>()?;
    m.add_class::<PySpace>()?;
    m.add_function(wrap_pyfunction!(koszul_character, m)?)?;
    m.add_function(wrap_pyfunction!(conf_character, m)?)?;
    m.add_function(wrap_pyfunction!(poincare, m)?)?;
    m.add_function(wrap_pyfunction!(e_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(point_count, m)?)?;
    m.add_function(wrap_pyfunction!(stability_report, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
