//! Python bindings: an `Algebra` class wrapping the structure-constant table
//! plus the orbit-counting functions and the equivariance battery.
//!
//! Rationals cross the boundary as strings in `p/q` lowest-terms form;
//! integers are accepted wherever a scalar is expected.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use algvar::algebra::{self, MulTable};
use algvar::cohomology::{self, TheoryKind};
use algvar::counting;
use algvar::equivariance;
use algvar::forms;
use algvar::identities;
use algvar::incidence;
use algvar::matrix::Matrix;
use algvar::moduli::{self, Theory};
use algvar::scalar::Rat;
use algvar::Error;

fn to_py_err(err: Error) -> PyErr {
    match err {
        Error::InternalInconsistency(msg) => PyRuntimeError::new_err(msg),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn parse_scalar(value: &Bound<'_, PyAny>) -> PyResult<Rat> {
    if let Ok(n) = value.extract::<i64>() {
        return Ok(Rat::from_int(n));
    }
    let s: String = value.extract()?;
    s.parse::<Rat>().map_err(to_py_err)
}

fn parse_vector(values: Vec<Bound<'_, PyAny>>) -> PyResult<Vec<Rat>> {
    values.iter().map(parse_scalar).collect()
}

fn parse_matrix(rows: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Matrix> {
    let parsed: Vec<Vec<Rat>> = rows
        .into_iter()
        .map(parse_vector)
        .collect::<PyResult<_>>()?;
    let cols = parsed.first().map_or(0, Vec::len);
    if parsed.iter().any(|r| r.len() != cols) {
        return Err(PyValueError::new_err("ragged matrix rows"));
    }
    Ok(Matrix::from_rows(parsed))
}

fn parse_cohomology_theory(name: &str) -> PyResult<TheoryKind> {
    match name {
        "alg" | "hochschild" => Ok(TheoryKind::Hochschild),
        "comm" | "harrison" => Ok(TheoryKind::Harrison),
        "leib" | "leibniz" => Ok(TheoryKind::Leibniz),
        "lie" | "ce" => Ok(TheoryKind::ChevalleyEilenberg),
        other => Err(PyValueError::new_err(format!("unknown theory {other:?}"))),
    }
}

fn parse_variety_theory(name: &str) -> PyResult<Theory> {
    match name {
        "alg" | "hochschild" => Ok(Theory::Alg),
        "comm" | "harrison" => Ok(Theory::Comm),
        "leib" | "leibniz" => Ok(Theory::Leib),
        "lie" | "ce" => Ok(Theory::Lie),
        other => Err(PyValueError::new_err(format!("unknown theory {other:?}"))),
    }
}

fn strings(values: &[Rat]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

fn gram_dict<'py>(py: Python<'py>, form: &forms::GramForm) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    let gram: Vec<Vec<String>> = (0..form.gram.nrows())
        .map(|i| strings(form.gram.row(i)))
        .collect();
    d.set_item("gram", gram)?;
    d.set_item("discriminant", form.discriminant.to_string())?;
    d.set_item("nondegenerate", form.is_nondegenerate())?;
    d.set_item("on_variety", form.on_variety)?;
    Ok(d)
}

/// A finite-dimensional bilinear product given by structure constants.
#[pyclass(from_py_object)]
#[derive(Clone)]
struct Algebra {
    table: MulTable,
    name: String,
}

#[pymethods]
impl Algebra {
    /// Builds from sparse triples: `Algebra(dim, [(i, j, l, c), ...])` where
    /// `c` is an int or a "p/q" string.
    #[new]
    fn new(dim: usize, triples: Vec<(usize, usize, usize, Bound<'_, PyAny>)>) -> PyResult<Self> {
        let parsed: Vec<(usize, usize, usize, Rat)> = triples
            .iter()
            .map(|(i, j, l, c)| Ok((*i, *j, *l, parse_scalar(c)?)))
            .collect::<PyResult<_>>()?;
        let table = MulTable::from_triples(dim, &parsed).map_err(to_py_err)?;
        Ok(Algebra {
            table,
            name: format!("custom({dim})"),
        })
    }

    #[staticmethod]
    fn matrix_algebra(r: usize) -> Self {
        Algebra {
            table: algebra::matrix_algebra(r),
            name: format!("matrix_algebra({r})"),
        }
    }

    #[staticmethod]
    fn split_etale(n: usize) -> Self {
        Algebra {
            table: algebra::split_etale(n),
            name: format!("split_etale({n})"),
        }
    }

    #[staticmethod]
    fn dual_numbers() -> Self {
        Algebra {
            table: algebra::dual_numbers(),
            name: "dual_numbers".into(),
        }
    }

    #[staticmethod]
    fn sl2() -> Self {
        Algebra {
            table: algebra::sl2(),
            name: "sl2".into(),
        }
    }

    #[staticmethod]
    fn abelian(n: usize) -> Self {
        Algebra {
            table: algebra::abelian(n),
            name: format!("abelian({n})"),
        }
    }

    #[staticmethod]
    fn leibniz2() -> Self {
        Algebra {
            table: algebra::leibniz2(),
            name: "leibniz2".into(),
        }
    }

    /// Parses the algebra JSON file format.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let (name, table) = algebra::from_json(text).map_err(to_py_err)?;
        Ok(Algebra { table, name })
    }

    fn to_json(&self) -> String {
        algebra::to_json(&self.name, &self.table)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.table.dim()
    }

    #[getter]
    fn name(&self) -> String {
        self.name.clone()
    }

    /// Structure constant c[i][j][l] as a string.
    fn coefficient(&self, i: usize, j: usize, l: usize) -> PyResult<String> {
        let n = self.table.dim();
        if i >= n || j >= n || l >= n {
            return Err(PyValueError::new_err("index out of range"));
        }
        Ok(self.table.c(i, j, l).to_string())
    }

    fn is_associative(&self) -> bool {
        identities::is_associative(&self.table)
    }

    fn is_symmetric(&self) -> bool {
        identities::is_symmetric(&self.table)
    }

    fn is_commutative(&self) -> bool {
        identities::is_commutative(&self.table)
    }

    fn is_leibniz(&self) -> bool {
        identities::is_leibniz(&self.table)
    }

    fn is_skew(&self) -> bool {
        identities::is_skew(&self.table)
    }

    fn is_lie(&self) -> bool {
        identities::is_lie(&self.table)
    }

    /// `mu(a, b)` for coefficient vectors of ints or "p/q" strings.
    fn multiply(
        &self,
        a: Vec<Bound<'_, PyAny>>,
        b: Vec<Bound<'_, PyAny>>,
    ) -> PyResult<Vec<String>> {
        let a = parse_vector(a)?;
        let b = parse_vector(b)?;
        let out = self.table.multiply(&a, &b).map_err(to_py_err)?;
        Ok(strings(&out))
    }

    /// Transport of structure by an invertible matrix (rows of ints/strings).
    fn transport(&self, g: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Algebra> {
        let g = parse_matrix(g)?;
        let table = self.table.transport(&g).map_err(to_py_err)?;
        Ok(Algebra {
            table,
            name: format!("{}~", self.name),
        })
    }

    fn direct_sum(&self, other: &Algebra) -> Algebra {
        Algebra {
            table: self.table.direct_sum(&other.table),
            name: format!("{}+{}", self.name, other.name),
        }
    }

    /// Cohomology summary for "hochschild"/"harrison"/"leibniz"/"ce"
    /// (variety aliases alg/comm/leib/lie also accepted).
    fn cohomology<'py>(&self, py: Python<'py>, theory: &str) -> PyResult<Bound<'py, PyDict>> {
        let kind = parse_cohomology_theory(theory)?;
        let s = cohomology::summary(&self.table, kind).map_err(to_py_err)?;
        let d = PyDict::new(py);
        d.set_item("theory", kind.name())?;
        d.set_item("c2_dim", s.c2_dim)?;
        d.set_item("z1", s.z1)?;
        d.set_item("b1", s.b1)?;
        d.set_item("h1", s.h1)?;
        d.set_item("z2", s.z2)?;
        d.set_item("b2", s.b2)?;
        d.set_item("h2", s.h2)?;
        d.set_item("rank_d2", s.rank_d2)?;
        d.set_item("derivations_dim", s.derivations_dim)?;
        d.set_item("inner_dim", s.inner_dim)?;
        d.set_item("center_dim", s.center_dim)?;
        Ok(d)
    }

    fn trace_form<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        gram_dict(py, &forms::trace_gram(&self.table))
    }

    fn killing_form<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let form = forms::killing_gram(&self.table).map_err(to_py_err)?;
        gram_dict(py, &form)
    }

    fn is_separable(&self) -> PyResult<bool> {
        forms::is_separable(&self.table).map_err(to_py_err)
    }

    fn is_semisimple_lie_point(&self) -> PyResult<bool> {
        forms::is_semisimple_lie_point(&self.table).map_err(to_py_err)
    }

    /// `(sigma_L, sigma_R)` as string vectors.
    fn modular_characters(&self) -> (Vec<String>, Vec<String>) {
        let chars = forms::modular_characters(&self.table);
        (strings(&chars.sigma_l), strings(&chars.sigma_r))
    }

    fn leibniz_kernel_dim(&self) -> usize {
        forms::leibniz_kernel(&self.table).len()
    }

    fn right_annihilator_dim(&self) -> usize {
        forms::right_annihilator(&self.table).len()
    }

    /// Checks the right-multiplication operator identities; raises on a
    /// violating basis pair.
    fn check_operator_identities(&self) -> PyResult<()> {
        forms::operator_identities_check(&self.table).map_err(|v| {
            PyValueError::new_err(format!("{} violated at pair {:?}", v.identity, v.pair))
        })
    }

    /// Dimension of the associative incidence fiber (Hochschild 2-cocycles
    /// at associative points).
    fn fiber_as_dim(&self) -> usize {
        incidence::fiber_as(&self.table).dim()
    }

    /// Dimension of the Leibniz incidence fiber.
    fn fiber_leib_dim(&self) -> usize {
        incidence::fiber_leib(&self.table).dim()
    }

    /// Tangent-level rigidity verdict for "alg"/"comm"/"leib"/"lie".
    fn rigidity<'py>(&self, py: Python<'py>, theory: &str) -> PyResult<Bound<'py, PyDict>> {
        let theory = parse_variety_theory(theory)?;
        let v = moduli::rigidity_verdict(&self.table, theory).map_err(to_py_err)?;
        let d = PyDict::new(py);
        d.set_item("theory", theory.name())?;
        d.set_item("variety_tangent_dim", v.variety_tangent_dim)?;
        d.set_item("orbit_tangent_dim", v.orbit_tangent_dim)?;
        d.set_item("stack_tangent_dim", v.stack_tangent_dim)?;
        d.set_item("orbit_open", v.orbit_open)?;
        d.set_item("rigid_in_moduli", v.rigid_in_moduli)?;
        d.set_item("predicted_dim", v.predicted_dim)?;
        Ok(d)
    }

    fn stratum_rank(&self, theory: &str) -> PyResult<usize> {
        let theory = parse_variety_theory(theory)?;
        Ok(moduli::stratum_invariant(&self.table, theory)
            .map_err(to_py_err)?
            .rank_d2)
    }

    fn __repr__(&self) -> String {
        format!("Algebra(name={:?}, dim={})", self.name, self.table.dim())
    }
}

fn count_dict<'py>(py: Python<'py>, r: counting::CountResult) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("n", r.n)?;
    d.set_item("value", r.value)?;
    if let Some(w) = r.witnesses {
        d.set_item("witnesses", w)?;
    }
    Ok(d)
}

/// Number of multisets of positive integers whose squares sum to n.
#[pyfunction]
#[pyo3(signature = (n, witnesses = false))]
fn count_assoc(py: Python<'_>, n: usize, witnesses: bool) -> PyResult<Bound<'_, PyDict>> {
    if n == 0 {
        return Err(PyValueError::new_err("n must be at least 1"));
    }
    count_dict(py, counting::n_assoc(n, witnesses))
}

/// Number of multisets of simple Lie algebras with total dimension n.
#[pyfunction]
#[pyo3(signature = (n, witnesses = false))]
fn count_lie(py: Python<'_>, n: usize, witnesses: bool) -> PyResult<Bound<'_, PyDict>> {
    if n == 0 {
        return Err(PyValueError::new_err("n must be at least 1"));
    }
    count_dict(py, counting::n_lie(n, witnesses))
}

/// Runs the seeded equivariance battery; returns one dict per law.
#[pyfunction]
#[pyo3(signature = (seed, dims = vec![2, 3], trials = 20))]
fn run_equivariance(
    py: Python<'_>,
    seed: u64,
    dims: Vec<usize>,
    trials: usize,
) -> PyResult<Vec<Bound<'_, PyDict>>> {
    equivariance::run_battery(seed, &dims, trials)
        .into_iter()
        .map(|law| {
            let d = PyDict::new(py);
            d.set_item("law", law.law)?;
            d.set_item("dim", law.dim)?;
            d.set_item("trials", law.trials)?;
            d.set_item("failures", law.failures)?;
            d.set_item("passed", law.passed)?;
            Ok(d)
        })
        .collect()
}

#[pymodule]
fn algvar_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Algebra>()?;
    m.add_function(wrap_pyfunction!(count_assoc, m)?)?;
    m.add_function(wrap_pyfunction!(count_lie, m)?)?;
    m.add_function(wrap_pyfunction!(run_equivariance, m)?)?;
    Ok(())
}
