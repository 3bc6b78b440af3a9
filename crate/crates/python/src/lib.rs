//! Python bindings. Matrices cross the boundary as lists of rows of `complex`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use symcirc_core as core;
use symcirc_core::{Complex64, ComplexMatrix};

type Rows = Vec<Vec<Complex64>>;
type SuiteRow = (String, bool, usize, f64, f64);

fn value_err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_rows(m: &ComplexMatrix) -> Rows {
    (0..m.dim()).map(|r| (0..m.dim()).map(|c| m.get(r, c)).collect()).collect()
}

fn from_rows(rows: Rows) -> PyResult<ComplexMatrix> {
    ComplexMatrix::from_rows(&rows).map_err(value_err)
}

fn unitary(rows: Rows) -> PyResult<core::Unitary> {
    core::Unitary::new(from_rows(rows)?).map_err(value_err)
}

#[pyclass(name = "PauliString", frozen, eq, hash, ord, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PyPauliString(core::PauliString);

#[pymethods]
impl PyPauliString {
    /// Parses e.g. "XYZ", "-iZZ". Leftmost letter acts on the highest qubit.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(value_err)
    }

    #[getter]
    fn num_qubits(&self) -> usize {
        self.0.num_qubits()
    }

    #[getter]
    fn weight(&self) -> usize {
        self.0.weight()
    }

    #[getter]
    fn phase_exp(&self) -> u8 {
        self.0.phase_exp()
    }

    fn letters(&self) -> String {
        self.0.to_letters()
    }

    fn commutes_with(&self, other: &Self) -> PyResult<bool> {
        if self.0.num_qubits() != other.0.num_qubits() {
            return Err(value_err(core::Error::DimensionMismatch {
                expected: self.0.num_qubits(),
                found: other.0.num_qubits(),
            }));
        }
        Ok(self.0.commutes_with(&other.0))
    }

    /// `[self, other]` as a sum.
    fn commutator(&self, other: &Self) -> PyResult<PyPauliSum> {
        core::pauli_commutator(&self.0, &other.0).map(PyPauliSum).map_err(value_err)
    }

    fn to_matrix(&self) -> PyResult<Rows> {
        self.0.to_matrix().map(|m| to_rows(&m)).map_err(value_err)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        core::pauli_multiply(&self.0, &other.0).map(Self).map_err(value_err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("PauliString('{}')", self.0)
    }
}

#[pyclass(name = "PauliSum", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPauliSum(core::PauliSum);

#[pymethods]
impl PyPauliSum {
    /// Parses text such as "(1,0) XI + (1,0) IX", one or more terms per line.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        core::PauliSum::from_text(text).map(Self).map_err(value_err)
    }

    /// Unit-weight sum of whitespace separated letter strings, e.g. "XI IX".
    #[staticmethod]
    fn from_letters(terms: &str) -> PyResult<Self> {
        core::PauliSum::from_letter_terms(terms).map(Self).map_err(value_err)
    }

    #[getter]
    fn num_qubits(&self) -> usize {
        self.0.num_qubits()
    }

    fn terms(&self) -> Vec<(String, Complex64)> {
        self.0.terms().map(|(p, c)| (p.to_letters(), *c)).collect()
    }

    fn is_hermitian(&self) -> bool {
        self.0.is_hermitian()
    }

    fn commutator(&self, other: &Self) -> PyResult<Self> {
        core::sum_commutator(&self.0, &other.0).map(Self).map_err(value_err)
    }

    fn to_matrix(&self) -> PyResult<Rows> {
        self.0.to_matrix().map(|m| to_rows(&m)).map_err(value_err)
    }

    fn to_text(&self) -> String {
        self.0.to_text()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("PauliSum('{}')", self.0)
    }
}

#[pyclass(name = "SymmetryGroup", frozen)]
struct PySymmetryGroup(core::SymmetryGroup);

#[pymethods]
impl PySymmetryGroup {
    /// `trivial`, `full_swap`, `cyclic` or `dihedral`.
    #[staticmethod]
    fn preset(name: &str, n: usize) -> PyResult<Self> {
        core::SymmetryGroup::preset(name, n).map(Self).map_err(value_err)
    }

    /// Resolves a JSON symmetry spec, e.g. `{"n": 3, "generators": [{"perm": [1,0,2]}]}`.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        core::SymmetrySpec::from_json(text).and_then(|s| s.resolve()).map(Self).map_err(value_err)
    }

    #[getter]
    fn num_qubits(&self) -> usize {
        self.0.num_qubits()
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn is_permutation_group(&self) -> bool {
        self.0.is_permutation_group()
    }

    /// Wire images of every element; fails for groups with raw unitaries.
    fn permutations(&self) -> PyResult<Vec<Vec<usize>>> {
        let perms = self.0.permutations().map_err(value_err)?;
        Ok(perms.iter().map(|p| p.image().to_vec()).collect())
    }

    fn element_matrices(&self) -> PyResult<Vec<Rows>> {
        self.0.elements().iter().map(|e| e.to_matrix().map(|m| to_rows(&m)).map_err(value_err)).collect()
    }

    fn __len__(&self) -> usize {
        self.0.order()
    }
}

#[pyfunction]
fn build_basis(group: &PySymmetryGroup) -> PyResult<Vec<PyPauliSum>> {
    let basis = core::build_basis(group.0.num_qubits(), &group.0).map_err(value_err)?;
    Ok(basis.elements().iter().cloned().map(PyPauliSum).collect())
}

#[pyfunction]
fn burnside_dimension(group: &PySymmetryGroup) -> PyResult<u128> {
    core::burnside_dimension(group.0.num_qubits(), &group.0).map_err(value_err)
}

/// `(pair_count, max_residual, passed)` for the commutators of the invariant basis.
#[pyfunction]
#[pyo3(signature = (group, tol = core::algebra::CLOSURE_TOL))]
fn closure_report(group: &PySymmetryGroup, tol: f64) -> PyResult<(usize, f64, bool)> {
    let basis = core::build_basis(group.0.num_qubits(), &group.0).map_err(value_err)?;
    let r = core::algebra::closure_report_with_tol(&basis, tol).map_err(value_err)?;
    Ok((r.pair_count, r.max_residual, r.passed))
}

/// `(invariant, max_defect)` over every group element.
#[pyfunction]
#[pyo3(signature = (matrix, group, tol = 1e-10))]
fn is_invariant(matrix: Rows, group: &PySymmetryGroup, tol: f64) -> PyResult<(bool, f64)> {
    let r = core::is_invariant(&from_rows(matrix)?, &group.0, tol).map_err(value_err)?;
    Ok((r.invariant, r.max_residual))
}

/// `exp(-i alpha/2 h)` for a Hermitian sum.
#[pyfunction]
fn exp_generator(h: &PyPauliSum, alpha: f64) -> PyResult<Rows> {
    core::exp_generator(&h.0, alpha).map(|u| to_rows(u.matrix())).map_err(value_err)
}

#[pyfunction]
#[pyo3(signature = (group, seed, depth = 8))]
fn random_invariant(group: &PySymmetryGroup, seed: u64, depth: usize) -> PyResult<Rows> {
    core::random_invariant(group.0.num_qubits(), &group.0, seed, depth).map(|u| to_rows(u.matrix())).map_err(value_err)
}

/// Point `A(t)` on the path from the identity (t = 0) to `matrix` (t = 1).
#[pyfunction]
fn connectedness_path(matrix: Rows, t: f64) -> PyResult<Rows> {
    core::connectedness_path(&unitary(matrix)?, t).map(|u| to_rows(u.matrix())).map_err(value_err)
}

#[pyfunction]
fn project_to_su(matrix: Rows) -> PyResult<Rows> {
    core::project_to_su(&unitary(matrix)?).map(|u| to_rows(u.matrix())).map_err(value_err)
}

/// Circuit text for `exp(-i alpha/2 s)`; raises when the product formula does not apply.
#[pyfunction]
fn synthesize(s: &PyPauliSum, alpha: f64) -> PyResult<String> {
    core::synthesize_sum_exponential(&s.0, alpha).map(|c| c.to_text()).map_err(value_err)
}

#[pyfunction]
fn circuit_to_matrix(text: &str) -> PyResult<Rows> {
    let c = core::Circuit::from_text(text).map_err(value_err)?;
    core::circuit_to_matrix(&c).map(|u| to_rows(u.matrix())).map_err(value_err)
}

/// `(suite, passed, checks, max_residual, threshold)` per verification suite.
#[pyfunction]
#[pyo3(signature = (group, seed = 0))]
fn verify(group: &PySymmetryGroup, seed: u64) -> PyResult<Vec<SuiteRow>> {
    let config = core::verify::VerifyConfig { seed, ..Default::default() };
    let results = core::verify::run_all(group.0.num_qubits(), &group.0, &config).map_err(value_err)?;
    Ok(results
        .into_iter()
        .map(|r| (r.suite.name().to_string(), r.passed, r.checks, r.max_residual, r.threshold))
        .collect())
}

#[pymodule]
fn symcirc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPauliString>()?;
    m.add_class::<PyPauliSum>()?;
    m.add_class::<PySymmetryGroup>()?;
    m.add_function(wrap_pyfunction!(build_basis, m)?)?;
    m.add_function(wrap_pyfunction!(burnside_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(closure_report, m)?)?;
    m.add_function(wrap_pyfunction!(is_invariant, m)?)?;
    m.add_function(wrap_pyfunction!(exp_generator, m)?)?;
    m.add_function(wrap_pyfunction!(random_invariant, m)?)?;
    m.add_function(wrap_pyfunction!(connectedness_path, m)?)?;
    m.add_function(wrap_pyfunction!(project_to_su, m)?)?;
    m.add_function(wrap_pyfunction!(synthesize, m)?)?;
    m.add_function(wrap_pyfunction!(circuit_to_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
