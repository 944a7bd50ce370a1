//! Python bindings. Evaluation results come back as `(kind, number)` pairs
//! where `kind` is "value", "exceeded" or "step-limit".

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use num_bigint::BigUint;
use pyo3::basic::CompareOp;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ordinal_lab::hierarchy::{fund_seq, step_down, Budget, EvalOutcome, StepDown};
use ordinal_lab::ordinal::{add, compare, mul_nat, omega_tower, Kind};
use ordinal_lab::ramsey::{min_witness as core_min_witness, ph_holds, sigma as core_sigma, PhVerdict};
use ordinal_lab::suites::run_suite as core_run_suite;
use ordinal_lab::{code_value, encode_digits, f_diamond, f_eps0_eval, fgh_eval, slow_hierarchy_eval};

const DEFAULT_NODES: u64 = 100_000_000;
const DEFAULT_N_CAP: usize = 32;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Ordinal", module = "ordinal_lab", frozen, skip_from_py_object)]
struct PyOrdinal(ordinal_lab::Ordinal);

#[pymethods]
impl PyOrdinal {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        ordinal_lab::parse(text).map(PyOrdinal).map_err(value_error)
    }

    #[staticmethod]
    fn tower(n: usize) -> Self {
        PyOrdinal(omega_tower(n))
    }

    fn __str__(&self) -> String {
        ordinal_lab::render(&self.0)
    }

    fn __repr__(&self) -> String {
        format!("Ordinal('{}')", ordinal_lab::render(&self.0))
    }

    fn __richcmp__(&self, other: &Self, op: CompareOp) -> bool {
        op.matches(compare(&self.0, &other.0))
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        ordinal_lab::render(&self.0).hash(&mut h);
        h.finish()
    }

    fn __add__(&self, other: &Self) -> Self {
        PyOrdinal(add(&self.0, &other.0))
    }

    fn __mul__(&self, k: BigUint) -> Self {
        PyOrdinal(mul_nat(&self.0, &k))
    }

    #[getter]
    fn kind(&self) -> &'static str {
        match self.0.kind() {
            Kind::Zero => "zero",
            Kind::Successor => "successor",
            Kind::Limit => "limit",
        }
    }

    fn fund_seq(&self, n: BigUint) -> Self {
        PyOrdinal(fund_seq(&self.0, &n))
    }

    /// Comma-separated digit list.
    fn digits(&self) -> String {
        encode_digits(&self.0).to_string()
    }

    fn code(&self) -> BigUint {
        code_value(&encode_digits(&self.0))
    }

    /// The explicit path `self ->_n target`, `None` if none exists, or an
    /// error when no verdict fits in `max_len` steps.
    #[pyo3(signature = (n, target, max_len = 100_000))]
    fn step_down(&self, n: BigUint, target: &Self, max_len: usize) -> PyResult<Option<Vec<String>>> {
        match step_down(&self.0, &n, &target.0, max_len) {
            StepDown::Path(p) => Ok(Some(p.ordinals.iter().map(ordinal_lab::render).collect())),
            StepDown::Refuted => Ok(None),
            StepDown::Exhausted { steps } => Err(value_error(format!("no verdict within {steps} steps"))),
        }
    }
}

fn budget(bits: Option<u64>, steps: Option<u64>) -> PyResult<Budget> {
    let bits = bits.unwrap_or(Budget::DEFAULT_BITS);
    let steps = steps.unwrap_or(Budget::DEFAULT_STEPS);
    if bits == 0 || steps == 0 {
        return Err(value_error("budgets must be positive"));
    }
    Ok(Budget::new(bits, steps))
}

fn outcome(o: EvalOutcome) -> (&'static str, Option<BigUint>) {
    match o {
        EvalOutcome::Value(v) => ("value", Some(v)),
        EvalOutcome::Exceeded { lower_bound } => ("exceeded", Some(lower_bound)),
        EvalOutcome::StepLimit => ("step-limit", None),
    }
}

fn ordinal_of(a: &Bound<'_, PyAny>) -> PyResult<ordinal_lab::Ordinal> {
    if let Ok(o) = a.cast::<PyOrdinal>() {
        return Ok(o.get().0.clone());
    }
    let text: String = a.extract()?;
    ordinal_lab::parse(&text).map_err(value_error)
}

/// F_a(x) in the fast-growing hierarchy.
#[pyfunction]
#[pyo3(signature = (a, x, bits = None, steps = None))]
fn fgh(
    a: &Bound<'_, PyAny>,
    x: BigUint,
    bits: Option<u64>,
    steps: Option<u64>,
) -> PyResult<(&'static str, Option<BigUint>)> {
    Ok(outcome(fgh_eval(&ordinal_of(a)?, &x, budget(bits, steps)?)))
}

#[pyfunction]
#[pyo3(signature = (x, bits = None, steps = None))]
fn feps(x: usize, bits: Option<u64>, steps: Option<u64>) -> PyResult<(&'static str, Option<BigUint>)> {
    Ok(outcome(f_eps0_eval(x, budget(bits, steps)?)))
}

#[pyfunction]
fn f_eps0_inverse(x: BigUint) -> BigUint {
    ordinal_lab::f_eps0_inverse(&x)
}

#[pyfunction]
#[pyo3(signature = (x, bits = None, steps = None))]
fn diamond(x: BigUint, bits: Option<u64>, steps: Option<u64>) -> PyResult<(&'static str, Option<BigUint>)> {
    Ok(outcome(f_diamond(&x, budget(bits, steps)?)))
}

#[pyfunction]
#[pyo3(signature = (a, x, bits = None, steps = None))]
fn slowh(
    a: &Bound<'_, PyAny>,
    x: BigUint,
    bits: Option<u64>,
    steps: Option<u64>,
) -> PyResult<(&'static str, Option<BigUint>)> {
    Ok(outcome(slow_hierarchy_eval(&ordinal_of(a)?, &x, budget(bits, steps)?)))
}

#[pyfunction]
fn pair(x: BigUint, y: BigUint) -> BigUint {
    ordinal_lab::cantor_pair(&x, &y)
}

#[pyfunction]
fn unpair(p: BigUint) -> (BigUint, BigUint) {
    ordinal_lab::cantor_unpair(&p)
}

/// "Holds", "Fails" or "Unknown".
#[pyfunction]
#[pyo3(signature = (k, m, n, ground, nodes = DEFAULT_NODES))]
fn ph(k: usize, m: usize, n: usize, ground: usize, nodes: u64) -> PyResult<&'static str> {
    let report = ph_holds(k, m, n, ground, nodes).map_err(value_error)?;
    Ok(report.verdict.label())
}

/// The counterexample colours when PH fails, else `None`.
#[pyfunction]
#[pyo3(signature = (k, m, n, ground, nodes = DEFAULT_NODES))]
fn bad_coloring(k: usize, m: usize, n: usize, ground: usize, nodes: u64) -> PyResult<Option<Vec<u32>>> {
    let report = ph_holds(k, m, n, ground, nodes).map_err(value_error)?;
    Ok(match report.verdict {
        PhVerdict::Fails { witness } => Some(witness.colors.into_iter().map(u32::from).collect()),
        _ => None,
    })
}

#[pyfunction]
#[pyo3(signature = (n, k, nodes = DEFAULT_NODES, n_cap = DEFAULT_N_CAP))]
fn sigma(n: usize, k: usize, nodes: u64, n_cap: usize) -> PyResult<Option<usize>> {
    core_sigma(n, k, nodes, n_cap).map(|r| r.value()).map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (k, m, n, nodes = DEFAULT_NODES, n_cap = DEFAULT_N_CAP))]
fn min_witness(k: usize, m: usize, n: usize, nodes: u64, n_cap: usize) -> PyResult<Option<usize>> {
    core_min_witness(k, m, n, nodes, n_cap)
        .map(|r| r.value())
        .map_err(value_error)
}

/// Runs a named invariant suite; returns its report as a JSON string.
#[pyfunction]
#[pyo3(signature = (name, seed = ordinal_lab::suites::DEFAULT_SEED))]
fn run_suite(name: &str, seed: u64) -> PyResult<String> {
    let report = core_run_suite(name, seed).map_err(value_error)?;
    serde_json::to_string(&report).map_err(value_error)
}

#[pymodule]
#[pyo3(name = "ordinal_lab")]
fn ordinal_lab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyOrdinal>()?;
    m.add_function(wrap_pyfunction!(fgh, m)?)?;
    m.add_function(wrap_pyfunction!(feps, m)?)?;
    m.add_function(wrap_pyfunction!(f_eps0_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(diamond, m)?)?;
    m.add_function(wrap_pyfunction!(slowh, m)?)?;
    m.add_function(wrap_pyfunction!(pair, m)?)?;
    m.add_function(wrap_pyfunction!(unpair, m)?)?;
    m.add_function(wrap_pyfunction!(ph, m)?)?;
    m.add_function(wrap_pyfunction!(bad_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(sigma, m)?)?;
    m.add_function(wrap_pyfunction!(min_witness, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
