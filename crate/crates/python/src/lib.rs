//! Python bindings: the `quotatope` extension module.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use ::quotatope as q;
use q::oracle;
use q::quota::{complex_to_quota, Realization};
use q::random::{self, RandomQuotaSpec};
use q::seq::{self, SequenceKind, SequenceSpec};
use q::series::{self, WeightMultiset};
use q::weight::{format_rational, parse_rational};
use q::{divisor, zeta, Face, HomotopyType, Rational};

create_exception!(quotatope, CapacityError, PyRuntimeError, "A computation exceeded a size guard.");

fn err(e: q::Error) -> PyErr {
    match e {
        q::Error::Input(_) | q::Error::Parse(_) => PyValueError::new_err(e.to_string()),
        q::Error::Capacity(_) => CapacityError::new_err(e.to_string()),
        q::Error::Numeric(_) => PyRuntimeError::new_err(e.to_string()),
    }
}

/// Accepts ints, `fractions.Fraction`, decimals or strings like `"3/2"`.
fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let text = obj.str()?.to_string();
    parse_rational(text.trim()).map_err(err)
}

fn signature_dict(ty: &HomotopyType) -> Option<BTreeMap<usize, BigUint>> {
    ty.signature().map(|s| s.iter().map(|(d, c)| (d, c.clone())).collect())
}

/// A scalar quota system: faces are vertex sets of weight below the quota.
#[pyclass(name = "ScalarQuotaSystem", frozen)]
struct PyScalar {
    inner: q::ScalarQuotaSystem<Rational>,
}

#[pymethods]
impl PyScalar {
    #[new]
    fn new(weights: Vec<Bound<'_, PyAny>>, quota: Bound<'_, PyAny>) -> PyResult<Self> {
        let w = weights.iter().map(rational).collect::<PyResult<Vec<_>>>()?;
        let inner = q::ScalarQuotaSystem::new(w, rational(&quota)?).map_err(err)?;
        Ok(PyScalar { inner })
    }

    #[getter]
    fn weights(&self) -> Vec<String> {
        self.inner.weights().iter().map(format_rational).collect()
    }

    #[getter]
    fn quota(&self) -> String {
        format_rational(self.inner.quota())
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    /// Sphere counts by dimension, `None` for the empty complex.
    #[pyo3(signature = (vmin=None))]
    fn bouquet_signature(&self, vmin: Option<usize>) -> PyResult<Option<BTreeMap<usize, BigUint>>> {
        let ty = match vmin {
            Some(v) => self.inner.homotopy_type_with_min(v).map_err(err)?,
            None => self.inner.homotopy_type(),
        };
        Ok(signature_dict(&ty))
    }

    fn euler_characteristic(&self) -> BigInt {
        self.inner.euler_characteristic()
    }

    fn face_counts(&self) -> Vec<BigInt> {
        self.inner.face_counts()
    }

    fn is_face(&self, face: Vec<usize>) -> PyResult<bool> {
        let f = Face::from_unsorted(face).map_err(err)?;
        self.inner.is_face(&f).map_err(err)
    }

    fn is_shell_face(&self, face: Vec<usize>) -> PyResult<bool> {
        let f = Face::from_unsorted(face).map_err(err)?;
        self.inner.is_shell_face(&f).map_err(err)
    }

    /// Every face, as sorted vertex tuples. Exponential in the vertex count.
    fn faces(&self) -> Vec<Vec<usize>> {
        self.inner.faces().into_iter().map(Vec::from).collect()
    }

    /// Reduced Betti numbers by explicit homology; small systems only.
    fn betti_numbers(&self) -> PyResult<BTreeMap<usize, usize>> {
        let cx = oracle::enumerate_complex(&self.inner).map_err(err)?;
        if cx.is_empty() {
            return Ok(BTreeMap::new());
        }
        let b = cx.betti_numbers().map_err(err)?;
        let top = cx.dimension().unwrap_or(0);
        Ok((0..=top).map(|d| (d, b.get(d))).filter(|(_, c)| *c > 0).collect())
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyScalar { inner: q::ScalarQuotaSystem::from_json(text).map_err(err)? })
    }

    fn __repr__(&self) -> String {
        format!("ScalarQuotaSystem(weights={:?}, quota={})", self.weights(), self.quota())
    }
}

/// Vertex weights and quota of a vector quota system realizing the complex
/// with the given facets.
#[pyfunction]
fn complex_to_quota_system(facets: Vec<Vec<usize>>, vertex_count: usize) -> PyResult<(Vec<Vec<u64>>, Vec<u64>)> {
    let facets = facets.into_iter().map(Face::from_unsorted).collect::<Result<Vec<_>, _>>().map_err(err)?;
    let sys = complex_to_quota(&facets, vertex_count, Realization::Plain).map_err(err)?;
    Ok((sys.weights().to_vec(), sys.quota().to_vec()))
}

type Counts = Vec<Vec<BigUint>>;

fn kind(name: &str) -> PyResult<SequenceKind> {
    name.parse().map_err(err)
}

/// `(s, h)` for the sequence members below `q_max`: `s[i][q]` counts
/// `i`-faces of weight below `q` avoiding the first member and `h[i][q]` is
/// the reduced Betti number in degree `i`.
#[pyfunction]
fn sequence_tables(kind_name: &str, q_max: u64, i_max: usize) -> PyResult<(Counts, Counts)> {
    let spec = SequenceSpec::below(kind(kind_name)?, q_max).map_err(err)?;
    let t = seq::count_table(&spec, q_max, i_max).map_err(err)?;
    let h = seq::homology_table(&t, spec.v1()).map_err(err)?;
    let s_rows = (0..=i_max).map(|i| (0..=q_max).map(|q| t.s_ref(i, q).clone()).collect()).collect();
    let h_rows = (0..=i_max)
        .map(|i| (0..=q_max).map(|q| h.h(i, q).cloned()).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(err)?;
    Ok((s_rows, h_rows))
}

/// Least-squares slope of the transformed face counts `s_i(q)`.
#[pyfunction]
fn slope_fit(kind_name: &str, q_max: u64, i: usize) -> PyResult<(f64, f64)> {
    let kind = kind(kind_name)?;
    let spec = SequenceSpec::below(kind, q_max).map_err(err)?;
    let t = seq::count_table(&spec, q_max, i).map_err(err)?;
    let fit = seq::slope_fit(&t, i, kind_name.parse().map_err(err)?).map_err(err)?;
    Ok((fit.slope, fit.intercept))
}

#[pyfunction]
fn chi_prime(q: u64) -> BigInt {
    zeta::chi_prime(q)
}

/// Mertens function `M(1..=n_max)`, index 0 included.
#[pyfunction]
fn mertens(n_max: usize) -> PyResult<Vec<i64>> {
    Ok(zeta::mobius_sieve(n_max).map_err(err)?.mertens_series().to_vec())
}

#[pyfunction]
#[pyo3(signature = (q, n_max=zeta::DEFAULT_SIEVE_LIMIT))]
fn chi_logprime(q: f64, n_max: usize) -> PyResult<i64> {
    let sieve = zeta::mobius_sieve(n_max).map_err(err)?;
    zeta::chi_logprime(q, &sieve).map_err(err)
}

/// `n`, `tau`, `sigma_proper`, classification, sphere counts and perfect gap.
#[pyfunction]
fn divisor_profile(py: Python<'_>, n: u64) -> PyResult<Py<PyAny>> {
    let p = divisor::divisor_profile(n).map_err(err)?;
    let d = pyo3::types::PyDict::new(py);
    d.set_item("n", p.n)?;
    d.set_item("tau", p.tau)?;
    d.set_item("sigma_proper", p.sigma_proper)?;
    d.set_item("classification", p.classification.name())?;
    let spheres: BTreeMap<usize, BigUint> = p.signature.iter().map(|(k, c)| (k, c.clone())).collect();
    d.set_item("spheres", spheres)?;
    d.set_item("top_dim", p.top_dim())?;
    d.set_item("perfect_gap", p.perfect_gap())?;
    Ok(d.into_any().unbind())
}

#[pyfunction]
#[pyo3(signature = (n_lo, n_hi, odd_only=false))]
fn non_contractible(n_lo: u64, n_hi: u64, odd_only: bool) -> PyResult<Vec<u64>> {
    divisor::non_contractible(n_lo, n_hi, odd_only).map_err(err)
}

/// `chi[q]` for `0 <= q <= q_max` of the complex with the given weights.
#[pyfunction]
fn chi_from_product(weights: Vec<u64>, q_max: usize) -> PyResult<Vec<BigInt>> {
    let ms = WeightMultiset::new(weights, q_max as u64).map_err(err)?;
    series::chi_from_product(&ms, q_max).map_err(err)
}

/// Weights up to `len(chi) - 2` recovered from an Euler-characteristic sequence.
#[pyfunction]
fn recover_weights(chi: Vec<BigInt>) -> PyResult<Vec<u64>> {
    Ok(series::recover_weights(&chi).map_err(err)?.nu().to_vec())
}

#[pyfunction]
fn ramanujan_tau(n_max: usize) -> PyResult<Vec<BigInt>> {
    series::ramanujan_tau(n_max).map_err(err)
}

#[pyfunction]
fn partition_numbers(d: usize) -> PyResult<Vec<BigInt>> {
    series::partition_numbers(d).map_err(err)
}

/// Expected `dim H_{j-1}` at each quota for a JSON random spec.
#[pyfunction]
#[pyo3(signature = (spec_json, j, quotas, step=None))]
fn expected_homology(spec_json: &str, j: usize, quotas: Vec<f64>, step: Option<f64>) -> PyResult<Vec<f64>> {
    let spec = RandomQuotaSpec::from_json(spec_json).map_err(err)?;
    let curve = random::expected_homology(&spec, j, step.unwrap_or(spec.default_step())).map_err(err)?;
    Ok(quotas.iter().map(|&q| curve.eval(q)).collect())
}

/// Monte Carlo `(mean, stderr)` of `dim H_{j-1}` per quota, `j = 1..=N`.
#[pyfunction]
fn monte_carlo(
    py: Python<'_>,
    spec_json: &str,
    quotas: Vec<f64>,
    trials: u64,
    seed: u64,
) -> PyResult<Vec<Vec<(f64, f64)>>> {
    let spec = RandomQuotaSpec::from_json(spec_json).map_err(err)?;
    let r = py.detach(|| random::monte_carlo(&spec, &quotas, trials, seed)).map_err(err)?;
    Ok(r.homology.iter().map(|row| row.iter().map(|e| (e.mean, e.stderr)).collect()).collect())
}

#[pymodule]
fn quotatope(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyScalar>()?;
    m.add("CapacityError", m.py().get_type::<CapacityError>())?;
    m.add_function(wrap_pyfunction!(complex_to_quota_system, m)?)?;
    m.add_function(wrap_pyfunction!(sequence_tables, m)?)?;
    m.add_function(wrap_pyfunction!(slope_fit, m)?)?;
    m.add_function(wrap_pyfunction!(chi_prime, m)?)?;
    m.add_function(wrap_pyfunction!(mertens, m)?)?;
    m.add_function(wrap_pyfunction!(chi_logprime, m)?)?;
    m.add_function(wrap_pyfunction!(divisor_profile, m)?)?;
    m.add_function(wrap_pyfunction!(non_contractible, m)?)?;
    m.add_function(wrap_pyfunction!(chi_from_product, m)?)?;
    m.add_function(wrap_pyfunction!(recover_weights, m)?)?;
    m.add_function(wrap_pyfunction!(ramanujan_tau, m)?)?;
    m.add_function(wrap_pyfunction!(partition_numbers, m)?)?;
    m.add_function(wrap_pyfunction!(expected_homology, m)?)?;
    m.add_function(wrap_pyfunction!(monte_carlo, m)?)?;
    Ok(())
}
