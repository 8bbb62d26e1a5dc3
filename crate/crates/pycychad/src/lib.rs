//! Python bindings for the cychad toolkit.
//!
//! Exposes exact polynomials as a `Poly` class (coefficients travel as
//! `fractions.Fraction`), and the difference-set, basis, sequence, and
//! circulant operations as module functions. Resource-budget overruns raise
//! `RuntimeError`; malformed inputs raise `ValueError`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use cychad::diffsets::{DSParams, DifferenceSet};
use cychad::error::Error;
use cychad::menon::Sign;
use cychad::polyalg::{CyclotomicElement, MonomialOrder, MultiPoly};
use cychad::seqmat::{BinarySequence, CirculantRow};

fn to_py_err(e: Error) -> PyErr {
    if e.is_resource() {
        PyRuntimeError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn parse_order(name: &str, num_vars: usize) -> PyResult<MonomialOrder> {
    match name {
        "lex" => Ok(MonomialOrder::lex(num_vars)),
        "grevlex" => Ok(MonomialOrder::grevlex(num_vars)),
        other => Err(PyValueError::new_err(format!(
            "unknown order `{other}`; expected lex or grevlex"
        ))),
    }
}

fn params_tuple(p: DSParams) -> (u64, u64, u64, u64) {
    (p.v, p.k, p.lambda, p.n)
}

fn sequence(entries: Vec<i8>) -> PyResult<BinarySequence> {
    BinarySequence::new(entries).map_err(to_py_err)
}

fn row(entries: Vec<i8>) -> PyResult<CirculantRow> {
    CirculantRow::new(entries).map_err(to_py_err)
}

fn certified(v: u64, elements: Vec<u64>) -> PyResult<cychad::diffsets::CertifiedDifferenceSet> {
    DifferenceSet::new(v, elements)
        .map_err(to_py_err)?
        .certify()
        .ok_or_else(|| PyValueError::new_err(format!("set is not a difference set in Z_{v}")))
}

/// Exact multivariate polynomial over the rationals.
#[pyclass(name = "Poly", from_py_object)]
#[derive(Clone)]
struct Poly {
    inner: MultiPoly,
}

#[derive(FromPyObject)]
enum RationalLike {
    Fraction(BigRational),
    Text(String),
}

impl RationalLike {
    fn into_rational(self) -> PyResult<BigRational> {
        match self {
            RationalLike::Fraction(r) => Ok(r),
            RationalLike::Text(s) => {
                let vars: Vec<String> = Vec::new();
                let p = MultiPoly::parse(&s, &vars).map_err(to_py_err)?;
                p.constant_value()
                    .ok_or_else(|| PyValueError::new_err(format!("`{s}` is not a rational literal")))
            }
        }
    }
}

#[pymethods]
impl Poly {
    /// Parse a polynomial literal; variables default to x0,x1,x2,x3,u.
    #[new]
    #[pyo3(signature = (text, vars = None))]
    fn new(text: &str, vars: Option<Vec<String>>) -> PyResult<Self> {
        let vars = vars.unwrap_or_else(cychad::menon::menon_vars);
        Ok(Poly {
            inner: MultiPoly::parse(text, &vars).map_err(to_py_err)?,
        })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.inner)
    }

    fn __eq__(&self, other: &Poly) -> bool {
        self.inner == other.inner
    }

    fn __add__(&self, other: &Poly) -> PyResult<Poly> {
        Ok(Poly {
            inner: self.inner.checked_add(&other.inner).map_err(to_py_err)?,
        })
    }

    fn __sub__(&self, other: &Poly) -> PyResult<Poly> {
        Ok(Poly {
            inner: self.inner.checked_sub(&other.inner).map_err(to_py_err)?,
        })
    }

    fn __mul__(&self, other: &Poly) -> PyResult<Poly> {
        Ok(Poly {
            inner: self.inner.checked_mul(&other.inner).map_err(to_py_err)?,
        })
    }

    fn __neg__(&self) -> Poly {
        Poly {
            inner: -&self.inner,
        }
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn total_degree(&self) -> Option<u32> {
        self.inner.total_degree()
    }

    fn vars(&self) -> Vec<String> {
        self.inner.vars().to_vec()
    }

    fn num_terms(&self) -> usize {
        self.inner.num_terms()
    }

    /// Substitute rationals (ints, Fractions, or `p/q` strings) for a subset
    /// of the variables.
    fn substitute(&self, bindings: BTreeMap<String, RationalLike>) -> PyResult<Poly> {
        let mut map = BTreeMap::new();
        for (k, v) in bindings {
            map.insert(k, v.into_rational()?);
        }
        Ok(Poly {
            inner: self.inner.substitute(&map).map_err(to_py_err)?,
        })
    }

    /// Full evaluation; returns a `fractions.Fraction`.
    fn eval(&self, bindings: BTreeMap<String, RationalLike>) -> PyResult<BigRational> {
        let mut map = BTreeMap::new();
        for (k, v) in bindings {
            map.insert(k, v.into_rational()?);
        }
        self.inner.eval(&map).map_err(to_py_err)
    }
}

fn polys_out(polys: &[MultiPoly]) -> Vec<Poly> {
    polys.iter().map(|p| Poly { inner: p.clone() }).collect()
}

fn polys_in(polys: Vec<Poly>) -> Vec<MultiPoly> {
    polys.into_iter().map(|p| p.inner).collect()
}

// ---------------------------------------------------------------------------
// basis engine

#[pyfunction]
#[pyo3(signature = (a, b, order = "lex"))]
fn s_polynomial(a: &Poly, b: &Poly, order: &str) -> PyResult<Poly> {
    let ord = parse_order(order, a.inner.num_vars())?;
    Ok(Poly {
        inner: cychad::groebner::s_polynomial(&a.inner, &b.inner, &ord).map_err(to_py_err)?,
    })
}

#[pyfunction]
#[pyo3(signature = (p, generators, order = "lex"))]
fn normal_form(p: &Poly, generators: Vec<Poly>, order: &str) -> PyResult<Poly> {
    let ord = parse_order(order, p.inner.num_vars())?;
    let basis =
        cychad::groebner::IdealBasis::new(polys_in(generators), ord).map_err(to_py_err)?;
    Ok(Poly {
        inner: cychad::groebner::normal_form(&p.inner, &basis),
    })
}

#[pyfunction]
#[pyo3(signature = (generators, order = "lex"))]
fn groebner_basis(generators: Vec<Poly>, order: &str) -> PyResult<Vec<Poly>> {
    let gens = polys_in(generators);
    let num_vars = gens
        .first()
        .map(|g| g.num_vars())
        .ok_or_else(|| PyValueError::new_err("at least one generator is required"))?;
    let ord = parse_order(order, num_vars)?;
    let basis = cychad::groebner::buchberger(&gens, &ord).map_err(to_py_err)?;
    Ok(polys_out(basis.generators()))
}

#[pyfunction]
#[pyo3(signature = (p, generators, order = "lex"))]
fn ideal_member(p: &Poly, generators: Vec<Poly>, order: &str) -> PyResult<bool> {
    let ord = parse_order(order, p.inner.num_vars())?;
    cychad::groebner::ideal_member(&p.inner, &polys_in(generators), &ord).map_err(to_py_err)
}

/// Product in the degree-4 cyclotomic extension; both factors are given by
/// their four coordinates on `{1, z, z^2, z^3}`.
#[pyfunction]
fn cyclotomic_mul(a: Vec<Poly>, b: Vec<Poly>) -> PyResult<Vec<Poly>> {
    let build = |coords: Vec<Poly>| -> PyResult<CyclotomicElement> {
        let arr: [MultiPoly; 4] = polys_in(coords)
            .try_into()
            .map_err(|_| PyValueError::new_err("exactly four coordinates are required"))?;
        CyclotomicElement::new(arr).map_err(to_py_err)
    };
    let product = build(a)?.checked_mul(&build(b)?).map_err(to_py_err)?;
    Ok(polys_out(product.coeffs()))
}

// ---------------------------------------------------------------------------
// difference sets

#[pyfunction]
fn verify_difference_set(v: u64, elements: Vec<u64>) -> PyResult<Option<(u64, u64, u64, u64)>> {
    Ok(cychad::diffsets::verify_difference_set(v, &elements)
        .map_err(to_py_err)?
        .map(params_tuple))
}

#[pyfunction]
fn complement(v: u64, elements: Vec<u64>) -> PyResult<(Vec<u64>, (u64, u64, u64, u64))> {
    let c = cychad::diffsets::complement(&certified(v, elements)?);
    Ok((c.elements().to_vec(), params_tuple(c.params())))
}

#[pyfunction]
fn residue_counts(v: u64, elements: Vec<u64>, w: u64) -> PyResult<Vec<u64>> {
    let d = DifferenceSet::new(v, elements).map_err(to_py_err)?;
    Ok(cychad::diffsets::residue_counts(&d, w)
        .map_err(to_py_err)?
        .counts)
}

#[pyfunction]
fn theta(v: u64, elements: Vec<u64>) -> PyResult<Poly> {
    let d = DifferenceSet::new(v, elements).map_err(to_py_err)?;
    Ok(Poly {
        inner: cychad::diffsets::theta(&d),
    })
}

#[pyfunction]
fn check_lemma5(v: u64, elements: Vec<u64>, w: u64) -> PyResult<bool> {
    cychad::diffsets::check_lemma5(&certified(v, elements)?, w).map_err(to_py_err)
}

#[pyfunction]
fn check_lemma6(params: (u64, u64, u64, u64), w: u64, counts: Vec<u64>) -> PyResult<bool> {
    let p = DSParams {
        v: params.0,
        k: params.1,
        lambda: params.2,
        n: params.3,
    };
    cychad::diffsets::check_lemma6(&p, w, &counts).map_err(to_py_err)
}

// ---------------------------------------------------------------------------
// the quartic family

#[pyfunction]
fn menon_vars() -> Vec<String> {
    cychad::menon::menon_vars()
}

#[pyfunction]
fn menon_system() -> Vec<Poly> {
    polys_out(cychad::menon::build_menon_system().polys())
}

#[pyfunction]
fn lemma7_coefficients() -> Vec<Poly> {
    polys_out(cychad::menon::derive_lemma7_coefficients().coeffs())
}

#[pyfunction]
fn menon_params(u: u64, sign: &str) -> PyResult<(u64, u64, u64, u64)> {
    let sign = match sign {
        "plus" | "+" => Sign::Plus,
        "minus" | "-" => Sign::Minus,
        other => {
            return Err(PyValueError::new_err(format!(
                "expected plus/+ or minus/-, got `{other}`"
            )))
        }
    };
    Ok(params_tuple(cychad::menon::menon_params(u, sign)))
}

#[pyfunction]
#[pyo3(signature = (u_min, u_max, max_work = 1_000_000))]
fn enumerate_solutions(
    u_min: u64,
    u_max: u64,
    max_work: u64,
) -> PyResult<Vec<(i64, i64, i64, i64, i64)>> {
    Ok(cychad::menon::enumerate_solutions(u_min, u_max, max_work)
        .map_err(to_py_err)?
        .into_iter()
        .map(|p| (p.x[0], p.x[1], p.x[2], p.x[3], p.u))
        .collect())
}

#[pyfunction]
fn verify_groebner_claim(py: Python<'_>) -> PyResult<Bound<'_, PyDict>> {
    let report = cychad::menon::verify_groebner_claim().map_err(to_py_err)?;
    let out = PyDict::new(py);
    out.set_item("membership_lex", report.membership_lex)?;
    out.set_item("membership_grevlex", report.membership_grevlex)?;
    out.set_item("certificate_holds", report.certificate_holds)?;
    out.set_item(
        "reduced_basis_lex",
        report
            .reduced_basis
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>(),
    )?;
    out.set_item(
        "univariate_in_u",
        report
            .univariate_in_u
            .iter()
            .map(|(g, roots)| (g.to_string(), roots.clone()))
            .collect::<Vec<_>>(),
    )?;
    out.set_item("target", report.target.to_string())?;
    out.set_item("target_integer_roots", report.target_roots)?;
    Ok(out)
}

// ---------------------------------------------------------------------------
// sequences and circulants

#[pyfunction]
fn aperiodic_autocorrelation(seq: Vec<i8>, tau: usize) -> PyResult<i64> {
    cychad::seqmat::aperiodic_autocorrelation(&sequence(seq)?, tau).map_err(to_py_err)
}

#[pyfunction]
fn periodic_autocorrelation(seq: Vec<i8>, tau: usize) -> PyResult<i64> {
    cychad::seqmat::periodic_autocorrelation(&sequence(seq)?, tau).map_err(to_py_err)
}

#[pyfunction]
fn is_barker(seq: Vec<i8>) -> PyResult<bool> {
    Ok(cychad::seqmat::is_barker(&sequence(seq)?))
}

#[pyfunction]
#[pyo3(signature = (v, canonicalize = true, max_work = 1 << 24))]
fn search_barker(v: usize, canonicalize: bool, max_work: u64) -> PyResult<Vec<Vec<i8>>> {
    Ok(cychad::seqmat::search_barker(v, canonicalize, max_work)
        .map_err(to_py_err)?
        .into_iter()
        .map(|s| s.entries().to_vec())
        .collect())
}

#[pyfunction]
fn ds_to_sequence(v: u64, elements: Vec<u64>) -> PyResult<Vec<i8>> {
    Ok(cychad::seqmat::ds_to_sequence(&certified(v, elements)?)
        .entries()
        .to_vec())
}

#[pyfunction]
fn is_circulant_hadamard(entries: Vec<i8>) -> PyResult<bool> {
    Ok(cychad::seqmat::is_circulant_hadamard(&row(entries)?))
}

#[pyfunction]
#[pyo3(signature = (n_max, reduce = true, max_work = 1 << 20))]
fn search_circulant_hadamard(
    py: Python<'_>,
    n_max: usize,
    reduce: bool,
    max_work: u64,
) -> PyResult<Bound<'_, PyDict>> {
    let by_order =
        cychad::seqmat::search_circulant_hadamard(n_max, reduce, max_work).map_err(to_py_err)?;
    let out = PyDict::new(py);
    for (n, rows) in by_order {
        out.set_item(
            n,
            rows.iter().map(|r| r.entries().to_vec()).collect::<Vec<_>>(),
        )?;
    }
    Ok(out)
}

#[pyfunction]
fn determinant_bound_check(py: Python<'_>, entries: Vec<i8>) -> PyResult<Bound<'_, PyDict>> {
    let report = cychad::seqmat::determinant_bound_check(&row(entries)?).map_err(to_py_err)?;
    let out = PyDict::new(py);
    out.set_item("n", report.n)?;
    out.set_item("det_abs", report.det_abs)?;
    out.set_item("attains_bound", report.attains_bound)?;
    out.set_item("bound_approx", report.bound_approx)?;
    out.set_item("is_hadamard", report.is_hadamard)?;
    Ok(out)
}

#[pymodule]
fn pycychad(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Poly>()?;
    m.add_function(wrap_pyfunction!(s_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(normal_form, m)?)?;
    m.add_function(wrap_pyfunction!(groebner_basis, m)?)?;
    m.add_function(wrap_pyfunction!(ideal_member, m)?)?;
    m.add_function(wrap_pyfunction!(cyclotomic_mul, m)?)?;
    m.add_function(wrap_pyfunction!(verify_difference_set, m)?)?;
    m.add_function(wrap_pyfunction!(complement, m)?)?;
    m.add_function(wrap_pyfunction!(residue_counts, m)?)?;
    m.add_function(wrap_pyfunction!(theta, m)?)?;
    m.add_function(wrap_pyfunction!(check_lemma5, m)?)?;
    m.add_function(wrap_pyfunction!(check_lemma6, m)?)?;
    m.add_function(wrap_pyfunction!(menon_vars, m)?)?;
    m.add_function(wrap_pyfunction!(menon_system, m)?)?;
    m.add_function(wrap_pyfunction!(lemma7_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(menon_params, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_solutions, m)?)?;
    m.add_function(wrap_pyfunction!(verify_groebner_claim, m)?)?;
    m.add_function(wrap_pyfunction!(aperiodic_autocorrelation, m)?)?;
    m.add_function(wrap_pyfunction!(periodic_autocorrelation, m)?)?;
    m.add_function(wrap_pyfunction!(is_barker, m)?)?;
    m.add_function(wrap_pyfunction!(search_barker, m)?)?;
    m.add_function(wrap_pyfunction!(ds_to_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(is_circulant_hadamard, m)?)?;
    m.add_function(wrap_pyfunction!(search_circulant_hadamard, m)?)?;
    m.add_function(wrap_pyfunction!(determinant_bound_check, m)?)?;
    Ok(())
}
