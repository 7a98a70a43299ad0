//! Python bindings. Rationals cross the boundary as `fractions.Fraction`;
//! rational arguments accept anything whose `str()` is `a` or `a/b`.

use std::collections::BTreeMap;

use luttinger_core::braid::BraidWord;
use luttinger_core::factorization::{Direction, Factorization};
use luttinger_core::groups::{
    abelianization, enumerate_covers, tietze_simplify, CoverLimits, MeridianSet, TietzeLimits,
};
use luttinger_core::moishezon::{self, FamilyParams};
use luttinger_core::rational::{format_rational_full, parse_rational};
use luttinger_core::surgery::{self, HolonomyValue};
use luttinger_core::vankampen::{self, GroupPresentation};
use num_bigint::BigInt;
use num_rational::BigRational;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_fraction<'py>(py: Python<'py>, q: &BigRational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((format_rational_full(q),))
}

fn from_py_rational(value: &Bound<'_, PyAny>) -> PyResult<BigRational> {
    parse_rational(&value.str()?.to_string()).map_err(err)
}

/// A braid word on `strands` strands; letter `i` is σ_i and `-i` its inverse.
#[pyclass(name = "Braid", module = "luttinger", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyBraid {
    inner: BraidWord,
}

#[pymethods]
impl PyBraid {
    #[new]
    fn new(strands: usize, letters: Vec<i32>) -> PyResult<Self> {
        Ok(PyBraid {
            inner: BraidWord::new(strands, letters).map_err(err)?,
        })
    }

    #[staticmethod]
    fn parse(strands: usize, text: &str) -> PyResult<Self> {
        Ok(PyBraid {
            inner: BraidWord::parse(strands, text).map_err(err)?,
        })
    }

    #[staticmethod]
    fn full_twist(strands: usize) -> PyResult<Self> {
        Ok(PyBraid {
            inner: BraidWord::full_twist(strands).map_err(err)?,
        })
    }

    #[getter]
    fn strands(&self) -> usize {
        self.inner.strands()
    }

    #[getter]
    fn letters(&self) -> Vec<i32> {
        self.inner.letters().to_vec()
    }

    fn exponent_sum(&self) -> i64 {
        self.inner.exponent_sum()
    }

    fn __mul__(&self, other: &PyBraid) -> PyResult<PyBraid> {
        Ok(PyBraid {
            inner: self.inner.compose(&other.inner).map_err(err)?,
        })
    }

    fn inverse(&self) -> PyBraid {
        PyBraid {
            inner: self.inner.invert(),
        }
    }

    fn equal(&self, other: &PyBraid) -> PyResult<bool> {
        self.inner.equal(&other.inner).map_err(err)
    }

    /// Garside left normal form, e.g. `"D^-1 [1 2] [2]"`.
    fn normal_form(&self) -> String {
        self.inner.normal_form().to_string()
    }

    /// Images of 1..n under the induced permutation (1-based).
    fn perm(&self) -> Vec<usize> {
        self.inner.perm().images().iter().map(|i| i + 1).collect()
    }

    fn cycle_type(&self) -> Vec<usize> {
        self.inner.perm().cycle_type()
    }

    /// Images of the free generators under the Artin action, as signed letters.
    fn artin_images(&self) -> Vec<Vec<i32>> {
        self.inner.artin_images().iter().map(|w| w.letters().to_vec()).collect()
    }

    fn __repr__(&self) -> String {
        format!("Braid({}, {:?})", self.inner.strands(), self.inner.letters())
    }
}

/// A braid monodromy factorization.
#[pyclass(name = "Factorization", module = "luttinger", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyFactorization {
    inner: Factorization,
}

#[pymethods]
impl PyFactorization {
    #[staticmethod]
    #[pyo3(signature = (text, allow_tangency = false))]
    fn parse_bmf(text: &str, allow_tangency: bool) -> PyResult<Self> {
        Ok(PyFactorization {
            inner: Factorization::parse_bmf_with(text, allow_tangency).map_err(err)?,
        })
    }

    #[staticmethod]
    fn smooth_curve(degree: usize) -> PyResult<Self> {
        Ok(PyFactorization {
            inner: Factorization::smooth_curve(degree).map_err(err)?,
        })
    }

    fn to_bmf(&self) -> String {
        self.inner.to_bmf()
    }

    #[getter]
    fn strands(&self) -> usize {
        self.inner.strands()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    /// `(valid, reason)` with reason `ok`, `illegal-power` or `wrong-product`.
    fn validate(&self) -> (bool, &'static str) {
        let v = self.inner.validate();
        (v.is_valid(), v.reason())
    }

    fn census(&self) -> PyResult<BTreeMap<&'static str, usize>> {
        let c = self.inner.census().map_err(err)?;
        Ok(BTreeMap::from([
            ("branch_points", c.branch_points),
            ("nodes", c.nodes),
            ("cusps", c.cusps),
        ]))
    }

    /// Move on the pair `(index, index + 1)`, 0-based; `direction` is +1 or -1.
    #[pyo3(signature = (index, direction = 1))]
    fn hurwitz_move(&self, index: usize, direction: i32) -> PyResult<Self> {
        let d = Direction::from_sign(direction).ok_or_else(|| err("direction must be +1 or -1"))?;
        Ok(PyFactorization {
            inner: self.inner.hurwitz_move(index, d).map_err(err)?,
        })
    }

    /// Conjugates factors `start..end` (0-based, end exclusive) by `b^k`.
    fn partial_conjugate(&self, start: usize, end: usize, b: &PyBraid, k: i64) -> PyResult<Self> {
        Ok(PyFactorization {
            inner: self.inner.partial_conjugate(start..end, &b.inner, k).map_err(err)?,
        })
    }

    fn equal_factorwise(&self, other: &PyFactorization) -> PyResult<bool> {
        self.inner.equal_factorwise(&other.inner).map_err(err)
    }

    #[pyo3(signature = (projective = true))]
    fn presentation(&self, projective: bool) -> PyResult<PyPresentation> {
        Ok(PyPresentation {
            inner: vankampen::presentation(&self.inner, projective).map_err(err)?,
        })
    }
}

/// A finite group presentation.
#[pyclass(name = "Presentation", module = "luttinger", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPresentation {
    inner: GroupPresentation,
}

#[pymethods]
impl PyPresentation {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyPresentation {
            inner: GroupPresentation::parse(text).map_err(err)?,
        })
    }

    #[getter]
    fn generator_count(&self) -> usize {
        self.inner.generator_count()
    }

    #[getter]
    fn relators(&self) -> Vec<Vec<i32>> {
        self.inner.relators().iter().map(|r| r.letters().to_vec()).collect()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    /// `(free_rank, torsion)` of the abelianization.
    fn abelianization(&self) -> (usize, Vec<BigInt>) {
        let a = abelianization(&self.inner);
        (a.free_rank, a.torsion)
    }

    fn simplify(&self) -> PyPresentation {
        PyPresentation {
            inner: tietze_simplify(&self.inner, TietzeLimits::default()),
        }
    }

    /// Transitive representations into S_n up to conjugacy, each as a list of
    /// cycle-notation strings, one per generator. `meridians` lists 1-based
    /// generator indices; the default constrains all of them.
    #[pyo3(signature = (n, meridians = None, lax = false, workers = 1, max_nodes = None))]
    fn covers(
        &self,
        py: Python<'_>,
        n: usize,
        meridians: Option<Vec<usize>>,
        lax: bool,
        workers: usize,
        max_nodes: Option<u64>,
    ) -> PyResult<Vec<Vec<String>>> {
        let set = meridians.map_or(MeridianSet::All, MeridianSet::Subset);
        let limits = CoverLimits {
            max_nodes: max_nodes.unwrap_or(CoverLimits::default().max_nodes),
            workers: workers.max(1),
            strict_meridians: !lax,
            ..CoverLimits::default()
        };
        let sols = py
            .detach(|| enumerate_covers(&self.inner, n, &set, limits))
            .map_err(err)?;
        Ok(sols
            .iter()
            .map(|s| s.images.iter().map(|p| p.to_string()).collect())
            .collect())
    }
}

/// Closed-form invariants of `X_{p,k}` as a dict.
#[pyfunction]
#[pyo3(signature = (p, k = 0))]
fn family_invariants<'py>(py: Python<'py>, p: i64, k: i64) -> PyResult<Bound<'py, pyo3::types::PyDict>> {
    let inv = moishezon::invariants(FamilyParams::new(p, k).map_err(err)?).map_err(err)?;
    let d = pyo3::types::PyDict::new(py);
    d.set_item("p", p)?;
    d.set_item("k", k)?;
    d.set_item("d", &inv.d)?;
    d.set_item("m", &inv.m)?;
    d.set_item("cusps", &inv.cusps)?;
    d.set_item("nodes", &inv.nodes)?;
    d.set_item("lambda", to_fraction(py, &inv.lambda_p)?)?;
    d.set_item("H", to_fraction(py, &inv.holonomy)?)?;
    d.set_item("alpha", to_fraction(py, &inv.alpha_coefficient)?)?;
    d.set_item("h1", inv.h1.to_string())?;
    d.set_item("torus_primitive", inv.torus_primitive)?;
    Ok(d)
}

/// `"distinct"`, `"same"` or `"not-decided"`, with the period generators.
#[pyfunction]
fn distinguish(p: i64, k1: i64, k2: i64) -> PyResult<BTreeMap<&'static str, String>> {
    let d = moishezon::distinguish(p, k1, k2).map_err(err)?;
    Ok(d.records().into_iter().collect())
}

#[pyfunction]
fn torus_primitivity(p: i64, k: i64) -> PyResult<bool> {
    surgery::torus_primitivity(p, k).map_err(err)
}

#[pyfunction]
fn holonomy_relative<'py>(
    py: Python<'py>,
    m: i64,
    lambda_: &Bound<'py, PyAny>,
    omega_pairing: &Bound<'py, PyAny>,
    canonical_pairing: &Bound<'py, PyAny>,
    intersection: &Bound<'py, PyAny>,
) -> PyResult<Bound<'py, PyAny>> {
    let h = surgery::holonomy_relative(
        m,
        &from_py_rational(lambda_)?,
        &from_py_rational(omega_pairing)?,
        &from_py_rational(canonical_pairing)?,
        &from_py_rational(intersection)?,
    )
    .map_err(err)?;
    to_fraction(py, &h.value)
}

/// `{symbol: coefficient}` of `k · H · PD[T]`.
#[pyfunction]
fn canonical_defect<'py>(
    py: Python<'py>,
    k: i64,
    h: &Bound<'py, PyAny>,
) -> PyResult<BTreeMap<String, Bound<'py, PyAny>>> {
    let class = surgery::canonical_defect(k, &HolonomyValue::new(from_py_rational(h)?));
    class
        .terms()
        .map(|(s, c)| Ok((s.to_string(), to_fraction(py, c)?)))
        .collect()
}

#[pyfunction]
fn holonomy_two_ways<'py>(py: Python<'py>, p: i64) -> PyResult<(Bound<'py, PyAny>, Bound<'py, PyAny>)> {
    let (a, b) = moishezon::holonomy_two_ways(p).map_err(err)?;
    Ok((to_fraction(py, &a)?, to_fraction(py, &b)?))
}

#[pymodule]
pub fn luttinger(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBraid>()?;
    m.add_class::<PyFactorization>()?;
    m.add_class::<PyPresentation>()?;
    m.add_function(wrap_pyfunction!(family_invariants, m)?)?;
    m.add_function(wrap_pyfunction!(distinguish, m)?)?;
    m.add_function(wrap_pyfunction!(torus_primitivity, m)?)?;
    m.add_function(wrap_pyfunction!(holonomy_relative, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_defect, m)?)?;
    m.add_function(wrap_pyfunction!(holonomy_two_ways, m)?)?;
    Ok(())
}
