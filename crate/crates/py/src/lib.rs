//! Python bindings for `g2kr`.
//!
//! Weights cross the boundary as `(a, b)` tuples in the fundamental-weight
//! basis, characters as `{(a, b): mult}` dicts, and graded characters as
//! `{grade: {(a, b): mult}}`. Domain errors raise `ValueError`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use g2kr::characters::{self, Character, IrrDecomposition};
use g2kr::equivalence::{self, ClassKey};
use g2kr::kr::{self, Family, GradedDecomposition, QuadIndex};
use g2kr::lattice::SimpleIndex;
use g2kr::{chevalley, Weight};

type Pair = (i64, i64);
type Quad = (u64, u64, u64, u64);
type Graded = BTreeMap<u64, BTreeMap<Pair, u64>>;

fn err(e: g2kr::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn weight((a, b): Pair) -> Weight {
    Weight::new(a, b)
}

fn pair(w: Weight) -> Pair {
    (w.a, w.b)
}

fn quad((a, b, c, d): Quad) -> QuadIndex {
    QuadIndex::new(a, b, c, d)
}

fn unquad(r: QuadIndex) -> Quad {
    let [a, b, c, d] = r.0;
    (a, b, c, d)
}

fn family(name: &str) -> PyResult<Family> {
    name.parse().map_err(err)
}

fn char_dict(c: &Character) -> BTreeMap<Pair, i64> {
    c.iter().map(|(w, k)| (pair(w), k)).collect()
}

fn irr_dict(d: &IrrDecomposition) -> BTreeMap<Pair, u64> {
    d.iter().map(|(w, k)| (pair(w), k)).collect()
}

fn graded_dict(g: &GradedDecomposition) -> Graded {
    g.grades().map(|(n, d)| (n, irr_dict(d))).collect()
}

fn graded_from(dict: Graded) -> PyResult<GradedDecomposition> {
    let mut g = GradedDecomposition::new();
    for (n, parts) in dict {
        for (w, k) in parts {
            let w = weight(w);
            if !w.is_dominant() {
                return Err(err(g2kr::Error::NotDominant(w)));
            }
            g.add(n, w, k);
        }
    }
    Ok(g)
}

/// A weight `a·ω₁ + b·ω₂` of G2.
#[pyclass(name = "Weight", frozen, eq, hash, ord, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PyWeight(Weight);

#[pymethods]
impl PyWeight {
    #[new]
    fn new(a: i64, b: i64) -> Self {
        PyWeight(Weight::new(a, b))
    }

    #[getter]
    fn a(&self) -> i64 {
        self.0.a
    }

    #[getter]
    fn b(&self) -> i64 {
        self.0.b
    }

    fn root_coords(&self) -> Pair {
        self.0.to_root_coords()
    }

    fn reflect(&self, i: u8) -> PyResult<Self> {
        let i = SimpleIndex::from_number(i)
            .ok_or_else(|| PyValueError::new_err("simple index must be 1 or 2"))?;
        Ok(PyWeight(self.0.reflect(i)))
    }

    fn inner(&self, other: &PyWeight) -> i64 {
        self.0.inner(other.0)
    }

    fn is_dominant(&self) -> bool {
        self.0.is_dominant()
    }

    fn orbit(&self) -> Vec<PyWeight> {
        self.0.weyl_orbit().into_iter().map(PyWeight).collect()
    }

    fn as_tuple(&self) -> Pair {
        pair(self.0)
    }

    fn __repr__(&self) -> String {
        format!("Weight({}, {})", self.0.a, self.0.b)
    }
}

#[pyfunction]
fn to_root_coords(w: Pair) -> Pair {
    weight(w).to_root_coords()
}

#[pyfunction]
fn weyl_orbit(w: Pair) -> Vec<Pair> {
    weight(w).weyl_orbit().into_iter().map(pair).collect()
}

#[pyfunction]
fn irreducible_character(lambda: Pair) -> PyResult<BTreeMap<Pair, i64>> {
    Ok(char_dict(
        &characters::irreducible_character(weight(lambda)).map_err(err)?,
    ))
}

#[pyfunction]
fn weyl_dim(lambda: Pair) -> PyResult<BigUint> {
    characters::weyl_dim(weight(lambda)).map_err(err)
}

#[pyfunction]
fn decompose(character: BTreeMap<Pair, i64>) -> PyResult<BTreeMap<Pair, u64>> {
    let c = Character::from_terms(character.into_iter().map(|(w, k)| (weight(w), k)));
    if !c.is_weyl_invariant() {
        return Err(PyValueError::new_err("character is not Weyl-invariant"));
    }
    Ok(irr_dict(&characters::decompose(&c).map_err(err)?))
}

#[pyfunction]
fn tensor(lambda: Pair, mu: Pair) -> PyResult<BTreeMap<Pair, u64>> {
    Ok(irr_dict(
        &characters::tensor(weight(lambda), weight(mu)).map_err(err)?,
    ))
}

#[pyfunction]
fn wt_gr(family_name: &str, m: u64, r: Quad) -> PyResult<(Pair, u64)> {
    let (w, n) = kr::wt_gr(family(family_name)?, m, quad(r)).map_err(err)?;
    Ok((pair(w), n))
}

#[pyfunction]
fn enumerate_region(family_name: &str, m: u64) -> PyResult<Vec<Quad>> {
    let region = kr::enumerate_region(family(family_name)?, m).map_err(err)?;
    Ok(region.into_iter().map(unquad).collect())
}

#[pyfunction]
fn kr_graded_character(family_name: &str, m: u64) -> PyResult<Graded> {
    Ok(graded_dict(&kr::kr_graded_character(
        family(family_name)?,
        m,
    )))
}

#[pyfunction]
fn conjecture_graded_character(family_name: &str, m: u64) -> PyResult<Graded> {
    Ok(graded_dict(&kr::conjecture_graded_character(
        family(family_name)?,
        m,
    )))
}

/// `[(grade, weight, left, right)]` for every disagreement.
#[pyfunction]
fn compare(a: Graded, b: Graded) -> PyResult<Vec<(u64, Pair, u64, u64)>> {
    let diff = kr::compare(&graded_from(a)?, &graded_from(b)?);
    Ok(diff
        .into_iter()
        .map(|x| (x.grade, pair(x.weight), x.left, x.right))
        .collect())
}

#[pyfunction]
fn graded_dimensions(g: Graded) -> PyResult<Vec<(u64, BigUint)>> {
    Ok(kr::graded_dimensions(&graded_from(g)?))
}

#[pyfunction]
fn shift_vector(family_name: &str) -> PyResult<[i64; 4]> {
    equivalence::shift_vector(family(family_name)?).map_err(err)
}

#[pyfunction]
fn representative(family_name: &str, m: u64, j: u64, k: u64, s: u64) -> PyResult<Quad> {
    let key = ClassKey::new(family(family_name)?, j, k, s);
    Ok(unquad(equivalence::representative(m, key).map_err(err)?))
}

#[pyfunction]
fn class_members(family_name: &str, m: u64, r: Quad) -> PyResult<Vec<Quad>> {
    let members = equivalence::class_members(family(family_name)?, m, quad(r)).map_err(err)?;
    Ok(members.into_iter().map(unquad).collect())
}

#[pyfunction]
fn class_size_formula(family_name: &str, m: u64, j: u64, k: u64, s: u64) -> PyResult<u64> {
    equivalence::class_size_formula(m, ClassKey::new(family(family_name)?, j, k, s)).map_err(err)
}

/// Problems found by the partition check; empty when it passes.
#[pyfunction]
fn verify_partition(family_name: &str, m: u64) -> PyResult<Vec<String>> {
    let issues = equivalence::verify_partition(family(family_name)?, m).map_err(err)?;
    Ok(issues.iter().map(ToString::to_string).collect())
}

/// Failed relation checks on `V(ω₂) ⊕ ℂ`; empty when all hold.
#[pyfunction]
fn verify_kr1_relations() -> Vec<String> {
    chevalley::verify_kr1_relations()
        .iter()
        .map(ToString::to_string)
        .collect()
}

#[pymodule]
#[pyo3(name = "g2kr")]
fn g2kr_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWeight>()?;
    m.add_function(wrap_pyfunction!(to_root_coords, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_orbit, m)?)?;
    m.add_function(wrap_pyfunction!(irreducible_character, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_dim, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(tensor, m)?)?;
    m.add_function(wrap_pyfunction!(wt_gr, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_region, m)?)?;
    m.add_function(wrap_pyfunction!(kr_graded_character, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture_graded_character, m)?)?;
    m.add_function(wrap_pyfunction!(compare, m)?)?;
    m.add_function(wrap_pyfunction!(graded_dimensions, m)?)?;
    m.add_function(wrap_pyfunction!(shift_vector, m)?)?;
    m.add_function(wrap_pyfunction!(representative, m)?)?;
    m.add_function(wrap_pyfunction!(class_members, m)?)?;
    m.add_function(wrap_pyfunction!(class_size_formula, m)?)?;
    m.add_function(wrap_pyfunction!(verify_partition, m)?)?;
    m.add_function(wrap_pyfunction!(verify_kr1_relations, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn module_round_trip_through_python() {
        Python::attach(|py| {
            let module = PyModule::new(py, "g2kr").unwrap();
            g2kr_module(&module).unwrap();

            let dim: u64 = module
                .getattr("weyl_dim")
                .unwrap()
                .call1(((0i64, 1i64),))
                .unwrap()
                .extract()
                .unwrap();
            assert_eq!(dim, 14);

            let g: Graded = module
                .getattr("kr_graded_character")
                .unwrap()
                .call1(("t2", 1u64))
                .unwrap()
                .extract()
                .unwrap();
            assert_eq!(g.len(), 4);
            assert_eq!(g[&3], BTreeMap::from([((0, 0), 1)]));

            let bad = module
                .getattr("irreducible_character")
                .unwrap()
                .call1(((-1i64, 0i64),));
            assert!(bad.unwrap_err().is_instance_of::<PyValueError>(py));
        });
    }
}
