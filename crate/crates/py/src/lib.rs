//! Python bindings: the `Polytope` type plus the enumeration, catalog and
//! ring-comparison entry points.

use std::collections::HashMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use torbelt::catalog;
use torbelt::enumerate::{enumerate_triangulations, filter_irreducible};
use torbelt::hochster::bigraded_betti;
use torbelt::koszul::tor_betti_via_koszul;
use torbelt::poly::{DualTriangulation, FacetGraph};
use torbelt::torring;

fn to_py_err(e: torbelt::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A simple 3-polytope, held as its dual triangulation.
#[pyclass(frozen)]
struct Polytope {
    inner: DualTriangulation,
}

#[pymethods]
impl Polytope {
    /// Parse adjacency rows like "bcd,acd,abd,abc".
    #[staticmethod]
    fn from_rows(text: &str) -> PyResult<Self> {
        let graph = FacetGraph::parse_adjacency_rows(text).map_err(to_py_err)?;
        let inner = DualTriangulation::from_facet_graph(&graph).map_err(to_py_err)?;
        Ok(Polytope { inner })
    }

    /// Row `k` (1-based) of the built-in catalog of irreducible 11-facet
    /// polytopes.
    #[staticmethod]
    fn table2_row(k: usize) -> PyResult<Self> {
        Ok(Polytope {
            inner: catalog::table2_row(k).map_err(to_py_err)?,
        })
    }

    /// Facet count.
    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels().iter().map(|l| l.name().to_string()).collect()
    }

    /// Cyclic neighbor order around each facet (indices).
    fn rotation(&self) -> Vec<Vec<usize>> {
        (0..self.inner.m())
            .map(|v| self.inner.rotation().rotation(v).to_vec())
            .collect()
    }

    fn adjacency_rows(&self) -> PyResult<String> {
        self.inner.to_adjacency_rows().map_err(to_py_err)
    }

    fn non_adjacent_pairs(&self) -> Vec<(String, String)> {
        self.inner
            .non_adjacent_pairs()
            .into_iter()
            .map(|(a, b)| (self.inner.label(a).to_string(), self.inner.label(b).to_string()))
            .collect()
    }

    /// Facet triples whose union is a circle (empty for irreducible
    /// polytopes).
    fn three_belts(&self) -> Vec<Vec<String>> {
        self.inner
            .three_belts()
            .into_iter()
            .map(|b| b.facets.iter().map(|&v| self.inner.label(v).to_string()).collect())
            .collect()
    }

    /// Chordless facet 4-cycles, each in cyclic order.
    fn four_belts(&self) -> Vec<Vec<String>> {
        self.inner
            .four_belts()
            .into_iter()
            .map(|b| self.inner.belt4_names(&b))
            .collect()
    }

    /// Bigraded Betti numbers as a dict `{(i, j): beta}` for bidegree
    /// `(-i, 2j)`, via the subset-homology route.
    fn betti(&self) -> HashMap<(usize, usize), u64> {
        bigraded_betti(&self.inner)
            .cells()
            .into_iter()
            .map(|(i, j, v)| ((i, j), v))
            .collect()
    }

    /// The same numbers computed from the Koszul differential.
    fn betti_via_koszul(&self) -> HashMap<(usize, usize), u64> {
        tor_betti_via_koszul(&self.inner, None)
            .cells()
            .into_iter()
            .map(|(i, j, v)| ((i, j), v))
            .collect()
    }

    /// The 7-component catalog tuple (11-facet polytopes only).
    fn betti_tuple(&self) -> PyResult<Vec<u64>> {
        Ok(bigraded_betti(&self.inner)
            .tuple()
            .map_err(to_py_err)?
            .0
            .to_vec())
    }

    /// Betti numbers of the moment-angle manifold, degree by degree.
    fn moment_angle_betti(&self) -> Vec<u64> {
        bigraded_betti(&self.inner).moment_angle_betti()
    }

    fn betti_csv(&self) -> String {
        bigraded_betti(&self.inner).to_csv()
    }

    /// Annihilator dimension `dim V` (requires no 3-belts).
    fn dim_v(&self) -> PyResult<u64> {
        Ok(torring::annihilator_dim(&self.inner).map_err(to_py_err)?.dim_v)
    }

    /// Full annihilator report as a JSON string.
    fn annihilator_json(&self) -> PyResult<String> {
        let report = torring::annihilator_dim(&self.inner).map_err(to_py_err)?;
        Ok(report.to_json(&self.inner))
    }

    /// Relabeling- and reflection-invariant fingerprint.
    fn canonical_code(&self) -> Vec<u8> {
        self.inner.rotation().canonical_code().bytes().to_vec()
    }

    fn __repr__(&self) -> String {
        format!("Polytope(m={})", self.inner.m())
    }

    fn __eq__(&self, other: &Polytope) -> bool {
        self.inner.rotation().canonical_code() == other.inner.rotation().canonical_code()
    }
}

/// Compare two polytopes by Betti table and `dim V`; returns
/// "distinguished" or "indistinguishable-by-these-invariants".
#[pyfunction]
fn rings_distinguished(p: &Polytope, q: &Polytope) -> PyResult<String> {
    Ok(torring::rings_distinguished(&p.inner, &q.inner)
        .map_err(to_py_err)?
        .to_string())
}

/// All 3-connected planar triangulations with `n` vertices (one per
/// isomorphism class), as polytopes.
#[pyfunction]
#[pyo3(signature = (n, irreducible = false))]
fn enumerate_polytopes(n: usize, irreducible: bool) -> PyResult<Vec<Polytope>> {
    let mut classes = enumerate_triangulations(n).map_err(to_py_err)?;
    if irreducible {
        classes = filter_irreducible(&classes);
    }
    classes
        .into_iter()
        .map(|rs| {
            Ok(Polytope {
                inner: DualTriangulation::from_rotation_system(rs).map_err(to_py_err)?,
            })
        })
        .collect()
}

/// The 25 built-in irreducible 11-facet polytopes.
#[pyfunction]
fn table2() -> PyResult<Vec<Polytope>> {
    (1..=25)
        .map(Polytope::table2_row)
        .collect()
}

#[pymodule]
fn torbelt_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Polytope>()?;
    m.add_function(wrap_pyfunction!(rings_distinguished, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_polytopes, m)?)?;
    m.add_function(wrap_pyfunction!(table2, m)?)?;
    Ok(())
}
