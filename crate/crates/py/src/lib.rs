use std::collections::BTreeMap;

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ufi::colouring::{is_nested, nested_chromatic_number};
use ufi::invariants::{betti_closed_form, bsd_ideal, bsd_quotient, hilbert_summary, BettiTable};
use ufi::io::{Instance, InstanceJson, Tokens};
use ufi::monomial::betti_oracle_with;
use ufi::primes::{ufi_associated_primes, ufi_irreducible_decomposition};
use ufi::{uniform_face_ideal, ErrorKind, Limits};

create_exception!(pyufi, UfiError, PyException);
create_exception!(pyufi, ParseError, UfiError);
create_exception!(pyufi, GuardError, UfiError);
create_exception!(pyufi, PreconditionError, UfiError);

fn err(e: ufi::Error) -> PyErr {
    let msg = e.to_string();
    match e.kind() {
        ErrorKind::Parse => ParseError::new_err(msg),
        ErrorKind::Guard => GuardError::new_err(msg),
        ErrorKind::Precondition => PreconditionError::new_err(msg),
    }
}

fn table(t: &BettiTable) -> BTreeMap<(usize, u32), u64> {
    t.iter().map(|(i, j, v)| ((i, j), v)).collect()
}

/// A simplicial complex with a colouring of its vertices.
#[pyclass(name = "Instance", module = "pyufi", frozen)]
struct PyInstance {
    inner: Instance,
}

#[pymethods]
impl PyInstance {
    /// `colouring=None` means one class per vertex.
    #[new]
    #[pyo3(signature = (vertices, facets, colouring=None, allow_empty_classes=false))]
    fn new(
        vertices: Vec<String>,
        facets: Vec<Vec<String>>,
        colouring: Option<Vec<Vec<String>>>,
        allow_empty_classes: bool,
    ) -> PyResult<Self> {
        let j = InstanceJson {
            vertices: Tokens::List(vertices),
            facets: facets.into_iter().map(Tokens::List).collect(),
            colouring: colouring.map(|c| c.into_iter().map(Tokens::List).collect()),
        };
        let inner = Instance::from_json(&j, allow_empty_classes).map_err(err)?;
        Ok(PyInstance { inner })
    }

    #[staticmethod]
    #[pyo3(signature = (text, allow_empty_classes=false))]
    fn from_json(text: &str, allow_empty_classes: bool) -> PyResult<Self> {
        let inner = Instance::parse(text, allow_empty_classes).map_err(err)?;
        Ok(PyInstance { inner })
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner.to_json()).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        let labels = self.inner.complex.labels();
        format!("Instance({}, {})", self.inner.complex, self.inner.colouring.format(labels))
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.complex.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.colouring.k()
    }

    /// `None` when nested, otherwise the reason it is not.
    fn nesting_failure(&self) -> PyResult<Option<String>> {
        let d = &self.inner.complex;
        let r = is_nested(d, &self.inner.colouring).map_err(err)?;
        Ok(r.into_result(d).err().map(|e| e.to_string()))
    }

    /// The same instance with every class in nesting order.
    fn nesting_ordered(&self) -> PyResult<Self> {
        let d = &self.inner.complex;
        let c = is_nested(d, &self.inner.colouring).map_err(err)?.into_result(d).map_err(err)?;
        Ok(PyInstance {
            inner: Instance {
                complex: d.clone(),
                colouring: c,
            },
        })
    }

    fn nested_chromatic_number(&self) -> PyResult<usize> {
        Ok(nested_chromatic_number(&self.inner.complex).map_err(err)?.0)
    }

    fn generators(&self) -> PyResult<Vec<String>> {
        let i = uniform_face_ideal(&self.inner.complex, &self.inner.colouring).map_err(err)?;
        Ok(i.format_gens())
    }

    /// Graded Betti numbers `{(i, j): β_ij}` of the ideal.
    fn betti(&self) -> PyResult<BTreeMap<(usize, u32), u64>> {
        Ok(table(&betti_closed_form(&self.inner.complex, &self.inner.colouring).map_err(err)?))
    }

    /// Betti numbers computed from the lcm lattice; works for any colouring.
    #[pyo3(signature = (unlimited=false))]
    fn betti_oracle(&self, py: Python<'_>, unlimited: bool) -> PyResult<BTreeMap<(usize, u32), u64>> {
        let i = uniform_face_ideal(&self.inner.complex, &self.inner.colouring).map_err(err)?;
        let lim = if unlimited { Limits::unlimited() } else { Limits::default() };
        let t = py.detach(|| betti_oracle_with(&i, &lim, None)).map_err(err)?;
        Ok(table(&t.graded()))
    }

    /// Boij-Söderberg decomposition, as text.
    #[pyo3(signature = (quotient=false))]
    fn boij_soderberg(&self, quotient: bool) -> PyResult<String> {
        let (d, c) = (&self.inner.complex, &self.inner.colouring);
        let b = if quotient { bsd_quotient(d, c) } else { bsd_ideal(d, c) };
        Ok(b.map_err(err)?.to_string())
    }

    fn hilbert<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let h = hilbert_summary(&self.inner.complex, &self.inner.colouring).map_err(err)?;
        let m = PyDict::new(py);
        m.set_item("numerator", h.q)?;
        m.set_item("dim", h.dim)?;
        m.set_item("codim", h.codim)?;
        m.set_item("multiplicity", h.multiplicity)?;
        m.set_item("pdim", h.pdim)?;
        m.set_item("depth", h.depth)?;
        m.set_item("reg", h.reg)?;
        m.set_item("cohen_macaulay", h.cohen_macaulay)?;
        Ok(m)
    }

    fn irreducible_components(&self) -> PyResult<Vec<String>> {
        let d = ufi_irreducible_decomposition(&self.inner.complex, &self.inner.colouring).map_err(err)?;
        Ok(d.format())
    }

    fn associated_primes(&self) -> PyResult<Vec<String>> {
        let (d, c) = (&self.inner.complex, &self.inner.colouring);
        let p = ufi_associated_primes(d, c).map_err(err)?;
        let vars = uniform_face_ideal(d, c).map_err(err)?.vars().to_vec();
        Ok(p.format(&vars))
    }
}

#[pymodule]
fn pyufi(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PyInstance>()?;
    m.add("UfiError", py.get_type::<UfiError>())?;
    m.add("ParseError", py.get_type::<ParseError>())?;
    m.add("GuardError", py.get_type::<GuardError>())?;
    m.add("PreconditionError", py.get_type::<PreconditionError>())?;
    Ok(())
}
