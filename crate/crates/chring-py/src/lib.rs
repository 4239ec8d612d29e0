//! Python bindings: load character tables, decompose them into mod-p blocks
//! and read off Loewy lengths from Python.
//!
//! Usage:
//!
//!     import chring_py
//!     t = chring_py.CharacterTable.from_file("fixtures/s3.json")
//!     t.validate()                  # [] when the table is consistent
//!     t.loewy(3)                    # per-block radical dims and lengths
//!     chring_py.compare("fixtures/s3.json", "fixtures/c2.json", 2)

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use chring::pipeline;

fn to_py_err(e: pipeline::Error) -> PyErr {
    if e.exit_code() == 3 {
        PyRuntimeError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

/// A parsed character table.
#[pyclass(frozen)]
struct CharacterTable {
    inner: chring::CharacterTable,
}

#[pymethods]
impl CharacterTable {
    /// Parse a table from a JSON file.
    #[staticmethod]
    fn from_file(path: &str) -> PyResult<Self> {
        let inner = chring::load_table(std::path::Path::new(path))
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(CharacterTable { inner })
    }

    /// Parse a table from JSON text.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner =
            chring::parse_table(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(CharacterTable { inner })
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    #[getter]
    fn order(&self) -> u64 {
        self.inner.order
    }

    fn class_count(&self) -> usize {
        self.inner.class_count()
    }

    fn class_sizes(&self) -> Vec<u64> {
        self.inner.classes.iter().map(|c| c.size).collect()
    }

    fn element_orders(&self) -> Vec<u64> {
        self.inner.classes.iter().map(|c| c.element_order).collect()
    }

    /// All violated validation checks; an empty list means the table is good.
    fn validate(&self) -> Vec<String> {
        chring::validate_table(&self.inner).failures
    }

    fn degrees(&self) -> PyResult<Vec<u64>> {
        self.require_valid()?;
        Ok((0..self.inner.class_count())
            .map(|i| self.inner.degree(i))
            .collect())
    }

    /// The exact multiplicity [chi_i chi_j, chi_l].
    fn scalar_product(&self, i: usize, j: usize, l: usize) -> PyResult<u64> {
        self.require_valid()?;
        let k = self.inner.class_count();
        if i >= k || j >= k || l >= k {
            return Err(PyValueError::new_err("character index out of range"));
        }
        chring::scalar_product_triple(&self.inner, i, j, l)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// p'-sections as (regular_class, member_classes) pairs.
    fn sections(&self, p: u64) -> PyResult<Vec<(usize, Vec<usize>)>> {
        self.require_valid()?;
        self.require_prime(p)?;
        let sp = chring::section_partition(&self.inner, p)
            .map_err(|e| PyValueError::new_err(e.to_string()))?;
        Ok(sp.fibers())
    }

    /// The principal idempotent e_{G_p} reduced mod p, in the Irr basis.
    fn principal_idempotent(&self, p: u64) -> PyResult<Vec<u64>> {
        self.require_valid()?;
        self.require_prime(p)?;
        chring::principal_idempotent_mod_p(&self.inner, p)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    /// Block decomposition: one dict per block with sections, dimension and
    /// idempotent vector. The principal block comes first.
    fn blocks<'py>(&self, py: Python<'py>, p: u64) -> PyResult<Bound<'py, PyList>> {
        self.require_valid()?;
        let analysis = pipeline::analyze(&self.inner, p).map_err(to_py_err)?;
        let out = PyList::empty(py);
        for b in &analysis.blocks {
            let d = PyDict::new(py);
            d.set_item("sections", b.sections.clone())?;
            d.set_item("dimension", b.dimension())?;
            d.set_item("idempotent", b.idempotent.clone())?;
            out.append(d)?;
        }
        Ok(out)
    }

    /// Loewy data per block: radical dimension chain and Loewy length.
    #[pyo3(signature = (p, principal_only = false))]
    fn loewy<'py>(
        &self,
        py: Python<'py>,
        p: u64,
        principal_only: bool,
    ) -> PyResult<Bound<'py, PyList>> {
        self.require_valid()?;
        let analysis = pipeline::analyze(&self.inner, p).map_err(to_py_err)?;
        let reports = if principal_only {
            vec![analysis.principal_loewy().map_err(to_py_err)?]
        } else {
            analysis.loewy_reports().map_err(to_py_err)?
        };
        let blocks = &analysis.blocks;
        let out = PyList::empty(py);
        for (i, r) in reports.iter().enumerate() {
            let d = PyDict::new(py);
            d.set_item("sections", blocks[i].sections.clone())?;
            d.set_item("dimension", blocks[i].dimension())?;
            d.set_item("radical_dims", r.radical_dims.clone())?;
            d.set_item("loewy_length", r.loewy_length)?;
            out.append(d)?;
        }
        Ok(out)
    }

    fn emit(&self) -> String {
        self.inner.emit()
    }

    fn __repr__(&self) -> String {
        format!(
            "CharacterTable(name={:?}, order={}, classes={})",
            self.inner.name,
            self.inner.order,
            self.inner.class_count()
        )
    }
}

impl CharacterTable {
    fn require_valid(&self) -> PyResult<()> {
        let report = chring::validate_table(&self.inner);
        if report.passed() {
            Ok(())
        } else {
            Err(PyValueError::new_err(format!(
                "table failed validation: {}",
                report.failures.join("; ")
            )))
        }
    }

    fn require_prime(&self, p: u64) -> PyResult<()> {
        if pipeline::is_prime(p) {
            Ok(())
        } else {
            Err(PyValueError::new_err(format!("{} is not prime", p)))
        }
    }
}

/// Compare the principal Loewy lengths of a group table and a normalizer
/// table at the prime p.
#[pyfunction]
fn compare<'py>(
    py: Python<'py>,
    file_g: &str,
    file_n: &str,
    p: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let report = pipeline::compare_files(
        std::path::Path::new(file_g),
        std::path::Path::new(file_n),
        p,
    )
    .map_err(to_py_err)?;
    let d = PyDict::new(py);
    d.set_item("group_name", &report.group_name)?;
    d.set_item("group_order", report.group_order)?;
    d.set_item("normalizer_name", &report.normalizer_name)?;
    d.set_item("normalizer_order", report.normalizer_order)?;
    d.set_item("p", report.p)?;
    d.set_item("ll_group", report.ll_group)?;
    d.set_item("ll_normalizer", report.ll_normalizer)?;
    d.set_item("equal", report.equal)?;
    d.set_item("group_radical_dims", report.group_radical_dims.clone())?;
    d.set_item(
        "normalizer_radical_dims",
        report.normalizer_radical_dims.clone(),
    )?;
    d.set_item("warnings", report.warnings.clone())?;
    Ok(d)
}

#[pymodule]
fn chring_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<CharacterTable>()?;
    m.add_function(wrap_pyfunction!(compare, m)?)?;
    Ok(())
}
