use std::ffi::CString;

use pyo3::prelude::*;
use pyo3::types::{PyDict, PyModule};

fn with_module(code: &str) {
    Python::initialize();
    Python::attach(|py| {
        let m = PyModule::new(py, "splitalg").unwrap();
        splitalg_py::splitalg_module(&m).unwrap();
        py.import("sys").unwrap().getattr("modules").unwrap().set_item("splitalg", &m).unwrap();
        let globals = PyDict::new(py);
        let code = CString::new(code).unwrap();
        if let Err(e) = py.run(&code, Some(&globals), None) {
            e.print(py);
            panic!("python snippet failed");
        }
    });
}

#[test]
fn fractions_cross_the_boundary() {
    with_module(
        r#"
from fractions import Fraction
import splitalg
r = splitalg.integration_map(3)
assert r.rows() == [[0, 0, 0], [Fraction(1, 2), 0, 0], [0, Fraction(1, 3), 0]]
assert r.apply([1, "2", Fraction(3, 7)]) == [0, Fraction(1, 2), Fraction(2, 3)]
"#,
    );
}

#[test]
fn checks_and_constructions() {
    with_module(
        r#"
import splitalg
a = splitalg.truncated_polynomials(4)
r = splitalg.integration_map(4)
assert splitalg.check_operator(a, "rota_baxter", r)
d = splitalg.aguiar_dendriform(a, r)
assert d.operations == ["prec", "succ"]
assert d.check("dendriform", paranoid=True).checked > 0
q = splitalg.induced_quadri(d, splitalg.LinearMap.identity(4))
assert q.signature == "quadri"
"#,
    );
}

#[test]
fn errors_raise_splitalg_error() {
    with_module(
        r#"
import splitalg
try:
    splitalg.truncated_polynomials(2).check("no-such-catalog")
except splitalg.SplitalgError as e:
    assert "no-such-catalog" in str(e)
else:
    raise AssertionError("expected an error")
try:
    splitalg.aguiar_dendriform(splitalg.truncated_polynomials(2), splitalg.LinearMap.identity(2))
except ValueError:
    pass
else:
    raise AssertionError("identity is not rota-baxter here")
"#,
    );
}
