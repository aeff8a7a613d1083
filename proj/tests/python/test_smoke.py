import math

import numpy as np
import pytest

import octosl


def unit(i):
    return [1.0 if k == i else 0.0 for k in range(8)]


ZERO = [0.0] * 8


def test_octonion_product_and_associator():
    e1, e2, e4 = (octosl.Octonion.unit(i) for i in (1, 2, 4))
    assert (e1 * e2).coords == unit(3)
    assert octosl.associator(e1, e2, e4).coords == [2.0 * c for c in unit(7)]


def test_reference_values():
    r0 = octosl.reference()
    assert octosl.det(r0) == pytest.approx(1.0)
    assert octosl.mu(r0) == pytest.approx(-3.0)
    assert octosl.su2_residual(r0) < 1e-12


def test_signatures_at_reference():
    r0 = octosl.reference()
    assert octosl.signature(r0, "sl2o") == (22, 9, 0)
    assert octosl.signature(r0, "su2o") == (22, 0, 0)
    assert octosl.signature(r0, "su11o") == (14, 8, 0)
    assert octosl.signature(r0, "sl2h") == (10, 5, 0)


def test_gradient_euler_identity():
    rng = np.random.default_rng(5)
    entries = rng.normal(size=(4, 8))
    g = octosl.grad_det(entries.tolist())
    assert g @ entries.ravel() == pytest.approx(4.0 * octosl.det(entries.tolist()))
    h = octosl.hessian_log_det(entries.tolist())
    assert np.allclose(h, h.T)


def test_normalize_anti_diagonal():
    nf = octosl.normalize([ZERO, unit(0), unit(0), ZERO])
    a, b, c, d = (np.asarray(x) for x in nf["rho"])
    assert np.linalg.norm(b) < 1e-12 and np.linalg.norm(c) < 1e-12
    assert np.linalg.norm(a) == pytest.approx(1.0)
    assert np.linalg.norm(d) == pytest.approx(1.0)
    assert "inversion" in nf["word"]


def test_singular_input_raises():
    shared = [unit(0), [-x for x in unit(1)], [2.0 * x for x in unit(0)],
              [-2.0 * x for x in unit(1)]]
    assert abs(octosl.det(shared)) < 1e-12
    with pytest.raises(octosl.SingularError):
        octosl.normalize(shared)


def test_qdet_matches_complex_determinant():
    rng = np.random.default_rng(9)
    for _ in range(20):
        m = rng.normal(size=(4, 4)).tolist()
        assert octosl.qdet(m) == pytest.approx(octosl.cdet(m), rel=1e-10)


def test_retract_lands_on_su2():
    rng = np.random.default_rng(3)
    entries = rng.normal(size=(4, 8))
    entries /= octosl.det(entries.tolist()) ** 0.25
    assert octosl.su2_residual(octosl.retract(entries.tolist())) < 1e-8


@pytest.mark.parametrize("suite", ["clifford", "identity", "hessian"])
def test_verify_suites(suite):
    report = octosl.verify(suite, samples=50)
    assert report["pass"], report
    assert suite in octosl.suite_names()
