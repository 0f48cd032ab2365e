from fractions import Fraction as F

import pytest

from qsymm.core import LaurentPoly
from qsymm.verify import (
    BOUNDED_THMS, COROLLARIES, EVALUATIONS, PROP_KINDS, UNBOUNDED_KINDS,
    verify_appendix, verify_bounded, verify_character, verify_corollary,
    verify_evaluation, verify_prop_fik, verify_props, verify_rr,
    verify_unbounded,
)


def test_bounded_all_theorems_smoke():
    for thm in BOUNDED_THMS:
        rep = verify_bounded(thm, 1, 1, npoints=1, seed=0)
        assert rep["status"] == "pass", thm


def test_bounded_rejects_bad_arguments():
    with pytest.raises(ValueError):
        verify_bounded("4", 1, -1)
    with pytest.raises(ValueError):
        verify_bounded("4", 0, 1)
    with pytest.raises(ValueError):
        verify_bounded("99", 1, 1)


def test_bounded_empty_boundary():
    # m = 0 collapses both sides to a single trivial term
    for thm in BOUNDED_THMS:
        rep = verify_bounded(thm, 2, 0, npoints=1, seed=3)
        assert rep["status"] == "pass", thm


def test_corollaries_smoke():
    for kind in COROLLARIES:
        rep = verify_corollary(kind, 2, 1, npoints=1, seed=0)
        assert rep["status"] == "pass", kind


def test_unbounded_smoke():
    for kind in UNBOUNDED_KINDS:
        rep = verify_unbounded(kind, 1, 3, npoints=1, seed=0)
        assert rep["status"] == "pass", kind


def test_unbounded_symbolic_a():
    rep = verify_unbounded("Pb", 1, 3, npoints=1, seed=0, symbolic="a")
    assert rep["status"] == "pass"


def test_prop_fik_smoke():
    rep = verify_prop_fik(1, 1, npoints=1, seed=0)
    assert rep["status"] == "pass"
    rep = verify_prop_fik(2, 0, npoints=1, seed=0)
    assert rep["status"] == "pass"


def test_evaluations_smoke():
    for kind in EVALUATIONS:
        rep = verify_evaluation(kind, 1, maxsize=3, npoints=1, seed=0)
        assert rep["status"] == "pass", kind


def test_rr_smoke():
    rep = verify_rr("RR1", 1, 1, 10)
    assert rep["status"] == "pass"
    assert len(rep["points"]) == 2


def test_character_certificate_recorded():
    rep = verify_character("C", 1, 1, order=4)
    assert rep["status"] == "pass"
    assert any("certified" in p["point"] for p in rep["points"])


def test_appendix_smoke():
    for which in ("B", "A"):
        rep = verify_appendix(which, order=5, radius=3)
        assert rep["status"] == "pass", which


def test_props_smoke():
    for kind in PROP_KINDS:
        rep = verify_props(kind, 1, 1, npoints=1, seed=0)
        assert rep["status"] == "pass", kind


def test_failure_produces_witness():
    # the witness machinery: disagreeing inputs must name the smallest
    # offending monomial with both coefficients
    from qsymm.verify import _witness
    x = LaurentPoly.var("x1")
    w = _witness(x + 1, x + 2)
    assert w == {"monomial": "1", "lhs": "1", "rhs": "2"}
    w = _witness(2 * x * x, F(0))
    assert w["monomial"] == "x1^2" and w["lhs"] == "2"
    assert _witness(x, x) is None
