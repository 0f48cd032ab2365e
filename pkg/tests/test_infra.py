"""Coefficient-level identities and reproducibility properties used
throughout the verification layer."""

import json

from fractions import Fraction as F

from qsymm.partitions import (
    Partition, complement, conjugate, n_stat, partitions_in_box,
)
from qsymm.qfact import b_family, c_minus, poch2, spow
from qsymm.symfunc import psi_prime
from qsymm.verify import verify_bounded, verify_rr

Q, T, A = F(1, 3), F(1, 5), F(2, 7)

SHAPES = [Partition(p) for p in ((1,), (2, 1), (2, 2), (3, 1, 1))]


def test_conjugate_swaps_q_and_t():
    for la in SHAPES:
        lap = conjugate(la)
        lhs = poch2(A, Q, T, lap)
        rhs = spow(-A, la.size()) * spow(Q, n_stat(la)) \
            * spow(T, -n_stat(lap)) * poch2(1 / A, T, Q, la)
        assert lhs == rhs, la.intparts()
        assert c_minus(A, Q, T, lap) == c_minus(A, T, Q, la)


def test_part_doubling():
    for la in SHAPES:
        two = Partition(tuple(2 * p for p in la.intparts()))
        assert poch2(A, Q, T, two) == \
            poch2(A, Q * Q, T, la) * poch2(A * Q, Q * Q, T, la)
        assert c_minus(A, Q, T, two) == \
            c_minus(A, Q * Q, T, la) * c_minus(A * Q, Q * Q, T, la)


def test_box_complement_duality():
    m, n = 3, 3
    rect = Partition((m,) * n)
    for la in SHAPES:
        comp = complement(la, m, n)
        lap = conjugate(la)
        c = spow(-spow(Q, 1 - m) * spow(T, n - 1) / A, la.size()) \
            * spow(Q, n_stat(lap)) * spow(T, -n_stat(la))
        assert poch2(A, Q, T, comp) == c * poch2(A, Q, T, rect) \
            / poch2(spow(Q, 1 - m) * spow(T, n - 1) / A, Q, T, la)
        c2 = spow(-spow(Q, 1 - m) / A, la.size()) \
            * spow(Q, n_stat(lap)) * spow(T, -n_stat(la))
        assert c_minus(A, Q, T, comp) == \
            c2 * poch2(A * spow(T, n - 1), Q, T, rect) \
            * c_minus(A, Q, T, la) \
            / (poch2(A * spow(T, n - 1), Q, T, la)
               * poch2(spow(Q, 1 - m) / A, Q, T, la))


def test_vertical_strip_weight_closed_form():
    # for la = 2*ceil(mu/2) the vertical-strip weight has the closed
    # form C^-_{la/2}(t; q^2, t) / C^-_{la/2}(q; q^2, t) / b^ea_mu
    for mu in partitions_in_box(4, 3):
        la = Partition(tuple(p + (p % 2) for p in mu.intparts()))
        half = Partition.from_doubled(tuple(la.intparts()))
        want = c_minus(T, Q * Q, T, half) / c_minus(Q, Q * Q, T, half) \
            / b_family(mu, Q, T, "ea")
        assert psi_prime(la, mu, Q, T) == want, mu.intparts()


def _strip_millis(report):
    out = dict(report)
    out.pop("millis", None)
    return json.dumps(out, sort_keys=True, default=str)


def test_report_determinism():
    a = verify_bounded("4", 1, 1, npoints=2, seed=5)
    b = verify_bounded("4", 1, 1, npoints=2, seed=5)
    assert _strip_millis(a) == _strip_millis(b)
    c = verify_rr("RR1", 1, 1, 8)
    d = verify_rr("RR1", 1, 1, 8)
    assert _strip_millis(c) == _strip_millis(d)


def test_report_schema():
    rep = verify_bounded("4", 1, 0, npoints=1, seed=0)
    assert set(rep) == {"identity", "params", "seeds", "status",
                        "points", "witness", "millis"}
    assert rep["status"] == "pass"
    assert rep["witness"] is None
    assert rep["seeds"] == [0]
    assert all(set(p) == {"point", "equal"} for p in rep["points"])
