from fractions import Fraction as F

import pytest

from qsymm.core import (
    DegenerateError, ExactDivisionError, GRID, LaurentPoly, RatF,
    TruncatedSeries, draw_param_point, exact_divide,
)


def test_ratf_arithmetic():
    z = RatF.gen("q")
    f = (z + 1) * (z - 1)
    assert f == z * z - 1
    assert (f / (z - 1)) == z + 1
    assert RatF.const("q", F(2, 3)) == F(2, 3)
    assert bool(RatF.const("q", 0)) is False
    assert bool(z) is True


def test_laurent_basic_arithmetic():
    x = LaurentPoly.var("x1")
    y = LaurentPoly.var("x2")
    p = (x + y) * (x - y)
    assert (p - (x * x - y * y)).is_zero()
    assert p.substitute("x1", F(2)).substitute("x2", F(1)) == 3
    inv = LaurentPoly.var("x1", -1, 1)
    assert ((x * inv) - 1).is_zero()


def test_laurent_half_powers():
    h = LaurentPoly.var("x1", 1, 2)
    assert ((h * h) - LaurentPoly.var("x1")).is_zero()
    m = LaurentPoly.monomial(F(3), x1=F(-1, 2))
    assert ((h * m) - 3).is_zero()


def test_exact_divide():
    x = LaurentPoly.var("x1")
    num = x ** 3 - 1
    den = x - 1
    q = exact_divide(num, den)
    assert (q * den - num).is_zero()
    with pytest.raises(ExactDivisionError):
        exact_divide(x ** 2 + 1, x - 1)


def test_canonical_round_trip():
    x = LaurentPoly.var("x1")
    y = LaurentPoly.var("x2", -1, 2)
    p = 3 * x * y + F(2, 7) * y - 5
    back = LaurentPoly.from_canonical(p.canonical())
    assert (back - p).is_zero()
    assert back.canonical() == p.canonical()


def test_canonical_round_trip_ratf_coeffs():
    a = RatF.gen("a")
    p = LaurentPoly.var("x1") * ((a + 1) / (a - 2)) + a
    back = LaurentPoly.from_canonical(p.canonical())
    assert (back - p).is_zero()


def test_fingerprint_stable():
    p = LaurentPoly.var("x1") + 1
    assert p.fingerprint() == (p + 0).fingerprint()
    assert p.fingerprint() != (p + 1).fingerprint()


def test_valuation_degree():
    x = LaurentPoly.var("x1")
    p = x ** 2 + LaurentPoly.var("x1", -3, 1)
    assert p.valuation("x1") == -3
    assert p.degree("x1") == 2
    assert p.total_degree() == 2
    assert LaurentPoly.zero().valuation("x1") is None


def test_truncated_series_mul():
    one_minus_q = TruncatedSeries("q", 6 * GRID, {0: F(1), GRID: F(-1)})
    geo = TruncatedSeries("q", 6 * GRID,
                          {k * GRID: F(1) for k in range(6)})
    prod = one_minus_q * geo
    assert prod.coeffs.get(0) == 1
    assert all(not prod.coeffs.get(k * GRID) for k in range(1, 6))


def test_draw_param_point_deterministic():
    a = draw_param_point(["q", "t"], 7)
    b = draw_param_point(["q", "t"], 7)
    assert a.values == b.values
    c = draw_param_point(["q", "t"], 8)
    assert a.values != c.values


def test_draw_param_point_distinct_and_ranged():
    pt = draw_param_point(["q", "t", "t2", "t3"], 3)
    vals = list(pt.values.values())
    assert len(set(vals)) == len(vals)
    for v in vals:
        assert 0 < v < 1 and v.denominator <= 1000


def test_draw_param_point_symbolic():
    pt = draw_param_point(["q", "t"], 1, symbolic="a")
    assert isinstance(pt["a"], RatF)
    assert pt["a"] == RatF.gen("a")
    assert "a" in pt.describe()


def test_degenerate_error_is_arithmetic():
    assert issubclass(DegenerateError, ArithmeticError)
