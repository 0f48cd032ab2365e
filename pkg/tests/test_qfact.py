from fractions import Fraction as F

import pytest

from qsymm.core import GRID, LaurentPoly, TruncatedSeries
from qsymm.partitions import Partition, partitions_in_box, conjugate
from qsymm.qfact import (
    a_coeff, b_family, c_minus, gauss_binomial, h_b, h_gen, poch, poch2,
    poch_partition, rogers_szego, series_poch_fin, series_poch_inf,
    series_theta, spow,
)

Q, T = F(1, 3), F(1, 5)


def test_spow_negative():
    assert spow(F(2, 3), -2) == F(9, 4)
    assert spow(F(5), 0) == 1


def test_poch():
    z, q = F(1, 7), F(1, 2)
    assert poch(z, q, 0) == 1
    assert poch(z, q, 3) == (1 - z) * (1 - z * q) * (1 - z * q * q)


def test_poch2_rows():
    # (z; q, t)_la = prod_i (z t^{1-i}; q)_{la_i}
    z = F(2, 9)
    la = Partition((3, 1))
    want = poch(z, Q, 3) * poch(z / T, Q, 1)
    assert poch2(z, Q, T, la) == want
    assert poch_partition(z, Q, T, la) == want


def test_gauss_binomial_scalar():
    assert gauss_binomial(4, 2, Q) == \
        poch(Q, Q, 4) / (poch(Q, Q, 2) ** 2)
    assert gauss_binomial(3, 5, Q) == 0
    assert gauss_binomial(3, -1, Q) == 0


def test_gauss_binomial_polynomial_branch():
    q = LaurentPoly.var("q")
    for m in range(6):
        for k in range(m + 1):
            val = gauss_binomial(m, k, q)
            if isinstance(val, LaurentPoly):
                val = val.substitute("q", Q)
            assert val == gauss_binomial(m, k, Q)


def test_rogers_szego_against_sum():
    z, q = F(3, 4), F(1, 2)
    for m in range(6):
        want = sum(spow(z, k) * gauss_binomial(m, k, q)
                   for k in range(m + 1))
        assert rogers_szego(m, z, q) == want
    assert rogers_szego(0, z, q) == 1


def test_b_family_bounded_kinds_vanish_beyond_bound():
    m = 2
    assert b_family(Partition((2 * m + 2,)), Q, T, "oa_m", m) == 0
    assert b_family(Partition((m + 1,)), Q, T, "el_m", m) == 0
    assert b_family(Partition((m + 1,)), Q, T, "minus_m", m) == 0


def test_b_family_even_splits():
    # b = (arm-even part) * (arm-odd complement): check the even-arm
    # piece times its complement over all cells reproduces b
    for la in partitions_in_box(3, 3):
        b = b_family(la, Q, T, "b")
        ea = b_family(la, Q, T, "ea")
        oa = b_family(la, Q, T, "oa")
        assert b == ea * oa


def test_h_gen_small_cases():
    a, b, q = F(1, 7), F(2, 7), Q
    assert h_gen(Partition(()), 2, a, b, q) == 1
    assert h_b(Partition((1,)), 1, a, T) == h_gen(Partition((1,)), 1,
                                                  a, F(-1), T)


def test_a_coeff_rejects_mixed_parity():
    # a half partition shorter than n pads with integer zeros
    with pytest.raises(ValueError):
        a_coeff([F(1, 2)], 2, Q, T)


def test_c_minus_empty():
    assert c_minus(F(1, 2), Q, T, Partition(())) == 1


def test_series_poch_inf_euler():
    # 1/(q; q)_inf is the partition generating function
    order = 8
    inv = series_poch_inf("q", 1, 1, 1, order)
    geo = TruncatedSeries("q", order * GRID, {0: F(1)})
    prod = inv * inv
    assert inv.coeffs.get(0) == 1
    # (q;q)_inf coefficients are the pentagonal-number signs
    signs = {0: 1, 1: -1, 2: -1, 5: 1, 7: 1}
    for k in range(order):
        assert inv.coeffs.get(k * GRID, F(0)) == signs.get(k, 0)
    del geo, prod


def test_series_poch_fin_matches_inf_prefix():
    fin = series_poch_fin("q", 1, 1, 1, 50, 8)
    inf = series_poch_inf("q", 1, 1, 1, 8)
    assert fin.coeffs == inf.coeffs


def test_series_theta_triple_product():
    # theta(z*q; q^3) as (zq; q^3)_inf ((q^2/z); q^3)_inf with z = 1
    order = 9
    th = series_theta("q", 1, 1, 3, order)
    a = series_poch_inf("q", 1, 1, 3, order)
    b = series_poch_inf("q", 1, 2, 3, order)
    assert th.coeffs == (a * b).coeffs
