from fractions import Fraction as F

from qsymm.core import LaurentPoly, exact_divide
from qsymm.partitions import Partition, partitions_in_box
from qsymm.weylsym import (
    bar_last, det_poly, even_orthogonal_schur, hl_b, hl_bc, hl_bc_det0,
    hl_bc_wsum, hl_c, hl_d, laurent_to_mw, mw_sym, mw_to_laurent,
    odd_orthogonal_schur, schur, symplectic_schur, vandermonde, xvars,
)

T, T2, T3 = F(1, 5), F(2, 7), F(3, 11)


def _inv(poly, n):
    for i in range(1, n + 1):
        poly = bar_last(poly, i)
    return poly


def test_det_poly():
    x = LaurentPoly.var("x1")
    y = LaurentPoly.var("x2")
    d = det_poly([[x, y], [LaurentPoly.one(), LaurentPoly.one()]])
    assert (d - (x - y)).is_zero()


def test_vandermonde_c_divides_sign_sum():
    # the C_n Vandermonde times anything stays a Laurent polynomial
    n = 2
    v = vandermonde(n, "C")
    assert (exact_divide(v, v) - 1).is_zero()


def test_mw_round_trip():
    n = 2
    poly = mw_sym(Partition((2, 1)), n) + 3 * mw_sym(Partition((1,)), n)
    back = mw_to_laurent(laurent_to_mw(poly, n), n)
    assert (back - poly).is_zero()


def test_hl_bc_hyperoctahedral_invariance():
    p = hl_bc(Partition((2, 1)), 2, T, T2, T3)
    assert (_inv(p, 2) - p).is_zero()
    swapped = p
    swapped = swapped.substitute("x1", LaurentPoly.var("y"))
    swapped = swapped.substitute("x2", LaurentPoly.var("x1"))
    swapped = swapped.substitute("y", LaurentPoly.var("x2"))
    assert (swapped - p).is_zero()


def test_hl_bc_against_w_sum_oracle():
    for la in (Partition(()), Partition((1,)), Partition((2, 1))):
        a = hl_bc(la, 2, T, T2, T3)
        b = hl_bc_wsum(la, 2, T, T2, T3)
        assert (a - b).is_zero(), la.intparts()


def test_hl_bc_against_det_oracle_at_t0():
    for la in (Partition((1,)), Partition((2,)), Partition((2, 1))):
        a = hl_bc(la, 2, F(0), T2, T3)
        b = hl_bc_det0(la, 2, T2, T3)
        assert (a - b).is_zero(), la.intparts()


def test_hl_b_half_partition():
    # the B-type polynomial at (1/2) is x^{1/2} + x^{-1/2}
    la = Partition.from_doubled((1,))
    p = hl_b(la, 1, T, T2)
    root = LaurentPoly.var("x1", 1, 2) + LaurentPoly.var("x1", -1, 2)
    assert (p - root).is_zero()


def test_hl_specializations_consistent():
    la = Partition((2,))
    assert (hl_b(la, 2, T, T2)
            - hl_bc(la, 2, T, T2, F(-1))).is_zero()
    assert (hl_c(la, 2, T, T2)
            - hl_bc(la, 2, T, T2, -T2)).is_zero()


def test_hl_d_even_sign_sum():
    # for l(la) = n the bar involution gives the companion polynomial,
    # and the two halves add up to the full BC sign sum at (-1, 1)
    la = Partition((2, 1))
    d = hl_d(la, 2, T)
    dbar = bar_last(d, 2)
    full = hl_bc(la, 2, T, F(-1), F(1))
    assert ((d + dbar) - full).is_zero()


def test_classical_schur_small_values():
    x = LaurentPoly.var("x1")
    xi = LaurentPoly.var("x1", -1, 1)
    assert (symplectic_schur(Partition((1,)), 1) - x - xi).is_zero()
    assert (odd_orthogonal_schur(Partition((1,)), 1)
            - x - xi - 1).is_zero()
    y = LaurentPoly.var("x2")
    yi = LaurentPoly.var("x2", -1, 1)
    assert (even_orthogonal_schur(Partition((1,)), 2)
            - x - xi - y - yi).is_zero()


def test_schur_matches_bialternant():
    n = 2
    for la in partitions_in_box(3, n):
        lam = list(la.intparts()) + [0] * (n - len(la.intparts()))
        xs = [LaurentPoly.var(v) for v in xvars(n)]
        num = det_poly([[x ** (lam[j] + n - 1 - j) for j in range(n)]
                        for x in xs])
        den = det_poly([[x ** (n - 1 - j) for j in range(n)] for x in xs])
        assert (schur(la, n) - exact_divide(num, den)).is_zero()


def test_symplectic_schur_weyl_character():
    # sp_4 character of (1,1): dimension at x = 1 is 5
    p = symplectic_schur(Partition((1, 1)), 2)
    val = p.substitute("x1", F(1)).substitute("x2", F(1))
    assert val == 5
