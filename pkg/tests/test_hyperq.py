from fractions import Fraction as F

from qsymm.core import LaurentPoly, draw_param_point
from qsymm.partitions import Partition
from qsymm.koornwinder import k_bn, koornwinder_k, prs_macdonald
from qsymm.weylsym import hl_b, hl_c
from qsymm.hyperq import (
    RR_FAMILIES, awn_rhs, char_hl_limit_side, char_sum_side,
    dn_lattice_sum, duality_pair, eval_half, f_sigma_d_sum,
    f_sigma_det_sum, half_ksquare_rhs, hl_bc_at_monomials, id56a_finite_side,
    id56a_sum_side, kmaxrect_rhs, macdonald_identity_product,
    macdonald_identity_sum, mps_member1, mps_member2, mps_member3,
    phi_series, phinew2_pair, poly_to_series, prop43to21_pair,
    reverse_pair, rr_product_side, rr_sum_side, sears_pair,
    series_to_poly, truncate_var, wk_lattice_sum, wk_product_side,
)


def _points(names, count, seed=0):
    return [draw_param_point(names, seed + i) for i in range(count)]


def _poly(v):
    from qsymm.core import TruncatedSeries
    return series_to_poly(v) if isinstance(v, TruncatedSeries) else v


def test_phi_series_empty_box_is_one():
    assert phi_series([F(1, 7)], [F(1, 9)], 1, F(1, 3), F(1, 5),
                      F(1, 2), 0) == 1


def test_reverse_pair():
    for pt in _points(["q", "t", "a1", "a2", "b1", "b2", "z"], 2):
        lhs, rhs = reverse_pair([pt["a1"], pt["a2"]],
                                [pt["b1"], pt["b2"]], 2, 2,
                                pt["q"], pt["t"], pt["z"])
        assert lhs == rhs


def test_duality_pair():
    for pt in _points(["q", "t", "a1", "a2", "b1", "b2", "z"], 2):
        lhs, rhs = duality_pair([pt["a1"], pt["a2"]],
                                [pt["b1"], pt["b2"]], 2, 2,
                                pt["q"], pt["t"], pt["z"])
        assert lhs == rhs


def test_sears_pair():
    for pt in _points(["q", "t", "a", "b", "c", "d", "e"], 2):
        lhs, rhs = sears_pair(pt["a"], pt["b"], pt["c"], pt["d"],
                              pt["e"], 2, 2, pt["q"], pt["t"])
        assert lhs == rhs


def test_prop43to21_pair():
    for pt in _points(["qh", "t", "a"], 2):
        lhs, rhs = prop43to21_pair(pt["a"], 2, 2, pt["qh"], pt["t"])
        assert lhs == rhs


def test_phinew2_pair():
    for pt in _points(["q", "t", "a"], 2):
        lhs, rhs = phinew2_pair(pt["a"], 2, 2, pt["q"], pt["t"])
        assert lhs == rhs


def test_awn_vs_kmaxrect():
    for pt in _points(["q", "t", "t0", "t1", "t2", "t3", "z"], 2):
        tr = (pt["t0"], pt["t1"], pt["t2"], pt["t3"])
        assert awn_rhs(pt["z"], 2, 2, pt["q"], pt["t"], tr) == \
            kmaxrect_rhs(pt["z"], 2, 2, pt["q"], pt["t"], tr)


def test_ksquare_against_principal_koornwinder():
    # the closed form is the principal specialization of the rectangular
    # Koornwinder polynomial
    pt = draw_param_point(["q", "t", "t0", "t1", "t2", "t3", "z"], 1)
    tr = (pt["t0"], pt["t1"], pt["t2"], pt["t3"])
    m, n = 2, 2
    params = {"q": pt["q"], "t": pt["t"], "t0": pt["t0"], "t1": pt["t1"],
              "t2": pt["t2"], "t3": pt["t3"]}
    k = koornwinder_k(Partition((m,) * n), n, params)
    for i in range(n):
        k = k.substitute("x%d" % (i + 1), pt["z"] * pt["t"] ** i)
    val = sum(k.terms.values(), F(0))
    assert val == awn_rhs(pt["z"], m, n, pt["q"], pt["t"], tr)


def test_half_ksquare_against_kbn():
    pt = draw_param_point(["qh", "th", "t2", "t3", "zh"], 2)
    m, n = 2, 1
    k = k_bn(Partition.from_doubled((m,) * n), n, pt["qh"],
             pt["th"] * pt["th"], pt["t2"], pt["t3"])
    val = eval_half(k, {"x1": pt["zh"]})
    assert val == half_ksquare_rhs(pt["zh"], m, n, pt["qh"], pt["th"],
                                   pt["t2"], pt["t3"])


def test_rr_families_small():
    for family in RR_FAMILIES:
        s = _poly(rr_sum_side(family, 1, 1, 8))
        p = _poly(rr_product_side(family, 1, 1, 8))
        assert (s - p).is_zero(), family


def test_rr_letters_certificate():
    s = _poly(rr_sum_side("RR1", 1, 1, 8))
    more = _poly(rr_sum_side("RR1", 1, 1, 8, nletters=12))
    assert (s - more).is_zero()


def test_character_sides_agree_to_stabilization():
    for kind in ("B", "C"):
        s = _poly(char_sum_side(kind, 1, 1, 3))
        f = _poly(char_hl_limit_side(kind, 1, 1, 3, 3))
        assert truncate_var(s - f, "t", 3).is_zero(), kind


def test_hl_bc_at_monomials_matches_symbolic():
    # evaluating at the geometric letters t, t^2 agrees with the
    # symbolic polynomial substituted at the same point
    s = F(3, 11)
    la = Partition((2, 1))
    n, order = 2, 10
    tvar = LaurentPoly.var("t")
    p = hl_c(la, n, tvar, s)
    for i in range(n):
        p = p.substitute("x%d" % (i + 1), tvar ** (i + 1))
    letters = [LaurentPoly.monomial(1, t=F(i + 1)) for i in range(n)]
    got = hl_bc_at_monomials(la, letters, tvar, s, -s, order + 4)
    assert truncate_var(p - got, "t", order).is_zero()


def test_mps_three_members_agree():
    for pt in _points(["v", "t2", "t3", "x1"], 2):
        args = ([pt["x1"]], 1, 2, pt["v"], pt["t2"], pt["t3"])
        a, b, c = mps_member1(*args), mps_member2(*args), mps_member3(*args)
        assert a == b == c


def test_id56a_sum_vs_finite():
    t2, t3 = F(2, 7), F(3, 11)
    s = id56a_sum_side(1, 1, t2, t3, 3)
    f3 = id56a_finite_side(1, 1, 3, t2, t3, 3)
    f4 = id56a_finite_side(1, 1, 4, t2, t3, 3)
    assert (truncate_var(s - f3, "t", 3)).is_zero()
    assert (truncate_var(f3 - f4, "t", 3)).is_zero()


def test_dn_lattice_parity_split():
    full = dn_lattice_sum(3, 2, 3, 4)
    even = dn_lattice_sum(3, 2, 3, 4, parity=0)
    odd = dn_lattice_sum(3, 2, 3, 4, parity=1)
    assert (full - even - odd).is_zero()


def test_wk_level_zero_quotients():
    for kind in ("B", "C"):
        s = wk_lattice_sum(kind, 1, 4, 6)
        p = wk_product_side(kind, 1, 6)
        assert (s - p).is_zero(), kind


def test_macdonald_identities():
    for which in ("B", "A"):
        s = macdonald_identity_sum(which, 1, 3, 6)
        more = macdonald_identity_sum(which, 1, 4, 6)
        p = macdonald_identity_product(which, 1, 6)
        assert (s - more).is_zero(), which
        assert (s - p).is_zero(), which


def test_f_sigma_det_vs_lattice():
    for kappa in (3, 6):
        for sigma in (0, 1):
            a = f_sigma_det_sum(kappa, 1, sigma, 3, 4)
            b = f_sigma_d_sum(kappa, 1, sigma, 3, 4)
            assert (a - b).is_zero(), (kappa, sigma)


def test_series_poly_round_trip():
    p = _poly(rr_sum_side("RR1", 1, 1, 6))
    back = series_to_poly(poly_to_series(p, "q", 6))
    assert (back - p).is_zero()


def test_truncate_var():
    q = LaurentPoly.var("q")
    p = 1 + q + q ** 5
    assert (truncate_var(p, "q", 3) - 1 - q).is_zero()
