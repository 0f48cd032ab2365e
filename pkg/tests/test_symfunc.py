from fractions import Fraction as F
from itertools import permutations

from qsymm.core import LaurentPoly
from qsymm.partitions import Partition, partitions_in_box, partitions_of
from qsymm.symfunc import (
    eval_p, hall_littlewood, laurent_to_mbasis, macdonald_in_mbasis,
    macdonald_p, macdonald_p_gram, mbasis_to_laurent, modified_hl_letters,
    monomial_sym, principal_spec, principal_spec_formula, psi_branch,
    psi_hl, psi_prime, psi_prime_cells,
)
from qsymm.weylsym import schur, xvars

Q, T = F(2, 7), F(1, 5)


def _permute(poly, n, perm):
    tmp = poly
    names = xvars(n)
    for i, v in enumerate(names):
        tmp = tmp.substitute(v, LaurentPoly.var("z%d" % perm[i]))
    for i in range(n):
        tmp = tmp.substitute("z%d" % (i + 1), LaurentPoly.var(names[i]))
    return tmp


def test_monomial_sym():
    m11 = monomial_sym(Partition((1, 1)), 3)
    assert len(m11.compact().terms) == 3
    m21 = monomial_sym(Partition((2, 1)), 2)
    x1, x2 = LaurentPoly.var("x1"), LaurentPoly.var("x2")
    assert (m21 - x1 * x1 * x2 - x2 * x2 * x1).is_zero()


def test_macdonald_known_row_case():
    # P_(2) = m_2 + (1+q)(1-t)/(1-qt) m_11
    coeffs = macdonald_in_mbasis(Partition((2,)), 2, Q, T)
    assert coeffs[Partition((2,))] == 1
    assert coeffs[Partition((1, 1))] == (1 + Q) * (1 - T) / (1 - Q * T)


def test_macdonald_symmetric():
    p = macdonald_p(Partition((2, 1)), 3, Q, T)
    for perm in permutations((1, 2, 3)):
        assert (_permute(p, 3, perm) - p).is_zero()


def test_macdonald_monic_triangular():
    for la in partitions_of(4):
        if len(la.intparts()) > 3:
            continue
        coeffs = macdonald_in_mbasis(la, 3, Q, T)
        assert coeffs[la] == 1
        for mu in coeffs:
            assert mu.parts2 <= la.parts2 or mu == la


def test_macdonald_schur_at_q_equals_t():
    for la in partitions_in_box(3, 2):
        p = macdonald_p(la, 2, T, T)
        assert (p - schur(la, 2)).is_zero()


def test_hall_littlewood_is_macdonald_at_q0():
    for la in partitions_in_box(3, 2):
        assert (hall_littlewood(la, 2, T)
                - macdonald_p(la, 2, F(0), T)).is_zero()


def test_macdonald_gram_oracle():
    for d in (1, 2, 3):
        for la in partitions_of(d):
            want = macdonald_p_gram(la, Q, T)
            got = macdonald_in_mbasis(la, d, Q, T)
            want = {mu: c for mu, c in want.items()
                    if len(mu.intparts()) <= d}
            assert got == want, la.intparts()


def test_mbasis_round_trip():
    p = macdonald_p(Partition((2, 2)), 3, Q, T)
    back = mbasis_to_laurent(laurent_to_mbasis(p), 3)
    assert (back - p).is_zero()


def test_eval_p_matches_substitution():
    la = Partition((2, 1))
    letters = [F(1, 2), F(1, 3), F(1, 7)]
    poly = macdonald_p(la, 3, Q, T)
    for v, c in zip(xvars(3), letters):
        poly = poly.substitute(v, c)
    val = eval_p(la, letters, lambda l, m: psi_branch(l, m, Q, T))
    assert poly == val


def test_psi_hl_is_psi_branch_at_q0():
    la, mu = Partition((2, 1)), Partition((1,))
    assert psi_branch(la, mu, F(0), T) == psi_hl(la, mu, T)


def test_principal_specialization_formula():
    for la in partitions_in_box(3, 2):
        for n in (2, 3):
            assert principal_spec(la, n, Q, T) == \
                principal_spec_formula(la, n, Q, T)


def test_psi_prime_formulas_agree():
    for mu in partitions_in_box(3, 3):
        for la in partitions_in_box(4, 4):
            v1 = psi_prime(la, mu, Q, T)
            v2 = psi_prime_cells(la, mu, Q, T)
            assert v1 == v2


def test_modified_hl_letters():
    letters = modified_hl_letters([F(1, 2)], T, 3)
    assert letters == [F(1, 2), F(1, 2) * T, F(1, 2) * T * T]
