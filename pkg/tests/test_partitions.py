from fractions import Fraction as F

import pytest

from qsymm.partitions import (
    Partition, arm, arm_colength, cells, complement, conj_is_even,
    conjugate, dominance_leq, enumerate_in_box, even_multiplicities,
    is_even, leg, leg_colength, mult, n_stat, odd_parts,
    partitions_in_box, partitions_of, vertical_strip,
)


def test_construction_and_size():
    la = Partition((3, 2, 2))
    assert la.intparts() == (3, 2, 2)
    assert la.size() == 7
    assert not la.half
    half = Partition.from_doubled((5, 3, 1))
    assert half.half
    assert half.size() == F(9, 2)


def test_from_doubled_rejects_mixed_parity():
    with pytest.raises(ValueError):
        Partition.from_doubled((4, 3))


def test_conjugate_involution():
    for la in partitions_in_box(4, 4):
        assert conjugate(conjugate(la)) == la
        assert conjugate(la).size() == la.size()
    assert conjugate(Partition((3, 1))).intparts() == (2, 1, 1)


def test_arm_leg():
    la = Partition((4, 3, 1))
    assert arm(la, 1, 1) == 3 and leg(la, 1, 1) == 2
    assert arm_colength(la, 2, 3) == 2 and leg_colength(la, 2, 3) == 1
    assert len(list(cells(la))) == la.size()


def test_n_stat():
    la = Partition((3, 2, 1))
    assert n_stat(la) == sum(i * p for i, p in enumerate(la.intparts()))


def test_parity_helpers():
    assert is_even(Partition((4, 2, 2)))
    assert not is_even(Partition((3, 2)))
    assert conj_is_even(Partition((2, 2, 1, 1)))
    assert odd_parts(Partition((3, 2, 1))) == 2
    assert mult(Partition((3, 2, 2, 1)), 2) == 2
    assert even_multiplicities(Partition((2, 1, 1)), 1, 1)
    assert not even_multiplicities(Partition((2, 1)), 1, 1)


def test_dominance():
    assert dominance_leq(Partition((2, 2)), Partition((3, 1)))
    assert not dominance_leq(Partition((3, 1)), Partition((2, 2)))


def test_partitions_in_box_counts():
    # the box (maxpart, maxlen) holds binomial(maxpart+maxlen, maxlen)
    # partitions
    from math import comb
    for maxpart, maxlen in [(2, 2), (3, 2), (3, 3)]:
        got = partitions_in_box(maxpart, maxlen)
        assert len(got) == comb(maxpart + maxlen, maxlen)
        assert len(set(got)) == len(got)
        for la in got:
            assert len(la.intparts()) <= maxlen
            assert all(p <= maxpart for p in la.intparts())


def test_enumerate_in_box_filters():
    allp = set(enumerate_in_box(4, 3, "all"))
    assert allp == set(partitions_in_box(4, 3))
    for la in enumerate_in_box(4, 3, "even"):
        assert is_even(la)
    for la in enumerate_in_box(4, 3, "conjEven"):
        assert conj_is_even(la)
    for la in enumerate_in_box(4, 3, "evenMults"):
        assert even_multiplicities(la, 1, 3)


def test_partitions_of():
    assert len(list(partitions_of(5))) == 7
    for la in partitions_of(6, maxpart=3):
        assert la.size() == 6 and la.intparts()[0] <= 3


def test_complement():
    la = Partition((2, 1))
    assert complement(la, 3, 3).intparts() == (3, 2, 1)
    with pytest.raises(ValueError):
        complement(Partition((4,)), 3, 3)


def test_vertical_strip():
    assert vertical_strip(Partition((2, 2, 1)), Partition((2, 1)))
    assert not vertical_strip(Partition((3, 1)), Partition((1, 1)))
