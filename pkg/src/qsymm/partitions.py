"""Partitions and half-partitions.

A partition is a weakly decreasing tuple of positive integers.  A
half-partition has all parts in 1/2 + Z; we store doubled parts so that
everything stays integral.  Both are wrapped in the same class with a
``half`` flag: ``parts2`` always holds the doubled parts.
"""

from fractions import Fraction
from itertools import islice

__all__ = [
    "Partition",
    "conjugate",
    "dominates",
    "dominance_leq",
    "arm", "leg", "arm_colength", "leg_colength",
    "n_stat", "mult", "odd_parts", "even_parts",
    "complement", "is_even", "conj_is_even", "even_multiplicities",
    "horizontal_strip", "vertical_strip",
    "partitions_in_box", "enumerate_in_box", "partitions_of",
]


class Partition:
    """Integer or half-integer partition, stored with doubled parts."""

    __slots__ = ("parts2", "half")

    def __init__(self, parts, half=False):
        if half:
            parts2 = tuple(int(2 * Fraction(p)) for p in parts)
            if any(p % 2 == 0 or p <= 0 for p in parts2):
                raise ValueError("half-partition parts must be in 1/2 + Z")
        else:
            parts2 = tuple(2 * int(p) for p in parts if p)
            if any(p < 0 for p in parts2):
                raise ValueError("parts must be nonnegative")
        if any(parts2[i] < parts2[i + 1] for i in range(len(parts2) - 1)):
            raise ValueError("parts must be weakly decreasing: %r" % (parts,))
        self.parts2 = parts2
        self.half = half

    @staticmethod
    def from_doubled(parts2):
        parts2 = tuple(p for p in parts2 if p)
        if not parts2:
            return Partition(())
        if all(p % 2 == 0 for p in parts2):
            return Partition(tuple(p // 2 for p in parts2))
        if all(p % 2 == 1 for p in parts2):
            return Partition(tuple(Fraction(p, 2) for p in parts2), half=True)
        raise ValueError("mixed integer and half-integer parts: %r"
                         % (parts2,))

    @property
    def parts(self):
        if self.half:
            return tuple(Fraction(p, 2) for p in self.parts2)
        return tuple(p // 2 for p in self.parts2)

    def intparts(self):
        if self.half:
            raise ValueError("half-partition where an integer one is needed")
        return tuple(p // 2 for p in self.parts2)

    def __len__(self):
        return len(self.parts2)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        """1-based part access with zero padding (integer partitions)."""
        ps = self.parts
        return ps[i - 1] if 1 <= i <= len(ps) else (Fraction(0) if self.half
                                                    else 0)

    def __eq__(self, other):
        return (isinstance(other, Partition)
                and self.parts2 == other.parts2 and self.half == other.half)

    def __hash__(self):
        return hash((self.parts2, self.half))

    def __lt__(self, other):
        return (self.size(), self.parts2) < (other.size(), other.parts2)

    def __repr__(self):
        return "Partition(%r%s)" % (list(self.parts),
                                    ", half=True" if self.half else "")

    def size(self):
        return Fraction(sum(self.parts2), 2)

    def length(self):
        return len(self.parts2)

    def is_half(self):
        return self.half

    def minus_half_row(self):
        """Subtract 1/2 from every part (length stays the same)."""
        n = len(self.parts2)
        return Partition.from_doubled(tuple(p - 1 for p in self.parts2)) \
            if n else Partition(())

    def plus(self, other_parts):
        ps = self.intparts()
        n = max(len(ps), len(other_parts))
        ps = ps + (0,) * (n - len(ps))
        qs = tuple(other_parts) + (0,) * (n - len(other_parts))
        return Partition(tuple(a + b for a, b in zip(ps, qs)))


def _ipt(la):
    if isinstance(la, Partition):
        return la.intparts()
    return tuple(int(p) for p in la if p)


def conjugate(la):
    ps = _ipt(la)
    if not ps:
        return Partition(())
    out = []
    for i in range(1, ps[0] + 1):
        out.append(sum(1 for p in ps if p >= i))
    return Partition(tuple(out))


def dominance_leq(mu, la):
    """mu <= la in dominance, without requiring equal sizes: every prefix
    sum of mu is at most the corresponding prefix sum of la."""
    ms, ls = _ipt(mu), _ipt(la)
    sm = sl = 0
    for i in range(max(len(ms), len(ls))):
        sm += ms[i] if i < len(ms) else 0
        sl += ls[i] if i < len(ls) else 0
        if sm > sl:
            return False
    return True


def dominates(la, mu):
    """Dominance order on partitions of equal size."""
    return sum(_ipt(la)) == sum(_ipt(mu)) and dominance_leq(mu, la)


def cells(la):
    for i, p in enumerate(_ipt(la), start=1):
        for j in range(1, p + 1):
            yield (i, j)


def arm(la, i, j):
    return _ipt(la)[i - 1] - j


def leg(la, i, j):
    return len([1 for p in _ipt(la) if p >= j]) - i


def arm_colength(la, i, j):
    return j - 1


def leg_colength(la, i, j):
    return i - 1


def n_stat(la):
    """n(la) = sum (i-1) la_i."""
    return sum((i - 1) * p for i, p in enumerate(_ipt(la), start=1))


def mult(la, i):
    """Multiplicity of the part i in la."""
    return sum(1 for p in _ipt(la) if p == i)


def odd_parts(la):
    return sum(1 for p in _ipt(la) if p % 2 == 1)


def even_parts(la):
    return sum(1 for p in _ipt(la) if p % 2 == 0)


def is_even(la):
    return all(p % 2 == 0 for p in _ipt(la))


def conj_is_even(la):
    ps = _ipt(la)
    return all(mult(ps, i) % 2 == 0 for i in set(ps))


def even_multiplicities(la, lo, hi):
    """m_i(la) even for all lo <= i <= hi."""
    ps = _ipt(la)
    return all(mult(ps, i) % 2 == 0 for i in range(lo, hi + 1))


def complement(la, m, n):
    """m^n - la for la inside the m x n box, largest part first.

    m may be a half-integer when la is empty or half; the result follows
    the doubled-parts convention.
    """
    m2 = int(2 * Fraction(m))
    if isinstance(la, Partition):
        p2 = la.parts2
    else:
        p2 = tuple(2 * int(p) for p in la if p)
    if len(p2) > n or (p2 and p2[0] > m2):
        raise ValueError("partition does not fit in the box")
    p2 = p2 + (0,) * (n - len(p2))
    return Partition.from_doubled(tuple(m2 - p for p in reversed(p2)))


def horizontal_strip(la, mu):
    """la/mu is a horizontal strip (mu inside la, at most one box per
    column): la_1 >= mu_1 >= la_2 >= mu_2 >= ..."""
    ls, ms = _ipt(la), _ipt(mu)
    if len(ms) > len(ls):
        return False
    for i in range(len(ls)):
        m = ms[i] if i < len(ms) else 0
        if not (ls[i] >= m):
            return False
        if i + 1 < len(ls) and not (m >= ls[i + 1]):
            return False
    return True


def vertical_strip(la, mu):
    return horizontal_strip(conjugate(la), conjugate(mu))


def partitions_in_box(maxpart, maxlen):
    """All integer partitions with la_1 <= maxpart and length <= maxlen."""
    out = [()]
    stack = [((), maxpart)]
    while stack:
        prefix, cap = stack.pop()
        if len(prefix) == maxlen:
            continue
        for p in range(1, cap + 1):
            nxt = prefix + (p,)
            out.append(nxt)
            stack.append((nxt, p))
    return [Partition(p) for p in sorted(out, key=lambda p: (sum(p), p))]


def enumerate_in_box(maxpart, maxlen, filter_kind="all"):
    """Partitions in a box with one of the standard filters."""
    preds = {
        "all": lambda la: True,
        "even": is_even,
        "conjEven": conj_is_even,
        "evenMults": lambda la: even_multiplicities(la, 1, maxpart - 1),
    }
    if filter_kind not in preds:
        raise ValueError("unknown filter %r" % (filter_kind,))
    pred = preds[filter_kind]
    return [la for la in partitions_in_box(maxpart, maxlen)
            if pred(la.intparts())]


def partitions_of(size, maxpart=None):
    """All partitions of a given size, optionally with bounded parts."""
    maxpart = size if maxpart is None else maxpart

    def rec(rem, cap):
        if rem == 0:
            yield ()
            return
        for p in range(min(rem, cap), 0, -1):
            for rest in rec(rem - p, p):
                yield (p,) + rest

    return [Partition(p) for p in rec(size, maxpart)]
