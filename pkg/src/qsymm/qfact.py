"""q-factorials, theta functions, Rogers-Szego polynomials and the
arm/leg coefficient families attached to partitions.

Scalar arguments may be Fractions or RatF (one symbolic parameter);
everything is exact.
"""

from fractions import Fraction

from .core import DegenerateError, LaurentPoly, RatF, TruncatedSeries, GRID
from .partitions import (Partition, cells, arm, leg, arm_colength,
                         leg_colength, conjugate, mult, odd_parts, n_stat)

__all__ = [
    "poch", "poch2", "poch_partition", "c_minus", "spow",
    "gauss_binomial", "rogers_szego", "h_gen", "h_b", "a_coeff",
    "b_family",
    "series_poch_inf", "series_theta", "series_poch_fin",
]


def spow(x, k):
    """x**k for scalars, allowing negative k."""
    k = int(k)
    if k >= 0:
        if isinstance(x, (RatF, LaurentPoly)):
            return x ** k
        return Fraction(x) ** k
    if isinstance(x, (RatF, LaurentPoly)):
        return x ** k
    x = Fraction(x)
    if x == 0:
        raise ZeroDivisionError("0 to a negative power")
    return x ** k


def poch(z, q, k):
    """(z; q)_k = prod_{i=0}^{k-1} (1 - z q^i), k a nonnegative integer."""
    k = int(k)
    if k < 0:
        raise ValueError("negative Pochhammer length")
    out = Fraction(1)
    for i in range(k):
        out = out * (1 - z * spow(q, i))
    return out


def poch2(z, q1, q2, la):
    """(z; q1, q2)_la = prod_i (z q2^{1-i}; q1)_{la_i}."""
    out = Fraction(1)
    for i, p in enumerate(_parts(la), start=1):
        out = out * poch(z * spow(q2, 1 - i), q1, p)
    return out


def _parts(la):
    if isinstance(la, Partition):
        return la.intparts()
    return tuple(int(p) for p in la if p)


def poch_partition(z, q, t, la):
    """(z; q, t)_la, the row form prod_i (z t^{1-i}; q)_{la_i}."""
    return poch2(z, q, t, la)


def c_minus(z, q, t, la):
    """C^-_la(z; q, t) = prod over cells (1 - z q^{arm} t^{leg})."""
    out = Fraction(1)
    for (i, j) in cells(_parts(la)):
        out = out * (1 - z * spow(q, arm(la, i, j)) * spow(t, leg(la, i, j)))
    return out


def gauss_binomial(m, k, q):
    """Gaussian binomial coefficient [m, k]_q as an exact scalar."""
    if k < 0 or k > m:
        return Fraction(0)
    if isinstance(q, LaurentPoly):
        # division-free Pascal recurrence for polynomial q
        row = [Fraction(1)]
        for i in range(1, m + 1):
            new = [Fraction(1)]
            for j in range(1, i):
                new.append(row[j - 1] + spow(q, j) * row[j])
            new.append(Fraction(1))
            row = new
        return row[k]
    num = Fraction(1)
    den = Fraction(1)
    for i in range(1, k + 1):
        num = num * (1 - spow(q, m - k + i))
        den = den * (1 - spow(q, i))
    if not den:
        raise DegenerateError("Gaussian binomial denominator vanished")
    return num / den


def rogers_szego(m, z, q):
    """H_m(z; q) = sum_k z^k [m, k]_q via the three-term recurrence."""
    if m < 0:
        return Fraction(0)
    hm1, h = Fraction(0), Fraction(1)
    for i in range(m):
        hm1, h = h, (1 + z) * h - (1 - spow(q, i)) * z * hm1
    return h


def _hom_rogers_szego(m, a, b, q):
    """sum_k a^{m-k} b^k [m, k]_q, the homogeneous Rogers-Szego form."""
    out = Fraction(0)
    for k in range(m + 1):
        out = out + spow(a, m - k) * spow(b, k) * gauss_binomial(m, k, q)
    return out


def h_gen(la, m, a, b, q):
    """h^{(m)}_la(a, b; q), the two-parameter Rogers-Szego coefficient.

    Defined for la_1 <= m; multiplicities at the wall (i = m) carry no
    factor.  Symmetric in a and b.
    """
    ps = _parts(la)
    if ps and ps[0] > m:
        raise ValueError("h_gen needs la_1 <= m")
    out = Fraction(1)
    for i in range(1, m):
        mi = mult(ps, i)
        if i % 2 == 1:
            out = out * spow(-1, mi) * _hom_rogers_szego(mi, a, b, q)
        else:
            out = out * rogers_szego(mi, a * b, q)
    return out


def h_b(la, m, a, t):
    """h^{(m)}_la(a; t) = prod_{i<m} H_{m_i}(-a; t) = h^{(m)}_la(a,-1;t)."""
    ps = _parts(la)
    if ps and ps[0] > m:
        raise ValueError("h_b needs la_1 <= m")
    out = Fraction(1)
    for i in range(1, m):
        out = out * rogers_szego(mult(ps, i), -a, t)
    return out


def a_coeff(la, n, q, t):
    """A^{(n)}_la(q, t) as a product over pairs 1 <= i < j <= n.

    la may be an integer or half-partition of length <= n; padded parts
    must all have the same parity so part differences are integers.
    """
    if isinstance(la, Partition):
        p2 = la.parts2
    else:
        p2 = tuple(int(2 * Fraction(p)) for p in la)
    if len(p2) > n:
        raise ValueError("partition longer than n")
    p2 = tuple(p2) + (0,) * (n - len(p2))
    if len(set(x % 2 for x in p2)) > 1:
        raise ValueError("mixed parities: part differences not integral")
    q2 = q * q
    out = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d = (p2[i - 1] - p2[j - 1]) // 2
            num = poch(q * spow(t, j - i - 1), q2, d) \
                * poch(spow(t, j - i + 1), q2, d)
            den = poch(q * spow(t, j - i), q2, d) \
                * poch(spow(t, j - i), q2, d)
            if not den:
                raise DegenerateError("A-coefficient denominator vanished")
            out = out * num / den
    return out


# ---------------------------------------------------------------------------
# arm/leg coefficient families
# ---------------------------------------------------------------------------

def _cell_ratio(la, q, t, num_fn, den_fn, pred):
    """prod over cells s with pred(s): num_fn(s)/den_fn(s), with a
    degeneracy check on the denominator."""
    num = Fraction(1)
    den = Fraction(1)
    for s in cells(_parts(la)):
        if pred(s):
            num = num * num_fn(s)
            den = den * den_fn(s)
    if not den:
        raise DegenerateError("coefficient denominator vanished at this "
                              "parameter point")
    return num / den


def b_family(la, q, t, kind, m=None):
    """The coefficient families built from arms and legs.

    kind is one of:
      'b'        prod (1 - q^a t^{l+1}) / (1 - q^{a+1} t^l)
      'oa'       same product restricted to cells with odd arm
      'ea'       restricted to cells with even arm
      'el'       restricted to cells with even leg
      'minus'    prod (1 + q^a t^{l+1}) / (1 - q^{a+1} t^l)
      'hook'     prod (1 - q^{a+1} t^l)
      'oa_m'     bounded version of 'oa' at level m
      'ol_m'     bounded odd-leg family at level m
      'el_m'     bounded version of 'el' at level m
      'minus_m'  bounded version of 'minus' at level m
    """
    ps = _parts(la)
    A = lambda s: arm(ps, *s)
    L = lambda s: leg(ps, *s)
    Ap = lambda s: arm_colength(ps, *s)
    Lp = lambda s: leg_colength(ps, *s)

    if kind == "b":
        return _cell_ratio(ps, q, t,
                           lambda s: 1 - spow(q, A(s)) * spow(t, L(s) + 1),
                           lambda s: 1 - spow(q, A(s) + 1) * spow(t, L(s)),
                           lambda s: True)
    if kind == "oa":
        return _cell_ratio(ps, q, t,
                           lambda s: 1 - spow(q, A(s)) * spow(t, L(s) + 1),
                           lambda s: 1 - spow(q, A(s) + 1) * spow(t, L(s)),
                           lambda s: A(s) % 2 == 1)
    if kind == "ea":
        return _cell_ratio(ps, q, t,
                           lambda s: 1 - spow(q, A(s)) * spow(t, L(s) + 1),
                           lambda s: 1 - spow(q, A(s) + 1) * spow(t, L(s)),
                           lambda s: A(s) % 2 == 0)
    if kind == "el":
        return _cell_ratio(ps, q, t,
                           lambda s: 1 - spow(q, A(s)) * spow(t, L(s) + 1),
                           lambda s: 1 - spow(q, A(s) + 1) * spow(t, L(s)),
                           lambda s: L(s) % 2 == 0)
    if kind == "minus":
        return _cell_ratio(ps, q, t,
                           lambda s: 1 + spow(q, A(s)) * spow(t, L(s) + 1),
                           lambda s: 1 - spow(q, A(s) + 1) * spow(t, L(s)),
                           lambda s: True)
    if kind == "hook":
        out = Fraction(1)
        for s in cells(ps):
            out = out * (1 - spow(q, A(s) + 1) * spow(t, L(s)))
        return out

    if m is None:
        raise ValueError("bounded family %r needs a level m" % (kind,))

    if kind == "oa_m":
        if ps and ps[0] > 2 * m + 1:
            return Fraction(0)
        base = b_family(ps, q, t, "oa")
        extra = _cell_ratio(
            ps, q, t,
            lambda s: 1 - spow(q, 2 * m - Ap(s) + 1) * spow(t, Lp(s)),
            lambda s: 1 - spow(q, 2 * m - Ap(s)) * spow(t, Lp(s) + 1),
            lambda s: Ap(s) % 2 == 1)
        return base * extra
    if kind == "ol_m":
        if len(ps) > 1 and ps[1] > m:
            return Fraction(0)
        first = _cell_ratio(
            ps, q, t,
            lambda s: 1 - spow(q, m - Ap(s)) * spow(t, Lp(s) - 1),
            lambda s: 1 - spow(q, m - Ap(s) - 1) * spow(t, Lp(s)),
            lambda s: Lp(s) % 2 == 1)
        second = _cell_ratio(
            ps, q, t,
            lambda s: 1 - spow(q, A(s)) * spow(t, L(s)),
            lambda s: 1 - spow(q, A(s) + 1) * spow(t, L(s) - 1),
            lambda s: L(s) % 2 == 1)
        return first * second
    if kind == "el_m":
        if ps and ps[0] > m:
            return Fraction(0)
        base = b_family(ps, q, t, "el")
        extra = _cell_ratio(
            ps, q, t,
            lambda s: 1 - spow(q, m - Ap(s)) * spow(t, Lp(s)),
            lambda s: 1 - spow(q, m - Ap(s) - 1) * spow(t, Lp(s) + 1),
            lambda s: Lp(s) % 2 == 0)
        return base * extra
    if kind == "minus_m":
        if ps and ps[0] > m:
            return Fraction(0)
        base = b_family(ps, q, t, "minus")
        extra = _cell_ratio(
            ps, q, t,
            lambda s: 1 - spow(q, m - Ap(s)) * spow(t, Lp(s)),
            lambda s: 1 + spow(q, m - Ap(s) - 1) * spow(t, Lp(s) + 1),
            lambda s: True)
        return base * extra
    raise ValueError("unknown coefficient family %r" % (kind,))


# ---------------------------------------------------------------------------
# series-level infinite products
# ---------------------------------------------------------------------------

def series_poch_fin(var, coeff, exp, step, count, order):
    """prod_{k=0}^{count-1} (1 - coeff * var^{exp + k*step}) as a series."""
    out = TruncatedSeries.const(var, 1, int(Fraction(order) * GRID))
    for k in range(count):
        e = Fraction(exp) + k * Fraction(step)
        f = TruncatedSeries.const(var, 1, out.order) - \
            TruncatedSeries.term(var, coeff, e, out.order)
        out = out * f
    return out


def series_poch_inf(var, coeff, exp, step, order):
    """(coeff * var^exp; var^step)_inf truncated at the given order.

    step must be positive; exp must be nonnegative (the exp = 0 factor is
    the constant 1 - coeff).
    """
    step = Fraction(step)
    exp = Fraction(exp)
    if step <= 0:
        raise ValueError("modulus exponent must be positive")
    if exp < 0:
        raise ValueError("negative leading exponent in infinite product")
    ordg = int(Fraction(order) * GRID)
    out = TruncatedSeries.const(var, 1, ordg)
    e = exp
    while int(e * GRID) < ordg or e == exp:
        f = TruncatedSeries.const(var, 1, ordg) - \
            TruncatedSeries.term(var, coeff, e, ordg)
        out = out * f
        e = e + step
        if e > exp and int(e * GRID) >= ordg:
            break
    return out


def series_theta(var, coeff, exp, modulus, order):
    """theta(coeff * var^exp; var^modulus)
       = (z; p)_inf (p/z; p)_inf with z = coeff var^exp, p = var^modulus.

    Needs 0 <= exp < modulus so both tails have nonnegative exponents.
    """
    exp = Fraction(exp)
    modulus = Fraction(modulus)
    if not (0 <= exp < modulus):
        raise ValueError("theta exponent %s outside [0, %s)" % (exp, modulus))
    if isinstance(coeff, (int, Fraction)) and coeff == 0:
        raise ZeroDivisionError("theta at z = 0")
    if isinstance(coeff, (int, Fraction)):
        cinv = Fraction(1) / Fraction(coeff)
    else:
        cinv = coeff ** (-1)
    a = series_poch_inf(var, coeff, exp, modulus, order)
    b = series_poch_inf(var, cinv, modulus - exp, modulus, order)
    return a * b
