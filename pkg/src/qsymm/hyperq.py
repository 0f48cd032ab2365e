"""Hypergeometric series with Macdonald polynomial structure, their
transformation formulas, and the q-series engines behind the character
and Rogers-Ramanujan identities.

Everything here is exact: terminating hypergeometric sums are finite
sums of rationals, and all infinite products, theta functions and
lattice sums are truncated Laurent polynomials in the grading variable
with an explicit truncation order (plus, where relevant, an explicit
certificate that enlarging the summation range does not change any
retained coefficient).
"""

from fractions import Fraction

from .core import LaurentPoly, TruncatedSeries, GRID
from .partitions import (Partition, partitions_in_box, partitions_of,
                         n_stat, mult, odd_parts, is_even)
from .qfact import (spow, poch, poch_partition, c_minus, h_gen,
                    series_poch_inf, series_theta)
from .symfunc import eval_p, psi_hl, modified_hl_letters
from .weylsym import det_poly

__all__ = [
    "phi_series", "reverse_pair", "duality_pair", "sears_pair",
    "prop43to21_pair", "phinew2_pair",
    "awn_rhs", "kmaxrect_rhs", "half_ksquare_rhs", "eval_half",
    "hl_geometric", "rr_sum_side", "rr_product_side", "RR_FAMILIES",
    "truncate_var", "poly_to_series",
    "char_sum_side", "char_hl_limit_side", "hl_bc_at_monomials",
    "mps_member1", "mps_member2", "mps_member3",
    "id56a_sum_side", "id56a_finite_side",
    "dn_lattice_sum", "wk_lattice_sum", "wk_product_side",
    "macdonald_identity_sum", "macdonald_identity_product",
    "f_sigma_det_sum", "f_sigma_d_sum", "series_to_poly",
]


# ---------------------------------------------------------------------------
# truncation helpers
# ---------------------------------------------------------------------------

def truncate_var(poly, var, order):
    """Drop all terms whose exponent in ``var`` is >= order."""
    if var not in poly.vars:
        return poly
    i = poly.vars.index(var)
    cut = Fraction(order) * GRID
    keep = {e: c for e, c in poly.terms.items() if e[i] < cut}
    return LaurentPoly(poly.vars, keep)


def poly_to_series(poly, var, order):
    """View a Laurent polynomial in the single variable ``var`` as a
    truncated series."""
    ordg = int(Fraction(order) * GRID)
    if poly.is_zero():
        return TruncatedSeries(var, ordg, {})
    if poly.vars not in ((var,), ()):
        raise ValueError("polynomial is not univariate in %s" % var)
    if poly.vars == ():
        return TruncatedSeries.const(var, poly.terms.get((), 0), ordg)
    return TruncatedSeries(var, ordg,
                           {e[0]: c for e, c in poly.terms.items()})


# ---------------------------------------------------------------------------
# terminating hypergeometric series with principally specialized
# Macdonald polynomial argument
# ---------------------------------------------------------------------------

def phi_series(uppers, lowers, n, q, t, z, maxpart):
    """Principally specialized (r+1)phi(r)-type sum, terminating with
    support inside the maxpart x n box."""
    total = Fraction(0)
    for la in partitions_in_box(maxpart, n):
        num = poch_partition(spow(t, n), q, t, la)
        for a in uppers:
            num = num * poch_partition(a, q, t, la)
        den = c_minus(q, q, t, la) * c_minus(t, q, t, la)
        for b in lowers:
            den = den * poch_partition(b, q, t, la)
        total = total + num * spow(z, la.size()) \
            * spow(t, 2 * n_stat(la)) / den
    return total


def _rect(c, q, t, m, n):
    """(c; q, t) over the m^n rectangle."""
    return poch_partition(c, q, t, Partition((m,) * n))


def reverse_pair(avals, bvals, m, n, q, t, z):
    """Summand reversal: both sides of the complement transformation."""
    lhs = phi_series(list(avals) + [spow(q, -m)], bvals, n, q, t, z, m)
    pref = spow(-z / q, m * n) * spow(q, -n * (m * (m - 1) // 2)) \
        * spow(t, m * (n * (n - 1) // 2))
    for a in avals:
        pref = pref * _rect(a, q, t, m, n)
    for b in bvals:
        pref = pref / _rect(b, q, t, m, n)
    c = spow(q, 1 - m) * spow(t, n - 1)
    zz = spow(q, m + 1) / (z * spow(t, n - 1))
    for a in avals:
        zz = zz / a
    for b in bvals:
        zz = zz * b
    rhs = pref * phi_series([c / b for b in bvals] + [spow(q, -m)],
                            [c / a for a in avals], n, q, t, zz, m)
    return lhs, rhs


def duality_pair(avals, bvals, m, n, q, t, z):
    """Conjugation duality: (q,t,n,m) -> (t,q,m,n)."""
    lhs = phi_series(list(avals) + [spow(q, -m)], bvals, n, q, t, z, m)
    zz = z * spow(t, n) / spow(q, m)
    for a in avals:
        zz = zz * a
    for b in bvals:
        zz = zz / b
    rhs = phi_series([1 / a for a in avals] + [spow(t, -n)],
                     [1 / b for b in bvals], m, t, q, zz, n)
    return lhs, rhs


def sears_pair(a, b, c, d, e, m, n, q, t):
    """Both sides of the multiple Sears transformation (balanced 4phi3)."""
    f = spow(q, 1 - m) * spow(t, n - 1) * a * b * c / (d * e)
    lhs = phi_series([a, b, c, spow(q, -m)], [d, e, f], n, q, t, q, m)
    pref = _rect(e / a, q, t, m, n) * _rect(d * e / (b * c), q, t, m, n) \
        / (_rect(e, q, t, m, n) * _rect(d * e / (a * b * c), q, t, m, n))
    rhs = pref * phi_series(
        [a, d / b, d / c, spow(q, -m)],
        [d, d * e / (b * c), spow(q, 1 - m) * spow(t, n - 1) * a / e],
        n, q, t, q, m)
    return lhs, rhs


def prop43to21_pair(a, m, n, qh, t):
    """The quadratic 4phi3 <-> 2phi1 transformation.  Takes the square
    root qh of the base q."""
    q = qh * qh
    tn = spow(t, n)
    lhs = phi_series(
        [a, -a, -tn, spow(q, -m)],
        [a * qh * tn, -a * qh * tn, -spow(q, -m) / t],
        n, q, t, q, m)
    pref = spow(a * a * t, m * n) * spow(q, m * m * n) \
        * _rect(q * t ** (2 * n), q, t, m, n) \
        / (_rect(a * a * q * t ** (2 * n), q * q, t * t, m, n)
           * _rect(-q * tn, q, t, m, n))
    rhs = pref * phi_series(
        [spow(q, -m) / t, spow(q, -m)],
        [q * spow(t, 2 * n - 1)],
        n, q, t * t, q / (a * a), m)
    return lhs, rhs


def phinew2_pair(a, m, n, q, t):
    """The quadratic 4phi3 (base q^2,t^2) <-> 2phi1 (base q,t)
    transformation."""
    lhs = phi_series(
        [a, a * q, spow(q, -m), spow(q, 1 - m)],
        [a * spow(q, 1 - m) / t, a * spow(q, 2 - m) / t,
         q * t ** (2 * n)],
        n, q * q, t * t, q * q, m)
    pref = _rect(t ** (2 * n), q * q, t * t, m, n) \
        / (_rect(t ** (2 * n), q, t * t, m, n)
           * _rect(spow(t, 2 * n - 1) / a, q, t * t, m, n))
    rhs = pref * phi_series(
        [-spow(t, n), spow(q, -m)],
        [-spow(q, 1 - m) / t],
        n, q, t, q / a, m)
    return lhs, rhs


# ---------------------------------------------------------------------------
# principal specialization of rectangular Koornwinder polynomials
# ---------------------------------------------------------------------------

def awn_rhs(z, m, n, q, t, tr):
    """4phi3 form of K_{m^n} at z(1, t, ..., t^{n-1})."""
    t0, t1, t2, t3 = tr
    tn1 = spow(t, n - 1)
    prod4 = t0 * t1 * t2 * t3
    pref = spow(t0, -m * n) * spow(t, -m * (n * (n - 1) // 2)) \
        * _rect(t0 * t1 * tn1, q, t, m, n) \
        * _rect(t0 * t2 * tn1, q, t, m, n) \
        * _rect(t0 * t3 * tn1, q, t, m, n) \
        / _rect(prod4 * spow(q, m - 1) * tn1, q, t, m, n)
    return pref * phi_series(
        [z * t0 * tn1, t0 / z, prod4 * spow(q, m - 1) * tn1, spow(q, -m)],
        [t0 * t1 * tn1, t0 * t2 * tn1, t0 * t3 * tn1],
        n, q, t, q, m)


def kmaxrect_rhs(z, m, n, q, t, tr):
    """Rewritten 4phi3 form of K_{m^n} at z(1, t, ..., t^{n-1})."""
    t0, t1, t2, t3 = tr
    tn1 = spow(t, n - 1)
    c = spow(q, 1 - m)
    pref = spow(z, -m * n) * spow(t, -m * (n * (n - 1) // 2)) \
        * _rect(z * t0 * tn1, q, t, m, n) \
        * _rect(z * c * tn1 / t0, q, t, m, n)
    return pref * phi_series(
        [c / (t0 * t1), c / (t0 * t2), c / (t0 * t3), spow(q, -m)],
        [z * c * tn1 / t0, c / (z * t0), c * c / (t0 * t1 * t2 * t3)],
        n, q, t, q, m)


def half_ksquare_rhs(zh, m2, n, qh, th, t2, t3):
    """4phi3 form of the two-parameter K_{m^n} at z(1, t, ..., t^{n-1}),
    where m = m2/2 is an integer or half-integer.  The square roots
    zh, qh, th of z, q, t are the actual inputs so that all powers stay
    rational."""
    z, q, t = zh * zh, qh * qh, th * th
    tn1 = spow(t, n - 1)
    c = spow(qh, 1 - m2)  # q^{1/2 - m}
    pref = spow(zh, -m2 * n) * spow(th, -m2 * (n * (n - 1) // 2)) \
        * _rect(-z * c * tn1, q, t, m2, n)
    return pref * phi_series(
        [-c / t2, -c / t3, c, spow(qh, -m2)],
        [-z * c * tn1, -c / z, spow(qh, 3 - 2 * m2) / (t2 * t3)],
        n, q, t, q, m2 // 2)


# ---------------------------------------------------------------------------
# bounded Hall-Littlewood sums versus eta/theta products
# ---------------------------------------------------------------------------

def _qmono(e):
    return LaurentPoly.monomial(1, q=Fraction(e))


def _eta(step, order):
    """(q^step; q^step)_inf as a truncated series."""
    return series_poch_inf("q", 1, step, step, order)


def _eta_t(step, order):
    """(t^step; t^step)_inf as a truncated series in t."""
    return series_poch_inf("t", 1, step, step, order)


def _theta(coeff, exp, modulus, order):
    """theta(coeff*q^exp; q^modulus), reducing exp into [0, modulus)."""
    exp = Fraction(exp)
    modulus = Fraction(modulus)
    k = 0
    while exp >= modulus:
        exp -= modulus
        k += 1
    while exp < 0:
        exp += modulus
        k -= 1
    th = series_theta("q", coeff, exp, modulus, order)
    if k:
        # theta(p^k z; p) = (-1)^k z^-k p^-binom(k,2) theta(z; p)
        ordg = th.order
        shift = -k * exp - modulus * Fraction(k * (k - 1), 2)
        unit = TruncatedSeries.term(
            "q", Fraction(spow(coeff, -k)) * (-1) ** k, shift, ordg)
        th = th * unit
    return th


def _hl_weight(family, la, n, m):
    """The lattice-dependent weight attached to a partition in the
    bounded Hall-Littlewood sums."""
    w = _qmono(Fraction(la.size(), 2))
    if family == "RR1new":
        w = w * _qmono(n * odd_parts(la))
    elif family == "RR3":
        for i in range(1, m):
            w = w * poch(-_qmono(n), _qmono(n), mult(la, i))
    elif family in ("RR4", "RR4companion"):
        if family == "RR4companion":
            w = _qmono(la.size())
        g = _qmono(Fraction(2 * n - 1, 2))
        for i in range(1, m):
            w = w * poch(-g, g, mult(la, i))
    elif family == "RR5pre":
        w = w * _qmono(Fraction(2 * n - 1, 2) * odd_parts(la))
    elif family == "RR5":
        for i in range(1, 2 * m, 2):
            if mult(la, i) % 2:
                return None
        w = w * _qmono(n * odd_parts(la))
        for i in range(1, 2 * m):
            w = w * poch(_qmono(2 * n), _qmono(4 * n), -(-mult(la, i) // 2))
    elif family not in ("RR1", "RR2"):
        raise ValueError("unknown family %r" % (family,))
    return w


RR_FAMILIES = {
    # family: (bound multiplier, e(n), kappa(n, m))
    "RR1": (1, lambda n: 2 * n, lambda n, m: m + 2 * n + 1),
    "RR1new": (2, lambda n: 2 * n, lambda n, m: 2 * m + 2 * n + 1),
    "RR2": (1, lambda n: 2 * n - 1, lambda n, m: m + 2 * n),
    "RR3": (1, lambda n: 2 * n, lambda n, m: m + 2 * n),
    "RR4": (1, lambda n: 2 * n - 1, lambda n, m: m + 2 * n - 1),
    "RR4companion": (1, lambda n: 2 * n - 1, lambda n, m: m + 2 * n - 1),
    "RR5pre": (2, lambda n: 2 * n - 1, lambda n, m: 2 * m + 2 * n),
    "RR5": (2, lambda n: 2 * n, lambda n, m: 2 * m + 2 * n),
}


def hl_geometric(la, e, nletters, memo=None):
    """P_la(1, q, q^2, ...; q^e) using the first nletters letters,
    exact in q."""
    letters = [_qmono(i) for i in range(nletters)]
    tpow = lambda k: _qmono(e * k)
    psi = lambda lam, mu: psi_hl(lam, mu, tpow)
    return eval_p(la, letters, psi, memo)


def rr_sum_side(family, n, m, order, nletters=None):
    """Bounded Hall-Littlewood sum, exact in q below the given order."""
    mul, efn, _ = RR_FAMILIES[family]
    bound = mul * m
    e = efn(n)
    if nletters is None:
        nletters = order
    memo = {}
    total = LaurentPoly.zero()
    maxlen = 1
    while maxlen * (maxlen - 1) // 2 + Fraction(maxlen, 2) < order:
        maxlen += 1
    for la in partitions_in_box(bound, maxlen):
        if Fraction(la.size(), 2) + n_stat(la) >= order:
            continue
        w = _hl_weight(family, la, n, m)
        if w is None:
            continue
        total = total + w * hl_geometric(la, e, nletters, memo)
    return truncate_var(total, "q", order)


def rr_product_side(family, n, m, order):
    """Product side of the bounded Hall-Littlewood sum, as a truncated
    series in q."""
    _, _, kfn = RR_FAMILIES[family]
    kap = kfn(n, m)
    kh = Fraction(kap, 2)
    one = TruncatedSeries.const("q", 1, int(Fraction(order) * GRID))
    out = one
    if family == "RR1":
        out = out * _eta(kap, order) ** (n - 1) * _eta(kh, order)
        out = out * (_eta(1, order) ** (n - 1)
                     * _eta(Fraction(1, 2), order)).inverse()
        for i in range(1, n + 1):
            out = out * _theta(1, i, kh, order)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                out = out * _theta(1, j - i, kap, order) \
                    * _theta(1, i + j, kap, order)
    elif family == "RR1new":
        out = out * _eta(kap, order) ** (n - 1) * _eta(kh, order)
        out = out * (_eta(1, order) ** (n - 1)
                     * _eta(Fraction(1, 2), order)).inverse()
        for i in range(1, n + 1):
            out = out * _theta(1, i + m, kh, order)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                out = out * _theta(1, j - i, kap, order) \
                    * _theta(1, i + j - 1, kap, order)
    elif family == "RR2":
        out = out * _eta(kap, order) ** n
        den = _eta(1, order) ** (n - 1) \
            * series_poch_inf("q", 1, Fraction(1, 2), 1, order) \
            * _eta(2, order)
        out = out * den.inverse()
        for i in range(1, n + 1):
            out = out * _theta(1, i + Fraction(m - 1, 2), kap, order)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                out = out * _theta(1, j - i, kap, order) \
                    * _theta(1, i + j - 1, kap, order)
    elif family == "RR3":
        out = out * _eta(kap, order) ** (n - 1) * _eta(kh, order)
        den = _eta(1, order) ** (n - 1) \
            * series_poch_inf("q", 1, Fraction(1, 2), 1, order) ** 2 \
            * _eta(2, order)
        out = out * den.inverse()
        for i in range(1, n + 1):
            out = out * _theta(1, i - Fraction(1, 2), kh, order)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                out = out * _theta(1, j - i, kap, order) \
                    * _theta(1, i + j - 1, kap, order)
    elif family in ("RR4", "RR4companion"):
        out = out * _eta(kap, order) ** n
        out = out * (_eta(1, order) ** (n - 1)
                     * _eta(Fraction(1, 2), order)).inverse()
        for i in range(1, n + 1):
            if family == "RR4":
                out = out * _theta(1, i + Fraction(m - 1, 2), kap, order)
            else:
                out = out * _theta(1, i - Fraction(1, 2), kap, order)
        off = 2 if family == "RR4" else 1
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                out = out * _theta(1, j - i, kap, order) \
                    * _theta(1, i + j - off, kap, order)
    elif family == "RR5pre":
        out = out * _eta(kap, order) ** n
        den = _eta(1, order) ** n \
            * series_poch_inf("q", 1, 1, 2, order)
        out = out * den.inverse()
        for i in range(1, n + 1):
            out = out * _theta(1, i + kh - 1, kap, order)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                out = out * _theta(1, j - i, kap, order) \
                    * _theta(1, i + j - 2, kap, order)
    elif family == "RR5":
        out = out * _eta(kap, order) ** n \
            * series_poch_inf("q", -1, kh, kap, order)
        out = out * (_eta(1, order) ** n).inverse() * Fraction(1, 2)
        for i in range(1, n + 1):
            out = out * _theta(-1, i - 1, kap, order) \
                * _theta(1, i + kh - 1, kap, order)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                out = out * _theta(1, j - i, kap, order) \
                    * _theta(1, i + j - 2, kap, order)
    else:
        raise ValueError("unknown family %r" % (family,))
    return out.truncate(int(Fraction(order) * GRID))


# ---------------------------------------------------------------------------
# affine characters as stable limits of BC-type Hall-Littlewood data
# ---------------------------------------------------------------------------

def _tval(poly):
    """Smallest t-exponent of a polynomial, as a Fraction."""
    if poly.is_zero():
        return None
    if "t" not in poly.vars:
        return Fraction(0)
    i = poly.vars.index("t")
    return Fraction(min(e[i] for e in poly.terms), GRID)


def _mono_data(mono):
    """(coeff, exps) of a one-term polynomial."""
    (e, c), = mono.terms.items()
    return c, e


def _mono_sqrt(mono):
    """Square root of a unit monomial, staying on the quarter grid."""
    c, e = _mono_data(mono)
    if c != 1 or any(x % 2 for x in e):
        raise ValueError("monomial has no exact square root on the grid")
    return LaurentPoly(mono.vars, {tuple(x // 2 for x in e): Fraction(1)})


def _geom_inverse(mono, tmax):
    """1 / (1 - mono) as a t-truncated polynomial; mono must have
    positive t-valuation."""
    v = _tval(mono)
    if v is None or v <= 0:
        raise ValueError("geometric inversion needs positive valuation")
    out = LaurentPoly.one()
    pw = LaurentPoly.one()
    k = 1
    while k * v < tmax:
        pw = pw * mono
        out = out + pw
        k += 1
    return out


def _hl_payload(la, letters, tmono, memo):
    """P_la(letters; t) for monomial letters, exact; half rows split off
    as a product of square roots."""
    if la.is_half():
        if len(la) != len(letters):
            raise ValueError("half-partition must use all letters")
        mono = LaurentPoly.one()
        for x in letters:
            mono = mono * _mono_sqrt(x)
        base = Partition.from_doubled(tuple(p - 1 for p in la.parts2))
        return mono * _hl_payload(base, letters, tmono, memo)
    tpow = lambda k: spow(tmono, k)
    val = eval_p(la, letters, lambda l, m: psi_hl(l, m, tpow), memo)
    return val if isinstance(val, LaurentPoly) else LaurentPoly.const(val)


def hl_bc_at_monomials(la, letters, tmono, t2, t3, tmax):
    """BC-type Hall-Littlewood polynomial evaluated at unit-monomial
    letters with strictly positive t-valuation, correct below t-order
    tmax.

    The sign-flip sum is evaluated letterwise.  Each term's denominator
    is cancelled against the letterwise discriminant, and the final
    division splits into geometric inversions of factors starting at
    positive t-order plus one exact division by the t-order-zero part
    (coming from letter pairs sharing a t-exponent).
    """
    from itertools import product as iproduct
    from .core import exact_divide

    if not isinstance(la, Partition):
        la = Partition(la)
    nl = len(letters)
    inv = [x ** (-1) for x in letters]
    tmax = Fraction(tmax)

    # split U = prod (1-L_i^2) prod_{i<j} (1-L_iL_j)(L_i-L_j) into
    # unit * (geometric-invertible part) * (t-order-zero part)
    geom = [x * x for x in letters]          # (1 - g) factors, tval > 0
    for i in range(nl):
        for j in range(i + 1, nl):
            geom.append(letters[i] * letters[j])
    u_unit = LaurentPoly.one()
    d_zero = LaurentPoly.one()
    for i in range(nl):
        for j in range(i + 1, nl):
            # L_i - L_j = L_i (1 - L_j/L_i) or -L_j (1 - L_i/L_j)
            m = inv[i] * letters[j]
            v = _tval(m)
            if v > 0:
                u_unit = u_unit * letters[i]
                geom.append(m)
            elif v < 0:
                u_unit = u_unit * (-letters[j])
                geom.append(letters[i] * inv[j])
            else:
                u_unit = u_unit * letters[i]
                d_zero = d_zero * (LaurentPoly.one() - m)

    terms = []
    vneg_min = Fraction(0)
    memo = {}
    for eps in iproduct(*[(1, -1)] * nl):
        pay_letters = tuple(inv[i] if eps[i] > 0 else letters[i]
                            for i in range(nl))
        payload = _hl_payload(la, pay_letters,
                              tmono, memo.setdefault(eps, {}))
        if payload.is_zero():
            continue
        ys = [letters[i] if eps[i] > 0 else inv[i] for i in range(nl)]
        # cancel this term's denominator (1-y_i^2) prod (1-y_iy_j)
        # against U factors, keeping what is left of U
        unit = LaurentPoly.one()
        kept = []
        for i in range(nl):
            if eps[i] < 0:
                unit = unit * (-(letters[i] ** 2))
        for i in range(nl):
            for j in range(i + 1, nl):
                if eps[i] == eps[j]:
                    if eps[i] < 0:
                        unit = unit * (-(letters[i] * letters[j]))
                    kept.append(letters[i] - letters[j])
                else:
                    if eps[i] > 0:
                        unit = unit * (-letters[j])
                    else:
                        unit = unit * letters[i]
                    kept.append(LaurentPoly.one() - letters[i] * letters[j])
        factors = kept
        for y in ys:
            if t2:
                factors.append(LaurentPoly.one() - y * t2)
            if t3:
                factors.append(LaurentPoly.one() - y * t3)
        for i in range(nl):
            for j in range(i + 1, nl):
                factors.append(LaurentPoly.one() - ys[i] * ys[j] * tmono)
        if any(f.is_zero() for f in factors):
            continue
        v_neg = _tval(unit) + min(Fraction(0), _tval(payload))
        for f in factors:
            v = _tval(f)
            if v < 0:
                v_neg += v
        vneg_min = min(vneg_min, v_neg)
        terms.append((unit, payload, factors))

    target = tmax + _tval(u_unit)
    work = target - vneg_min
    total = LaurentPoly.zero()
    for unit, payload, factors in terms:
        term = unit * payload
        for f in factors:
            term = truncate_var(term * f, "t", work)
        total = total + term

    for g in geom:
        total = truncate_var(total * _geom_inverse(g, work), "t", work)
    total = truncate_var(total, "t", target)
    (e, c), = u_unit.terms.items()
    total = total * LaurentPoly(u_unit.vars,
                                {tuple(-x for x in e): Fraction(1) / c})
    if not d_zero == LaurentPoly.one():
        total = exact_divide(total, d_zero)
    norm = poch(t2 * t3, tmono, nl - len(la))
    if isinstance(norm, LaurentPoly):
        raise ValueError("non-scalar normalization")
    return truncate_var(total, "t", tmax) * (Fraction(1) / norm)


def _char_letters(n, N):
    """t^(k+1/2) x_i^{+-1} for 0 <= k < N."""
    t = LaurentPoly.var("t")
    out = []
    for i in range(1, n + 1):
        x = LaurentPoly.var("x%d" % i)
        for k in range(N):
            th = LaurentPoly.monomial(1, t=Fraction(2 * k + 1, 2))
            out.append(th * x)
            out.append(th * x ** (-1))
    return out


def char_hl_limit_side(kind, n, m, N, order):
    """The depth-N member of the Hall-Littlewood sequence converging to
    the level-m character; kind "C" or "B"."""
    t = LaurentPoly.var("t")
    letters = _char_letters(n, N)
    if kind == "C":
        la = Partition((m,) * (2 * n * N))
        shift = Fraction(m * n * N * N)
        t2 = t3 = Fraction(0)
    elif kind == "B":
        la = Partition.from_doubled((m,) * (2 * n * N))
        shift = Fraction(m * n * N * N, 2)
        t2, t3 = Fraction(0), Fraction(-1)
    else:
        raise ValueError("unknown kind %r" % (kind,))
    p = hl_bc_at_monomials(la, letters, t, t2, t3, Fraction(order) - shift)
    return truncate_var(p * LaurentPoly.monomial(1, t=shift), "t", order)


def char_sum_side(kind, n, m, order, depth=None):
    """Bounded modified Hall-Littlewood character sum, exact below the
    given t-order."""
    if depth is None:
        depth = order
    t = LaurentPoly.var("t")
    base = []
    for i in range(1, n + 1):
        x = LaurentPoly.var("x%d" % i)
        base.extend([x, x ** (-1)])
    letters = modified_hl_letters(base, t, depth)
    bound = 2 * m if kind == "C" else m
    tpow = lambda k: spow(t, k)
    psi = lambda l, mu: psi_hl(l, mu, tpow)
    memo = {}
    total = LaurentPoly.zero()
    for la in partitions_in_box(bound, 2 * order):
        if la.size() >= 2 * order:
            continue
        if kind == "C" and not is_even(la):
            continue
        w = LaurentPoly.monomial(1, t=Fraction(la.size(), 2))
        total = total + w * eval_p(la, letters, psi, memo)
    return truncate_var(total, "t", order)


# ---------------------------------------------------------------------------
# the bounded hypergeometric sum in three guises (rank-one alphabets of
# geometric letters), fully numeric
# ---------------------------------------------------------------------------

def mps_member1(x, m, N, v, t2, t3):
    """Bounded sum over partitions with first part <= 2m; v = t^(1/2)."""
    t = v * v
    n = len(x)
    letters = [xi * spow(t, k) for xi in x for k in range(N)]
    tpow = lambda k: spow(t, k)
    psi = lambda l, mu: psi_hl(l, mu, tpow)
    memo = {}
    total = Fraction(0)
    for la in partitions_in_box(2 * m, n * N):
        total = total + spow(v, la.size()) * h_gen(la, 2 * m, t2, t3, t) \
            * eval_p(la, letters, psi, memo)
    return total


def mps_member2(x, m, N, v, t2, t3):
    """Rectangular BC-type Hall-Littlewood polynomial at the geometric
    specialization; v = t^(1/2)."""
    from .weylsym import hl_bc
    t = v * v
    n = len(x)
    nl = n * N
    p = hl_bc(Partition((m,) * nl), nl, t, t2, t3)
    k = 0
    for xi in x:
        for j in range(N):
            p = p.substitute("x%d" % (k + 1), xi * spow(v, 2 * j + 1))
            k += 1
    if isinstance(p, LaurentPoly):
        if any(e != () and any(e) for e in p.terms):
            raise ValueError("substitution left free variables")
        val = sum(p.terms.values(), Fraction(0))
    else:
        val = p
    pref = Fraction(1)
    for xi in x:
        pref = pref * spow(xi, m * N)
    pref = pref * spow(v, m * n * N * N)
    return pref * val


def mps_member3(x, m, N, v, t2, t3):
    """The multiple basic hypergeometric sum; v = t^(1/2)."""
    t = v * v
    n = len(x)

    def delta_c(z):
        out = Fraction(1)
        for zi in z:
            out = out * (1 - zi * zi)
        for i in range(n):
            for j in range(i + 1, n):
                out = out * (z[i] - z[j]) * (z[i] * z[j] - 1)
        return out

    pref = Fraction(1)
    for xi in x:
        pref = pref * poch(v * t2 * xi, t, N) * poch(v * t3 * xi, t, N)
    for xi in x:
        for xj in x:
            pref = pref / poch(t * xi * xj, t, N)
    for i in range(n):
        for j in range(i + 1, n):
            pref = pref * poch(t * x[i] * x[j], t, 2 * N)

    dc0 = delta_c(x)
    total = Fraction(0)
    for r in _vectors(n, 0, N):
        term = delta_c([x[i] * spow(t, r[i]) for i in range(n)]) / dc0
        for i in range(n):
            ri = r[i]
            term = term * poch(v / t2 * x[i], t, ri) \
                * poch(v / t3 * x[i], t, ri) \
                / (poch(v * t2 * x[i], t, ri) * poch(v * t3 * x[i], t, ri)) \
                * spow(t2 * t3, ri) \
                * spow(x[i] * x[i] * spow(t, ri), m * ri)
        for i in range(n):
            for j in range(n):
                ri = r[i]
                term = term * poch(spow(t, -N) * x[i] / x[j], t, ri) \
                    * poch(x[i] * x[j], t, ri) \
                    / (poch(t * x[i] / x[j], t, ri)
                       * poch(spow(t, N + 1) * x[i] * x[j], t, ri))
            term = term * spow(t, N * r[i])
        total = total + term
    return pref * total


def _vectors(n, lo, hi):
    from itertools import product as iproduct
    return iproduct(*[range(lo, hi + 1)] * n)


def id56a_sum_side(n, m, t2, t3, order, depth=None):
    """Two-parameter refinement of the bounded character sum."""
    if depth is None:
        depth = order
    t = LaurentPoly.var("t")
    base = []
    for i in range(1, n + 1):
        x = LaurentPoly.var("x%d" % i)
        base.extend([x, x ** (-1)])
    letters = modified_hl_letters(base, t, depth)
    tpow = lambda k: spow(t, k)
    psi = lambda l, mu: psi_hl(l, mu, tpow)
    memo = {}
    total = LaurentPoly.zero()
    for la in partitions_in_box(2 * m, 2 * order):
        if la.size() >= 2 * order:
            continue
        w = LaurentPoly.monomial(1, t=Fraction(la.size(), 2)) \
            * h_gen(la, 2 * m, t2, t3, t)
        total = total + w * eval_p(la, letters, psi, memo)
    return truncate_var(total, "t", order)


def id56a_finite_side(n, m, N, t2, t3, order):
    """Finite-N middle member of the two-parameter character sum."""
    t = LaurentPoly.var("t")
    letters = _char_letters(n, N)
    la = Partition((m,) * (2 * n * N))
    shift = Fraction(m * n * N * N)
    p = hl_bc_at_monomials(la, letters, t, t2, t3, Fraction(order) - shift)
    return truncate_var(p * LaurentPoly.monomial(1, t=shift), "t", order)


# ---------------------------------------------------------------------------
# theta-quotient character formulas and Macdonald identities (appendix
# material): everything is a truncated Laurent polynomial in (t, x)
# ---------------------------------------------------------------------------

def _xs(n):
    return [LaurentPoly.var("x%d" % i) for i in range(1, n + 1)]


def _delta_b(z, n):
    out = LaurentPoly.one()
    for zi in z:
        out = out * (LaurentPoly.one() - zi)
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (z[i] - z[j]) * (z[i] * z[j] - LaurentPoly.one())
    return out


def _delta_c_poly(z, n):
    out = LaurentPoly.one()
    for zi in z:
        out = out * (LaurentPoly.one() - zi * zi)
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (z[i] - z[j]) * (z[i] * z[j] - LaurentPoly.one())
    return out


def _delta_d_poly(z, n):
    out = LaurentPoly.one()
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (z[i] - z[j]) * (z[i] * z[j] - LaurentPoly.one())
    return out


def series_to_poly(ts):
    """Flatten a truncated series with Laurent coefficients into a single
    Laurent polynomial."""
    tvar = LaurentPoly.var(ts.var)
    out = LaurentPoly.zero()
    for k, c in ts.coeffs.items():
        mono = LaurentPoly(
            (ts.var,), {(k,): Fraction(1)})
        out = out + mono * c
    return out


def dn_lattice_sum(kappa, n, R, order, parity=None):
    """sum over r in Z^n (|r_i| <= R, optionally |r| of fixed parity) of
    Delta_D(x t^r) prod (-1)^{r_i} x_i^{kappa r_i}
    t^{kappa r_i^2/2 - (n-1) r_i}, truncated below t^order."""
    xs = _xs(n)
    total = LaurentPoly.zero()
    for r in _vectors(n, -R, R):
        if parity is not None and sum(r) % 2 != parity % 2:
            continue
        z = [xs[i] * LaurentPoly.monomial(1, t=r[i]) for i in range(n)]
        term = _delta_d_poly(z, n)
        sign = 1
        e = Fraction(0)
        mono = LaurentPoly.one()
        for i in range(n):
            ri = r[i]
            if ri % 2:
                sign = -sign
            e += Fraction(kappa * ri * ri, 2) - (n - 1) * ri
            mono = mono * xs[i] ** (kappa * ri)
        term = term * mono * LaurentPoly.monomial(sign, t=e)
        total = total + term
    return truncate_var(total, "t", order)


def wk_lattice_sum(kind, n, R, order):
    """Numerator of the level-zero theta-quotient character formula:
    the |r| even part of the B- or C-type Vandermonde lattice sum."""
    xs = _xs(n)
    if kind == "B":
        kappa = 2 * n - 1
        off = Fraction(2 * n - 1, 2)
        delta = _delta_b
    elif kind == "C":
        kappa = 2 * n
        off = Fraction(n)
        delta = _delta_c_poly
    else:
        raise ValueError("unknown kind %r" % (kind,))
    total = LaurentPoly.zero()
    for r in _vectors(n, -R, R):
        if sum(r) % 2:
            continue
        z = [xs[i] * LaurentPoly.monomial(1, t=r[i]) for i in range(n)]
        term = delta(z, n)
        e = Fraction(0)
        mono = LaurentPoly.one()
        for i in range(n):
            ri = r[i]
            e += Fraction(kappa * ri * ri, 2) - off * ri
            mono = mono * xs[i] ** (kappa * ri)
        total = total + term * mono * LaurentPoly.monomial(1, t=e)
    return truncate_var(total, "t", order)


def _theta_xprod(n, order):
    """prod_{i<j} x_j theta(x_i/x_j; t) theta(x_i x_j; t)."""
    out = TruncatedSeries.const("t", 1, int(Fraction(order) * GRID))
    xs = _xs(n)
    for i in range(n):
        for j in range(i + 1, n):
            out = out * xs[j]
            out = out * series_theta("t", xs[i] * xs[j] ** (-1), 0, 1, order)
            out = out * series_theta("t", xs[i] * xs[j], 0, 1, order)
    return out


def wk_product_side(kind, n, order):
    """Denominator of the level-zero theta-quotient character formula."""
    out = _theta_xprod(n, order)
    xs = _xs(n)
    if kind == "B":
        out = out * _eta_t(1, order) ** n
        for x in xs:
            out = out * series_theta("t", x, 0, 1, order)
    elif kind == "C":
        out = out * _eta_t(1, order) ** (n - 1) * _eta_t(2, order)
        for x in xs:
            out = out * series_theta("t", x * x, 0, 2, order)
    else:
        raise ValueError("unknown kind %r" % (kind,))
    return series_to_poly(out)


def macdonald_identity_sum(which, n, R, order):
    """Lattice-sum side of the two level-zero Macdonald identities."""
    if which == "B":
        return dn_lattice_sum(2 * n - 1, n, R, order)
    if which == "A":
        return dn_lattice_sum(2 * n, n, R, order)
    raise ValueError("unknown identity %r" % (which,))


def macdonald_identity_product(which, n, order):
    """Product side of the two level-zero Macdonald identities."""
    out = _theta_xprod(n, order)
    xs = _xs(n)
    if which == "B":
        out = out * _eta_t(1, order) ** n
        for x in xs:
            out = out * series_theta("t", x, Fraction(1, 2), 1, order)
    elif which == "A":
        out = out * _eta_t(1, order) ** (n - 1) * _eta_t(2, order)
        for x in xs:
            out = out * series_theta("t", x * x, 1, 2, order)
    else:
        raise ValueError("unknown identity %r" % (which,))
    return series_to_poly(out)


def f_sigma_det_sum(kappa, n, sigma, R, order):
    """Determinant form of the signed theta-quotient numerator."""
    xs = _xs(n)
    total = LaurentPoly.zero()
    for r in _vectors(n, -R, R):
        if sum(r) % 2 != sigma % 2:
            continue
        rows = []
        for i in range(n):
            ri = r[i]
            row = []
            for j in range(1, n + 1):
                a = xs[i] ** (-kappa * ri + j - 1) \
                    * LaurentPoly.monomial(
                        1, t=Fraction(kappa * ri * ri, 2) + (n - j) * ri)
                b = xs[i] ** (-kappa * (ri + 1) + 2 * n - j - 1) \
                    * LaurentPoly.monomial(
                        1, t=Fraction(kappa * (ri + 1) ** 2, 2)
                        - (n - j) * (ri + 1))
                row.append(a - b)
            rows.append(row)
        total = total + det_poly(rows)
    return truncate_var(total, "t", order)


def f_sigma_d_sum(kappa, n, sigma, R, order):
    """Lattice form of the same: (-1)^sigma times the D-type sum."""
    s = dn_lattice_sum(kappa, n, R, order)
    return s if sigma % 2 == 0 else -s


def eval_half(poly, sqrt_assignment):
    """Evaluate a Laurent polynomial whose exponents lie on the half-odd
    grid, given the square root of each variable's value."""
    total = Fraction(0)
    for exps, coeff in poly.terms.items():
        val = coeff
        for name, e in zip(poly.vars, exps):
            if e % 2 != 0:
                raise ValueError("exponent off the half grid")
            val = val * spow(sqrt_assignment[name], e // 2)
        total = total + val
    return total
