"""Named verifiers for the bounded Littlewood identities and their
relatives.

Each verifier returns a report dictionary with the fields

    {"identity", "params", "seeds", "status", "points", "witness",
     "millis"}

where "points" is a list of {"point", "equal"} entries, "status" is
"pass" or "fail", and "witness" (present on failure) describes the
lexicographically smallest offending monomial together with both
coefficients.  Reports are deterministic functions of their arguments
apart from "millis".
"""

import time
from fractions import Fraction
from itertools import product as iproduct

from .core import (DegenerateError, GRID, LaurentPoly, TruncatedSeries,
                   draw_param_point, exact_divide)
from .partitions import (Partition, conjugate, enumerate_in_box, is_even,
                         conj_is_even, mult, odd_parts, partitions_in_box)
from .qfact import a_coeff, b_family, h_b, h_gen, poch, poch2, spow
from .symfunc import hall_littlewood, macdonald_p
from .weylsym import (det_poly, hl_b, hl_bc, hl_c, hl_d, schur, xvars)
from .koornwinder import (k_bn, koornwinder_k, macdonald_expand,
                          prs_macdonald, virtual_integral_macdonald)
from .hyperq import (awn_rhs, char_hl_limit_side, char_sum_side,
                     duality_pair, eval_half, half_ksquare_rhs,
                     kmaxrect_rhs, macdonald_identity_product,
                     macdonald_identity_sum, phinew2_pair,
                     prop43to21_pair, reverse_pair, rr_product_side,
                     rr_sum_side, sears_pair, series_to_poly,
                     truncate_var)

__all__ = [
    "verify_bounded", "verify_corollary", "verify_unbounded",
    "verify_prop_fik", "verify_evaluation", "verify_rr",
    "verify_character", "verify_appendix", "verify_props",
    "PROP_KINDS",
    "BOUNDED_THMS", "COROLLARIES", "UNBOUNDED_KINDS", "EVALUATIONS",
]

BOUNDED_THMS = ("1", "1a0", "2", "3", "4", "5", "6", "7")
COROLLARIES = ("DPS", "MacB", "MacMahon", "Stem", "JZ", "IJZ")
UNBOUNDED_KINDS = ("Pb", "Pc", "Kawanaka")
EVALUATIONS = ("BD", "BD2", "IKnnew", "newvirtual")


# ---------------------------------------------------------------------------
# report plumbing
# ---------------------------------------------------------------------------

def _as_poly(v):
    if isinstance(v, LaurentPoly):
        return v
    if isinstance(v, TruncatedSeries):
        return series_to_poly(v)
    return LaurentPoly.const(v)


def _coeff_at(poly, names, key):
    poly = _as_poly(poly)._embed(names)
    return poly.terms.get(key, Fraction(0))


def _witness(lhs, rhs):
    """Describe the lexicographically smallest monomial where the two
    sides differ, or return None if they agree."""
    diff = _as_poly(lhs) - _as_poly(rhs)
    if diff.is_zero():
        return None
    key = min(diff.terms)
    bits = []
    for name, e in zip(diff.vars, key):
        if e:
            bits.append("%s^%s" % (name, Fraction(e, GRID)))
    return {
        "monomial": " ".join(bits) if bits else "1",
        "lhs": str(_coeff_at(lhs, diff.vars, key)),
        "rhs": str(_coeff_at(rhs, diff.vars, key)),
    }


def _report(identity, params, seeds, points, witness, t0):
    status = "pass" if all(p["equal"] for p in points) else "fail"
    return {
        "identity": identity,
        "params": dict(params),
        "seeds": list(seeds),
        "status": status,
        "points": points,
        "witness": witness,
        "millis": int((time.time() - t0) * 1000),
    }


def _run_points(identity, params, names, npoints, seed, symbolic, sides):
    """Draw npoints parameter points and compare sides(point) at each."""
    t0 = time.time()
    points, seeds, witness = [], [], None
    for i in range(npoints):
        pt = draw_param_point(names, seed + i, symbolic=symbolic)
        seeds.append(seed + i)
        equal = True
        for lhs, rhs in sides(pt):
            w = _witness(lhs, rhs)
            if w is not None:
                equal = False
                if witness is None:
                    witness = w
                break
        points.append({"point": pt.describe(), "equal": equal})
    return _report(identity, params, seeds, points, witness, t0)


# ---------------------------------------------------------------------------
# shared pieces
# ---------------------------------------------------------------------------

def _xpref(n, e):
    """(x_1 ... x_n)^e as a monomial; e may be half-integral."""
    return LaurentPoly.monomial(1, **{v: Fraction(e) for v in xvars(n)})


def _half_rect(m, n):
    """The partition (m/2)^n."""
    return Partition.from_doubled((m,) * n if m else ())


def _rect(m, n):
    return Partition((m,) * n if m else ())


def _macdonald_sum(pairs, n, q, t):
    """sum of w * P_la(x_1..x_n; q, t) over (la, w)."""
    memo = {}
    total = LaurentPoly.zero()
    for la, w in pairs:
        if not w:
            continue
        total = total + macdonald_p(la, n, q, t, memo) * w
    return total


def _hl_sum(pairs, n, t):
    memo = {}
    total = LaurentPoly.zero()
    for la, w in pairs:
        if not w:
            continue
        total = total + hall_littlewood(la, n, t, memo) * w
    return total


def _assert_support(shapes, weight_fn, bound):
    """Support exhaustion: shapes beyond the stated largest-part bound
    must carry vanishing coefficients."""
    for la in shapes:
        ps = la.intparts()
        if ps and ps[0] > bound and weight_fn(la):
            raise AssertionError(
                "support leak at %r: coefficient does not vanish" % (la,))


# ---------------------------------------------------------------------------
# bounded Littlewood identities
# ---------------------------------------------------------------------------

_BOUNDED_NAMES = {
    "1": ["qh", "th"],
    "1a0": ["qh", "th"],
    "2": ["qh", "t"],
    "3": ["qh", "t"],
    "4": ["qh", "t"],
    "5": ["q", "t"],
    "6": ["t", "t2", "t3"],
    "7": ["t", "t2"],
}


def _bounded_sides(thm, n, m, pt):
    """Yield (lhs, rhs) pairs for one bounded Littlewood theorem at one
    parameter point.  x stays symbolic; the square-root parameters qh
    (and th where needed) are the drawn values, with q = qh^2."""
    if thm in ("1", "1a0"):
        qh, th = pt["qh"], pt["th"]
        q, t = qh * qh, th * th
        a = pt.get("a", Fraction(0)) if thm == "1" else Fraction(0)
        box = partitions_in_box(2 * m + 2, n)
        weight = lambda la: b_family(la, q, t, "oa_m", m)
        _assert_support(box, weight, 2 * m + 1)
        if thm == "1a0":
            pairs = [(la, weight(la)) for la in box
                     if is_even(la.intparts())]
        else:
            pairs = [(la, spow(a, odd_parts(la)) * weight(la))
                     for la in box]
        lhs = _macdonald_sum(pairs, n, q, t)
        rhs = _xpref(n, m) * prs_macdonald("CB", _rect(m, n), n, qh, t,
                                           s2=qh * th)
        if thm == "1":
            for v in xvars(n):
                rhs = rhs * (LaurentPoly.one() + LaurentPoly.var(v) * a)
        yield lhs, rhs
    elif thm == "2":
        qh, t = pt["qh"], pt["t"]
        q = qh * qh
        shapes = enumerate_in_box(m, n, "evenMults") if m else \
            partitions_in_box(0, n)
        pairs = [(la, b_family(la, q, t, "ol_m", m)) for la in shapes]
        lhs = _macdonald_sum(pairs, n, q, t)
        rhs = _xpref(n, Fraction(m, 2)) * prs_macdonald(
            "BB", _half_rect(m, n), n, qh, t, t2=Fraction(1))
        yield lhs, rhs
    elif thm == "3":
        qh, t = pt["qh"], pt["t"]
        q = qh * qh
        box = partitions_in_box(m, n)
        even = [(la, b_family(la, q, t, "ol_m", m)) for la in box
                if conj_is_even(la.intparts())]
        lhs = _macdonald_sum(even, n, q, t)
        rhs = _xpref(n, Fraction(m, 2)) * prs_macdonald(
            "DD", _half_rect(m, n), n, qh, t)
        yield lhs, rhs
        if m >= 1:
            odd = [(la, b_family(la, q, t, "ol_m", m)) for la in box
                   if la.intparts() and la.intparts()[0] == m
                   and not conj_is_even(la.intparts())
                   and all(mult(la.intparts(), i) % 2 == 0
                           for i in range(1, m))]
            lhs2 = _macdonald_sum(odd, n, q, t)
            rhs2 = _xpref(n, Fraction(m, 2)) * prs_macdonald(
                "DDbar", _half_rect(m, n), n, qh, t)
            yield lhs2, rhs2
    elif thm == "4":
        qh, t = pt["qh"], pt["t"]
        q = qh * qh
        box = partitions_in_box(m + 1, n)
        weight = lambda la: b_family(la, q, t, "el_m", m)
        _assert_support(box, weight, m)
        lhs = _macdonald_sum([(la, weight(la)) for la in box], n, q, t)
        rhs = _xpref(n, Fraction(m, 2)) * prs_macdonald(
            "BB", _half_rect(m, n), n, qh, t, t2=t)
        yield lhs, rhs
    elif thm == "5":
        q, t = pt["q"], pt["t"]
        box = partitions_in_box(m + 1, n)
        weight = lambda la: b_family(la, q, t, "minus_m", m)
        _assert_support(box, weight, m)
        lhs = _macdonald_sum([(la, weight(la)) for la in box],
                             n, q * q, t * t)
        rhs = _xpref(n, Fraction(m, 2)) * prs_macdonald(
            "BC", _half_rect(m, n), n, q, t * t, t2=-t)
        yield lhs, rhs
    elif thm == "6":
        t, t2, t3 = pt["t"], pt["t2"], pt["t3"]
        pairs = [(la, h_gen(la, 2 * m, t2, t3, t))
                 for la in partitions_in_box(2 * m, n)]
        lhs = _hl_sum(pairs, n, t)
        rhs = _xpref(n, m) * hl_bc(_rect(m, n), n, t, t2, t3)
        yield lhs, rhs
    elif thm == "7":
        t, t2 = pt["t"], pt["t2"]
        pairs = [(la, h_b(la, m, t2, t))
                 for la in partitions_in_box(m, n)]
        lhs = _hl_sum(pairs, n, t)
        rhs = _xpref(n, Fraction(m, 2)) * hl_b(_half_rect(m, n), n, t, t2)
        yield lhs, rhs
    else:
        raise ValueError("unknown theorem %r" % (thm,))


def verify_bounded(thm, n, m, npoints=5, seed=0):
    """Verify one bounded Littlewood identity at npoints parameter
    points, with x symbolic.  Theorem 1 carries a symbolic parameter a."""
    thm = str(thm)
    if thm not in BOUNDED_THMS:
        raise ValueError("unknown theorem %r" % (thm,))
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    symbolic = "a" if thm == "1" else None
    return _run_points("bounded%s" % thm, {"n": n, "m": m},
                       _BOUNDED_NAMES[thm], npoints, seed, symbolic,
                       lambda pt: _bounded_sides(thm, n, m, pt))


# ---------------------------------------------------------------------------
# determinant corollaries and the plane-partition count
# ---------------------------------------------------------------------------

def _det_ratio_b(n, m):
    """det(x_i^{m+2n-j} - x_i^{j-1}) over the B-type denominator."""
    xs = [LaurentPoly.var(v) for v in xvars(n)]
    rows = [[x ** (m + 2 * n - j) - x ** (j - 1) for j in range(1, n + 1)]
            for x in xs]
    den = LaurentPoly.one()
    for i in range(n):
        den = den * (xs[i] - LaurentPoly.one())
        for j in range(i + 1, n):
            den = den * (xs[i] - xs[j]) * (xs[i] * xs[j] - 1)
    return exact_divide(det_poly(rows), den)


def _det_ratio_c(n, m):
    """det(x_i^{j-1} - x_i^{2m+2n-j+1}) over the C-type denominator."""
    xs = [LaurentPoly.var(v) for v in xvars(n)]
    rows = [[x ** (j - 1) - x ** (2 * m + 2 * n - j + 1)
             for j in range(1, n + 1)] for x in xs]
    den = LaurentPoly.one()
    for i in range(n):
        den = den * (LaurentPoly.one() - xs[i] * xs[i])
        for j in range(i + 1, n):
            den = den * (xs[i] - xs[j]) * (xs[i] * xs[j] - 1)
    return exact_divide(det_poly(rows), den)


def _schur_sum(shapes, n):
    total = LaurentPoly.zero()
    for la in shapes:
        total = total + schur(la, n)
    return total


def _spp_gf(n, m):
    """Generating function of symmetric plane partitions in B(n, n, m)
    by brute-force enumeration."""
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    q = LaurentPoly.var("q")
    total = LaurentPoly.zero()
    for vals in iproduct(range(m + 1), repeat=len(cells)):
        pi = [[0] * n for _ in range(n)]
        for (i, j), v in zip(cells, vals):
            pi[i][j] = v
            pi[j][i] = v
        ok = all(pi[i][j] >= pi[i][j + 1] for i in range(n)
                 for j in range(n - 1)) and \
            all(pi[i][j] >= pi[i + 1][j] for i in range(n - 1)
                for j in range(n))
        if ok:
            total = total + q ** sum(sum(row) for row in pi)
    return total


def _spp_product(n, m):
    q = LaurentPoly.var("q")
    num = LaurentPoly.one()
    den = LaurentPoly.one()
    for i in range(1, n + 1):
        num = num * (LaurentPoly.one() - q ** (m + 2 * i - 1))
        den = den * (LaurentPoly.one() - q ** (2 * i - 1))
        for j in range(i + 1, n + 1):
            num = num * (LaurentPoly.one() - q ** (2 * (m + i + j - 1)))
            den = den * (LaurentPoly.one() - q ** (2 * (i + j - 1)))
    return exact_divide(num, den)


def verify_corollary(kind, n, m, npoints=2, seed=0):
    """Schur and Hall-Littlewood degenerations of the bounded identities,
    plus the symmetric plane partition count."""
    if kind not in COROLLARIES:
        raise ValueError("unknown corollary %r" % (kind,))
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    params = {"n": n, "m": m}
    if kind == "DPS":
        t0 = time.time()
        lhs = _schur_sum(enumerate_in_box(2 * m, n, "even"), n)
        w = _witness(lhs, _det_ratio_c(n, m))
        return _report("DPS", params, [], [{"point": "", "equal": w is None}],
                       w, t0)
    if kind == "MacB":
        t0 = time.time()
        lhs = _schur_sum(partitions_in_box(m, n), n)
        w = _witness(lhs, _det_ratio_b(n, m))
        return _report("MacB", params, [],
                       [{"point": "", "equal": w is None}], w, t0)
    if kind == "MacMahon":
        t0 = time.time()
        w = _witness(_spp_gf(n, m), _spp_product(n, m))
        return _report("MacMahon", params, [],
                       [{"point": "", "equal": w is None}], w, t0)

    def sides(pt):
        t = pt["t"]
        if kind == "Stem":
            pairs = [(la, Fraction(1))
                     for la in enumerate_in_box(2 * m, n, "even")]
            lhs = _hl_sum(pairs, n, t)
            rhs = _xpref(n, m) * hl_c(_rect(m, n), n, t, Fraction(0))
        elif kind == "JZ":
            pairs = []
            for la in enumerate_in_box(m, n, "conjEven"):
                ps = la.intparts()
                w = Fraction(1)
                for i in range(1, m):
                    w = w * poch(t, t * t, mult(ps, i) // 2)
                pairs.append((la, w))
            lhs = _hl_sum(pairs, n, t)
            rhs = _xpref(n, Fraction(m, 2)) * hl_d(_half_rect(m, n), n, t)
        else:  # IJZ
            pairs = []
            for la in partitions_in_box(m, n):
                ps = la.intparts()
                w = Fraction(1)
                for i in range(1, m):
                    w = w * poch(-t, t, mult(ps, i))
                pairs.append((la, w))
            lhs = _hl_sum(pairs, n, t * t)
            rhs = _xpref(n, Fraction(m, 2)) * hl_b(_half_rect(m, n), n,
                                                   t * t, -t)
        yield lhs, rhs

    return _run_points(kind, params, ["t"], npoints, seed, None, sides)


# ---------------------------------------------------------------------------
# unbounded identities, truncated by total x-degree
# ---------------------------------------------------------------------------

def _xtrunc(poly, deg):
    cut = deg * GRID
    keep = {e: c for e, c in poly.terms.items() if sum(e) <= cut}
    return LaurentPoly(poly.vars, keep)


def _poch_inf_x(u, q, deg, inverse=False):
    """(u; q)_inf (or its reciprocal) expanded by the q-binomial theorem
    and truncated past total x-degree deg.  u must be a monomial of
    positive x-degree."""
    u = _as_poly(u)
    (exps, coeff), = u.terms.items()
    d = sum(exps)
    if d <= 0:
        raise ValueError("need positive x-degree")
    kmax = deg * GRID // d
    out = LaurentPoly.one()
    upow = LaurentPoly.one()
    for k in range(1, kmax + 1):
        upow = upow * u
        if inverse:
            out = out + upow * (Fraction(1) / poch(q, q, k))
        else:
            sign = Fraction(-1) ** k
            out = out + upow * (sign * spow(q, k * (k - 1) // 2)
                                / poch(q, q, k))
    return out


def _unbounded_sides(kind, n, deg, pt):
    xs = [LaurentPoly.var(v) for v in xvars(n)]
    if kind == "Pb":
        q, t, a = pt["q"], pt["t"], pt["a"]
        pairs = [(la, spow(a, odd_parts(la)) * b_family(la, q, t, "oa"))
                 for la in partitions_in_box(deg, n)
                 if sum(la.intparts()) <= deg]
        lhs = _macdonald_sum(pairs, n, q, t)
        rhs = LaurentPoly.one()
        for i, x in enumerate(xs):
            rhs = rhs * (LaurentPoly.one() + x * a)
            rhs = _xtrunc(rhs * _poch_inf_x(x * x * (q * t), q * q, deg),
                          deg)
            rhs = _xtrunc(rhs * _poch_inf_x(x * x, q * q, deg, True), deg)
            for y in xs[i + 1:]:
                rhs = _xtrunc(rhs * _poch_inf_x(x * y * t, q, deg), deg)
                rhs = _xtrunc(rhs * _poch_inf_x(x * y, q, deg, True), deg)
    elif kind == "Pc":
        q, t, a = pt["q"], pt["t"], pt["a"]
        pairs = [(la, spow(a, odd_parts(conjugate(la)))
                  * b_family(la, q, t, "el"))
                 for la in partitions_in_box(deg, n)
                 if sum(la.intparts()) <= deg]
        lhs = _macdonald_sum(pairs, n, q, t)
        rhs = LaurentPoly.one()
        for i, x in enumerate(xs):
            rhs = _xtrunc(rhs * _poch_inf_x(x * (a * t), q, deg), deg)
            rhs = _xtrunc(rhs * _poch_inf_x(x * a, q, deg, True), deg)
            for y in xs[i + 1:]:
                rhs = _xtrunc(rhs * _poch_inf_x(x * y * t, q, deg), deg)
                rhs = _xtrunc(rhs * _poch_inf_x(x * y, q, deg, True), deg)
    else:  # Kawanaka
        q, t = pt["q"], pt["t"]
        pairs = [(la, b_family(la, q, t, "minus"))
                 for la in partitions_in_box(deg, n)
                 if sum(la.intparts()) <= deg]
        lhs = _macdonald_sum(pairs, n, q * q, t * t)
        rhs = LaurentPoly.one()
        for i, x in enumerate(xs):
            rhs = _xtrunc(rhs * _poch_inf_x(x * (-t), q, deg), deg)
            rhs = _xtrunc(rhs * _poch_inf_x(x, q, deg, True), deg)
            for y in xs[i + 1:]:
                rhs = _xtrunc(rhs * _poch_inf_x(x * y * (t * t), q * q,
                                                deg), deg)
                rhs = _xtrunc(rhs * _poch_inf_x(x * y, q * q, deg, True),
                              deg)
    yield _xtrunc(_as_poly(lhs)._embed(tuple(sorted(xvars(n)))), deg), \
        _xtrunc(rhs._embed(tuple(sorted(xvars(n)))), deg)


def verify_unbounded(kind, n, degree, npoints=3, seed=0, symbolic=None):
    """Compare the three unbounded Littlewood identities below total
    x-degree `degree`; symbolic may name 'a' for the a-parameter cases."""
    if kind not in UNBOUNDED_KINDS:
        raise ValueError("unknown kind %r" % (kind,))
    names = ["q", "t"] if (kind == "Kawanaka" or symbolic == "a") \
        else ["a", "q", "t"]
    return _run_points("unbounded%s" % kind, {"n": n, "degree": degree},
                       names, npoints, seed, symbolic,
                       lambda pt: _unbounded_sides(kind, n, degree, pt))


# ---------------------------------------------------------------------------
# the coefficient-extraction cross-check
# ---------------------------------------------------------------------------

def _fik_sides(n, m, pt):
    q, t = pt["q"], pt["t"]
    params = {"q": q, "t": t, "t0": pt["t0"], "t1": pt["t1"],
              "t2": pt["t2"], "t3": pt["t3"]}
    poly = _xpref(n, m) * koornwinder_k(_rect(m, n), n, params)
    coeffs = macdonald_expand(poly, n, q, t)
    swapped = dict(params, q=t, t=q)
    for la in partitions_in_box(2 * m, n):
        lhs = coeffs.get(la, Fraction(0))
        if m == 0:
            rhs = Fraction(1) if not la.intparts() else Fraction(0)
        else:
            rhs = spow(Fraction(-1), sum(la.intparts())) \
                * virtual_integral_macdonald(conjugate(la), m, t, q,
                                             swapped)
        yield LaurentPoly.const(lhs), LaurentPoly.const(rhs)


def verify_prop_fik(n, m, npoints=2, seed=0):
    """P-basis coefficients of the rectangular Koornwinder polynomial
    against virtual integrals with q and t swapped."""
    return _run_points("propFIK", {"n": n, "m": m},
                       ["q", "t", "t0", "t1", "t2", "t3"],
                       npoints, seed, None,
                       lambda pt: _fik_sides(n, m, pt))


# ---------------------------------------------------------------------------
# closed-form virtual integral evaluations
# ---------------------------------------------------------------------------

def _pad(la, n):
    ps = la.intparts()
    return ps + (0,) * (n - len(ps))


def _eval_sides(kind, n, maxsize, pt):
    if kind == "newvirtual":
        q, t2, t3 = pt["q"], pt["t2"], pt["t3"]
        params = {"q": q, "t": Fraction(0), "t0": Fraction(0),
                  "t1": Fraction(0), "t2": t2, "t3": t3}
        for size in range(maxsize + 1):
            for la in partitions_in_box(size, 2 * n):
                if sum(la.intparts()) != size:
                    continue
                lhs = virtual_integral_macdonald(la, n, q, Fraction(0),
                                                 params)
                rhs = h_gen(conjugate(la), 2 * n, -t2, -t3, q)
                yield LaurentPoly.const(lhs), LaurentPoly.const(rhs)
        return

    q, th = pt["q"], pt["th"]
    t = th * th
    if kind == "IKnnew":
        params = {"q": q, "t": t, "t0": Fraction(-1), "t1": q,
                  "t2": th, "t3": -th}
        for la in partitions_in_box(maxsize, maxsize):
            if sum(la.intparts()) > maxsize:
                continue
            lhs = virtual_integral_macdonald(la, n, q, t, params)
            ceil_half = Partition(tuple((p + 1) // 2
                                        for p in la.intparts()))
            rhs = spow(Fraction(-1), sum(la.intparts())) \
                * poch2(spow(t, 2 * n), q * q, t, ceil_half) \
                / poch2(q * spow(t, 2 * n - 1), q * q, t, ceil_half) \
                / b_family(la, q, t, "ea")
            yield LaurentPoly.const(lhs), LaurentPoly.const(rhs)
        return

    if kind == "BD":
        top, kappa = 2 * n, 2 * n
    else:  # BD2
        top, kappa = 2 * n + 1, 2 * n + 1
    for la in partitions_in_box(maxsize, top):
        ps = la.intparts()
        if sum(ps) > maxsize:
            continue
        padded = _pad(la, top)
        tilde_even = all((p - padded[-1]) % 2 == 0 for p in padded)
        if tilde_even:
            closed = a_coeff(Partition.from_doubled(padded), kappa, q, t)
        else:
            closed = Fraction(0)
        members = []
        if kind == "BD":
            members.append(virtual_integral_macdonald(
                la, n, q, t, {"q": q, "t": t, "t0": Fraction(1),
                              "t1": Fraction(-1), "t2": th, "t3": -th}))
            if n >= 2:
                members.append(
                    spow(Fraction(-1), padded[-1])
                    * virtual_integral_macdonald(
                        la, n - 1, q, t,
                        {"q": q, "t": t, "t0": t, "t1": -t,
                         "t2": th, "t3": -th},
                        extra_letters=(Fraction(1), Fraction(-1))))
        else:
            members.append(virtual_integral_macdonald(
                la, n, q, t, {"q": q, "t": t, "t0": Fraction(-1),
                              "t1": t, "t2": th, "t3": -th},
                extra_letters=(Fraction(1),)))
            members.append(
                spow(Fraction(-1), padded[-1])
                * virtual_integral_macdonald(
                    la, n, q, t, {"q": q, "t": t, "t0": Fraction(1),
                                  "t1": -t, "t2": th, "t3": -th},
                    extra_letters=(Fraction(-1),)))
        for mem in members:
            yield LaurentPoly.const(mem), LaurentPoly.const(closed)


def verify_evaluation(kind, n, maxsize=6, npoints=3, seed=0):
    """Closed-form virtual integral evaluations over all partitions of
    size at most maxsize."""
    if kind not in EVALUATIONS:
        raise ValueError("unknown evaluation %r" % (kind,))
    names = ["q", "t2", "t3"] if kind == "newvirtual" else ["q", "th"]
    return _run_points(kind, {"n": n, "maxsize": maxsize},
                       names, npoints, seed, None,
                       lambda pt: _eval_sides(kind, n, maxsize, pt))


# ---------------------------------------------------------------------------
# q-series: sum sides versus eta/theta products
# ---------------------------------------------------------------------------

def verify_rr(family, n, m, order):
    """One Rogers-Ramanujan-type identity as a q-series to the given
    order, with a letters-exhaustion certificate."""
    t0 = time.time()
    s = rr_sum_side(family, n, m, order)
    s_more = rr_sum_side(family, n, m, order, nletters=order + 1)
    p = rr_product_side(family, n, m, order)
    cert = _witness(s, s_more) is None
    w = _witness(s, p)
    points = [{"point": "series to q^%d" % order, "equal": w is None},
              {"point": "letters certificate", "equal": cert}]
    return _report("rr%s" % family, {"n": n, "m": m, "order": order},
                   [], points, w, t0)


def verify_character(kind, n, m, order=5):
    """Bounded character sum against the finite-N Hall-Littlewood side
    for N in {2, 3}, certified by the N vs N+1 stabilization order.

    The N=3 certificate (first difference of the N=3 and N=4 sides) is
    required to reach t^4."""
    t0 = time.time()
    s = char_sum_side(kind, n, m, order)
    f = {N: char_hl_limit_side(kind, n, m, N, order) for N in (2, 3, 4)}
    points = []
    witness = None
    required = Fraction(4)

    def stab_order(N):
        diff = f[N] - f[N + 1]
        if diff.is_zero():
            return Fraction(order)
        return Fraction(min(e[diff.vars.index("t")]
                            for e in diff.terms.keys()
                            if diff.terms[e]), GRID)

    ns = [2, 3]
    while stab_order(ns[-1]) < required:
        nxt = ns[-1] + 1
        ns.append(nxt)
        if nxt + 1 not in f:
            f[nxt + 1] = char_hl_limit_side(kind, n, m, nxt + 1, order)
    for N in ns:
        cert = stab_order(N)
        cut = min(cert, Fraction(order))
        w = _witness(truncate_var(s, "t", cut),
                     truncate_var(f[N], "t", cut))
        points.append({"point": "N=%d to t^%s" % (N, cut),
                       "equal": w is None})
        if w is not None and witness is None:
            witness = w
    best = stab_order(ns[-1])
    points.append({"point": "certified order %s >= %s" % (best, required),
                   "equal": best >= required})
    return _report("character%s" % kind, {"n": n, "m": m, "order": order},
                   [], points, witness, t0)


def verify_appendix(which, order=7, radius=3):
    """One of the two lattice-sum Macdonald identities as a t-series,
    with an r-truncation soundness certificate."""
    t0 = time.time()
    s = macdonald_identity_sum(which, 1, radius, order)
    s_more = macdonald_identity_sum(which, 1, radius + 1, order)
    p = macdonald_identity_product(which, 1, order)
    cert = _witness(s, s_more) is None
    w = _witness(s, p)
    points = [{"point": "series to t^%d" % order, "equal": w is None},
              {"point": "radius certificate R=%d vs R=%d"
               % (radius, radius + 1), "equal": cert}]
    return _report("appendix%s" % which, {"order": order, "radius": radius},
                   [], points, w, t0)

# ---------------------------------------------------------------------------
# hypergeometric transformation cross-checks
# ---------------------------------------------------------------------------

PROP_KINDS = ("reverse", "duality", "sears", "prop43to21", "propPhinew2",
              "ksquare", "ksquare2")

_PROP_NAMES = {
    "reverse": ["a1", "a2", "b1", "b2", "q", "t", "z"],
    "duality": ["a1", "a2", "b1", "b2", "q", "t", "z"],
    "sears": ["a", "b", "c", "d", "e", "q", "t"],
    "prop43to21": ["a", "qh", "t"],
    "propPhinew2": ["a", "q", "t"],
    "ksquare": ["q", "t", "t0", "t1", "t2", "t3", "z"],
    "ksquare2": ["qh", "t2", "t3", "th", "zh"],
}


def _principal_spec(poly, n, z, t):
    """Evaluate a Laurent polynomial at x_i = z t^(i-1)."""
    for i in range(1, n + 1):
        poly = poly.substitute("x%d" % i, z * spow(t, i - 1))
    return sum(poly.terms.values(), Fraction(0)) \
        if isinstance(poly, LaurentPoly) else poly


def _props_sides(kind, n, m, pt):
    if kind in ("reverse", "duality"):
        pair = reverse_pair if kind == "reverse" else duality_pair
        lhs, rhs = pair([pt["a1"], pt["a2"]], [pt["b1"], pt["b2"]],
                        m, n, pt["q"], pt["t"], pt["z"])
    elif kind == "sears":
        lhs, rhs = sears_pair(pt["a"], pt["b"], pt["c"], pt["d"], pt["e"],
                              m, n, pt["q"], pt["t"])
    elif kind == "prop43to21":
        lhs, rhs = prop43to21_pair(pt["a"], m, n, pt["qh"], pt["t"])
    elif kind == "propPhinew2":
        lhs, rhs = phinew2_pair(pt["a"], m, n, pt["q"], pt["t"])
    elif kind == "ksquare":
        q, t, z = pt["q"], pt["t"], pt["z"]
        tr = (pt["t0"], pt["t1"], pt["t2"], pt["t3"])
        lhs = awn_rhs(z, m, n, q, t, tr)
        yield LaurentPoly.const(lhs), \
            LaurentPoly.const(kmaxrect_rhs(z, m, n, q, t, tr))
        if n <= 2 and m <= 3:
            params = {"q": q, "t": t, "t0": tr[0], "t1": tr[1],
                      "t2": tr[2], "t3": tr[3]}
            direct = _principal_spec(
                koornwinder_k(_rect(m, n), n, params), n, z, t)
            yield LaurentPoly.const(lhs), LaurentPoly.const(direct)
        return
    else:  # ksquare2
        zh, qh, th = pt["zh"], pt["qh"], pt["th"]
        t2, t3 = pt["t2"], pt["t3"]
        lhs = half_ksquare_rhs(zh, m, n, qh, th, t2, t3)
        poly = k_bn(_half_rect(m, n), n, qh, th * th, t2, t3)
        roots = {"x%d" % i: zh * spow(th, i - 1) for i in range(1, n + 1)}
        yield LaurentPoly.const(lhs), \
            LaurentPoly.const(eval_half(poly, roots))
        return
    yield LaurentPoly.const(lhs), LaurentPoly.const(rhs)


def verify_props(kind, n, m, npoints=3, seed=0):
    """Hypergeometric transformation pairs and the principal
    specializations of the rectangular (Macdonald-)Koornwinder
    polynomials.  For ksquare2 the bound m counts half steps."""
    if kind not in PROP_KINDS:
        raise ValueError("unknown props kind %r" % (kind,))
    return _run_points("props%s" % kind, {"n": n, "m": m},
                       _PROP_NAMES[kind], npoints, seed, None,
                       lambda pt: _props_sides(kind, n, m, pt))
