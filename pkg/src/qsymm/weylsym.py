"""Hall-Littlewood polynomials attached to the classical root systems
(hyperoctahedral symmetry), classical group characters as determinant
ratios, and bookkeeping for W-invariant Laurent polynomials.

The workhorse is the sign-flip ("epsilon") sum: summing the BC-type
kernel Phi over all sign choices against an ordinary Hall-Littlewood
polynomial.  Each summand is a rational function but the sum is a Laurent
polynomial; we clear the universal denominator

    U = prod_i (1 - x_i^2) prod_{i<j} (1 - x_i x_j)(x_i - x_j)

factor by factor (every summand's denominator equals a subproduct of U
up to monomial units) and finish with one exact division.
"""

from fractions import Fraction
from itertools import product as iproduct, permutations

from .core import LaurentPoly, exact_divide, DegenerateError
from .partitions import Partition
from .qfact import poch, spow
from .symfunc import eval_p, psi_hl

__all__ = [
    "xvars", "mw_sym", "laurent_to_mw", "mw_to_laurent",
    "vandermonde", "det_poly",
    "hl_bc", "hl_b", "hl_c", "hl_d", "hl_bc_wsum", "hl_bc_det0",
    "schur", "symplectic_schur", "odd_orthogonal_schur",
    "even_orthogonal_schur", "bar_last",
]


def xvars(n):
    return ["x%d" % i for i in range(1, n + 1)]


def _xmono(n, exps2):
    """Monomial with doubled exponents (so halves stay integral)."""
    vars = tuple(sorted(xvars(n)))
    order = xvars(n)
    e = [0] * n
    for i, d in enumerate(exps2):
        e[vars.index(order[i])] = 2 * d
    return LaurentPoly(vars, {tuple(e): Fraction(1)})


# ---------------------------------------------------------------------------
# W-invariant monomial sums
# ---------------------------------------------------------------------------

def mw_sym(la, n):
    """m^W_la: the sum of x^alpha over the distinct images of la under
    permutations and sign flips."""
    if not isinstance(la, Partition):
        la = Partition(la)
    p2 = la.parts2 + (0,) * (n - len(la.parts2))
    if len(p2) > n:
        return LaurentPoly.zero()
    seen = set()
    for perm in set(permutations(p2)):
        nz = [i for i, d in enumerate(perm) if d]
        for signs in iproduct(*[(1, -1)] * len(nz)):
            img = list(perm)
            for i, s in zip(nz, signs):
                img[i] *= s
            seen.add(tuple(img))
    vars = tuple(sorted(xvars(n)))
    order = xvars(n)
    terms = {}
    for img in seen:
        e = [0] * n
        for i, d in enumerate(img):
            e[vars.index(order[i])] = 2 * d
        terms[tuple(e)] = Fraction(1)
    return LaurentPoly(vars, terms)


def laurent_to_mw(poly, n):
    """Expand a W-invariant Laurent polynomial in the m^W basis."""
    poly = poly._embed(tuple(sorted(xvars(n))))
    out = {}
    for e, c in poly.terms.items():
        if any(x % 2 for x in e):
            raise ValueError("exponents off the half-integer lattice")
        d2 = tuple(x // 2 for x in e)
        if all(d2[i] >= d2[i + 1] >= 0 for i in range(n - 1)) and \
                (not d2 or d2[-1] >= 0):
            out[Partition.from_doubled(d2)] = c
    return out


def mw_to_laurent(coeffs, n):
    out = LaurentPoly.zero()
    for la, c in coeffs.items():
        out = out + mw_sym(la, n) * c
    return out


# ---------------------------------------------------------------------------
# determinants and Weyl denominators
# ---------------------------------------------------------------------------

def det_poly(entries):
    """Determinant of a small matrix of LaurentPoly, by Leibniz."""
    n = len(entries)
    out = LaurentPoly.zero()
    for perm in permutations(range(n)):
        sgn = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sgn = -sgn
        term = LaurentPoly.const(sgn)
        for i in range(n):
            term = term * entries[i][perm[i]]
        out = out + term
    return out


def vandermonde(n, kind):
    """The Weyl denominators Delta_B, Delta_C, Delta_D."""
    xs = [LaurentPoly.var(v) for v in xvars(n)]
    out = LaurentPoly.one()
    if kind == "B":
        for x in xs:
            out = out * (LaurentPoly.one() - x)
    elif kind == "C":
        for x in xs:
            out = out * (LaurentPoly.one() - x * x)
    elif kind != "D":
        raise ValueError("kind must be B, C or D")
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (xs[i] - xs[j]) * (xs[i] * xs[j] - 1)
    return out


# ---------------------------------------------------------------------------
# the universal denominator and factor matching
# ---------------------------------------------------------------------------

def _u_factors(n):
    xs = [LaurentPoly.var(v) for v in xvars(n)]
    fs = []
    for i in range(n):
        fs.append(LaurentPoly.one() - xs[i] * xs[i])
    for i in range(n):
        for j in range(i + 1, n):
            fs.append(LaurentPoly.one() - xs[i] * xs[j])
            fs.append(xs[i] - xs[j])
    return fs


def _match_unit(image, base):
    """If image == unit * base for a monomial unit, return it, else None."""
    if len(image.terms) != len(base.terms):
        return None
    a, b = image.compact(), base.compact()
    a = a._embed(tuple(sorted(set(a.vars) | set(b.vars))))
    b = b._embed(a.vars)
    e_a, e_b = min(a.terms), min(b.terms)
    shift = tuple(x - y for x, y in zip(e_a, e_b))
    coeff = a.terms[e_a] / b.terms[e_b]
    for e, c in b.terms.items():
        ee = tuple(x + y for x, y in zip(e, shift))
        if a.terms.get(ee) != coeff * c:
            return None
    return LaurentPoly(a.vars, {shift: coeff})


def _quotient_by_factors(n, den_factors):
    """Return (unit, kept) with prod(den_factors) * unit^-1 ... concretely:
    U / prod(den_factors) = unit * prod(kept) where each den factor is a
    monomial multiple of a distinct U factor."""
    remaining = _u_factors(n)
    unit = LaurentPoly.one()
    for f in den_factors:
        hit = None
        for k, base in enumerate(remaining):
            u = _match_unit(f, base)
            if u is not None:
                hit = (k, u)
                break
        if hit is None:
            raise ValueError("denominator factor does not divide U: %r" % f)
        k, u = hit
        remaining.pop(k)
        unit = unit * u ** (-1)
    kept = LaurentPoly.one()
    for f in remaining:
        kept = kept * f
    return unit, kept


def _u_poly(n):
    out = LaurentPoly.one()
    for f in _u_factors(n):
        out = out * f
    return out


# ---------------------------------------------------------------------------
# type-A Hall-Littlewood at monomial letters (with half-partition support)
# ---------------------------------------------------------------------------

def _hl_at_letters(la, letters, t, memo):
    """P_la(letters; t); for a half-partition la (necessarily of full
    length) the half row is split off as prod letters^(1/2)."""
    if la.is_half():
        if len(la) != len(letters):
            raise ValueError("half-partition must use all letters")
        mono = LaurentPoly.one()
        for x in letters:
            half = LaurentPoly(x.vars,
                               {tuple(e // 2 for e in next(iter(x.terms))):
                                Fraction(1)})
            if half * half != x:
                raise ValueError("letter is not a perfect square monomial")
            mono = mono * half
        base = Partition.from_doubled(tuple(p - 1 for p in la.parts2))
        return mono * _hl_at_letters(base, letters, t, memo)
    val = eval_p(la, letters, lambda l, m: psi_hl(l, m, lambda k: spow(t, k)),
                 memo)
    return val if isinstance(val, LaurentPoly) else LaurentPoly.const(val)


# ---------------------------------------------------------------------------
# Hall-Littlewood polynomials for the classical root systems
# ---------------------------------------------------------------------------

def _eps_term(n, eps, t, t2, t3, payload):
    """Phi(x^eps; t, t2, t3) * payload, multiplied through by U (so the
    result is polynomial).  payload is a LaurentPoly."""
    xs = [LaurentPoly.var(v) for v in xvars(n)]
    ys = [xs[i] if eps[i] > 0 else xs[i] ** (-1) for i in range(n)]
    num = LaurentPoly.one()
    for y in ys:
        num = num * (LaurentPoly.one() - y * t2) * (LaurentPoly.one() - y * t3)
    den = []
    for y in ys:
        den.append(LaurentPoly.one() - y * y)
    for i in range(n):
        for j in range(i + 1, n):
            num = num * (LaurentPoly.one() - ys[i] * ys[j] * t)
            den.append(LaurentPoly.one() - ys[i] * ys[j])
    unit, kept = _quotient_by_factors(n, den)
    return num * unit * kept * payload


def hl_bc(la, n, t, t2, t3, sign_filter=None, memo=None):
    """P^{(BC_n)}_la(x; t, t2, t3) via the sign-flip sum.

    la may be an integer partition of length <= n or a half-partition of
    length n.  ``sign_filter`` restricts the epsilon sum (used for D_n).
    """
    if not isinstance(la, Partition):
        la = Partition(la)
    if memo is None:
        memo = {}
    xs = [LaurentPoly.var(v) for v in xvars(n)]
    total = LaurentPoly.zero()
    for eps in iproduct(*[(1, -1)] * n):
        if sign_filter is not None and not sign_filter(eps):
            continue
        inv_letters = [xs[i] ** (-eps[i]) for i in range(n)]
        payload = _hl_at_letters(la, inv_letters, t,
                                 memo.setdefault(eps, {}))
        if payload.is_zero():
            continue
        total = total + _eps_term(n, eps, t, t2, t3, payload)
    poly = exact_divide(total, _u_poly(n))
    norm = poch(t2 * t3, t, n - len(la))
    if not norm:
        raise DegenerateError("(t2 t3; t)_{n-l} vanished")
    return poly * (Fraction(1) / norm if not hasattr(norm, "var")
                   else norm ** (-1))


def hl_b(la, n, t, t2):
    """P^{(B_n)}_la(x; t, t2) = P^{(BC_n)}_la(x; t, t2, -1)."""
    return hl_bc(la, n, t, t2, Fraction(-1))


def hl_c(la, n, t, s):
    """P^{(C_n)}_la(x; t, t2) with t2 = s^2, via (t2, t3) = (s, -s)."""
    return hl_bc(la, n, t, s, -s)


def hl_d(la, n, t):
    """P^{(D_n)}_la(x; t): even sign flips, (t2, t3) = (-1, 1), doubled
    when l(la) < n."""
    if not isinstance(la, Partition):
        la = Partition(la)
    even = lambda eps: (sum(1 for e in eps if e < 0) % 2 == 0)
    out = hl_bc(la, n, t, Fraction(-1), Fraction(1), sign_filter=even)
    if len(la) < n:
        out = out * 2
    return out


def _mono_half_pow(mono, num2):
    """Raise a Laurent monomial to the power num2/2."""
    (e, c), = mono.terms.items()
    if c != 1:
        raise ValueError("half powers only for unit monomials")
    if any((x * num2) % 2 for x in e):
        raise ValueError("half power leaves the exponent lattice")
    return LaurentPoly(mono.vars, {tuple(x * num2 // 2 for x in e):
                                   Fraction(1)})


def hl_bc_wsum(la, n, t, t2, t3):
    """Small-n oracle: the full hyperoctahedral symmetrization formula."""
    if not isinstance(la, Partition):
        la = Partition(la)
    xs = [LaurentPoly.var(v) for v in xvars(n)]
    p2 = la.parts2 + (0,) * (n - len(la.parts2))
    total = LaurentPoly.zero()
    for perm in permutations(range(n)):
        for eps in iproduct(*[(1, -1)] * n):
            # w sends x_i to x_{perm(i)}^{eps_i}
            ws = [xs[perm[i]] ** eps[i] for i in range(n)]
            mono = LaurentPoly.one()
            for i in range(n):
                if p2[i]:
                    mono = mono * _mono_half_pow(ws[i], -p2[i])
            num = LaurentPoly.one()
            den = []
            for i in range(n):
                num = num * (LaurentPoly.one() - ws[i] * t2) \
                          * (LaurentPoly.one() - ws[i] * t3)
                den.append(LaurentPoly.one() - ws[i] * ws[i])
            for i in range(n):
                for j in range(i + 1, n):
                    num = num * (ws[i] * t - ws[j]) \
                              * (LaurentPoly.one() - ws[i] * ws[j] * t)
                    den.append(ws[i] - ws[j])
                    den.append(LaurentPoly.one() - ws[i] * ws[j])
            unit, kept = _quotient_by_factors(n, den)
            total = total + mono * num * unit * kept
    poly = exact_divide(total, _u_poly(n))
    # v_la(t) over the multiplicities of la padded with zeros
    from .partitions import mult
    norm = poch(t2 * t3, t, n - len(la))
    vals = list(la.parts)
    counts = {}
    for v in vals + [0] * (n - len(vals)):
        counts[v] = counts.get(v, 0) + 1
    for v, c in counts.items():
        f = Fraction(1)
        for k in range(1, c + 1):
            f = f * (1 - spow(t, k)) / (1 - t)
        norm = norm * f
    if not norm:
        raise DegenerateError("W-sum normalization vanished")
    return poly * (Fraction(1) / norm if not hasattr(norm, "var")
                   else norm ** (-1))


def hl_bc_det0(la, n, t2, t3):
    """Oracle for t = 0: determinant form of P^{(BC_n)}_la(x; 0, t2, t3)."""
    if not isinstance(la, Partition):
        la = Partition(la)
    xs = [LaurentPoly.var(v) for v in xvars(n)]
    lam = list(la.intparts()) + [0] * (n - len(la))
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            e1 = LaurentPoly.monomial(1, **{"x%d" % (i + 1):
                                            -lam[j] + j})
            t1 = e1 * (LaurentPoly.one() - xs[i] * t2) \
                    * (LaurentPoly.one() - xs[i] * t3)
            e2 = LaurentPoly.monomial(1, **{"x%d" % (i + 1):
                                            lam[j] + 2 * n - j - 2})
            t2m = e2 * (xs[i] - t2) * (xs[i] - t3)
            row.append(t1 - t2m)
        rows.append(row)
    norm = poch(t2 * t3, Fraction(0), n - len(la))
    if not norm:
        raise DegenerateError("(t2 t3; 0)_{n-l} vanished")
    return exact_divide(det_poly(rows), vandermonde(n, "C")) * (1 / norm)


# ---------------------------------------------------------------------------
# classical characters
# ---------------------------------------------------------------------------

def schur(la, n):
    """Type-A Schur polynomial s_la(x_1..x_n) (Hall-Littlewood at t=0)."""
    from .symfunc import hall_littlewood
    return hall_littlewood(la if isinstance(la, Partition)
                           else Partition(la), n, Fraction(0))


def _det_ratio(n, exps_a, exps_b, kind):
    """det(x_i^{a_j} - x_i^{b_j}) / Delta_kind."""
    xs = xvars(n)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            a = LaurentPoly.monomial(1, **{xs[i]: exps_a[j]})
            b = LaurentPoly.monomial(1, **{xs[i]: exps_b[j]})
            row.append(a - b)
        rows.append(row)
    return exact_divide(det_poly(rows), vandermonde(n, kind))


def _intparts_padded(la, n):
    ps = (la if isinstance(la, Partition) else Partition(la)).intparts()
    return list(ps) + [0] * (n - len(ps))


def symplectic_schur(la, n):
    """sp_{2n, la}(x) = det(x_i^{-la_j+j-1} - x_i^{la_j+2n-j+1})/Delta_C."""
    lam = _intparts_padded(la, n)
    a = [-lam[j] + j for j in range(n)]
    b = [lam[j] + 2 * n - j for j in range(n)]
    return _det_ratio(n, a, b, "C")


def odd_orthogonal_schur(la, n):
    """so_{2n+1, la}(x) = det(x_i^{-la_j+j-1} - x_i^{la_j+2n-j})/Delta_B."""
    lam = _intparts_padded(la, n)
    a = [-lam[j] + j for j in range(n)]
    b = [lam[j] + 2 * n - j - 1 for j in range(n)]
    return _det_ratio(n, a, b, "B")


def even_orthogonal_schur(la, n):
    """so_{2n, la}(x) as (det^+ - det^-) / (2 Delta_D), where det^{pm} has
    entries x_i^{la_j+2n-j-1} +- x_i^{-la_j+j-1}."""
    lam = _intparts_padded(la, n)
    xs = xvars(n)

    def build(sign):
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                a = LaurentPoly.monomial(1, **{xs[i]: lam[j] + 2 * n - j - 2})
                b = LaurentPoly.monomial(1, **{xs[i]: -lam[j] + j})
                row.append(a + b * sign)
            rows.append(row)
        return det_poly(rows)

    return exact_divide(build(1) - build(-1), vandermonde(n, "D") * 2)


def bar_last(poly, n):
    """Invert the last variable: x_n -> 1/x_n."""
    return poly.substitute("x%d" % n, LaurentPoly.var("x%d" % n) ** (-1))
