"""Koornwinder polynomials via the q-difference operator, the virtual
integral (coefficient of K_0), and the two-parameter (R,S) family sitting
between Koornwinder and Hall-Littlewood polynomials.

K_la is computed by assembling the matrix of Koornwinder's operator on
the W-invariant monomials indexed by the dominance ideal of la and
back-substituting against the eigenvalue read off the diagonal.  When an
eigenvalue collision makes the solve degenerate, the computation is
retried with one parameter kept symbolic and substituted at the end;
this also implements parameter limits such as t -> 0 exactly.
"""

from fractions import Fraction
import hashlib
import os

from .core import (LaurentPoly, RatF, exact_divide, DegenerateError,
                   _scalar_inv)
from .partitions import Partition, dominance_leq, partitions_in_box
from .symfunc import laurent_to_mbasis, macdonald_in_mbasis
from .weylsym import (xvars, mw_sym, laurent_to_mw, _match_unit, bar_last)

__all__ = [
    "koornwinder_table", "koornwinder_k", "solve_with_ladder",
    "virtual_integral", "virtual_integral_macdonald",
    "k_bn", "prs_macdonald", "dominance_ideal",
    "macdonald_expand", "KTable",
]


# ---------------------------------------------------------------------------
# the operator
# ---------------------------------------------------------------------------

def _uk_factors(n, q):
    xs = [LaurentPoly.var(v) for v in xvars(n)]
    fs = []
    for i in range(n):
        fs.append(LaurentPoly.one() - xs[i] * xs[i])
        fs.append(LaurentPoly.one() - xs[i] * xs[i] * q)
        fs.append(xs[i] * xs[i] - q)
    for i in range(n):
        for j in range(i + 1, n):
            fs.append(LaurentPoly.one() - xs[i] * xs[j])
            fs.append(xs[i] - xs[j])
    return fs


def _clear_denominator(base_factors, den_factors):
    """(unit, kept) with prod(base) / prod(den) = unit * prod(kept)."""
    remaining = list(base_factors)
    unit = LaurentPoly.one()
    for f in den_factors:
        hit = None
        for k, base in enumerate(remaining):
            u = _match_unit(f, base)
            if u is not None:
                hit = (k, u)
                break
        if hit is None:
            raise ValueError("denominator factor %r does not divide the "
                             "universal denominator" % f)
        k, u = hit
        remaining.pop(k)
        unit = unit * u ** (-1)
    kept = LaurentPoly.one()
    for f in remaining:
        kept = kept * f
    return unit, kept


def _phi_times_u(n, i, sign, q, t, tr):
    """phi_i^{+/-} multiplied by the universal denominator U."""
    xs = [LaurentPoly.var(v) for v in xvars(n)]
    y = xs[i] if sign > 0 else xs[i] ** (-1)
    num = LaurentPoly.one()
    for c in tr:
        num = num * (LaurentPoly.one() - y * c)
    den = [LaurentPoly.one() - y * y,
           LaurentPoly.one() - y * y * q]
    for j in range(n):
        if j == i:
            continue
        num = num * (LaurentPoly.one() - y * xs[j] * t) \
                  * (LaurentPoly.one() - y * xs[j] ** (-1) * t)
        den.append(LaurentPoly.one() - y * xs[j])
        den.append(LaurentPoly.one() - y * xs[j] ** (-1))
    unit, kept = _clear_denominator(_uk_factors(n, q), den)
    return num * unit * kept


def _shift(poly, i, q, sign):
    """T_{q,x_i}^{sign}: substitute x_i -> q^{sign} x_i."""
    v = "x%d" % (i + 1)
    val = LaurentPoly.var(v) * (q if sign > 0 else _scalar_inv(q))
    return poly.substitute(v, val)


class _Operator:
    def __init__(self, n, q, t, tr):
        self.n = n
        self.q = q
        self.phis = [(i, s, _phi_times_u(n, i, s, q, t, tr))
                     for i in range(n) for s in (1, -1)]
        u = LaurentPoly.one()
        for f in _uk_factors(n, q):
            u = u * f
        self.u = u

    def apply(self, f):
        total = LaurentPoly.zero()
        for i, s, phi_u in self.phis:
            total = total + phi_u * (_shift(f, i, self.q, s) - f)
        return exact_divide(total, self.u)


# ---------------------------------------------------------------------------
# triangular solve on dominance ideals
# ---------------------------------------------------------------------------

def dominance_ideal(shapes, n):
    """All partitions mu (length <= n) with mu <= la for some la in
    shapes, in the unrestricted dominance order (prefix sums)."""
    shapes = [la if isinstance(la, Partition) else Partition(la)
              for la in shapes]
    if not shapes:
        return []
    maxpart = max((la[1] for la in shapes), default=0)
    out = [mu for mu in partitions_in_box(int(maxpart), n)
           if any(dominance_leq(mu, la) for la in shapes)]
    return sorted(out, key=lambda p: (p.size(), p.parts2))


def _op_matrix(n, ideal, q, t, tr):
    op = _Operator(n, q, t, tr)
    index = {la: k for k, la in enumerate(ideal)}
    cols = {}
    for la in ideal:
        img = op.apply(mw_sym(la, n))
        coeffs = laurent_to_mw(img, n)
        for nu in coeffs:
            if nu not in index:
                raise AssertionError(
                    "operator image escaped the dominance ideal: %r from %r"
                    % (nu, la))
        cols[la] = coeffs
    return cols


def koornwinder_table(n, top, q, t, tr):
    """K_mu for every mu in the dominance ideal of ``top``.

    Returns {Partition: LaurentPoly}.  Raises DegenerateError on an
    eigenvalue collision at this parameter point.
    """
    top = top if isinstance(top, Partition) else Partition(top)
    ideal = dominance_ideal([top], n)
    cols = _op_matrix(n, ideal, q, t, tr)
    order = list(ideal)  # ascending (size, lex)
    table = {}
    for k, la in enumerate(order):
        e_la = cols[la].get(la, 0)
        coeff = {la: Fraction(1)}
        for nu in reversed(order[:k]):
            if not dominance_leq(nu, la):
                continue
            s = 0
            for mu, a in coeff.items():
                s = s + cols[mu].get(nu, 0) * a
            gap = e_la - cols[nu].get(nu, 0)
            if not gap:
                raise DegenerateError(
                    "eigenvalue collision between %r and %r" % (la, nu))
            coeff[nu] = s * _scalar_inv(gap)
        poly = LaurentPoly.zero()
        for mu, a in coeff.items():
            if a:
                poly = poly + mw_sym(mu, n) * a
        table[la] = poly
    return table


_LADDER_DEFAULT = ("t3", "t2", "t", "q")


def solve_with_ladder(n, top, params, ladder=_LADDER_DEFAULT, cache=None):
    """Compute the Koornwinder table at numeric parameters, retrying with
    one parameter symbolic (and substituting its value at the end) when
    the plain solve collides.

    ``params`` maps 'q', 't', 't0'..'t3' to Fractions.  ``ladder`` lists
    the parameter names eligible for the symbolic retry; a name is only
    usable if no other parameter value is tied to it by the caller.
    """
    key = None
    if cache is not None:
        key = cache.key(n, top, params)
        hit = cache.get(key)
        if hit is not None:
            return hit
    attempts = [None] + [name for name in ladder if name in params]
    last_err = None
    for name in attempts:
        scal = dict(params)
        if name is not None:
            scal[name] = RatF.gen(name)
        try:
            table = koornwinder_table(
                n, top, scal["q"], scal["t"],
                (scal["t0"], scal["t1"], scal["t2"], scal["t3"]))
            if name is not None:
                value = params[name]
                table = {la: p.map_coeff(
                    lambda c, _v=value, _n=name:
                    c.subs(_v) if isinstance(c, RatF) and c.var == _n else c)
                    for la, p in table.items()}
            if cache is not None:
                cache.put(key, table)
            return table
        except (DegenerateError, ZeroDivisionError) as err:
            last_err = err
            continue
    raise DegenerateError(
        "Koornwinder solve degenerate at this point even after symbolic "
        "retries (%s); re-draw the parameter point" % last_err)


def koornwinder_k(la, n, params, ladder=_LADDER_DEFAULT, cache=None):
    la = la if isinstance(la, Partition) else Partition(la)
    return solve_with_ladder(n, la, params, ladder, cache)[la]


# ---------------------------------------------------------------------------
# virtual integral
# ---------------------------------------------------------------------------

def virtual_integral(f, n, params, ladder=_LADDER_DEFAULT, cache=None):
    """[K_0] f for a W-invariant Laurent polynomial f in x_1..x_n."""
    cur = laurent_to_mw(f, n)
    cur = {la: c for la, c in cur.items() if c}
    if not cur:
        return Fraction(0)
    tops = [la for la in cur
            if not any(la != nu and dominance_leq(la, nu) for nu in cur)]
    ideal = dominance_ideal(tops, n)
    biggest = max(ideal, key=lambda p: (p.size(), p.parts2))
    table = solve_with_ladder(n, biggest, params, ladder, cache)
    for la in sorted(ideal, key=lambda p: (p.size(), p.parts2),
                     reverse=True):
        if la.size() == 0:
            continue
        a = cur.get(la, 0)
        if not a:
            continue
        if la not in table:
            table.update(solve_with_ladder(n, la, params, ladder, cache))
        for mu, c in laurent_to_mw(table[la], n).items():
            cur[mu] = cur.get(mu, 0) - a * c
        cur[la] = 0
    return cur.get(Partition(()), Fraction(0))


def virtual_integral_macdonald(mu, n, q, t, params, ladder=_LADDER_DEFAULT,
                               cache=None, extra_letters=()):
    """I_K^{(n)} of P_mu(x_1^{+-1},...,x_n^{+-1}, extra...; q, t)."""
    from .symfunc import eval_p, psi_branch
    letters = []
    for i in range(1, n + 1):
        letters.append(LaurentPoly.var("x%d" % i))
        letters.append(LaurentPoly.var("x%d" % i) ** (-1))
    letters.extend(LaurentPoly.const(c) if not isinstance(c, LaurentPoly)
                   else c for c in extra_letters)
    val = eval_p(mu, letters, lambda l, m: psi_branch(l, m, q, t))
    if not isinstance(val, LaurentPoly):
        val = LaurentPoly.const(val)
    return virtual_integral(val, n, params, ladder, cache)


# ---------------------------------------------------------------------------
# Macdonald-basis expansion of symmetric polynomials
# ---------------------------------------------------------------------------

def macdonald_expand(poly, n, q, t):
    """Expand a symmetric polynomial in the P_la(x; q, t) basis."""
    cur = laurent_to_mbasis(poly)
    out = {}
    for la in sorted(cur, key=lambda p: (p.size(), p.parts2), reverse=True):
        a = cur.get(la, 0)
        if not a:
            continue
        out[la] = a
        for mu, c in macdonald_in_mbasis(la, n, q, t).items():
            cur[mu] = cur.get(mu, 0) - a * c
    leftover = {la: c for la, c in cur.items() if c}
    if leftover:
        raise AssertionError("Macdonald expansion did not close: %r"
                             % leftover)
    return out


# ---------------------------------------------------------------------------
# the (R,S) family
# ---------------------------------------------------------------------------

def k_bn(la, n, qh, t, t2, t3, ladder=_LADDER_DEFAULT, cache=None):
    """The two-parameter K_la(x; q, t; t2, t3) with q = qh^2.

    For integer partitions this is Koornwinder at (-1, -qh, t2, t3); for
    half-partitions the half row splits off as prod (x_i^{1/2} +
    x_i^{-1/2}) against Koornwinder at (-q, -qh, t2, t3).
    """
    la = la if isinstance(la, Partition) else Partition(la)
    q = qh * qh
    if la.is_half():
        base = Partition.from_doubled(tuple(p - 1 for p in la.parts2))
        params = {"q": q, "t": t, "t0": -q, "t1": -qh, "t2": t2, "t3": t3}
        core = koornwinder_k(base, n, params, ladder, cache)
        mono = LaurentPoly.one()
        for i in range(1, n + 1):
            mono = mono * (LaurentPoly.var("x%d" % i, 1, 2)
                           + LaurentPoly.var("x%d" % i, -1, 2))
        return core * mono
    params = {"q": q, "t": t, "t0": Fraction(-1), "t1": -qh,
              "t2": t2, "t3": t3}
    return koornwinder_k(la, n, params, ladder, cache)


def prs_macdonald(kind, la, n, qh, t, t2=None, s2=None,
                  ladder=_LADDER_DEFAULT, cache=None):
    """Macdonald polynomials attached to pairs of root systems.

    kind in {'BB', 'BC', 'CB', 'DD', 'DDbar'}; q = qh^2 throughout.
    For 'CB', t2 = s2^2 and s2 must be supplied.
    """
    la = la if isinstance(la, Partition) else Partition(la)
    if kind == "BB":
        return k_bn(la, n, qh, t, t2, qh, ladder, cache)
    if kind == "BC":
        return k_bn(la, n, qh, t, t2, t2 * qh, ladder, cache)
    if kind == "CB":
        if s2 is None:
            raise ValueError("CB needs s2 with t2 = s2^2")
        params = {"q": qh * qh, "t": t, "t0": qh, "t1": -qh,
                  "t2": s2, "t3": -s2}
        return koornwinder_k(la, n, params, ladder, cache)
    if kind in ("DD", "DDbar"):
        if len(la) < n:
            if kind == "DDbar":
                raise ValueError("DDbar needs l(la) = n")
            return k_bn(la, n, qh, t, Fraction(1), qh, ladder, cache)
        bb = k_bn(la, n, qh, t, Fraction(1), qh, ladder, cache)
        shifted = la.minus_half_row()
        bc = prs_macdonald("BC", shifted, n, qh, t, qh, ladder=ladder,
                           cache=cache)
        mono = LaurentPoly.one()
        for i in range(1, n + 1):
            mono = mono * (LaurentPoly.var("x%d" % i, -1, 2)
                           - LaurentPoly.var("x%d" % i, 1, 2))
        half = Fraction(1, 2)
        if kind == "DD":
            return (bb + bc * mono) * half
        return (bb - bc * mono) * half
    raise ValueError("unknown kind %r" % (kind,))


# ---------------------------------------------------------------------------
# disk cache
# ---------------------------------------------------------------------------

class KTable:
    """On-disk cache of Koornwinder tables, keyed by a fingerprint of
    (n, top shape, parameter values)."""

    def __init__(self, root=None):
        if root is None:
            root = os.environ.get("QSYMM_CACHE", os.path.join(
                os.getcwd(), "cache"))
        self.dir = os.path.join(root, "koornwinder")
        self.hits = 0
        self.misses = 0

    def key(self, n, top, params):
        top = top if isinstance(top, Partition) else Partition(top)
        desc = "n=%d;top=%s;%s" % (
            n, ",".join(str(p) for p in top.parts2),
            ";".join("%s=%s" % (k, params[k]) for k in sorted(params)))
        return hashlib.sha256(desc.encode()).hexdigest()[:24]

    def _path(self, key):
        return os.path.join(self.dir, key + ".kw")

    def get(self, key):
        path = self._path(key)
        if not os.path.exists(path):
            self.misses += 1
            return None
        with open(path) as fh:
            text = fh.read()
        table = self._parse(text)
        if table is None:
            self.misses += 1
            return None
        self.hits += 1
        return table

    @staticmethod
    def _parse(text):
        lines = text.split("\n")
        if not lines or not lines[0].startswith("checksum:"):
            return None
        body = "\n".join(lines[1:])
        if lines[0][9:].strip() != hashlib.sha256(
                body.encode()).hexdigest()[:24]:
            return None
        table = {}
        shape = None
        buf = []
        def flush():
            if shape is not None:
                table[shape] = LaurentPoly.from_canonical("\n".join(buf))
        for line in body.split("\n"):
            if line.startswith("shape:"):
                flush()
                shape = Partition.from_doubled(
                    tuple(int(x) for x in line[6:].split()))
                buf = []
            elif shape is not None:
                buf.append(line)
        flush()
        return table

    def put(self, key, table):
        os.makedirs(self.dir, exist_ok=True)
        blocks = []
        for la in sorted(table, key=lambda p: (p.size(), p.parts2)):
            poly = table[la]
            if any(isinstance(c, RatF) for c in poly.terms.values()):
                return  # only numeric tables are cached
            blocks.append("shape: " + " ".join(str(p) for p in la.parts2)
                          + "\n" + poly.canonical())
        body = "\n".join(blocks)
        check = hashlib.sha256(body.encode()).hexdigest()[:24]
        with open(self._path(key), "w") as fh:
            fh.write("checksum: %s\n%s" % (check, body))

    def stats(self):
        n = 0
        size = 0
        if os.path.isdir(self.dir):
            for name in os.listdir(self.dir):
                if name.endswith(".kw"):
                    n += 1
                    size += os.path.getsize(os.path.join(self.dir, name))
        return {"entries": n, "bytes": size,
                "hits": self.hits, "misses": self.misses}

    def clear(self):
        if os.path.isdir(self.dir):
            for name in os.listdir(self.dir):
                if name.endswith(".kw"):
                    os.remove(os.path.join(self.dir, name))

    def verify(self):
        """Check every entry's checksum; returns (ok, bad) counts."""
        ok = bad = 0
        if os.path.isdir(self.dir):
            for name in sorted(os.listdir(self.dir)):
                if not name.endswith(".kw"):
                    continue
                with open(os.path.join(self.dir, name)) as fh:
                    if self._parse(fh.read()) is None:
                        bad += 1
                    else:
                        ok += 1
        return ok, bad
