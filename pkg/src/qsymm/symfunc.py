"""Macdonald polynomials of type A via the branching rule, Hall-Littlewood
polynomials, Pieri coefficients, principal specializations, modified
Hall-Littlewood polynomials and the (q,t)-omega involution.

Polynomials are produced either as LaurentPoly in explicit variables or
evaluated directly at arbitrary letter lists (scalars, monomials or
truncated series), which is how all specializations are realized.
"""

from fractions import Fraction
from itertools import product as iproduct

from .core import LaurentPoly, DegenerateError
from .partitions import (Partition, conjugate, horizontal_strip,
                         vertical_strip, n_stat, mult, partitions_of)
from .qfact import spow, poch_partition, c_minus, b_family

__all__ = [
    "psi_prime", "psi_prime_cells", "phi_pieri", "psi_branch", "psi_hl",
    "eval_p", "macdonald_p", "hall_littlewood", "macdonald_in_mbasis",
    "laurent_to_mbasis", "mbasis_to_laurent", "monomial_sym",
    "principal_spec", "principal_spec_formula", "modified_hl_letters",
    "power_sum", "omega_qt", "macdonald_p_gram",
]


def _pad(la, n):
    ps = la.intparts() if isinstance(la, Partition) else tuple(la)
    return ps + (0,) * (n - len(ps))


# ---------------------------------------------------------------------------
# Pieri coefficients
# ---------------------------------------------------------------------------

def psi_prime(la, mu, q, t):
    """Vertical-strip Pieri coefficient psi'_{la/mu}(q, t), pair form."""
    if not vertical_strip(la, mu):
        return Fraction(0)
    n = max(len(la.intparts()), 1)
    l = _pad(la, n)
    m = _pad(mu, n)
    out = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if l[i - 1] == m[i - 1] and l[j - 1] > m[j - 1]:
                a = m[i - 1] - m[j - 1]
                b = l[i - 1] - l[j - 1]
                num = (1 - spow(q, a) * spow(t, j - i - 1)) * \
                      (1 - spow(q, b) * spow(t, j - i + 1))
                den = (1 - spow(q, a) * spow(t, j - i)) * \
                      (1 - spow(q, b) * spow(t, j - i))
                if not den:
                    raise DegenerateError("psi' denominator vanished")
                out = out * num / den
    return out


def _b_cell(la, i, j, q, t):
    ps = la.intparts()
    a = ps[i - 1] - j
    l = sum(1 for p in ps if p >= j) - i
    num = 1 - spow(q, a) * spow(t, l + 1)
    den = 1 - spow(q, a + 1) * spow(t, l)
    if not den:
        raise DegenerateError("b(s) denominator vanished")
    return num / den


def psi_prime_cells(la, mu, q, t):
    """psi'_{la/mu} as a product of b_la(s)/b_mu(s) over the squares of mu
    whose row length agrees in la and mu but whose column length does not."""
    if not vertical_strip(la, mu):
        return Fraction(0)
    lc = _pad(conjugate(la), la[1] if len(la) else 0)
    mc = _pad(conjugate(mu), la[1] if len(la) else 0)
    out = Fraction(1)
    for i, p in enumerate(mu.intparts(), start=1):
        for j in range(1, p + 1):
            if la[i] == mu[i] and lc[j - 1] > mc[j - 1]:
                out = out * _b_cell(la, i, j, q, t) / _b_cell(mu, i, j, q, t)
    return out


def phi_pieri(la, mu, q, t):
    """Horizontal-strip Pieri coefficient varphi_{la/mu}(q, t)."""
    if not horizontal_strip(la, mu):
        return Fraction(0)
    n = len(la.intparts())
    l = _pad(la, n + 1)
    m = _pad(mu, n + 1)

    def ratio(k, d):
        # (q t^d; q)_k / (t^{d+1}; q)_k
        num = Fraction(1)
        den = Fraction(1)
        for r in range(k):
            num = num * (1 - spow(q, r + 1) * spow(t, d))
            den = den * (1 - spow(q, r) * spow(t, d + 1))
        if not den:
            raise DegenerateError("varphi denominator vanished")
        return num / den

    out = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            d = j - i
            out = out * ratio(l[i - 1] - l[j - 1], d)
            out = out * ratio(m[i - 1] - m[j], d)
            out = out / ratio(l[i - 1] - m[j - 1], d)
            out = out / ratio(m[i - 1] - l[j], d)
    return out


def psi_branch(la, mu, q, t):
    """Branching coefficient psi_{la/mu}(q,t) = psi'_{la'/mu'}(t,q)."""
    if not horizontal_strip(la, mu):
        return Fraction(0)
    return psi_prime(conjugate(la), conjugate(mu), t, q)


def psi_hl(la, mu, tpow):
    """Hall-Littlewood branching coefficient psi_{la/mu}(0, t).

    Division-free: a product of factors (1 - t^k).  ``tpow(k)`` supplies
    t^k in whatever arithmetic the caller is using (scalar or series).
    """
    if not horizontal_strip(la, mu):
        return 0
    lc = conjugate(la).intparts()
    mc = conjugate(mu).intparts()
    w = la[1] if len(la) else 0
    lc = lc + (0,) * (w + 1 - len(lc))
    mc = mc + (0,) * (w + 1 - len(mc))
    out = 1
    for i in range(w):
        if lc[i] == mc[i] and lc[i + 1] > mc[i + 1]:
            out = out * (1 - tpow(mc[i] - mc[i + 1]))
    return out


# ---------------------------------------------------------------------------
# branching-rule evaluation
# ---------------------------------------------------------------------------

def _strip_predecessors(la):
    """All mu with la/mu a horizontal strip."""
    ps = la.intparts()
    if not ps:
        return [Partition(())]
    n = len(ps)
    ranges = []
    for i in range(n):
        lo = ps[i + 1] if i + 1 < n else 0
        ranges.append(range(lo, ps[i] + 1))
    out = []
    for choice in iproduct(*ranges):
        out.append(Partition(tuple(p for p in choice if p)))
    return out


def eval_p(la, letters, psi_fn, memo=None):
    """Evaluate P_la at a list of letters using the branching rule.

    ``letters`` may hold anything that supports * and ** (rationals,
    Laurent monomials, truncated series).  ``psi_fn(la, mu)`` supplies the
    branching coefficient in compatible arithmetic.  ``memo`` (if given)
    is keyed on (la, number of letters) and owned by the caller.
    """
    if memo is None:
        memo = {}

    def rec(shape, k):
        ps = shape.intparts()
        if not ps:
            return 1
        if len(ps) > k:
            return 0
        key = (ps, k)
        if key in memo:
            return memo[key]
        x = letters[k - 1]
        total = 0
        for mu in _strip_predecessors(shape):
            c = psi_fn(shape, mu)
            if not c:
                continue
            d = int(shape.size() - mu.size())
            term = c * rec(mu, k - 1) * (x ** d if d else 1)
            total = term + total
        memo[key] = total
        return total

    return rec(la if isinstance(la, Partition) else Partition(la),
               len(letters))


def macdonald_p(la, n, q, t, memo=None):
    """P_la(x_1, ..., x_n; q, t) as a LaurentPoly (zero if l(la) > n)."""
    letters = [LaurentPoly.var("x%d" % i) for i in range(1, n + 1)]
    val = eval_p(la, letters, lambda l, m: psi_branch(l, m, q, t), memo)
    if not isinstance(val, LaurentPoly):
        val = LaurentPoly.const(val)
    return val._embed(tuple(sorted("x%d" % i for i in range(1, n + 1))))


def hall_littlewood(la, n, t, memo=None):
    """Hall-Littlewood P_la(x_1,...,x_n; t) = P_la(x; 0, t)."""
    letters = [LaurentPoly.var("x%d" % i) for i in range(1, n + 1)]
    val = eval_p(la, letters,
                 lambda l, m: psi_hl(l, m, lambda k: spow(t, k)), memo)
    if not isinstance(val, LaurentPoly):
        val = LaurentPoly.const(val)
    return val._embed(tuple(sorted("x%d" % i for i in range(1, n + 1))))


# ---------------------------------------------------------------------------
# monomial basis bookkeeping
# ---------------------------------------------------------------------------

def _distinct_permutations(ps):
    from itertools import permutations
    for perm in set(permutations(tuple(ps))):
        yield perm


def monomial_sym(la, n):
    """m_la(x_1..x_n) as a LaurentPoly."""
    ps = _pad(la, n)
    if len(ps) > n:
        return LaurentPoly.zero()
    vars = tuple(sorted("x%d" % i for i in range(1, n + 1)))
    order = ["x%d" % i for i in range(1, n + 1)]
    terms = {}
    for perm in _distinct_permutations(ps):
        e = [0] * n
        for pos, p in enumerate(perm):
            e[vars.index(order[pos])] = 4 * p
        terms[tuple(e)] = Fraction(1)
    return LaurentPoly(vars, terms)


def laurent_to_mbasis(poly):
    """Expand a symmetric polynomial (nonnegative integer exponents) in
    the monomial basis; returns {Partition: coeff}."""
    poly = poly.compact()
    out = {}
    for e, c in poly.terms.items():
        if any(x % 4 or x < 0 for x in e):
            raise ValueError("not a polynomial in integer powers")
        exps = tuple(x // 4 for x in e)
        if tuple(sorted(exps, reverse=True)) == exps:
            out[Partition(tuple(p for p in exps if p))] = c
    return out


def mbasis_to_laurent(coeffs, n):
    out = LaurentPoly.zero()
    for la, c in coeffs.items():
        out = out + monomial_sym(la, n) * c
    return out


def macdonald_in_mbasis(la, n, q, t):
    return laurent_to_mbasis(macdonald_p(la, n, q, t))


# ---------------------------------------------------------------------------
# specializations
# ---------------------------------------------------------------------------

def principal_spec(la, n, q, t):
    """P_la(1, t, ..., t^{n-1}; q, t) via branching evaluation."""
    letters = [spow(t, i) for i in range(n)]
    return eval_p(la, letters, lambda l, m: psi_branch(l, m, q, t))


def principal_spec_formula(la, n, q, t):
    """Closed form t^{n(la)} (t^n; q, t)_la / C^-_la(t; q, t)."""
    den = c_minus(t, q, t, la)
    if not den:
        raise DegenerateError("principal specialization denominator "
                              "vanished")
    return spow(t, n_stat(la)) * poch_partition(spow(t, n), q, t, la) / den


def modified_hl_letters(base_letters, t_letter, depth):
    """The letter list realizing x / (1 - t): each base letter is repeated
    with t^0, t^1, ..., t^{depth-1} prefactors."""
    out = []
    for k in range(depth):
        tk = t_letter ** k if k else 1
        for x in base_letters:
            out.append(x * tk if k else x)
    return out


def power_sum(r, n):
    vars = tuple(sorted("x%d" % i for i in range(1, n + 1)))
    terms = {}
    for i, v in enumerate(vars):
        e = [0] * n
        e[i] = 4 * r
        terms[tuple(e)] = Fraction(1)
    return LaurentPoly(vars, terms)


def _zee(la):
    ps = la.intparts()
    out = Fraction(1)
    for i in set(ps):
        mi = mult(ps, i)
        f = Fraction(1)
        for k in range(1, mi + 1):
            f *= k
        out *= Fraction(i) ** mi * f
    return out


def _solve_linear(rows, rhs):
    """Exact Gaussian elimination; rows is a list of lists of scalars."""
    n = len(rows)
    m = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for c in range(m):
        piv = None
        for i in range(r, n):
            if aug[i][c]:
                piv = i
                break
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / Fraction(aug[r][c]) if not hasattr(aug[r][c], "var") \
            else aug[r][c] ** (-1)
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
        if r == n:
            break
    sol = [Fraction(0)] * m
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][m]
    for i in range(r, n):
        if aug[i][m]:
            raise ValueError("inconsistent linear system")
    return sol


def _p_in_mbasis(la, n):
    ps = la.intparts()
    poly = LaurentPoly.one()
    for p in ps:
        poly = poly * power_sum(p, n)
    return laurent_to_mbasis(poly)


def omega_qt(coeffs, n_out, q, t):
    """Apply the (q,t)-deformed omega involution to a symmetric function
    given in the monomial basis, returning its monomial expansion in
    n_out variables.

    omega_{q,t} p_r = (-1)^{r-1} (1 - q^r)/(1 - t^r) p_r.  The input
    coefficients must come from at least deg(f) variables to be faithful.
    """
    by_degree = {}
    for la, c in coeffs.items():
        by_degree.setdefault(int(la.size()), {})[la] = c
    out = {}
    for d, part in by_degree.items():
        if d == 0:
            la0 = Partition(())
            out[la0] = out.get(la0, 0) + part[la0]
            continue
        basis = partitions_of(d)
        n_work = d
        p_expansions = [_p_in_mbasis(mu, n_work) for mu in basis]
        support = sorted({la for exp in p_expansions for la in exp} |
                         set(part), key=lambda la: la.parts2)
        rows = [[exp.get(la, Fraction(0)) for exp in p_expansions]
                for la in support]
        rhs = [part.get(la, Fraction(0)) for la in support]
        pcoeffs = _solve_linear(rows, rhs)
        for mu, c in zip(basis, pcoeffs):
            if not c:
                continue
            for r in mu.intparts():
                den = 1 - spow(t, r)
                if not den:
                    raise DegenerateError("omega_{q,t} denominator vanished")
                c = c * spow(-1, r - 1) * (1 - spow(q, r)) / den
            for la, w in _p_in_mbasis(mu, max(n_out, 1)).items():
                if len(la.intparts()) <= n_out:
                    out[la] = out.get(la, 0) + c * w
    return {la: c for la, c in out.items() if c and len(la) <= n_out}


# ---------------------------------------------------------------------------
# small-case oracle: Gram-Schmidt against the (q,t) power-sum inner product
# ---------------------------------------------------------------------------

def macdonald_p_gram(la, q, t):
    """P_la in the monomial basis, built by Gram-Schmidt in the (q,t)
    inner product <p_la, p_mu> = delta z_la prod (1-q^{la_i})/(1-t^{la_i}).

    Exponential cost; used as an independent oracle for small shapes.
    """
    d = int(la.size())
    if d == 0:
        return {Partition(()): Fraction(1)}
    basis = sorted(partitions_of(d), key=lambda p: p.parts2)
    n_work = d
    p_exp = {mu: _p_in_mbasis(mu, n_work) for mu in basis}
    support = sorted({nu for exp in p_exp.values() for nu in exp},
                     key=lambda p: p.parts2)

    def to_p(mcoeffs):
        rows = [[p_exp[mu].get(nu, Fraction(0)) for mu in basis]
                for nu in support]
        rhs = [mcoeffs.get(nu, Fraction(0)) for nu in support]
        return dict(zip(basis, _solve_linear(rows, rhs)))

    def inner(f, g):
        tot = Fraction(0)
        for mu in basis:
            a = f.get(mu, 0)
            b = g.get(mu, 0)
            if a and b:
                w = _zee(mu)
                for r in mu.intparts():
                    den = 1 - spow(t, r)
                    if not den:
                        raise DegenerateError("inner product denominator")
                    w = w * (1 - spow(q, r)) / den
                tot = tot + a * b * w
        return tot

    # Gram-Schmidt from the top of dominance order downwards; P_la is
    # m_la plus lower terms, orthogonal to all P_mu with mu < la.
    from .partitions import dominates
    order = sorted(basis, key=lambda p: p.parts2)  # increasing dominance-ish
    built = {}
    for nu in order:
        f_m = {nu: Fraction(1)}
        f_p = to_p(f_m)
        for mu in order:
            if mu == nu:
                break
            if mu not in built:
                continue
            g_m, g_p = built[mu]
            ip = inner(f_p, g_p)
            if ip:
                c = ip / inner(g_p, g_p)
                f_m = {k: f_m.get(k, 0) - c * g_m.get(k, 0)
                       for k in set(f_m) | set(g_m)}
                f_p = {k: f_p.get(k, 0) - c * g_p.get(k, 0)
                       for k in set(f_p) | set(g_p)}
        built[nu] = ({k: v for k, v in f_m.items() if v},
                     {k: v for k, v in f_p.items() if v})
    return built[la if isinstance(la, Partition) else Partition(la)][0]
