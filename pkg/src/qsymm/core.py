"""Exact arithmetic kernel: rational scalars, one symbolic parameter,
sparse Laurent polynomials on a quarter-integer exponent lattice, and
truncated power series with exact coefficients.

Everything here is deterministic and exact.  No floats anywhere.
"""

from fractions import Fraction
import hashlib
import random

__all__ = [
    "ExactDivisionError",
    "DegenerateError",
    "RatF",
    "LaurentPoly",
    "TruncatedSeries",
    "ParamPoint",
    "draw_param_point",
    "exact_divide",
]


class ExactDivisionError(ArithmeticError):
    """Raised when a polynomial division leaves a nonzero remainder."""


class DegenerateError(ArithmeticError):
    """A parameter point hit a removable degeneracy (vanishing denominator
    or colliding eigenvalue).  Re-drawing with a fresh seed usually fixes
    this."""


# ---------------------------------------------------------------------------
# univariate rational functions (used for a single symbolic parameter)
# ---------------------------------------------------------------------------

def _poly_trim(cs):
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _poly_add(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _poly_trim(out)


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _poly_trim(out)


def _poly_divmod(a, b):
    # b must be nonzero
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] * inv
        d = len(a) - len(b)
        q[d] = c
        for i, cb in enumerate(b):
            a[i + d] -= c * cb
        a = _poly_trim(a)
    return _poly_trim(q), a


def _poly_gcd(a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, _poly_divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


class RatF:
    """A rational function in one named parameter, over Fraction.

    Coefficient lists run from degree 0 upward; the denominator is kept
    monic and coprime to the numerator.
    """

    __slots__ = ("var", "num", "den")

    def __init__(self, var, num, den=None):
        if den is None:
            den = [Fraction(1)]
        num = _poly_trim([Fraction(c) for c in num])
        den = _poly_trim([Fraction(c) for c in den])
        if not den:
            raise ZeroDivisionError("zero denominator in RatF")
        g = _poly_gcd(num, den)
        if len(g) > 1:
            num = _poly_divmod(num, g)[0]
            den = _poly_divmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            num = [c / lead for c in num]
            den = [c / lead for c in den]
        self.var = var
        self.num = tuple(num)
        self.den = tuple(den)

    @staticmethod
    def gen(var):
        return RatF(var, [0, 1])

    @staticmethod
    def const(var, c):
        return RatF(var, [Fraction(c)])

    def _coerce(self, other):
        if isinstance(other, RatF):
            if other.var != self.var:
                raise ValueError("mixed symbolic parameters %r, %r"
                                 % (self.var, other.var))
            return other
        if isinstance(other, (int, Fraction)):
            return RatF(self.var, [Fraction(other)])
        return NotImplemented

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.var, self.num, self.den))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        num = _poly_add(_poly_mul(list(self.num), list(other.den)),
                        _poly_mul(list(other.num), list(self.den)))
        return RatF(self.var, num, _poly_mul(list(self.den), list(other.den)))

    __radd__ = __add__

    def __neg__(self):
        return RatF(self.var, [-c for c in self.num], list(self.den))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatF(self.var, _poly_mul(list(self.num), list(other.num)),
                    _poly_mul(list(self.den), list(other.den)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero RatF")
        return RatF(self.var, _poly_mul(list(self.num), list(other.den)),
                    _poly_mul(list(self.den), list(other.num)))

    def __rtruediv__(self, other):
        if not self.num:
            raise ZeroDivisionError("division by zero RatF")
        return self._coerce(other) / self

    def __pow__(self, k):
        if k < 0:
            return RatF(self.var, list(self.den), list(self.num)) ** (-k)
        out = RatF(self.var, [1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def subs(self, value):
        """Evaluate at a rational value of the parameter."""
        value = Fraction(value)
        num = sum((c * value ** i for i, c in enumerate(self.num)),
                  Fraction(0))
        den = sum((c * value ** i for i, c in enumerate(self.den)),
                  Fraction(0))
        if den == 0:
            raise ZeroDivisionError(
                "RatF denominator vanishes at %s = %s" % (self.var, value))
        return num / den

    def as_fraction(self):
        """Return a Fraction if this is actually a constant."""
        if len(self.num) <= 1 and self.den == (Fraction(1),):
            return self.num[0] if self.num else Fraction(0)
        raise ValueError("RatF %r is not constant" % (self,))

    def __repr__(self):
        def fmt(cs):
            if not cs:
                return "0"
            bits = []
            for i, c in enumerate(cs):
                if c:
                    bits.append("%s*%s^%d" % (c, self.var, i))
            return " + ".join(bits)
        if self.den == (Fraction(1),):
            return "RatF(%s)" % fmt(self.num)
        return "RatF((%s)/(%s))" % (fmt(self.num), fmt(self.den))


def _is_scalar(v):
    return isinstance(v, (int, Fraction, RatF))


def _scalar_inv(v):
    if isinstance(v, RatF):
        return RatF(v.var, [1]) / v
    return Fraction(1) / Fraction(v)


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

# Exponents live on the lattice (1/4)Z and are stored as integers times 4,
# so the monomial x^(1/2) has stored exponent 2.  This keeps every exponent
# an exact int while allowing the half-integer powers that show up in
# square-root substitutions, and quarters as guard digits.

GRID = 4


class LaurentPoly:
    """Sparse Laurent polynomial with exact coefficients.

    ``vars`` is a sorted tuple of variable names and ``terms`` maps
    exponent tuples (in quarter-units, ints) to nonzero coefficients
    (Fraction or RatF).
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms):
        self.vars = tuple(vars)
        self.terms = {e: c for e, c in terms.items() if c}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(c):
        c = c if isinstance(c, RatF) else Fraction(c)
        return LaurentPoly((), {(): c} if c else {})

    @staticmethod
    def var(name, num=1, den=1):
        """The monomial name^(num/den) with num/den on the quarter grid."""
        e = Fraction(num, den) * GRID
        if e.denominator != 1:
            raise ValueError("exponent %s/%s is off the quarter grid"
                             % (num, den))
        return LaurentPoly((name,), {(int(e),): Fraction(1)})

    @staticmethod
    def monomial(coeff, **powers):
        out = LaurentPoly.const(coeff)
        for name, p in powers.items():
            fr = Fraction(p)
            out = out * LaurentPoly.var(name, fr.numerator, fr.denominator)
        return out

    @staticmethod
    def zero():
        return LaurentPoly((), {})

    @staticmethod
    def one():
        return LaurentPoly.const(1)

    # -- bookkeeping -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _aligned(self, other):
        if not isinstance(other, LaurentPoly):
            if _is_scalar(other):
                other = LaurentPoly.const(other)
            else:
                return None, None
        if self.vars == other.vars:
            return self, other
        joint = tuple(sorted(set(self.vars) | set(other.vars)))
        return self._embed(joint), other._embed(joint)

    def _embed(self, joint):
        if self.vars == joint:
            return self
        pos = [joint.index(v) for v in self.vars]
        terms = {}
        for e, c in self.terms.items():
            ee = [0] * len(joint)
            for p, x in zip(pos, e):
                ee[p] = x
            terms[tuple(ee)] = c
        return LaurentPoly(joint, terms)

    def compact(self):
        """Drop variables that do not actually occur."""
        used = [i for i in range(len(self.vars))
                if any(e[i] for e in self.terms)]
        if len(used) == len(self.vars):
            return self
        vars = tuple(self.vars[i] for i in used)
        return LaurentPoly(vars, {tuple(e[i] for i in used): c
                                  for e, c in self.terms.items()})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        a, b = self._aligned(other)
        if a is None:
            return NotImplemented
        terms = dict(a.terms)
        for e, c in b.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return LaurentPoly(a.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._aligned(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            if not other:
                return LaurentPoly(self.vars, {})
            return LaurentPoly(self.vars,
                               {e: c * other for e, c in self.terms.items()})
        a, b = self._aligned(other)
        if a is None:
            return NotImplemented
        if len(a.terms) < len(b.terms):
            a, b = b, a
        terms = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    terms.pop(e, None)
        return LaurentPoly(a.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            if len(self.terms) != 1:
                raise ExactDivisionError(
                    "negative power of a non-monomial Laurent polynomial")
            (e, c), = self.terms.items()
            inv = LaurentPoly(self.vars,
                              {tuple(-x for x in e): _scalar_inv(c)})
            return inv ** (-k)
        out = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if _is_scalar(other):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.compact().canonical() == other.compact().canonical()

    def __hash__(self):
        c = self.compact()
        return hash((c.vars, frozenset(c.terms.items())))

    # -- structure ---------------------------------------------------------

    def coefficient(self, **powers):
        """Coefficient of a monomial; remaining variables stay symbolic."""
        idx = {}
        for name, p in powers.items():
            fr = Fraction(p) * GRID
            if fr.denominator != 1:
                raise ValueError("off-grid exponent for %s" % name)
            if name not in self.vars:
                if fr != 0:
                    return LaurentPoly.zero()
                continue
            idx[self.vars.index(name)] = int(fr)
        keep = [i for i in range(len(self.vars)) if i not in idx]
        vars = tuple(self.vars[i] for i in keep)
        terms = {}
        for e, c in self.terms.items():
            if all(e[i] == w for i, w in idx.items()):
                terms[tuple(e[i] for i in keep)] = c
        return LaurentPoly(vars, terms)

    def substitute(self, name, value):
        """Replace one variable by a scalar, monomial or polynomial.

        Polynomial (multi-term) replacements are only allowed when every
        exponent of ``name`` is a nonnegative integer.
        """
        if name not in self.vars:
            return self
        i = self.vars.index(name)
        rest = self.vars[:i] + self.vars[i + 1:]
        if _is_scalar(value):
            terms = {}
            for e, c in self.terms.items():
                k = e[i]
                if k % GRID:
                    raise ValueError(
                        "cannot evaluate fractional power of %s at a scalar"
                        % name)
                if value == 0:
                    if k < 0:
                        raise ZeroDivisionError(
                            "negative power of %s at 0" % name)
                    if k > 0:
                        continue
                    w = 1
                else:
                    w = (Fraction(value) if not isinstance(value, RatF)
                         else value) ** (k // GRID)
                rest_e = e[:i] + e[i + 1:]
                s = terms.get(rest_e, 0) + c * w
                if s:
                    terms[rest_e] = s
                else:
                    terms.pop(rest_e, None)
            return LaurentPoly(rest, terms)
        if not isinstance(value, LaurentPoly):
            raise TypeError("substitute expects a scalar or LaurentPoly")
        if len(value.terms) == 1:
            (ve, vc), = value.terms.items()
            out = LaurentPoly.zero()
            for e, c in self.terms.items():
                k = e[i]
                if k % GRID:
                    # fractional power of the monomial: exponents must stay
                    # on the grid and the coefficient must be 1
                    if vc != 1 or any((x * k) % GRID for x in ve):
                        raise ValueError(
                            "fractional power %s of a non-unit monomial"
                            % Fraction(k, GRID))
                    new_e = tuple(x * k // GRID for x in ve)
                    w = Fraction(1)
                else:
                    new_e = tuple(x * (k // GRID) for x in ve)
                    w = (vc ** (k // GRID) if k >= 0
                         else _scalar_inv(vc) ** (-(k // GRID)))
                mono = LaurentPoly(value.vars, {new_e: w})
                base = LaurentPoly(rest, {e[:i] + e[i + 1:]: c})
                out = out + base * mono
            return out
        # general polynomial value: need nonnegative integer exponents
        out = LaurentPoly.zero()
        powers = {0: LaurentPoly.one()}
        for e, c in self.terms.items():
            k = e[i]
            if k % GRID or k < 0:
                raise ValueError(
                    "polynomial substitution needs nonnegative integer "
                    "powers of %s" % name)
            k //= GRID
            if k not in powers:
                p = max(powers)
                while p < k:
                    powers[p + 1] = powers[p] * value
                    p += 1
            base = LaurentPoly(rest, {e[:i] + e[i + 1:]: c})
            out = out + base * powers[k]
        return out

    def evaluate(self, assignment):
        """Evaluate at scalars for all variables; returns a scalar."""
        out = Fraction(0)
        vals = [assignment[v] for v in self.vars]
        for e, c in self.terms.items():
            w = c
            for x, k in zip(vals, e):
                if k % GRID:
                    raise ValueError("fractional exponent in evaluate")
                if k:
                    v = x if isinstance(x, RatF) else Fraction(x)
                    w = w * v ** (k // GRID)
            out = out + w
        return out

    def subs_scalar(self, var, value):
        """Map RatF coefficients to Fractions at a parameter value."""
        terms = {}
        for e, c in self.terms.items():
            if isinstance(c, RatF) and c.var == var:
                c = c.subs(value)
            if c:
                terms[e] = c
        return LaurentPoly(self.vars, terms)

    def map_coeff(self, fn):
        terms = {}
        for e, c in self.terms.items():
            w = fn(c)
            if w:
                terms[e] = w
        return LaurentPoly(self.vars, terms)

    def valuation(self, name):
        """Smallest exponent of ``name`` (as a Fraction), or None if zero."""
        if not self.terms:
            return None
        if name not in self.vars:
            return Fraction(0)
        i = self.vars.index(name)
        return Fraction(min(e[i] for e in self.terms), GRID)

    def degree(self, name):
        if not self.terms:
            return None
        if name not in self.vars:
            return Fraction(0)
        i = self.vars.index(name)
        return Fraction(max(e[i] for e in self.terms), GRID)

    def total_degree(self):
        if not self.terms:
            return None
        return max(Fraction(sum(e), GRID) for e in self.terms)

    # -- serialization -----------------------------------------------------

    def canonical(self):
        """Canonical text form: header line of variables, then one line
        per term, exponents in quarter units, lex sorted."""
        c = self.compact()
        lines = ["vars: " + " ".join(c.vars)]
        for e in sorted(c.terms):
            coef = c.terms[e]
            if isinstance(coef, RatF):
                cs = "[" + ",".join(str(x) for x in coef.num) + "]/[" + \
                     ",".join(str(x) for x in coef.den) + "]@" + coef.var
            else:
                cs = str(Fraction(coef))
            lines.append(" ".join(str(x) for x in e) + " : " + cs)
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_canonical(text):
        lines = [ln for ln in text.strip().split("\n") if ln.strip()]
        head = lines[0]
        if not head.startswith("vars:"):
            raise ValueError("bad canonical polynomial header")
        vars = tuple(head[5:].split())
        terms = {}
        for ln in lines[1:]:
            lhs, rhs = ln.split(":")
            e = tuple(int(x) for x in lhs.split())
            rhs = rhs.strip()
            if "@" in rhs:
                body, var = rhs.rsplit("@", 1)
                np, dp = body.split("]/[")
                num = [Fraction(x) for x in np.lstrip("[").split(",") if x]
                den = [Fraction(x) for x in dp.rstrip("]").split(",") if x]
                terms[e] = RatF(var, num, den)
            else:
                terms[e] = Fraction(rhs)
        return LaurentPoly(vars, terms)

    def fingerprint(self):
        return hashlib.sha256(self.canonical().encode()).hexdigest()[:16]

    def __repr__(self):
        c = self.compact()
        if not c.terms:
            return "0"
        bits = []
        for e in sorted(c.terms):
            mono = "*".join(
                "%s^%s" % (v, Fraction(x, GRID))
                for v, x in zip(c.vars, e) if x)
            coef = str(c.terms[e])
            bits.append(coef + ("*" + mono if mono else ""))
        return " + ".join(bits)


def exact_divide(num, den):
    """Divide Laurent polynomials, insisting on a zero remainder.

    Uses leading-term elimination under lex order.  The quotient exponents
    of an exact division are confined to the coordinate-wise box
    [min(num)-min(den), max(num)-max(den)], which both certifies failure
    and guarantees termination.
    """
    if not isinstance(den, LaurentPoly):
        den = LaurentPoly.const(den)
    if den.is_zero():
        raise ZeroDivisionError("exact_divide by zero")
    if not isinstance(num, LaurentPoly):
        num = LaurentPoly.const(num)
    if num.is_zero():
        return LaurentPoly.zero()
    a, b = num._aligned(den)
    nv = len(a.vars)
    if nv == 0:
        return LaurentPoly.const(
            a.terms.get((), Fraction(0)) * _scalar_inv(b.terms[()]))
    lo = tuple(min(e[i] for e in a.terms) - min(e[i] for e in b.terms)
               for i in range(nv))
    hi = tuple(max(e[i] for e in a.terms) - max(e[i] for e in b.terms)
               for i in range(nv))
    lt_den = max(b.terms)
    c_den_inv = _scalar_inv(b.terms[lt_den])
    rem = dict(a.terms)
    qterms = {}
    while rem:
        lt = max(rem)
        qe = tuple(x - y for x, y in zip(lt, lt_den))
        if any(q < l or q > h for q, l, h in zip(qe, lo, hi)):
            raise ExactDivisionError(
                "nonzero remainder: quotient exponent %r escapes box" % (qe,))
        qc = rem[lt] * c_den_inv
        qterms[qe] = qc
        for e, c in b.terms.items():
            ee = tuple(x + y for x, y in zip(qe, e))
            s = rem.get(ee, 0) - qc * c
            if s:
                rem[ee] = s
            else:
                rem.pop(ee, None)
    return LaurentPoly(a.vars, qterms)


# ---------------------------------------------------------------------------
# truncated series
# ---------------------------------------------------------------------------

class TruncatedSeries:
    """Power series in one grading variable, truncated at a known order.

    Exponents live on the quarter grid (stored as ints, true exponent is
    k/4) and may be negative.  ``order`` is exclusive: coefficients are
    known exactly for all exponents < order.  Coefficients may be scalars
    or LaurentPoly in other variables.
    """

    __slots__ = ("var", "order", "coeffs")

    def __init__(self, var, order, coeffs):
        self.var = var
        self.order = order
        self.coeffs = {k: c for k, c in coeffs.items() if c and k < order}

    @staticmethod
    def const(var, c, order):
        c = c if isinstance(c, (LaurentPoly, RatF)) else Fraction(c)
        return TruncatedSeries(var, order, {0: c} if c else {})

    @staticmethod
    def term(var, coeff, exp, order):
        """coeff * var^exp with exp a Fraction on the quarter grid."""
        k = Fraction(exp) * GRID
        if k.denominator != 1:
            raise ValueError("series exponent off the quarter grid")
        return TruncatedSeries(var, order, {int(k): coeff})

    def valuation(self):
        if not self.coeffs:
            return self.order
        return min(self.coeffs)

    def truncate(self, order):
        return TruncatedSeries(self.var, min(self.order, order), self.coeffs)

    def _check(self, other):
        if other.var != self.var:
            raise ValueError("mixed series variables")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.const(self.var, other, self.order)
        self._check(other)
        order = min(self.order, other.order)
        coeffs = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = coeffs.get(k, 0) + c
            if s:
                coeffs[k] = s
            else:
                coeffs.pop(k, None)
        return TruncatedSeries(self.var, order, coeffs)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.var, self.order,
                               {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.const(self.var, other, self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            # scalar or LaurentPoly coefficient
            return TruncatedSeries(self.var, self.order,
                                   {k: c * other
                                    for k, c in self.coeffs.items()})
        self._check(other)
        # conservative precision: min(o1 + v2, o2 + v1)
        v1, v2 = self.valuation(), other.valuation()
        order = min(self.order + v2, other.order + v1)
        coeffs = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                k = k1 + k2
                if k >= order:
                    continue
                s = coeffs.get(k, 0) + c1 * c2
                if s:
                    coeffs[k] = s
                else:
                    coeffs.pop(k, None)
        return TruncatedSeries(self.var, order, coeffs)

    __rmul__ = __mul__

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            return self.inverse() ** (-k)
        out = TruncatedSeries.const(self.var, 1, self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self):
        """Invert a series whose lowest term is an invertible unit
        (a nonzero scalar, or a Laurent monomial)."""
        v = self.valuation()
        if v >= self.order:
            raise ZeroDivisionError("inverting a series that is zero "
                                    "to working order")
        lead = self.coeffs[v]
        if isinstance(lead, LaurentPoly):
            if len(lead.terms) != 1:
                raise ExactDivisionError(
                    "series inverse needs a monomial leading coefficient")
            (e, c), = lead.terms.items()
            lead_inv = LaurentPoly(lead.vars,
                                   {tuple(-x for x in e): _scalar_inv(c)})
        else:
            lead_inv = _scalar_inv(lead)
        # write self = lead * x^v * (1 - r), invert the unit part
        order = self.order - v
        tail = {}
        for k, c in self.coeffs.items():
            if k != v:
                tail[k - v] = -(c * lead_inv)
        r = TruncatedSeries(self.var, order, tail)  # valuation > 0
        geom = TruncatedSeries.const(self.var, 1, order)
        pw = r
        while pw.valuation() < order and pw.coeffs:
            geom = geom + pw
            pw = (pw * r).truncate(order)
        out = {}
        for k, c in geom.coeffs.items():
            out[k - v] = c * lead_inv
        return TruncatedSeries(self.var, order - v, out)

    def agree_order(self, other):
        """Largest exponent bound below which the two series agree."""
        self._check(other)
        order = min(self.order, other.order)
        diff = (self - other).truncate(order)
        if not diff.coeffs:
            return Fraction(order, GRID)
        return Fraction(min(diff.coeffs), GRID)

    def eq_to_order(self, other, order=None):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries.const(self.var, other, self.order)
        common = min(self.order, other.order)
        if order is not None:
            k = Fraction(order) * GRID
            common = min(common, int(k))
        diff = (self - other).truncate(common)
        return not diff.coeffs

    def coefficient(self, exp):
        k = Fraction(exp) * GRID
        if k.denominator != 1:
            raise ValueError("off-grid exponent")
        if int(k) >= self.order:
            raise ValueError("coefficient beyond working order")
        return self.coeffs.get(int(k), Fraction(0))

    def __repr__(self):
        bits = []
        for k in sorted(self.coeffs)[:8]:
            bits.append("(%r)*%s^%s" % (self.coeffs[k], self.var,
                                        Fraction(k, GRID)))
        more = "..." if len(self.coeffs) > 8 else ""
        return "Series[%s + %s O(%s^%s)]" % (" + ".join(bits), more,
                                             self.var,
                                             Fraction(self.order, GRID))


# ---------------------------------------------------------------------------
# parameter points
# ---------------------------------------------------------------------------

class ParamPoint:
    """An assignment of exact rational values to parameter names, with at
    most one name left symbolic (realized as a RatF generator)."""

    __slots__ = ("values", "symbolic", "seed")

    def __init__(self, values, symbolic=None, seed=None):
        self.values = dict(values)
        self.symbolic = symbolic
        self.seed = seed

    def __getitem__(self, name):
        if name == self.symbolic:
            return RatF.gen(name)
        return self.values[name]

    def get(self, name, default=None):
        if name == self.symbolic:
            return RatF.gen(name)
        return self.values.get(name, default)

    def names(self):
        out = sorted(self.values)
        if self.symbolic:
            out.append(self.symbolic)
        return out

    def describe(self):
        bits = ["%s=%s" % (k, v) for k, v in sorted(self.values.items())]
        if self.symbolic:
            bits.append("%s=<symbolic>" % self.symbolic)
        return ", ".join(bits)

    def fingerprint(self):
        return hashlib.sha256(self.describe().encode()).hexdigest()[:16]


def draw_param_point(names, seed, symbolic=None, avoid=()):
    """Deterministically draw pairwise distinct rationals p/q with
    1 <= p < q <= 1000 for the given names.

    ``symbolic`` optionally leaves one extra name symbolic.  ``avoid``
    lists values the draw must not hit.
    """
    rng = random.Random("parampoint:%s:%s" % (seed, ",".join(names)))
    taken = set(Fraction(a) for a in avoid)
    values = {}
    for name in names:
        while True:
            q = rng.randint(2, 1000)
            p = rng.randint(1, q - 1)
            v = Fraction(p, q)
            if v not in taken:
                taken.add(v)
                values[name] = v
                break
    return ParamPoint(values, symbolic=symbolic, seed=seed)
