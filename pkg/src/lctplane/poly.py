"""Sparse bivariate polynomials with exact rational coefficients.

A polynomial in x, y is a map from exponent pairs ``(i, j)`` to nonzero
``Fraction`` coefficients; the zero polynomial is the empty map.  All
values are immutable and every operation is pure, so everything here is
safe to share between threads.

The term order used for rendering and leading-term extraction is graded
lexicographic (total degree first, then x-degree).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

from ._kernels import add_terms, mul_terms, scale_terms
from .errors import (
    BothZero,
    DivisorZero,
    NotDivisible,
    SingularMatrix,
    ZeroPolynomial,
)
from .extended import INF, NEG_INF

__all__ = [
    "BPoly",
    "BinaryForm",
    "Factorization",
    "ZERO",
    "ONE",
    "X",
    "Y",
    "gcd_bivariate",
    "gcd_many",
    "squarefree_decomposition",
    "divides",
    "normalize_primitive",
]


def _grlex_key(exp):
    i, j = exp
    return (i + j, i)


class BPoly:
    """Immutable sparse bivariate polynomial over the rationals."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        canonical = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in term {(i, j)}")
                c = Fraction(c)
                if c:
                    canonical[(int(i), int(j))] = c
        object.__setattr__(self, "_terms", canonical)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("BPoly is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def _raw(cls, terms):
        """Wrap an already-canonical term dict without copying checks."""
        self = cls.__new__(cls)
        object.__setattr__(self, "_terms", terms)
        object.__setattr__(self, "_hash", None)
        return self

    @classmethod
    def zero(cls):
        return ZERO

    @classmethod
    def constant(cls, c):
        c = Fraction(c)
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def monomial(cls, i, j, c=1):
        c = Fraction(c)
        if c == 0:
            return ZERO
        return cls._raw({(i, j): c})

    # -- basic structure -------------------------------------------------

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    @property
    def is_zero(self):
        return not self._terms

    @property
    def degree(self):
        """Total degree; ``NEG_INF`` for the zero polynomial."""
        if not self._terms:
            return NEG_INF
        return max(i + j for i, j in self._terms)

    def coefficient(self, i, j):
        return self._terms.get((i, j), Fraction(0))

    def is_constant(self):
        return all(exp == (0, 0) for exp in self._terms)

    def leading_term(self):
        """Graded-lex leading ``((i, j), coefficient)``; input nonzero."""
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        exp = max(self._terms, key=_grlex_key)
        return exp, self._terms[exp]

    # -- equality, hashing, rendering ------------------------------------

    def __eq__(self, other):
        if isinstance(other, BPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == BPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self._terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def render(self):
        """Canonical text form, parseable back by ``parse_poly``."""
        if not self._terms:
            return "0"
        pieces = []
        for exp in sorted(self._terms, key=_grlex_key, reverse=True):
            i, j = exp
            c = self._terms[exp]
            mono = []
            if i == 1:
                mono.append("x")
            elif i > 1:
                mono.append(f"x^{i}")
            if j == 1:
                mono.append("y")
            elif j > 1:
                mono.append(f"y^{j}")
            mono_text = "*".join(mono)
            mag = abs(c)
            if not mono_text:
                body = str(mag)
            elif mag == 1:
                body = mono_text
            else:
                body = f"{mag}*{mono_text}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"BPoly({self.render()!r})"

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return BPoly._raw(add_terms(self._terms, other._terms))

    __radd__ = __add__

    def __neg__(self):
        return BPoly._raw(scale_terms(self._terms, Fraction(-1)))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return ZERO
            return BPoly._raw(scale_terms(self._terms, c))
        if isinstance(other, BPoly):
            return BPoly._raw(mul_terms(self._terms, other._terms))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base2 = base * base if n > 1 else base
            base = base2
            n >>= 1
        return result

    def __bool__(self):
        return bool(self._terms)

    # -- orders and parts ------------------------------------------------

    def multiplicity(self):
        """Order of vanishing at the origin; ``INF`` for zero."""
        if not self._terms:
            return INF
        return min(i + j for i, j in self._terms)

    def homogeneous_part(self, k):
        """Sum of the terms of total degree ``k`` (possibly zero)."""
        picked = {exp: c for exp, c in self._terms.items() if exp[0] + exp[1] == k}
        return BinaryForm._raw(picked)

    def weighted_order(self, w):
        """Minimal weighted degree and the weighted leading part.

        ``w`` is a pair of positive rationals.  Raises ``ZeroPolynomial``
        for the zero polynomial.
        """
        w1, w2 = Fraction(w[0]), Fraction(w[1])
        if w1 <= 0 or w2 <= 0:
            raise ValueError("weights must be positive")
        if not self._terms:
            raise ZeroPolynomial("weighted order of the zero polynomial")
        wt = min(i * w1 + j * w2 for i, j in self._terms)
        lead = {
            exp: c
            for exp, c in self._terms.items()
            if exp[0] * w1 + exp[1] * w2 == wt
        }
        return wt, BPoly._raw(lead)

    def derivative(self, var):
        """Partial derivative with respect to ``"x"`` or ``"y"``."""
        out = {}
        if var == "x":
            for (i, j), c in self._terms.items():
                if i:
                    out[(i - 1, j)] = c * i
        elif var == "y":
            for (i, j), c in self._terms.items():
                if j:
                    out[(i, j - 1)] = c * j
        else:
            raise ValueError(f"unknown variable {var!r}")
        return BPoly._raw(out)

    # -- evaluation and substitution -------------------------------------

    def evaluate(self, px, py):
        px, py = Fraction(px), Fraction(py)
        total = Fraction(0)
        for (i, j), c in self._terms.items():
            total += c * px**i * py**j
        return total

    def substitute(self, sx, sy):
        """Compose with ``x -> sx``, ``y -> sy`` (both ``BPoly``)."""
        max_i = max((i for i, _ in self._terms), default=0)
        max_j = max((j for _, j in self._terms), default=0)
        xpows = [ONE]
        for _ in range(max_i):
            xpows.append(xpows[-1] * sx)
        ypows = [ONE]
        for _ in range(max_j):
            ypows.append(ypows[-1] * sy)
        result = ZERO
        for (i, j), c in self._terms.items():
            result = result + xpows[i] * ypows[j] * c
        return result

    def translate(self, p):
        """``f(x + p1, y + p2)``; degree is preserved."""
        p1, p2 = Fraction(p[0]), Fraction(p[1])
        if p1 == 0 and p2 == 0:
            return self
        return self.substitute(X + BPoly.constant(p1), Y + BPoly.constant(p2))

    def linear_change(self, m):
        """Compose with the invertible linear map ``(x, y) -> M (x, y)``."""
        (a, b), (c, d) = m
        a, b, c, d = Fraction(a), Fraction(b), Fraction(c), Fraction(d)
        if a * d - b * c == 0:
            raise SingularMatrix("linear change must be invertible")
        return self.substitute(X * a + Y * b, X * c + Y * d)

    # -- exact division --------------------------------------------------

    def divide_exact(self, g):
        """Quotient ``q`` with ``q * g == self``; ``NotDivisible`` otherwise."""
        if not isinstance(g, BPoly):
            g = BPoly.constant(g)
        if g.is_zero:
            raise DivisorZero("division by the zero polynomial")
        if not self._terms:
            return ZERO
        g_exp, g_coeff = g.leading_term()
        rem = dict(self._terms)
        quot = {}
        while rem:
            r_exp = max(rem, key=_grlex_key)
            di, dj = r_exp[0] - g_exp[0], r_exp[1] - g_exp[1]
            if di < 0 or dj < 0:
                raise NotDivisible(f"{g} does not divide {self}")
            c = rem[r_exp] / g_coeff
            quot[(di, dj)] = quot.get((di, dj), Fraction(0)) + c
            rem = add_terms(
                rem, scale_terms(mul_terms({(di, dj): Fraction(1)}, g._terms), -c)
            )
        return BPoly({exp: c for exp, c in quot.items() if c})


class BinaryForm(BPoly):
    """A homogeneous bivariate polynomial (possibly zero).

    Instances arise as homogeneous parts and tangent cones; the form
    degree is recoverable from any stored term.
    """

    __slots__ = ()

    def __init__(self, terms=None):
        super().__init__(terms)
        degs = {i + j for i, j in self._terms}
        if len(degs) > 1:
            raise ValueError("binary form must be homogeneous")

    @classmethod
    def _raw(cls, terms):
        self = BPoly.__new__(cls)
        object.__setattr__(self, "_terms", terms)
        object.__setattr__(self, "_hash", None)
        return self

    @property
    def form_degree(self):
        """Degree of the form; ``NEG_INF`` when zero."""
        return self.degree


ZERO = BPoly._raw({})
ONE = BPoly._raw({(0, 0): Fraction(1)})
X = BPoly._raw({(1, 0): Fraction(1)})
Y = BPoly._raw({(0, 1): Fraction(1)})


def _coerce(value):
    if isinstance(value, BPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return BPoly.constant(value)
    return NotImplemented


@dataclass(frozen=True)
class Factorization:
    """``unit * prod(factor ** exponent)`` reconstructing a polynomial.

    ``grade`` is ``"irreducible"`` for a full factorization over the
    rationals and ``"squarefree"`` for a squarefree-grade decomposition
    (factors pairwise coprime and squarefree, not necessarily prime).
    Factors are primitive with integer coefficients and positive
    graded-lex leading coefficient, pairwise non-associate.
    """

    unit: Fraction
    factors: tuple
    grade: str = "irreducible"

    def reconstruct(self):
        out = BPoly.constant(self.unit)
        for factor, exp in self.factors:
            out = out * factor**exp
        return out


def normalize_primitive(f):
    """Split ``f = unit * primitive`` with integer primitive content-1 part
    whose graded-lex leading coefficient is positive."""
    if f.is_zero:
        raise ZeroPolynomial("cannot normalize the zero polynomial")
    import math

    denom_lcm = 1
    for c in f.terms.values():
        denom_lcm = denom_lcm * c.denominator // math.gcd(denom_lcm, c.denominator)
    scaled = {exp: c * denom_lcm for exp, c in f.terms.items()}
    num_gcd = 0
    for c in scaled.values():
        num_gcd = math.gcd(num_gcd, abs(c.numerator))
    lead_exp = max(scaled, key=_grlex_key)
    sign = 1 if scaled[lead_exp] > 0 else -1
    unit = Fraction(sign * num_gcd, denom_lcm)
    primitive = BPoly(
        {exp: c / (sign * num_gcd) for exp, c in scaled.items()}
    )
    return unit, primitive


def divides(g, f):
    """True iff ``g`` divides ``f`` exactly (``g`` nonzero)."""
    try:
        f.divide_exact(g)
        return True
    except NotDivisible:
        return False


# ---------------------------------------------------------------------------
# Univariate helpers over Q (coefficient lists, index = degree).
# ---------------------------------------------------------------------------


def _u_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _u_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _u_trim(out)


def _u_sub(a, b):
    out = list(a) + [Fraction(0)] * (len(b) - len(a))
    for i, cb in enumerate(b):
        out[i] -= cb
    return _u_trim(out)


def _u_scale(a, c):
    return _u_trim([ca * c for ca in a])


def _u_divmod(a, b):
    """Division with remainder in Q[t]; ``b`` nonzero."""
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    rem = list(a)
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(rem) >= len(b):
        c = rem[-1] / b[-1]
        d = len(rem) - len(b)
        quot[d] = c
        for i, cb in enumerate(b):
            rem[i + d] -= c * cb
        _u_trim(rem)
    return _u_trim(quot), rem


def _u_gcd(a, b):
    a, b = list(a), list(b)
    while b:
        _, r = _u_divmod(a, b)
        a, b = b, r
    if a:
        a = _u_scale(a, 1 / a[-1])  # monic
    return a


# ---------------------------------------------------------------------------
# Bivariate gcd via a primitive pseudo-remainder sequence in x over Q[y].
# ---------------------------------------------------------------------------


def _to_x_coeffs(f):
    """BPoly -> list of univariate-in-y coefficient lists, index = x-degree."""
    xdeg = max((i for i, _ in f.terms), default=0)
    out = [[] for _ in range(xdeg + 1)]
    for (i, j), c in f.terms.items():
        col = out[i]
        if len(col) <= j:
            col.extend(Fraction(0) for _ in range(j + 1 - len(col)))
        col[j] = c
    return [_u_trim(col) for col in out]


def _from_x_coeffs(cols):
    terms = {}
    for i, col in enumerate(cols):
        for j, c in enumerate(col):
            if c:
                terms[(i, j)] = c
    return BPoly(terms)


def _x_trim(cols):
    while cols and not cols[-1]:
        cols.pop()
    return cols


def _x_content(cols):
    content = []
    for col in cols:
        if col:
            content = _u_gcd(content, col)
    return content


def _x_primitive(cols):
    content = _x_content(cols)
    if not content or content == [Fraction(1)]:
        return [list(col) for col in cols]
    out = []
    for col in cols:
        if not col:
            out.append([])
        else:
            q, r = _u_divmod(col, content)
            assert not r
            out.append(q)
    return out


def _x_prem(f, g):
    """Pseudo-remainder of ``f`` by ``g`` as x-polynomials over Q[y]."""
    rem = [list(col) for col in f]
    gl = g[-1]
    while _x_trim(rem) and len(rem) >= len(g):
        rl = rem[-1]
        d = len(rem) - len(g)
        rem = [_u_mul(col, gl) for col in rem]
        for k, gcol in enumerate(g):
            rem[k + d] = _u_sub(rem[k + d], _u_mul(gcol, rl))
        _x_trim(rem)
    return rem


def gcd_bivariate(f, g):
    """A gcd of ``f`` and ``g``, primitive with positive leading coefficient.

    Raises ``BothZero`` when both inputs vanish identically.
    """
    if f.is_zero and g.is_zero:
        raise BothZero("gcd of two zero polynomials")
    if f.is_zero:
        return normalize_primitive(g)[1]
    if g.is_zero:
        return normalize_primitive(f)[1]
    if f.is_constant() or g.is_constant():
        return ONE

    fc = _x_trim(_to_x_coeffs(f))
    gc = _x_trim(_to_x_coeffs(g))
    content = _u_gcd(_x_content(fc), _x_content(gc))
    r0, r1 = _x_primitive(fc), _x_primitive(gc)
    if len(r0) < len(r1):
        r0, r1 = r1, r0
    while _x_trim(r1):
        r = _x_prem(r0, r1)
        r0, r1 = r1, _x_primitive(_x_trim(r)) if _x_trim(r) else []
    gcd_pp = _from_x_coeffs(_x_primitive(r0))
    content_poly = BPoly({(0, j): c for j, c in enumerate(content) if c})
    result = gcd_pp * content_poly
    return normalize_primitive(result)[1]


def gcd_many(polys):
    """gcd of a sequence of polynomials, ignoring zero entries."""
    acc = None
    for p in polys:
        if p.is_zero:
            continue
        acc = p if acc is None else gcd_bivariate(acc, p)
        if acc.is_constant():
            return ONE
    if acc is None:
        raise BothZero("gcd of all-zero sequence")
    return normalize_primitive(acc)[1]


def squarefree_decomposition(f):
    """Squarefree-grade decomposition ``unit * prod(a_e ** e)``.

    The returned factors are pairwise coprime, squarefree, primitive and
    normalized; exponents are strictly increasing.  Char-0 Musser scheme
    driven by ``gcd(f, f_x, f_y)``.
    """
    if f.is_zero:
        raise ZeroPolynomial("squarefree decomposition of zero")
    if f.is_constant():
        return Factorization(
            unit=f.coefficient(0, 0), factors=(), grade="squarefree"
        )
    g = gcd_many([f, f.derivative("x"), f.derivative("y")])
    c = f.divide_exact(g)  # product of the distinct prime factors
    factors = []
    e = 1
    while not g.is_constant():
        d = gcd_bivariate(g, c)
        part = c.divide_exact(d)
        if not part.is_constant():
            factors.append((normalize_primitive(part)[1], e))
        c = d
        g = g.divide_exact(d)
        e += 1
    if not c.is_constant():
        factors.append((normalize_primitive(c)[1], e))
    rebuilt = ONE
    for factor, exp in factors:
        rebuilt = rebuilt * factor**exp
    unit_poly = f.divide_exact(rebuilt)
    assert unit_poly.is_constant()
    return Factorization(
        unit=unit_poly.coefficient(0, 0),
        factors=tuple(factors),
        grade="squarefree",
    )
