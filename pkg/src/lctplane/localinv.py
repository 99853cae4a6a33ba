"""Local invariants of a plane curve germ at the origin.

Intersection multiplicity is computed by the classical exact recursion
(restrict to y = 0, cancel the lowest x-power, extract y factors); the
Milnor number is the intersection multiplicity of the two partial
derivatives.  Everything is exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotThroughOrigin, ZeroPolynomial
from .extended import INF
from .factorize import factor_binary_form
from .poly import BPoly, gcd_bivariate, gcd_many

__all__ = [
    "intersection_multiplicity_origin",
    "milnor_number_origin",
    "tangent_cone_pattern",
    "is_square_free",
    "weighted_lct_upper_bound",
    "TangentConePattern",
    "WeightedBound",
]


@dataclass(frozen=True)
class TangentConePattern:
    """Line multiplicities of the tangent cone over the algebraic closure.

    ``entries`` is sorted descending; an irreducible rational factor of
    degree g with exponent e contributes g copies of e.  The entries sum
    to the multiplicity at the origin.
    """

    entries: tuple

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class WeightedBound:
    """The weighted-homogeneous lct upper bound ``b = (w1 + w2) / wt(f)``."""

    weights: tuple
    wt: Fraction
    bound: Fraction
    leading_part: BPoly


def _restrict_y0(f):
    """Coefficient list of f(x, 0) (index = x-degree); [] if y | f."""
    xdeg = max((i for i, j in f.terms if j == 0), default=-1)
    coeffs = [Fraction(0)] * (xdeg + 1)
    for (i, j), c in f.terms.items():
        if j == 0:
            coeffs[i] = c
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _extract_y(f):
    """Write f = y^a * h with y not dividing h; return (a, h)."""
    a = min(j for _, j in f.terms)
    if a == 0:
        return 0, f
    return a, BPoly({(i, j - a): c for (i, j), c in f.terms.items()})


def _univariate_to_x_poly(coeffs):
    return BPoly({(i, 0): c for i, c in enumerate(coeffs) if c})


def intersection_multiplicity_origin(f, g):
    """Local intersection number I_0(f, g) at the origin.

    Returns ``INF`` when f and g share a component through the origin.
    """
    if f.is_zero or g.is_zero:
        raise ZeroPolynomial("intersection multiplicity needs nonzero curves")
    if f.evaluate(0, 0) != 0 or g.evaluate(0, 0) != 0:
        return 0
    common = gcd_bivariate(f, g)
    if not common.is_constant() and common.evaluate(0, 0) == 0:
        return INF

    total = 0
    while True:
        if f.evaluate(0, 0) != 0 or g.evaluate(0, 0) != 0:
            return total
        fx0 = _restrict_y0(f)
        gx0 = _restrict_y0(g)
        if not fx0 and not gx0:
            raise AssertionError("common factor y slipped past the gcd check")
        if not fx0:
            f, g = g, f
            fx0, gx0 = gx0, fx0
        if not gx0:
            # y divides g: I(f, g) = a * ord_x f(x,0) + I(f, h)
            a, h = _extract_y(g)
            r = next(i for i, c in enumerate(fx0) if c)
            total += a * r
            g = h
            continue
        r = next(i for i, c in enumerate(fx0) if c)
        s = next(i for i, c in enumerate(gx0) if c)
        if r > s:
            f, g = g, f
            fx0, gx0 = gx0, fx0
            r, s = s, r
        u = _univariate_to_x_poly(fx0[r:])  # f(x,0) = x^r * u, u(0) != 0
        v = _univariate_to_x_poly(gx0[s:])
        shift = BPoly.monomial(s - r, 0)
        g = u * g - v * shift * f
        if g.is_zero:
            raise AssertionError("unexpected exact cancellation in recursion")


def milnor_number_origin(f):
    """Milnor number at the origin: I_0(f_x, f_y).

    Finite iff the origin is an isolated critical point; 0 iff the curve
    is smooth at the origin.
    """
    if f.is_zero:
        raise ZeroPolynomial("Milnor number of the zero polynomial")
    if f.evaluate(0, 0) != 0:
        raise NotThroughOrigin("curve does not pass through the origin")
    fx = f.derivative("x")
    fy = f.derivative("y")
    if fx.is_zero and fy.is_zero:
        raise ZeroPolynomial("constant polynomial has no Milnor number")
    if fx.is_zero or fy.is_zero:
        other = fy if fx.is_zero else fx
        return 0 if other.evaluate(0, 0) != 0 else INF
    return intersection_multiplicity_origin(fx, fy)


def tangent_cone_pattern(f):
    """Line-multiplicity multiset of the tangent cone of f at the origin."""
    if f.is_zero:
        raise ZeroPolynomial("tangent cone of the zero polynomial")
    if f.evaluate(0, 0) != 0:
        raise NotThroughOrigin("curve does not pass through the origin")
    cone = f.homogeneous_part(f.multiplicity())
    entries = []
    for factor, exp in factor_binary_form(cone).factors:
        entries.extend([exp] * factor.degree)
    return TangentConePattern(entries=tuple(sorted(entries, reverse=True)))


def is_square_free(f):
    """True iff no non-unit square divides f.

    Decided by ``gcd(f, f_x, f_y)`` being constant, which is equivalent
    over a field of characteristic zero (and, unlike the per-variable
    test, also correct for factors involving a single variable).
    """
    if f.is_zero:
        raise ZeroPolynomial("square-freeness of the zero polynomial")
    if f.is_constant():
        return True
    return gcd_many([f, f.derivative("x"), f.derivative("y")]).is_constant()


def weighted_lct_upper_bound(f, w):
    """The Lemma-style weighted upper bound: lct_0(f) <= (w1+w2)/wt(f)."""
    if f.is_zero:
        raise ZeroPolynomial("weighted bound of the zero polynomial")
    if f.evaluate(0, 0) != 0:
        raise NotThroughOrigin("curve does not pass through the origin")
    w1, w2 = Fraction(w[0]), Fraction(w[1])
    wt, leading = f.weighted_order((w1, w2))
    return WeightedBound(
        weights=(w1, w2), wt=wt, bound=(w1 + w2) / wt, leading_part=leading
    )
