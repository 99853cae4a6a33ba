"""Irreducible factorization over the rationals.

Univariate factorization is delegated to sympy's exact Zassenhaus-based
``factor_list`` (rational domain, no numerics anywhere).  On top of it we
factor binary forms completely: dehomogenize to ``F(t, 1)``, factor, then
re-homogenize and account for the root at infinity (the factor y).
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from .errors import ZeroPolynomial
from .poly import BPoly, Factorization, normalize_primitive

__all__ = ["factor_univariate", "factor_binary_form", "rational_roots"]

_T = sympy.Symbol("t")


def factor_univariate(coeffs):
    """Factor a univariate rational polynomial into irreducibles.

    ``coeffs`` is a coefficient list (index = degree).  Returns
    ``(unit, [(factor_coeffs, exponent), ...])`` with primitive integer
    factors, positive leading coefficients, such that
    ``unit * prod(factor ** exponent)`` equals the input exactly.
    """
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        raise ZeroPolynomial("factorization of the zero polynomial")
    if len(coeffs) == 1:
        return coeffs[0], []
    expr = sympy.Poly(list(reversed(coeffs)), _T, domain="QQ")
    content, factor_list = expr.factor_list()
    unit = Fraction(content.p, content.q)
    factors = []
    for fac, exp in factor_list:
        fac_coeffs = [Fraction(c.p, c.q) for c in reversed(fac.all_coeffs())]
        # normalize to primitive integer with positive leading coefficient
        denom = 1
        for c in fac_coeffs:
            denom = denom * c.denominator // _gcd(denom, c.denominator)
        ints = [c * denom for c in fac_coeffs]
        g = 0
        for c in ints:
            g = _gcd(g, abs(int(c)))
        sign = 1 if ints[-1] > 0 else -1
        prim = [Fraction(int(c) // (sign * g)) for c in ints]
        unit *= Fraction(sign * g, denom) ** exp
        factors.append((prim, int(exp)))
    return unit, factors


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _homogenize(coeffs, total_degree):
    """Lift univariate ``p(t)`` to the binary form ``y^deg * p(x/y)``,
    padded with y to reach ``total_degree``."""
    deg = len(coeffs) - 1
    terms = {}
    for i, c in enumerate(coeffs):
        if c:
            terms[(i, deg - i)] = c
    form = BPoly(terms)
    pad = total_degree - deg
    if pad > 0:
        form = form * BPoly.monomial(0, pad)
    return form


def factor_binary_form(form):
    """Complete irreducible factorization of a nonzero binary form.

    Roots at infinity appear as the factor ``y`` with exponent
    ``n - deg F(t, 1)``.  The factor degrees weighted by exponents sum
    to the form degree.
    """
    if form.is_zero:
        raise ZeroPolynomial("factorization of the zero form")
    n = form.degree
    # dehomogenize: F(t, 1)
    coeffs = [Fraction(0)] * (n + 1)
    for (i, j), c in form.terms.items():
        coeffs[i] = c
    unit, uni_factors = factor_univariate(coeffs)
    factors = []
    covered = 0
    for fac_coeffs, exp in uni_factors:
        fdeg = len(fac_coeffs) - 1
        factor = BPoly({(i, fdeg - i): c for i, c in enumerate(fac_coeffs) if c})
        factors.append((normalize_primitive(factor)[1], exp))
        covered += fdeg * exp
    pad = n - covered
    if pad > 0:
        factors.append((BPoly.monomial(0, 1), pad))
    result = Factorization(unit=unit, factors=tuple(factors), grade="irreducible")
    assert result.reconstruct() == form
    return result


def rational_roots(coeffs):
    """All rational roots of a univariate polynomial with multiplicities,
    plus the irreducible non-linear factors (potential irrational roots).

    Returns ``(roots, nonlinear)`` where ``roots`` is a list of
    ``(root, multiplicity)`` and ``nonlinear`` a list of
    ``(factor_coeffs, multiplicity)``.
    """
    _, factors = factor_univariate(coeffs)
    roots = []
    nonlinear = []
    for fac_coeffs, exp in factors:
        if len(fac_coeffs) == 2:
            b, a = fac_coeffs
            roots.append((Fraction(-b, a), exp))
        elif len(fac_coeffs) > 2:
            nonlinear.append((fac_coeffs, exp))
    return roots, nonlinear
