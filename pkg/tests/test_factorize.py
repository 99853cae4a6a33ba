"""Unit tests for univariate and binary-form factorization."""

from fractions import Fraction

import pytest

from lctplane.errors import ZeroPolynomial
from lctplane.factorize import factor_binary_form, rational_roots
from lctplane.parse import parse_poly
from lctplane.poly import X, Y


def form(text):
    f = parse_poly(text)
    return f.homogeneous_part(f.degree)


class TestFactorBinaryForm:
    def test_line_times_conic(self):
        fac = factor_binary_form(form("x^2*y + y^3"))
        assert dict(fac.factors) == {Y: 1, parse_poly("x^2 + y^2"): 1}
        assert fac.reconstruct() == form("x^2*y + y^3")

    def test_pure_power(self):
        fac = factor_binary_form(form("x^3"))
        assert fac.factors == ((X, 3),)

    def test_monomial(self):
        fac = factor_binary_form(form("x^2*y^2"))
        assert dict(fac.factors) == {X: 2, Y: 2}

    def test_root_at_infinity(self):
        # y-factor appears as degree deficit of the dehomogenization
        fac = factor_binary_form(form("x^3*y + x^2*y^2"))
        assert dict(fac.factors) == {X: 2, Y: 1, parse_poly("x + y"): 1}

    def test_degree_budget(self):
        f = form("x^5 - x*y^4")
        fac = factor_binary_form(f)
        assert sum(p.degree * e for p, e in fac.factors) == 5
        assert fac.reconstruct() == f

    def test_unit_and_normalization(self):
        f = Fraction(-3, 2) * form("x^2*y")
        fac = factor_binary_form(f)
        assert fac.unit == Fraction(-3, 2)
        assert fac.reconstruct() == f

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            factor_binary_form(form("0"))


class TestRationalRoots:
    def test_simple(self):
        # t^2 - 1 = (t-1)(t+1)
        roots, nonlinear = rational_roots([Fraction(-1), Fraction(0), Fraction(1)])
        assert sorted(roots) == [(Fraction(-1), 1), (Fraction(1), 1)]
        assert nonlinear == []

    def test_irrational_pair(self):
        # t^2 - 2 has no rational roots
        roots, nonlinear = rational_roots([Fraction(-2), Fraction(0), Fraction(1)])
        assert roots == []
        assert len(nonlinear) == 1 and nonlinear[0][1] == 1

    def test_multiplicities(self):
        # (t - 1/2)^2 * t
        coeffs = [
            Fraction(0),
            Fraction(1, 4),
            Fraction(-1),
            Fraction(1),
        ]
        roots, nonlinear = rational_roots(coeffs)
        assert dict(roots) == {Fraction(0): 1, Fraction(1, 2): 2}
        assert nonlinear == []
