"""Unit tests for local invariants (intersection multiplicity, Milnor
number, tangent cone pattern, square-freeness, weighted bound)."""

from fractions import Fraction

import pytest

from lctplane.errors import NotThroughOrigin, ZeroPolynomial
from lctplane.extended import INF
from lctplane.localinv import (
    intersection_multiplicity_origin as imult,
    is_square_free,
    milnor_number_origin as milnor,
    tangent_cone_pattern,
    weighted_lct_upper_bound,
)
from lctplane.parse import parse_poly as P
from lctplane.poly import ZERO


class TestIntersectionMultiplicity:
    def test_transversal_lines(self):
        assert imult(P("x"), P("y")) == 1

    def test_parabola_axis(self):
        assert imult(P("y - x^2"), P("y")) == 2

    def test_cusp_partials(self):
        assert imult(P("2*x"), P("3*y^2")) == 2

    def test_off_origin(self):
        assert imult(P("x - 1"), P("y")) == 0

    def test_common_component(self):
        assert imult(P("x*y"), P("x*(x + y)")) is INF

    def test_symmetry(self):
        pairs = [("x^2 + y^3", "x*y + y^2"), ("x^3 - y^2", "x + y^5")]
        for a, b in pairs:
            assert imult(P(a), P(b)) == imult(P(b), P(a))

    def test_additivity(self):
        f, g, h = P("x + y^2"), P("y - x^2"), P("y + x^3")
        assert imult(f, g * h) == imult(f, g) + imult(f, h)

    def test_lower_bound(self):
        f, g = P("x^2 + y^3"), P("x*y + x^3")
        assert imult(f, g) >= f.multiplicity() * g.multiplicity()

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            imult(ZERO, P("x"))


class TestMilnorNumber:
    def test_cusp(self):
        assert milnor(P("x^2 + y^3")) == 2

    def test_d5(self):
        assert milnor(P("x^2*y + y^4")) == 5

    def test_smooth(self):
        assert milnor(P("y + x^2")) == 0

    def test_non_isolated(self):
        assert milnor(P("x^2*y^2")) is INF

    def test_not_through_origin(self):
        with pytest.raises(NotThroughOrigin):
            milnor(P("x + 1"))

    def test_ak_series(self):
        for k in range(1, 13):
            assert milnor(P(f"x^2 + y^{k + 1}")) == k


class TestTangentConePattern:
    def test_three_distinct_lines(self):
        assert tuple(tangent_cone_pattern(P("x^2*y + y^3"))) == (1, 1, 1)

    def test_triple_line(self):
        assert tuple(tangent_cone_pattern(P("x^3 + y^4"))) == (3,)

    def test_three_one(self):
        assert tuple(tangent_cone_pattern(P("x^3*y + y^5"))) == (3, 1)

    def test_entries_sum_to_multiplicity(self):
        for text in ("x^2 + y^3", "x^3*y + y^5", "x^2*y + y^3", "x^5 + y^5"):
            f = P(text)
            assert sum(tangent_cone_pattern(f)) == f.multiplicity()


class TestSquareFree:
    def test_three_lines(self):
        assert is_square_free(P("x*y*(x - y)"))

    def test_squared_conic(self):
        assert not is_square_free(P("(x^2 + y^2)^2"))

    def test_degenerate_t244(self):
        assert not is_square_free(P("x^4 + 2*x^2*y^2 + y^4"))

    def test_single_variable_factor(self):
        assert is_square_free(P("y"))
        assert not is_square_free(P("y^2"))
        assert not is_square_free(P("x^2*(y + 1)"))


class TestWeightedBound:
    def test_e6(self):
        assert weighted_lct_upper_bound(P("x^3 + y^4"), (4, 3)).bound == Fraction(
            7, 12
        )

    def test_a4(self):
        assert weighted_lct_upper_bound(P("x^2 + y^5"), (5, 2)).bound == Fraction(
            7, 10
        )

    def test_t236(self):
        f = P("x^2*y^2 + x^3 + y^6")
        result = weighted_lct_upper_bound(f, (2, 1))
        assert result.bound == Fraction(1, 2)
        assert result.wt == 6
        assert result.leading_part == f

    def test_invariant_formula(self):
        f = P("x^2 + y^3")
        r = weighted_lct_upper_bound(f, (Fraction(3, 2), 1))
        assert r.bound == (r.weights[0] + r.weights[1]) / r.wt
