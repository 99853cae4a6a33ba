"""Unit tests for the degree <= 5 classification tables and samplers."""

import hashlib
import json
from fractions import Fraction
from importlib import resources

import pytest

from lctplane.classify import (
    all_symbols,
    allowed_types,
    class_info,
    classify_singularity,
    lct_low_degree,
    sample_normal_form,
    table1_values,
)
from lctplane.errors import (
    DegreeOutOfRange,
    NotClassifiable,
    NotSingular,
    NotSquareFree,
)
from lctplane.extended import INF
from lctplane.localinv import milnor_number_origin
from lctplane.parse import parse_poly as P

TABLES_SHA256 = "e94a12e9fd237a46c0cbc1f4b2f5c4aaebe4c890239b9a10c8cbf3e0b26f4d53"


class TestTablesData:
    def test_checksum_frozen(self):
        raw = resources.files("lctplane.data").joinpath("tables.json").read_bytes()
        assert hashlib.sha256(raw).hexdigest() == TABLES_SHA256

    def test_row_count(self):
        assert len(all_symbols()) == 40

    def test_key_injective(self):
        raw = resources.files("lctplane.data").joinpath("tables.json").read_text()
        rows = json.loads(raw)["classes"]
        keys = {
            (r["mult"], tuple(sorted(r["pattern"], reverse=True)), r["mu"])
            for r in rows
        }
        assert len(keys) == len(rows)

    def test_lct_formulas(self):
        for k in range(1, 13):
            assert class_info(f"A{k}").lct == Fraction(k + 3, 2 * (k + 1))
        for k in range(4, 13):
            assert class_info(f"D{k}").lct == Fraction(k, 2 * (k - 1))
        for symbol in all_symbols():
            if symbol.startswith("T(2,"):
                assert class_info(symbol).lct == Fraction(1, 2)


class TestAllowedTypes:
    def test_d2(self):
        assert allowed_types(2) == frozenset({"A1"})

    def test_d3(self):
        assert allowed_types(3) == frozenset({"A1", "A2", "A3", "D4"})

    def test_d4(self):
        assert allowed_types(4) == frozenset(
            {f"A{k}" for k in range(1, 8)}
            | {"D4", "D5", "D6", "E6", "E7", "T(2,4,4)"}
        )

    def test_d1_empty(self):
        assert allowed_types(1) == frozenset()

    def test_out_of_range(self):
        for d in (0, 6):
            with pytest.raises(DegreeOutOfRange):
                allowed_types(d)


class TestClassify:
    def test_a2(self):
        cls = classify_singularity(P("x^2 + y^3"))
        assert (cls.symbol, cls.mu, cls.lct) == ("A2", 2, Fraction(5, 6))

    def test_z11(self):
        cls = classify_singularity(P("x^3*y + y^5 + x*y^4"))
        assert (cls.symbol, cls.mu, cls.lct) == ("Z11", 11, Fraction(7, 15))

    def test_t244_a0(self):
        cls = classify_singularity(P("x^4 + y^4"))
        assert (cls.symbol, cls.mu, cls.lct) == ("T(2,4,4)", 9, Fraction(1, 2))

    def test_degenerate_t244(self):
        with pytest.raises(NotSquareFree):
            classify_singularity(P("x^4 + 2*x^2*y^2 + y^4"))

    def test_smooth_rejected(self):
        with pytest.raises(NotSingular):
            classify_singularity(P("y - x^2"))

    def test_off_origin_rejected(self):
        with pytest.raises(NotSingular):
            classify_singularity(P("x + 1"))

    def test_unmatched_triple(self):
        # an ordinary 7-fold point never occurs on a reduced quintic germ
        f = P("x^7 + y^7 + x*y^6 + 2*x^6*y + x^2*y^5")
        if milnor_number_origin(f) is not INF:
            with pytest.raises(NotClassifiable):
                classify_singularity(f)


class TestLctLowDegree:
    def test_smooth(self):
        assert lct_low_degree(P("y - x^2")) == 1

    def test_d5_type(self):
        assert lct_low_degree(P("x^2*y + y^4")) == Fraction(5, 8)

    def test_off_curve(self):
        assert lct_low_degree(P("x^2 + y^3"), (7, 5)) is INF

    def test_translated_point(self):
        f = P("x^2 + y^3").translate((-1, -2))
        assert lct_low_degree(f, (1, 2)) == Fraction(5, 6)

    def test_degree_out_of_range(self):
        with pytest.raises(DegreeOutOfRange):
            lct_low_degree(P("x^6 + y^6 + x*y"))


class TestTable1:
    EXPECTED = {
        1: ("1",),
        2: ("1",),
        3: ("2/3", "3/4", "5/6", "1"),
        4: (
            "1/2", "5/9", "7/12", "3/5", "5/8", "9/14",
            "2/3", "7/10", "3/4", "5/6", "1",
        ),
        5: (
            "2/5", "7/16", "9/20", "5/11", "7/15", "1/2", "8/15",
            "6/11", "11/20", "5/9", "9/16", "4/7", "15/26", "7/12",
            "13/22", "3/5", "11/18", "5/8", "9/14", "2/3", "7/10",
            "3/4", "5/6", "1",
        ),
    }

    def test_rows_exact(self):
        for d, row in self.EXPECTED.items():
            assert table1_values(d) == tuple(Fraction(v) for v in row)

    def test_d5_has_24_values(self):
        assert len(table1_values(5)) == 24


class TestSampler:
    def test_deterministic(self):
        for symbol in ("A3", "T(2,3,6)", "N16"):
            assert sample_normal_form(symbol, 7) == sample_normal_form(symbol, 7)

    def test_a3_parameterless(self):
        assert sample_normal_form("A3", 0) == P("x^2 + y^4")

    def test_round_trip_all_symbols(self):
        for symbol in all_symbols():
            for seed in range(3):
                f = sample_normal_form(symbol, seed)
                assert classify_singularity(f).symbol == symbol

    def test_unknown_symbol(self):
        with pytest.raises(KeyError):
            sample_normal_form("Q99", 0)
