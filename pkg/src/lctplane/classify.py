"""Degree <= 5 singularity classification and lct lookup.

The classification tables ship as a versioned JSON data file embedded in
the package (``data/tables.json``).  A singular germ is classified by the
triple (multiplicity, tangent-cone line pattern, Milnor number), which is
injective on the table rows — this injectivity is asserted by the test
suite on the static data, and any triple outside the table raises
``NotClassifiable`` rather than guessing.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .errors import (
    DegreeOutOfRange,
    NotClassifiable,
    NotSingular,
    NotSquareFree,
    ZeroPolynomial,
)
from .extended import INF
from .localinv import (
    is_square_free,
    milnor_number_origin,
    tangent_cone_pattern,
)
from .parse import parse_terms
from .poly import BPoly

__all__ = [
    "SingularityClass",
    "TABLES_RESOURCE",
    "all_symbols",
    "allowed_types",
    "classify_singularity",
    "lct_low_degree",
    "table1_values",
    "sample_normal_form",
    "class_info",
]

TABLES_RESOURCE = "tables.json"


def _load_tables():
    text = (
        resources.files("lctplane.data").joinpath(TABLES_RESOURCE).read_text()
    )
    return json.loads(text)


_TABLES = _load_tables()
_CLASSES = {row["symbol"]: row for row in _TABLES["classes"]}
_BY_TRIPLE = {}
for _row in _TABLES["classes"]:
    _key = (_row["mult"], tuple(sorted(_row["pattern"], reverse=True)), _row["mu"])
    assert _key not in _BY_TRIPLE, f"ambiguous classification key {_key}"
    _BY_TRIPLE[_key] = _row["symbol"]


@dataclass(frozen=True)
class SingularityClass:
    """One classified germ: table symbol plus its numeric invariants."""

    symbol: str
    mult: int
    mu: int
    lct: Fraction


def all_symbols():
    return tuple(_CLASSES)


def class_info(symbol):
    """The SingularityClass for a table symbol."""
    if symbol not in _CLASSES:
        raise KeyError(f"unknown singularity symbol {symbol!r}")
    row = _CLASSES[symbol]
    return SingularityClass(
        symbol=symbol,
        mult=row["mult"],
        mu=row["mu"],
        lct=Fraction(row["lct"]),
    )


def allowed_types(d):
    """The set of singularity types occurring on reduced degree-d curves."""
    if not 1 <= d <= 5:
        raise DegreeOutOfRange(f"classification covers degrees 1..5, got {d}")
    return frozenset(_TABLES["types_by_degree"][str(d)])


def classify_singularity(f):
    """Classify the singular germ of f at the origin.

    The lookup covers every germ occurring on a reduced curve of degree
    at most 5 (any polynomial realizing such a germ is accepted, e.g. the
    normal forms themselves, whose global degree can exceed 5); a triple
    outside the table raises ``NotClassifiable``.
    """
    if f.is_zero:
        raise ZeroPolynomial("cannot classify the zero polynomial")
    if not is_square_free(f):
        raise NotSquareFree("curve must be reduced")
    mult = f.multiplicity()
    if f.evaluate(0, 0) != 0 or mult < 2:
        raise NotSingular("origin is not a singular point of the curve")
    pattern = tuple(tangent_cone_pattern(f))
    mu = milnor_number_origin(f)
    if mu is INF:
        raise NotClassifiable(
            "non-isolated critical point; input cannot be a reduced germ"
        )
    key = (mult, pattern, mu)
    symbol = _BY_TRIPLE.get(key)
    if symbol is None:
        raise NotClassifiable(
            f"no table row matches mult={mult}, tangent cone pattern="
            f"{list(pattern)}, Milnor number={mu}"
        )
    return class_info(symbol)


def lct_low_degree(f, p=(0, 0)):
    """lct of a reduced curve of degree <= 5 at a rational point.

    Returns ``INF`` when the point is not on the curve (convention) and
    1 at smooth points.
    """
    if f.is_zero:
        raise ZeroPolynomial("cannot analyze the zero polynomial")
    if not 1 <= f.degree <= 5:
        raise DegreeOutOfRange(f"lookup covers degrees 1..5, got {f.degree}")
    if not is_square_free(f):
        raise NotSquareFree("curve must be reduced")
    local = f.translate(p)
    if local.evaluate(0, 0) != 0:
        return INF
    if local.multiplicity() <= 1:
        return Fraction(1)
    return classify_singularity(local).lct


def table1_values(d):
    """All lct values on reduced degree-d curves: {1} plus the lct of
    every singularity type allowed at degree d.  Sorted ascending."""
    values = {Fraction(1)}
    for symbol in allowed_types(d):
        values.add(class_info(symbol).lct)
    return tuple(sorted(values))


def _instantiate(row, params):
    """Evaluate the normal-form template at rational parameter values."""
    variables = ("x", "y", "a", "b", "c")
    raw = parse_terms(row["normal_form"], variables)
    terms = {}
    for (i, j, ea, eb, ec), coeff in raw.items():
        value = (
            coeff
            * params.get("a", Fraction(0)) ** ea
            * params.get("b", Fraction(0)) ** eb
            * params.get("c", Fraction(0)) ** ec
        )
        if value:
            terms[(i, j)] = terms.get((i, j), Fraction(0)) + value
    return BPoly({k: v for k, v in terms.items() if v})


def _restriction_holds(row, params, poly):
    restriction = row["restriction"]
    if restriction is None:
        return True
    if restriction["kind"] == "nonzero_poly":
        constraint = parse_terms(restriction["poly"], ("a", "b", "c"))
        total = Fraction(0)
        for (ea, eb, ec), coeff in constraint.items():
            total += (
                coeff
                * params.get("a", Fraction(0)) ** ea
                * params.get("b", Fraction(0)) ** eb
                * params.get("c", Fraction(0)) ** ec
            )
        return total != 0
    if restriction["kind"] == "squarefree_top_degree":
        top = poly.homogeneous_part(restriction["degree"])
        return not top.is_zero and is_square_free(top)
    raise AssertionError(f"unknown restriction kind {restriction['kind']!r}")


def sample_normal_form(symbol, seed=0):
    """A member of the symbol's normal-form family with pseudo-random
    small rational parameters satisfying the row restriction.

    Deterministic for a given (symbol, seed)."""
    if symbol not in _CLASSES:
        raise KeyError(f"unknown singularity symbol {symbol!r}")
    row = _CLASSES[symbol]
    rng = random.Random(f"{symbol}#{seed}")
    while True:
        params = {
            name: Fraction(rng.randint(-6, 6), rng.randint(1, 3))
            for name in row["parameters"]
        }
        poly = _instantiate(row, params)
        if _restriction_holds(row, params, poly):
            return poly
