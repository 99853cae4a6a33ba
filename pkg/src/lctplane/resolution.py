"""Embedded resolution of a plane curve germ by iterated point blowups.

Independent lct oracle: blow up every point over the origin where the
total transform of the curve plus the exceptional divisors fails to be
simple normal crossings, maintaining the standard recurrences

    m_new = mult(strict transform at center) + sum of incident m,
    a_new = 1 + sum of incident a,

and read off lct = min(1, min (a_E + 1) / m_E).

All blowup centers must be rational points; a required center that is a
root of a nonlinear irreducible polynomial raises ``IrrationalCenter``
(first-class, documented failure, never silent).  After each blowup the
only points that can violate snc lie on the newest exceptional divisor,
so candidate centers are discovered by factoring the strict transform
restricted to that divisor plus the single points where older divisors
meet it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import (
    IncompleteTree,
    IrrationalCenter,
    NotSquareFree,
    NotThroughOrigin,
    ResolutionCap,
    ZeroPolynomial,
)
from .factorize import rational_roots
from .localinv import is_square_free
from .poly import BPoly, X, Y

__all__ = [
    "ExcDivisor",
    "ChartPoint",
    "BlowupNode",
    "ResolutionTree",
    "blowup_transform",
    "resolve_over_origin",
    "lct_from_tree",
    "log_pullback_coefficients",
    "export_tree",
]

DEFAULT_CAP = 64

_AT_INFINITY = object()  # marker: point t = infinity on E, i.e. chart-2 origin


@dataclass(frozen=True)
class ExcDivisor:
    """One exceptional divisor with curve order m and discrepancy a."""

    id: int
    m: int
    a: int

    @property
    def candidate(self):
        return Fraction(self.a + 1, self.m)


@dataclass(frozen=True)
class ChartPoint:
    """A blowup center: local chart, location, incident divisors, and the
    local strict-transform equation (center translated to the origin)."""

    chart: tuple
    location: tuple
    incident: frozenset
    local_equation: BPoly


@dataclass(frozen=True)
class BlowupNode:
    divisor: ExcDivisor
    parent: Optional[int]
    center: ChartPoint


@dataclass
class ResolutionTree:
    """Ledger of all blowups performed over the origin."""

    input: BPoly
    nodes: list = field(default_factory=list)
    complete: bool = False

    def divisors(self):
        return [node.divisor for node in self.nodes]

    def node_by_id(self, divisor_id):
        for node in self.nodes:
            if node.divisor.id == divisor_id:
                return node
        raise KeyError(divisor_id)


def _extract_power(f, var):
    """Write f = var^k * h with var not dividing h; return (k, h)."""
    idx = 0 if var == "x" else 1
    k = min(exp[idx] for exp in f.terms)
    if k == 0:
        return 0, f
    if var == "x":
        shifted = {(i - k, j): c for (i, j), c in f.terms.items()}
    else:
        shifted = {(i, j - k): c for (i, j), c in f.terms.items()}
    return k, BPoly(shifted)


def blowup_transform(f_local):
    """Strict transform and exceptional order in both affine charts.

    Chart 1 substitutes ``(x, y) -> (x, x*y)`` (exceptional divisor
    ``x = 0``), chart 2 substitutes ``(x, y) -> (x*y, y)`` (exceptional
    divisor ``y = 0``).  Returns ``((strict1, order), (strict2, order))``
    with order equal to the multiplicity at the origin in both charts.
    """
    if f_local.is_zero:
        raise ZeroPolynomial("cannot blow up the zero polynomial")
    if f_local.evaluate(0, 0) != 0:
        raise NotThroughOrigin("center is not on the curve")
    mu = f_local.multiplicity()
    total1 = f_local.substitute(X, X * Y)
    k1, strict1 = _extract_power(total1, "x")
    total2 = f_local.substitute(X * Y, Y)
    k2, strict2 = _extract_power(total2, "y")
    assert k1 == mu and k2 == mu
    return (strict1, k1), (strict2, k2)


def _restrict(f, var_zero):
    """Coefficient list of f with one variable set to 0 (index = degree
    of the remaining variable)."""
    if var_zero == "x":
        pairs = [(j, c) for (i, j), c in f.terms.items() if i == 0]
    else:
        pairs = [(i, c) for (i, j), c in f.terms.items() if j == 0]
    if not pairs:
        return []
    coeffs = [Fraction(0)] * (max(d for d, _ in pairs) + 1)
    for d, c in pairs:
        coeffs[d] = c
    return coeffs


@dataclass
class _PendingCenter:
    curve: BPoly  # local strict transform, center at origin
    incident: list  # [(ExcDivisor, local equation BPoly)]
    parent: Optional[int]
    chart: tuple
    location: tuple


def _divisor_meeting_point(eq_strict):
    """Where a (smooth, transversal) old divisor meets the new E.

    ``eq_strict`` is the strict transform in chart 1; its restriction to
    E is linear.  Returns a rational t or the at-infinity marker.
    """
    coeffs = _restrict(eq_strict, "x")
    assert len(coeffs) <= 2, "old divisor must meet E transversally"
    if len(coeffs) == 2:
        return -coeffs[0] / coeffs[1]
    # constant restriction: the divisor meets E at t = infinity
    return _AT_INFINITY


def _poly_text(coeffs):
    return BPoly({(i, 0): c for i, c in enumerate(coeffs) if c}).render().replace(
        "x", "t"
    )


def resolve_over_origin(f, cap=DEFAULT_CAP):
    """Log resolution of the germ of f over the origin; returns the tree."""
    if f.is_zero:
        raise ZeroPolynomial("cannot resolve the zero polynomial")
    if f.evaluate(0, 0) != 0:
        raise NotThroughOrigin("curve does not pass through the origin")
    if not is_square_free(f):
        raise NotSquareFree("curve must be reduced")

    tree = ResolutionTree(input=f)
    if f.multiplicity() <= 1:
        tree.complete = True  # smooth germ, nothing to do
        return tree

    stack = [
        _PendingCenter(
            curve=f, incident=[], parent=None, chart=("x", "y"), location=(0, 0)
        )
    ]
    next_id = 1

    while stack:
        if len(tree.nodes) >= cap:
            raise ResolutionCap(f"more than {cap} blowups; cap exceeded")
        center = stack.pop()
        mu = center.curve.multiplicity()
        divisor = ExcDivisor(
            id=next_id,
            m=mu + sum(div.m for div, _ in center.incident),
            a=1 + sum(div.a for div, _ in center.incident),
        )
        next_id += 1
        tree.nodes.append(
            BlowupNode(
                divisor=divisor,
                parent=center.parent,
                center=ChartPoint(
                    chart=center.chart,
                    location=center.location,
                    incident=frozenset(div.id for div, _ in center.incident),
                    local_equation=center.curve,
                ),
            )
        )

        # chart 1: (u, v) -> (u, u v), E_new = {u = 0}
        total1 = center.curve.substitute(X, X * Y)
        k1, strict1 = _extract_power(total1, "x")
        assert k1 == mu
        old1 = []
        for old_div, eq in center.incident:
            eq_total = eq.substitute(X, X * Y)
            k, eq_strict = _extract_power(eq_total, "x")
            assert k == 1
            old1.append((old_div, eq_strict, _divisor_meeting_point(eq_strict)))

        # chart 2: (u, v) -> (u v, v), E_new = {v = 0}; only its origin
        # (the point t = infinity of E_new) is not covered by chart 1
        total2 = center.curve.substitute(X * Y, Y)
        k2, strict2 = _extract_power(total2, "y")
        assert k2 == mu
        old2 = []
        for old_div, eq in center.incident:
            eq_total = eq.substitute(X * Y, Y)
            _, eq_strict = _extract_power(eq_total, "y")
            old2.append((old_div, eq_strict))

        # points of E_new where the curve or an old divisor passes
        ph = _restrict(strict1, "x")
        roots, nonlinear = rational_roots(ph) if len(ph) > 1 else ([], [])
        for q_coeffs, exp in nonlinear:
            if exp >= 2:
                raise IrrationalCenter(_poly_text(q_coeffs))
            # transversal crossing at a non-rational point: already snc

        curve_exp = {t0: exp for t0, exp in roots}
        inf_restriction = _restrict(strict2, "y")
        inf_exp = (
            min(i for i, c in enumerate(inf_restriction) if c)
            if strict2.evaluate(0, 0) == 0
            else 0
        )

        points = set(curve_exp)
        divisors_at = {}
        for old_div, eq_strict, t0 in old1:
            divisors_at.setdefault(t0, []).append(old_div)
            if t0 is not _AT_INFINITY:
                points.add(t0)
        if inf_exp or _AT_INFINITY in divisors_at:
            points.add(_AT_INFINITY)

        for t0 in points:
            olds_here = divisors_at.get(t0, [])
            assert len(olds_here) <= 1, "three boundary divisors at one point"
            exp = inf_exp if t0 is _AT_INFINITY else curve_exp.get(t0, 0)
            needs_blowup = exp >= 2 or (exp >= 1 and olds_here)
            if not needs_blowup:
                continue
            if t0 is _AT_INFINITY:
                new_incident = [(divisor, Y)]
                for old_div, eq_strict in old2:
                    if old_div in olds_here:
                        new_incident.append((old_div, eq_strict))
                stack.append(
                    _PendingCenter(
                        curve=strict2,
                        incident=new_incident,
                        parent=divisor.id,
                        chart=(f"u{divisor.id}", f"v{divisor.id}"),
                        location=(Fraction(0), Fraction(0)),
                    )
                )
            else:
                shift = (Fraction(0), t0)
                new_incident = [(divisor, X)]
                for old_div, eq_strict, t_meet in old1:
                    if old_div in olds_here:
                        new_incident.append((old_div, eq_strict.translate(shift)))
                stack.append(
                    _PendingCenter(
                        curve=strict1.translate(shift),
                        incident=new_incident,
                        parent=divisor.id,
                        chart=(f"u{divisor.id}", f"v{divisor.id}"),
                        location=(Fraction(0), t0),
                    )
                )

    tree.complete = True
    return tree


def lct_from_tree(tree):
    """lct at the origin: min(1, min over divisors of (a + 1) / m)."""
    if not tree.complete:
        raise IncompleteTree("resolution has pending centers")
    best = Fraction(1)
    for div in tree.divisors():
        best = min(best, div.candidate)
    return best


def log_pullback_coefficients(tree, lam):
    """Coefficient of each exceptional divisor in the log pullback of
    lambda times the curve: lambda * m_E - a_E."""
    if not tree.complete:
        raise IncompleteTree("resolution has pending centers")
    lam = Fraction(lam)
    if lam <= 0:
        raise ValueError("lambda must be positive")
    return {div.id: lam * div.m - div.a for div in tree.divisors()}


def export_tree(tree, fmt="json"):
    """Serialize the tree as DOT or JSON (rationals rendered 'p/q')."""
    if fmt == "json":
        payload = {
            "input": tree.input.render(),
            "divisors": [
                {
                    "id": node.divisor.id,
                    "parent": node.parent,
                    "m": node.divisor.m,
                    "a": node.divisor.a,
                    "candidate": str(node.divisor.candidate),
                }
                for node in tree.nodes
            ],
            "lct": str(lct_from_tree(tree)),
        }
        return json.dumps(payload, indent=2)
    if fmt == "dot":
        lines = ["digraph resolution {"]
        for node in tree.nodes:
            div = node.divisor
            lines.append(
                f'  E{div.id} [label="E{div.id} m={div.m} a={div.a} '
                f'cand={div.candidate}"];'
            )
        for node in tree.nodes:
            if node.parent is not None:
                lines.append(f"  E{node.parent} -> E{node.divisor.id};")
        lines.append("}")
        return "\n".join(lines)
    raise ValueError(f"unknown export format {fmt!r}")
