"""The projective plane PG(2, q): points, lines, incidence, collinearity.

Points and lines are normalized homogeneous triples (first nonzero
coordinate scaled to 1), so projectively equal triples compare equal.
Incidence is the exact dot-product test; the per-plane caches of points
on a line / lines through a point are conveniences that must agree with
it (the test suite checks this exhaustively).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .errors import CoincidentLines, CoincidentPoints, MixedFields
from .field import FieldElement, FieldSpec


def _normalize(field: FieldSpec, triple) -> tuple[int, int, int]:
    vals = []
    for c in triple:
        if isinstance(c, FieldElement):
            if c.field != field:
                raise MixedFields("coordinate from a different field")
            vals.append(c.value)
        else:
            v = int(c)
            if not 0 <= v < field.order:
                raise ValueError(f"coordinate {v} outside [0, {field.order})")
            vals.append(v)
    if len(vals) != 3:
        raise ValueError("homogeneous triples have exactly three coordinates")
    lead = next((v for v in vals if v != 0), None)
    if lead is None:
        raise ValueError("the zero triple is not projective")
    if lead == 1:
        return tuple(vals)
    scale = field._inv_i(lead)
    mul = field._mul_i
    return tuple(mul(scale, v) for v in vals)


class _Triple:
    __slots__ = ("field", "values")

    def __init__(self, field: FieldSpec, coords: Iterable):
        self.field = field
        self.values = _normalize(field, tuple(coords))

    @property
    def coords(self) -> tuple[FieldElement, FieldElement, FieldElement]:
        return tuple(FieldElement(self.field, v) for v in self.values)

    def __eq__(self, other):
        return (type(other) is type(self)
                and self.field == other.field
                and self.values == other.values)

    def __hash__(self):
        return hash((type(self), self.field, self.values))

    def __str__(self):
        fmt = self.field.format
        return "(" + ":".join(fmt(v) for v in self.values) + ")"

    def __repr__(self):
        return f"{type(self).__name__}{self}"


class ProjPoint(_Triple):
    """A point of PG(2, q), normalized."""


class ProjLine(_Triple):
    """A line of PG(2, q); a point lies on it iff the coordinate dot product is 0."""


class Plane:
    """All points and lines of PG(2, q), in a fixed enumeration order."""

    __slots__ = ("field", "points", "lines", "point_index", "line_index",
                 "_on_line", "_through_point")

    def __init__(self, field: FieldSpec):
        self.field = field
        triples = _enumerate_triples(field)
        self.points = tuple(ProjPoint(field, t) for t in triples)
        self.lines = tuple(ProjLine(field, t) for t in triples)
        self.point_index = {pt: i for i, pt in enumerate(self.points)}
        self.line_index = {ln: i for i, ln in enumerate(self.lines)}
        self._on_line: dict[ProjLine, tuple[ProjPoint, ...]] = {}
        self._through_point: dict[ProjPoint, tuple[ProjLine, ...]] = {}

    @property
    def order(self) -> int:
        return self.field.order

    def points_on(self, line: ProjLine) -> tuple[ProjPoint, ...]:
        """The q+1 points of a line, in plane point order (cached scan)."""
        cached = self._on_line.get(line)
        if cached is None:
            cached = tuple(p for p in self.points if incident(p, line))
            self._on_line[line] = cached
        return cached

    def lines_through(self, point: ProjPoint) -> tuple[ProjLine, ...]:
        """The q+1 lines through a point, in plane line order (cached scan)."""
        cached = self._through_point.get(point)
        if cached is None:
            cached = tuple(l for l in self.lines if incident(point, l))
            self._through_point[point] = cached
        return cached

    def __repr__(self):
        return f"Plane(PG(2,{self.order}), {len(self.points)} points)"


def _enumerate_triples(field: FieldSpec) -> list[tuple[int, int, int]]:
    q = field.order
    out = [(1, a, b) for a in range(q) for b in range(q)]
    out += [(0, 1, a) for a in range(q)]
    out.append((0, 0, 1))
    return out


@lru_cache(maxsize=None)
def build_plane(spec: FieldSpec) -> Plane:
    """PG(2, q) over the given field; cached, since planes are immutable."""
    return Plane(spec)


def _check_field(a, b):
    if a.field != b.field:
        raise MixedFields("operands belong to different fields")


def incident(point: ProjPoint, line: ProjLine) -> bool:
    """Exact incidence test: l1*x1 + l2*x2 + l3*x3 = 0."""
    _check_field(point, line)
    f = point.field
    x1, x2, x3 = point.values
    l1, l2, l3 = line.values
    mul, add = f._mul_i, f._add_i
    return add(add(mul(l1, x1), mul(l2, x2)), mul(l3, x3)) == 0


def _cross(f: FieldSpec, a, b) -> tuple[int, int, int]:
    a1, a2, a3 = a
    b1, b2, b3 = b
    mul, sub = f._mul_i, f._sub_i
    return (sub(mul(a2, b3), mul(a3, b2)),
            sub(mul(a3, b1), mul(a1, b3)),
            sub(mul(a1, b2), mul(a2, b1)))


def line_through(p1: ProjPoint, p2: ProjPoint) -> ProjLine:
    """The unique line incident with both points."""
    _check_field(p1, p2)
    if p1.values == p2.values:
        raise CoincidentPoints(f"{p1} = {p2}")
    return ProjLine(p1.field, _cross(p1.field, p1.values, p2.values))


def meet(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    """The unique point common to both lines."""
    _check_field(l1, l2)
    if l1.values == l2.values:
        raise CoincidentLines(f"{l1} = {l2}")
    return ProjPoint(l1.field, _cross(l1.field, l1.values, l2.values))


def collinear(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint) -> bool:
    """Whether the 3x3 coordinate determinant vanishes.

    Duplicate points count as collinear, which keeps arc-verification
    loops free of special cases.
    """
    _check_field(p1, p2)
    _check_field(p2, p3)
    f = p1.field
    a1, a2, a3 = p1.values
    b1, b2, b3 = p2.values
    c1, c2, c3 = p3.values
    mul, sub = f._mul_i, f._sub_i
    m1 = sub(mul(b2, c3), mul(b3, c2))
    m2 = sub(mul(b1, c3), mul(b3, c1))
    m3 = sub(mul(b1, c2), mul(b2, c1))
    det = sub(f._add_i(mul(a1, m1), mul(a3, m3)), mul(a2, m2))
    return det == 0


def points_on(line: ProjLine, plane: Plane) -> list[ProjPoint]:
    """The q+1 points of the line, in plane point order."""
    if line.field != plane.field:
        raise MixedFields("line belongs to a different field than the plane")
    return list(plane.points_on(line))
