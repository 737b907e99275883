"""Conics as quadratic forms: evaluation, zero sets, degeneracy census,
tangents, nucleus and five-point fitting.

Degeneracy is decided by a census of the zero set rather than by a matrix
determinant: in characteristic 2 the symmetric-matrix criterion breaks
down, while the census (one point / one line / two lines / oval) is
field-agnostic and matches how the classes behave geometrically.
"""

from __future__ import annotations

import enum
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    AmbiguousFit,
    CollinearTriple,
    DegenerateConic,
    IntersectionTooLarge,
    MixedFields,
    OddCharacteristic,
    UnclassifiableConic,
)
from .field import FieldElement, FieldSpec, solve_homogeneous
from .plane import Plane, ProjLine, ProjPoint, collinear, incident, line_through, meet

# coefficient order, fixed everywhere: x1^2, x1x2, x1x3, x2^2, x2x3, x3^2
COEFF_NAMES = ("c11", "c12", "c13", "c22", "c23", "c33")
_MONOMIALS = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))


class DegeneracyClass(enum.Enum):
    PROPER = "Proper"
    DOUBLE_LINE = "DoubleLine"
    REAL_LINE_PAIR = "RealLinePair"
    CONJUGATE_LINE_PAIR = "ConjugateLinePair"

    def __str__(self):
        return self.value


class LineClass(enum.Enum):
    SECANT = "Secant"
    TANGENT = "Tangent"
    EXTERNAL = "External"

    def __str__(self):
        return self.value


class Conic:
    """Six coefficients c11..c33, stored normalized so that scalar
    multiples of the same form compare equal."""

    __slots__ = ("field", "values")

    def __init__(self, field: FieldSpec, coefficients: Iterable):
        vals = []
        for c in coefficients:
            if isinstance(c, FieldElement):
                if c.field != field:
                    raise MixedFields("coefficient from a different field")
                vals.append(c.value)
            else:
                v = int(c)
                if not 0 <= v < field.order:
                    raise ValueError(f"coefficient {v} outside [0, {field.order})")
                vals.append(v)
        if len(vals) != 6:
            raise ValueError("a conic has exactly six coefficients")
        lead = next((v for v in vals if v != 0), None)
        if lead is None:
            raise ValueError("the zero form is not a conic")
        if lead != 1:
            scale = field._inv_i(lead)
            mul = field._mul_i
            vals = [mul(scale, v) for v in vals]
        self.field = field
        self.values = tuple(vals)

    @property
    def coefficients(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, v) for v in self.values)

    def __eq__(self, other):
        return (isinstance(other, Conic)
                and self.field == other.field
                and self.values == other.values)

    def __hash__(self):
        return hash((self.field, self.values))

    def __str__(self):
        fmt = self.field.format
        return "[" + ",".join(fmt(v) for v in self.values) + "]"

    def __repr__(self):
        return f"Conic{self}"


def _evaluate_values(field: FieldSpec, coeffs: Sequence[int], xs: Sequence[int]) -> int:
    mul, add = field._mul_i, field._add_i
    acc = 0
    for c, (i, j) in zip(coeffs, _MONOMIALS):
        if c:
            acc = add(acc, mul(c, mul(xs[i], xs[j])))
    return acc


def evaluate(conic: Conic, point: ProjPoint) -> FieldElement:
    """Value of the quadratic form at the point's normalized coordinates."""
    if conic.field != point.field:
        raise MixedFields("conic and point belong to different fields")
    return FieldElement(conic.field,
                        _evaluate_values(conic.field, conic.values, point.values))


@lru_cache(maxsize=8192)
def point_set(conic: Conic, plane: Plane) -> tuple[ProjPoint, ...]:
    """All plane points where the form vanishes, in plane order."""
    field, coeffs = conic.field, conic.values
    return tuple(p for p in plane.points
                 if _evaluate_values(field, coeffs, p.values) == 0)


def _no_three_collinear(points: Sequence[ProjPoint]) -> bool:
    return not any(collinear(a, b, c) for a, b, c in combinations(points, 3))


@lru_cache(maxsize=8192)
def classify(conic: Conic, plane: Plane) -> DegeneracyClass:
    """Degeneracy census of the zero set.

    Exactly one point -> conjugate line pair; a full line -> double line;
    the union of two distinct lines -> real line pair; q+1 points with no
    three collinear -> proper.  Anything else is impossible for a genuine
    quadratic form and raises UnclassifiableConic.
    """
    pts = point_set(conic, plane)
    q = plane.order
    if len(pts) == 1:
        return DegeneracyClass.CONJUGATE_LINE_PAIR
    if len(pts) == q + 1:
        line = line_through(pts[0], pts[1])
        if all(incident(p, line) for p in pts[2:]):
            return DegeneracyClass.DOUBLE_LINE
        if _no_three_collinear(pts):
            return DegeneracyClass.PROPER
        raise UnclassifiableConic(f"{conic}: {q + 1} points, neither line nor oval")
    if len(pts) == 2 * q + 1:
        first = _full_line_within(pts)
        if first is not None:
            rest = [p for p in pts if not incident(p, first)]
            if len(rest) == q:
                second = line_through(rest[0], rest[1])
                on_first = set(plane.points_on(first))
                on_second = set(plane.points_on(second))
                if all(incident(p, second) for p in rest) and set(pts) == on_first | on_second:
                    return DegeneracyClass.REAL_LINE_PAIR
        raise UnclassifiableConic(f"{conic}: {2 * q + 1} points but not a line pair")
    raise UnclassifiableConic(f"{conic}: zero set of size {len(pts)} matches no class")


def _full_line_within(pts: Sequence[ProjPoint]):
    """A line entirely contained in pts (pts assumed of size 2q+1), or None.

    A line through pts[0] lying inside pts carries q of the other points;
    any other line through pts[0] carries at most one of them.
    """
    base = pts[0]
    q = base.field.order
    tally: dict[ProjLine, int] = {}
    for other in pts[1:]:
        line = line_through(base, other)
        tally[line] = tally.get(line, 0) + 1
        if tally[line] == q:
            return line
    return None


def canonical_conic(spec: FieldSpec) -> Conic:
    """The reference proper conic x1*x2 - x3^2 (minus collapses to plus in
    characteristic 2)."""
    return Conic(spec, (0, 1, 0, 0, 0, spec._neg_i(1)))


def parametrize_canonical(spec: FieldSpec) -> list[ProjPoint]:
    """(1,0,0) followed by (s^2, 1, s) for s in element order; equals the
    canonical conic's zero set as a set."""
    pts = [ProjPoint(spec, (1, 0, 0))]
    mul = spec._mul_i
    pts.extend(ProjPoint(spec, (mul(s, s), 1, s)) for s in range(spec.order))
    return pts


def classify_line(points: Iterable[ProjPoint], line: ProjLine) -> LineClass:
    """Secant, tangent or external according to |line ∩ points| = 2, 1, 0."""
    hits = sum(1 for p in points if incident(p, line))
    if hits > 2:
        raise IntersectionTooLarge(f"line {line} meets the set in {hits} points")
    return (LineClass.EXTERNAL, LineClass.TANGENT, LineClass.SECANT)[hits]


def tangent_lines(conic: Conic, plane: Plane) -> list[ProjLine]:
    """All lines meeting the conic in exactly one point, by exhaustive count."""
    if classify(conic, plane) is not DegeneracyClass.PROPER:
        raise DegenerateConic(f"{conic} is degenerate")
    pts = point_set(conic, plane)
    out = []
    for line in plane.lines:
        hits = sum(1 for p in pts if incident(p, line))
        if hits == 1:
            out.append(line)
    return out


def nucleus(conic: Conic, plane: Plane) -> ProjPoint:
    """The common point of all tangents of a proper conic (q even only)."""
    tangents = tangent_lines(conic, plane)
    candidate = meet(tangents[0], tangents[1])
    if all(incident(candidate, t) for t in tangents[2:]):
        return candidate
    raise OddCharacteristic("tangent lines are not concurrent")


def _nucleus_char2(conic: Conic) -> ProjPoint:
    """Algebraic fast path for the nucleus in characteristic 2: the common
    zero of the three partial derivatives.  Must agree with nucleus()."""
    f = conic.field
    if f.characteristic != 2:
        raise OddCharacteristic("fast nucleus path needs characteristic 2")
    _, c12, c13, _, c23, _ = (FieldElement(f, v) for v in conic.values)
    zero = f.zero
    rows = [[zero, c12, c13], [c12, zero, c23], [c13, c23, zero]]
    basis = solve_homogeneous(rows)
    if len(basis) != 1:
        raise DegenerateConic(f"{conic} has no single nucleus")
    return ProjPoint(f, basis[0])


def fit_conic(points: Sequence[ProjPoint]) -> Conic:
    """The unique conic through 5 points, no three collinear.

    One homogeneous 5x6 system, columns in the fixed monomial order
    x1^2, x1x2, x1x3, x2^2, x2x3, x3^2; the null space must come out
    one-dimensional.
    """
    pts = list(points)
    if len(pts) != 5:
        raise ValueError(f"need exactly 5 points, got {len(pts)}")
    for a, b, c in combinations(pts, 3):
        if collinear(a, b, c):
            raise CollinearTriple(f"{a}, {b}, {c} are collinear")
    field = pts[0].field
    mul = field._mul_i
    rows = []
    for p in pts:
        xs = p.values
        rows.append([FieldElement(field, mul(xs[i], xs[j])) for i, j in _MONOMIALS])
    basis = solve_homogeneous(rows)
    if len(basis) != 1:
        raise AmbiguousFit(f"null space dimension {len(basis)} != 1")
    return Conic(field, basis[0])
