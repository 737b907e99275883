"""Pencils of conics: member enumeration over the projective parameter,
base points, and the canonical pencil used for temporal classification.

The canonical ("time") pencil is spanned by x1*x2 and x3^2.  Its members
are indexed by theta = (t1, t2), normalized so the first nonzero entry is
1; the enumeration runs (1, t2) over the field order and ends with (0, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BasePoint, IntersectionNotSingle, NoProperMember, NucleiDiffer
from .field import FieldElement, FieldSpec
from .conic import (
    Conic,
    DegeneracyClass,
    _evaluate_values,
    _nucleus_char2,
    classify,
    nucleus,
    point_set,
)
from .plane import Plane, ProjLine, ProjPoint, build_plane, incident, line_through


class Pencil:
    """Two linearly independent generator conics."""

    __slots__ = ("generator1", "generator2")

    def __init__(self, generator1: Conic, generator2: Conic):
        if generator1.field != generator2.field:
            raise ValueError("generators must come from the same field")
        if generator1 == generator2:
            # conics are stored normalized, so equality == proportionality
            raise ValueError("generators must be linearly independent")
        self.generator1 = generator1
        self.generator2 = generator2

    @property
    def field(self) -> FieldSpec:
        return self.generator1.field

    def __eq__(self, other):
        return (isinstance(other, Pencil)
                and self.generator1 == other.generator1
                and self.generator2 == other.generator2)

    def __hash__(self):
        return hash((self.generator1, self.generator2))

    def __repr__(self):
        return f"Pencil({self.generator1}, {self.generator2})"


@dataclass(frozen=True)
class PencilMember:
    """One member: its normalized parameter, its conic, and its degeneracy."""
    theta: tuple[int, int]
    conic: Conic
    degeneracy: DegeneracyClass

    @property
    def is_proper(self) -> bool:
        return self.degeneracy is DegeneracyClass.PROPER

    def theta_elements(self, spec: FieldSpec) -> tuple[FieldElement, FieldElement]:
        return (FieldElement(spec, self.theta[0]), FieldElement(spec, self.theta[1]))


def time_pencil(spec: FieldSpec) -> Pencil:
    """The canonical pencil spanned by x1*x2 and x3^2."""
    return Pencil(Conic(spec, (0, 1, 0, 0, 0, 0)), Conic(spec, (0, 0, 0, 0, 0, 1)))


def _normalize_theta(field: FieldSpec, t1: int, t2: int) -> tuple[int, int]:
    if t1 == 0 and t2 == 0:
        raise ValueError("theta must be nonzero")
    if t1 != 0:
        scale = field._inv_i(t1)
        return (1, field._mul_i(scale, t2))
    return (0, 1)


def _combine(pencil: Pencil, theta: tuple[int, int]) -> Conic:
    field = pencil.field
    mul, add = field._mul_i, field._add_i
    t1, t2 = theta
    coeffs = [add(mul(t1, a), mul(t2, b))
              for a, b in zip(pencil.generator1.values, pencil.generator2.values)]
    return Conic(field, coeffs)


@lru_cache(maxsize=None)
def members(pencil: Pencil, plane: Plane) -> tuple[PencilMember, ...]:
    """All q+1 members, one per normalized parameter: (1, t) in field
    order, then (0, 1) last."""
    thetas = [(1, t) for t in range(pencil.field.order)] + [(0, 1)]
    out = []
    for theta in thetas:
        conic = _combine(pencil, theta)
        out.append(PencilMember(theta, conic, classify(conic, plane)))
    return tuple(out)


def base_points(pencil: Pencil, plane: Plane) -> tuple[ProjPoint, ...]:
    """Points lying on every member, i.e. on both generators; plane order."""
    field = pencil.field
    g1, g2 = pencil.generator1.values, pencil.generator2.values
    return tuple(p for p in plane.points
                 if _evaluate_values(field, g1, p.values) == 0
                 and _evaluate_values(field, g2, p.values) == 0)


def member_through(pencil: Pencil, point: ProjPoint, plane: Plane) -> PencilMember:
    """The unique member whose conic vanishes at the point."""
    field = pencil.field
    v1 = _evaluate_values(field, pencil.generator1.values, point.values)
    v2 = _evaluate_values(field, pencil.generator2.values, point.values)
    if v1 == 0 and v2 == 0:
        raise BasePoint(f"{point} lies on every member")
    theta = _normalize_theta(field, v2, field._neg_i(v1))
    by_theta = {m.theta: m for m in members(pencil, plane)}
    return by_theta[theta]


def common_nucleus(pencil: Pencil, plane: Plane) -> ProjPoint:
    """The nucleus shared by all proper members (characteristic 2).

    NucleiDiffer is a legitimate outcome for general pencils, not a bug.
    """
    proper = [m for m in members(pencil, plane) if m.is_proper]
    if not proper:
        raise NoProperMember("pencil has no proper member")
    nuclei = [nucleus(m.conic, plane) for m in proper]
    first = nuclei[0]
    if any(nuc != first for nuc in nuclei[1:]):
        raise NucleiDiffer("proper members have distinct nuclei")
    return first


# ---------------------------------------------------------------------------
# shared, cached machinery around the canonical pencil

class TimePencilContext:
    """Plane, canonical pencil, member point sets, and the distinguished
    points/lines every temporal construction needs.  One per field, cached;
    also caches per-line touch points."""

    __slots__ = ("spec", "plane", "pencil", "members", "proper",
                 "B1", "B2", "N", "NB1", "NB2", "_touch")

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.plane = build_plane(spec)
        self.pencil = time_pencil(spec)
        self.members = members(self.pencil, self.plane)
        self.proper = tuple(
            (idx, m, point_set(m.conic, self.plane))
            for idx, m in enumerate(self.members) if m.is_proper
        )
        self.B1 = ProjPoint(spec, (0, 1, 0))
        self.B2 = ProjPoint(spec, (1, 0, 0))
        self.N = ProjPoint(spec, (0, 0, 1))
        self.NB1 = line_through(self.N, self.B1)
        self.NB2 = line_through(self.N, self.B2)
        if spec.characteristic == 2:
            for _, m, _pts in self.proper:
                if _nucleus_char2(m.conic) != self.N:  # pragma: no cover
                    raise NucleiDiffer(f"member {m.theta} has an unexpected nucleus")
        self._touch: dict[ProjLine, tuple[ProjPoint, ...]] = {}

    def touch_points(self, lstar: ProjLine) -> tuple[ProjPoint, ...]:
        """For each proper member, its unique intersection with a line
        through the nucleus; aligned with self.proper."""
        cached = self._touch.get(lstar)
        if cached is not None:
            return cached
        out = []
        for _, member, pts in self.proper:
            hits = [p for p in pts if incident(p, lstar)]
            if len(hits) != 1:
                raise IntersectionNotSingle(
                    f"{lstar} meets member {member.theta} in {len(hits)} points")
            out.append(hits[0])
        result = tuple(out)
        self._touch[lstar] = result
        return result

    def valid_ideal_lines(self) -> tuple[ProjLine, ...]:
        """Lines avoiding B1, B2 and N, i.e. with all coefficients nonzero,
        in plane line order."""
        return tuple(l for l in self.plane.lines if all(v != 0 for v in l.values))

    def valid_tangent_lines(self) -> tuple[ProjLine, ...]:
        """Lines through N other than NB1 and NB2, in plane line order."""
        return tuple(l for l in self.plane.lines
                     if l.values[2] == 0 and l not in (self.NB1, self.NB2))


@lru_cache(maxsize=None)
def time_pencil_context(spec: FieldSpec) -> TimePencilContext:
    return TimePencilContext(spec)
