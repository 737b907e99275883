"""(q+1)-arcs: verification, nucleus augmentation, puncturing, the
is-it-a-conic test, and the family of arcs carved out of the canonical
pencil by a chosen tangent line through the nucleus.

The family construction: fix an ideal line avoiding both base points and
the nucleus, and a line L* through the nucleus other than NB1, NB2.  From
each proper pencil member delete the single point where L* touches it and
add the nucleus.  Every resulting set is again a (q+1)-arc, and exactly
one of them is tangent to the ideal line.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import (
    ArcTooSmall,
    DegenerateConic,
    DegenerateContactPoint,
    DuplicatePoints,
    InvalidIdealLine,
    InvalidTangentLine,
    NotThroughNucleus,
    IntersectionNotSingle,
    OddCharacteristic,
    PointNotInArc,
    UnsupportedField,
)
from .field import FieldSpec
from .conic import (
    Conic,
    DegeneracyClass,
    _evaluate_values,
    _nucleus_char2,
    classify,
    evaluate,
    fit_conic,
    point_set,
)
from .pencil import (
    Pencil,
    TimePencilContext,
    _normalize_theta,
    time_pencil_context,
)
from .plane import Plane, ProjLine, ProjPoint, collinear, incident, meet


@dataclass(frozen=True)
class Arc:
    """A set of points no three of which are collinear, in a fixed order."""
    points: tuple[ProjPoint, ...]

    @property
    def size(self) -> int:
        return len(self.points)

    def __contains__(self, point: ProjPoint) -> bool:
        return point in self.points

    def __iter__(self):
        return iter(self.points)


@dataclass(frozen=True)
class FamilyProvenance:
    """What the family was built from, kept for auditability."""
    pencil: Pencil
    linf: ProjLine
    lstar: ProjLine
    contact_point: ProjPoint           # A = linf ∧ lstar
    qstar_theta: tuple[int, int]       # parameter of the member through A


@dataclass(frozen=True)
class ArcFamily:
    """One arc per proper pencil member, in member order."""
    spec: FieldSpec
    plane: Plane
    members: tuple[Arc, ...]
    member_ids: tuple[int, ...]
    thetas: tuple[tuple[int, int], ...]
    touch_points: tuple[ProjPoint, ...]
    provenance: FamilyProvenance


def is_arc(points: Iterable[ProjPoint]) -> bool:
    """Exhaustive check that no three of the points are collinear."""
    pts = list(points)
    if len(set(pts)) != len(pts):
        raise DuplicatePoints("arc candidates must be distinct points")
    return not any(collinear(a, b, c) for a, b, c in combinations(pts, 3))


def augment_with_nucleus(conic: Conic, plane: Plane) -> Arc:
    """The conic's points plus its nucleus: a (q+2)-arc for q even."""
    if plane.field.characteristic != 2:
        raise OddCharacteristic("only even-order conics have a nucleus")
    if classify(conic, plane) is not DegeneracyClass.PROPER:
        raise DegenerateConic(f"{conic} is degenerate")
    pts = set(point_set(conic, plane))
    pts.add(_nucleus_char2(conic))
    return Arc(_in_plane_order(pts, plane))


def puncture(arc: Arc, point: ProjPoint) -> Arc:
    """Remove one point; the rest is still an arc."""
    if point not in arc.points:
        raise PointNotInArc(f"{point} is not in the arc")
    return Arc(tuple(p for p in arc.points if p != point))


def is_conic_arc(arc: Arc) -> bool:
    """Whether the arc lies on a conic.

    Fits the unique conic through the first five points (the arc's
    canonical order) and checks containment of the rest; uniqueness of the
    five-point fit makes one subset sufficient.
    """
    if arc.size < 5:
        raise ArcTooSmall("need at least 5 points to pin down a conic")
    fitted = fit_conic(arc.points[:5])
    return all(not evaluate(fitted, p) for p in arc.points)


def touch_point(conic: Conic, lstar: ProjLine, plane: Plane) -> ProjPoint:
    """The single point where a line through the nucleus meets the conic."""
    if plane.field.characteristic != 2:
        raise OddCharacteristic("touch points need characteristic 2")
    if classify(conic, plane) is not DegeneracyClass.PROPER:
        raise DegenerateConic(f"{conic} is degenerate")
    if not incident(_nucleus_char2(conic), lstar):
        raise NotThroughNucleus(f"{lstar} misses the nucleus")
    hits = [p for p in point_set(conic, plane) if incident(p, lstar)]
    if len(hits) != 1:
        raise IntersectionNotSingle(f"{lstar} meets the conic in {len(hits)} points")
    return hits[0]


def _in_plane_order(points: Iterable[ProjPoint], plane: Plane) -> tuple[ProjPoint, ...]:
    return tuple(sorted(points, key=plane.point_index.__getitem__))


def _validate_family_lines(ctx: TimePencilContext, linf: ProjLine, lstar: ProjLine):
    for name, pt in (("base point B1", ctx.B1), ("base point B2", ctx.B2),
                     ("nucleus N", ctx.N)):
        if incident(pt, linf):
            raise InvalidIdealLine(f"ideal line {linf} passes through {name} {pt}")
    if not incident(ctx.N, lstar):
        raise InvalidTangentLine(f"{lstar} does not pass through the nucleus {ctx.N}")
    if lstar == ctx.NB1 or lstar == ctx.NB2:
        raise InvalidTangentLine(f"{lstar} joins the nucleus to a base point")


def build_time_family(spec: FieldSpec, linf: ProjLine, lstar: ProjLine,
                      verify: bool = True) -> ArcFamily:
    """Build the arc family: per proper member, delete its touch point on
    lstar and add the nucleus.

    With verify=True (the default) each arc is certified by checking every
    triple through the added nucleus; triples inside the source conic are
    already covered by its degeneracy census.
    """
    if spec.characteristic != 2:
        raise OddCharacteristic("the family construction needs characteristic 2")
    if spec.order < 4:
        raise UnsupportedField("no valid configuration exists over GF(2)")
    ctx = time_pencil_context(spec)
    _validate_family_lines(ctx, linf, lstar)

    contact = meet(linf, lstar)
    qstar = _member_theta_through(ctx, contact)
    if qstar is None:
        raise DegenerateContactPoint(
            f"{contact} = {linf} ∧ {lstar} lies on a degenerate member")

    arcs, ids, thetas = [], [], []
    touches = ctx.touch_points(lstar)
    for (member_id, member, pts), touch in zip(ctx.proper, touches):
        kept = tuple(p for p in pts if p != touch)
        arc_points = _in_plane_order(kept + (ctx.N,), ctx.plane)
        if len(arc_points) != spec.order + 1:
            raise IntersectionNotSingle(
                f"member {member.theta}: arc has {len(arc_points)} points")
        if verify and any(collinear(ctx.N, a, b) for a, b in combinations(kept, 2)):
            raise IntersectionNotSingle(
                f"member {member.theta}: nucleus collinear with two conic points")
        arcs.append(Arc(arc_points))
        ids.append(member_id)
        thetas.append(member.theta)

    provenance = FamilyProvenance(ctx.pencil, linf, lstar, contact, qstar)
    return ArcFamily(spec, ctx.plane, tuple(arcs), tuple(ids), tuple(thetas),
                     touches, provenance)


def _member_theta_through(ctx: TimePencilContext, point: ProjPoint):
    """Theta of the proper member through the point, or None if the point
    sits on a degenerate member."""
    field = ctx.spec
    v1 = _evaluate_values(field, ctx.pencil.generator1.values, point.values)
    v2 = _evaluate_values(field, ctx.pencil.generator2.values, point.values)
    # (t1, t2) proportional to (v2, -v1) solves t1*v1 + t2*v2 = 0
    theta = _normalize_theta(field, v2, field._neg_i(v1))
    proper_thetas = {m.theta for _, m, _ in ctx.proper}
    return theta if theta in proper_thetas else None


def family_to_dict(family: ArcFamily) -> dict:
    """JSON-ready view: configuration plus one entry per member."""
    spec = family.spec
    prov = family.provenance
    fmt = spec.format
    return {
        "q": spec.order,
        "Linf": str(prov.linf),
        "Lstar": str(prov.lstar),
        "A": str(prov.contact_point),
        "Qstar_theta": [fmt(prov.qstar_theta[0]), fmt(prov.qstar_theta[1])],
        "members": [
            {
                "theta": [fmt(theta[0]), fmt(theta[1])],
                "points": [str(p) for p in arc.points],
                "is_conic": is_conic_arc(arc),
            }
            for theta, arc in zip(family.thetas, family.members)
        ],
    }
