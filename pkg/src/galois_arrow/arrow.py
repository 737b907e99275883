"""Temporal classification against a chosen ideal line.

Once an ideal line is fixed, each conic or arc falls into one of three
classes by how many points it shares with that line: two (Past), one
(Present), zero (Future).  Over GF(2^n) the proper members of the
canonical pencil can never be tangent to a valid ideal line - their
common nucleus is off it - so the pencil's arrow has no Present.  The
arc family built from the same pencil restores exactly one Present
member.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import HitsBasePoint, HitsNucleus, IntersectionTooLarge, OddCharacteristic
from .field import FieldSpec
from .arc import ArcFamily
from .conic import LineClass, classify_line
from .pencil import time_pencil_context
from .plane import Plane, ProjLine, ProjPoint, incident


class TemporalClass(enum.Enum):
    PAST = "Past"
    PRESENT = "Present"
    FUTURE = "Future"

    def __str__(self):
        return self.value


_LINE_TO_TEMPORAL = {
    LineClass.SECANT: TemporalClass.PAST,
    LineClass.TANGENT: TemporalClass.PRESENT,
    LineClass.EXTERNAL: TemporalClass.FUTURE,
}


@dataclass(frozen=True)
class MemberClassification:
    member_id: int
    theta: tuple[int, int]
    temporal: TemporalClass
    witnesses: tuple[ProjPoint, ...]   # the member's points on the ideal line


@dataclass(frozen=True)
class ArrowReport:
    """Per-member temporal classes plus tallies, for one ideal line."""
    q: int
    mode: str                          # "conic" or "arc"
    ideal_line: ProjLine
    classifications: tuple[MemberClassification, ...]

    @property
    def tallies(self) -> dict[str, int]:
        counts = {"past": 0, "present": 0, "future": 0}
        for c in self.classifications:
            counts[c.temporal.value.lower()] += 1
        return counts

    @property
    def present_member_ids(self) -> tuple[int, ...]:
        return tuple(c.member_id for c in self.classifications
                     if c.temporal is TemporalClass.PRESENT)

    def to_dict(self) -> dict:
        fmt = self.ideal_line.field.format
        return {
            "q": self.q,
            "mode": self.mode,
            "ideal_line": str(self.ideal_line),
            "tallies": self.tallies,
            "members": [
                {
                    "id": c.member_id,
                    "theta": [fmt(c.theta[0]), fmt(c.theta[1])],
                    "class": str(c.temporal),
                    "witnesses": [str(p) for p in c.witnesses],
                }
                for c in self.classifications
            ],
        }


def validate_ideal_line(linf: ProjLine, plane: Plane) -> None:
    """Reject ideal lines through a base point or the nucleus.

    Valid lines are exactly those with all three coefficients nonzero.
    """
    field = plane.field
    b1 = ProjPoint(field, (0, 1, 0))
    b2 = ProjPoint(field, (1, 0, 0))
    n = ProjPoint(field, (0, 0, 1))
    if incident(b1, linf) or incident(b2, linf):
        raise HitsBasePoint(f"ideal line {linf} passes through a base point")
    if incident(n, linf):
        raise HitsNucleus(f"ideal line {linf} passes through the nucleus {n}")


def classify_member(points, linf: ProjLine) -> TemporalClass:
    """Secant -> Past, tangent -> Present, external -> Future."""
    return _LINE_TO_TEMPORAL[classify_line(points, linf)]


def conic_arrow(spec: FieldSpec, linf: ProjLine) -> ArrowReport:
    """Classify the proper members of the canonical pencil against the
    ideal line.  Over GF(2^n) the Present tally is always zero."""
    if spec.characteristic != 2:
        raise OddCharacteristic("the conic arrow is defined over GF(2^n)")
    ctx = time_pencil_context(spec)
    validate_ideal_line(linf, ctx.plane)
    classifications = []
    for member_id, member, pts in ctx.proper:
        witnesses = tuple(p for p in pts if incident(p, linf))
        classifications.append(MemberClassification(
            member_id, member.theta, _by_witness_count(len(witnesses), linf),
            witnesses))
    return ArrowReport(spec.order, "conic", linf, tuple(classifications))


def arc_arrow(family: ArcFamily) -> ArrowReport:
    """Classify every member of an arc family against the family's own
    ideal line; exactly one member comes out Present."""
    linf = family.provenance.linf
    classifications = []
    for member_id, theta, arc in zip(family.member_ids, family.thetas,
                                     family.members):
        witnesses = tuple(p for p in arc.points if incident(p, linf))
        classifications.append(MemberClassification(
            member_id, theta, _by_witness_count(len(witnesses), linf), witnesses))
    return ArrowReport(family.spec.order, "arc", linf, tuple(classifications))


def _by_witness_count(hits: int, linf: ProjLine) -> TemporalClass:
    if hits > 2:
        raise IntersectionTooLarge(f"{linf}: {hits} intersection points")
    return (TemporalClass.FUTURE, TemporalClass.PRESENT, TemporalClass.PAST)[hits]
