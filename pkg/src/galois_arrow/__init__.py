"""Exact finite-geometry engine: Galois fields, the projective plane
PG(2, q), conics and their pencils, (q+1)-arcs, and past/present/future
classification of pencil members against a chosen ideal line.

Everything is computed with exact field arithmetic and verified by
exhaustive enumeration at desk scale (q <= 2^16 for fields, q <= 32 for
the geometry suites).
"""

from .errors import (
    GeometryError,
    InvariantViolation,
    ValidationError,
)
from .field import (
    FieldElement,
    FieldSpec,
    elements,
    inv,
    is_irreducible,
    make_field,
    parse_modulus,
    solve_homogeneous,
    sqrt_char2,
)
from .plane import (
    Plane,
    ProjLine,
    ProjPoint,
    build_plane,
    collinear,
    incident,
    line_through,
    meet,
    points_on,
)
from .conic import (
    Conic,
    DegeneracyClass,
    LineClass,
    canonical_conic,
    classify,
    classify_line,
    evaluate,
    fit_conic,
    nucleus,
    parametrize_canonical,
    point_set,
    tangent_lines,
)
from .pencil import (
    Pencil,
    PencilMember,
    base_points,
    common_nucleus,
    member_through,
    members,
    time_pencil,
    time_pencil_context,
)
from .arc import (
    Arc,
    ArcFamily,
    augment_with_nucleus,
    build_time_family,
    family_to_dict,
    is_arc,
    is_conic_arc,
    puncture,
    touch_point,
)
from .arrow import (
    ArrowReport,
    TemporalClass,
    arc_arrow,
    classify_member,
    conic_arrow,
    validate_ideal_line,
)

__version__ = "0.1.0"
