"""Exact planar primitives for line segments.

Every sign decision is exact: a floating-point filter with a forward error
bound settles the clear cases, and anything too close to zero is
re-evaluated in rational arithmetic. Coordinates may be ints, floats, or
fractions; floats convert to rationals exactly, so there is no epsilon
anywhere in the classification logic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DegenerateSegmentError

Point = tuple[float, float]

# Forward error coefficient for the orientation determinant of double
# inputs: (3 + 16*eps)*eps with eps = 2**-53 (Shewchuk's A-stage bound).
_ORIENT_ERR = (3.0 + 16.0 * 2.0**-53) * 2.0**-53


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of the signed area of triangle (a, b, c).

    Returns +1 for counterclockwise, -1 for clockwise, 0 for collinear.
    Exact for every representable input.
    """
    ax, ay = a
    bx, by = b
    cx, cy = c
    if (
        type(ax) is float
        and type(ay) is float
        and type(bx) is float
        and type(by) is float
        and type(cx) is float
        and type(cy) is float
    ):
        detleft = (ax - cx) * (by - cy)
        detright = (ay - cy) * (bx - cx)
        det = detleft - detright
        # Rounded float products keep the sign of the true value (underflow
        # can only collapse a tiny value to zero), so strictly-opposite-sign
        # halves decide the sign outright; everything else near zero or in
        # the subnormal range falls through to the exact evaluation.
        if detleft > 0.0:
            if detright <= 0.0:
                return _sign_float(det)
            detsum = detleft + detright
        elif detleft < 0.0:
            if detright >= 0.0:
                return _sign_float(det)
            detsum = -detleft - detright
        else:
            detsum = 0.0
        if detsum > 1e-290 and (
            det >= _ORIENT_ERR * detsum or -det >= _ORIENT_ERR * detsum
        ):
            return _sign_float(det)
    return _orientation_exact(ax, ay, bx, by, cx, cy)


def _sign_float(x: float) -> int:
    if x > 0.0:
        return 1
    if x < 0.0:
        return -1
    return 0


def _orientation_exact(ax, ay, bx, by, cx, cy) -> int:
    det = (Fraction(ax) - Fraction(cx)) * (Fraction(by) - Fraction(cy)) - (
        Fraction(ay) - Fraction(cy)
    ) * (Fraction(bx) - Fraction(cx))
    if det > 0:
        return 1
    if det < 0:
        return -1
    return 0


class RelationKind(Enum):
    DISJOINT = "disjoint"
    PROPER_CROSSING = "proper_crossing"
    SHARED_ENDPOINT = "shared_endpoint"
    ENDPOINT_ON_INTERIOR = "endpoint_on_interior"
    COLLINEAR_OVERLAP = "collinear_overlap"


@dataclass(frozen=True)
class SegmentRelation:
    """How two segments meet.

    ``point`` is the single common point for the three one-point kinds
    (proper crossing, shared endpoint, endpoint on interior), given as an
    exact rational pair; it is None for disjoint and overlapping segments.
    """

    kind: RelationKind
    point: tuple | None = None


def segment_relation(a1: Point, a2: Point, b1: Point, b2: Point) -> SegmentRelation:
    """Classify the intersection of segments a1-a2 and b1-b2 exactly.

    A proper crossing is a single common point strictly interior to both
    segments. Raises DegenerateSegmentError for zero-length input.
    """
    if a1 == a2 or b1 == b2:
        raise DegenerateSegmentError(f"zero-length segment in {(a1, a2, b1, b2)}")

    o1 = orientation(a1, a2, b1)
    o2 = orientation(a1, a2, b2)
    if o1 == 0 and o2 == 0:
        return _collinear_relation(a1, a2, b1, b2)
    o3 = orientation(b1, b2, a1)
    o4 = orientation(b1, b2, a2)

    if a1 == b1 or a1 == b2 or a2 == b1 or a2 == b2:
        shared = a1 if (a1 == b1 or a1 == b2) else a2
        return SegmentRelation(RelationKind.SHARED_ENDPOINT, shared)

    # One endpoint on the other segment's line: contact iff it also lies
    # within that segment's span; otherwise the segments cannot meet.
    if o1 == 0:
        if _between(a1, a2, b1):
            return SegmentRelation(RelationKind.ENDPOINT_ON_INTERIOR, b1)
        return SegmentRelation(RelationKind.DISJOINT)
    if o2 == 0:
        if _between(a1, a2, b2):
            return SegmentRelation(RelationKind.ENDPOINT_ON_INTERIOR, b2)
        return SegmentRelation(RelationKind.DISJOINT)
    if o3 == 0:
        if _between(b1, b2, a1):
            return SegmentRelation(RelationKind.ENDPOINT_ON_INTERIOR, a1)
        return SegmentRelation(RelationKind.DISJOINT)
    if o4 == 0:
        if _between(b1, b2, a2):
            return SegmentRelation(RelationKind.ENDPOINT_ON_INTERIOR, a2)
        return SegmentRelation(RelationKind.DISJOINT)

    if o1 != o2 and o3 != o4:
        return SegmentRelation(
            RelationKind.PROPER_CROSSING, line_intersection(a1, a2, b1, b2)
        )
    return SegmentRelation(RelationKind.DISJOINT)


def _between(p: Point, q: Point, r: Point) -> bool:
    """For r collinear with p-q: is r within the closed segment p-q?"""
    if p[0] != q[0]:
        lo, hi = (p[0], q[0]) if p[0] < q[0] else (q[0], p[0])
        return lo <= r[0] <= hi
    lo, hi = (p[1], q[1]) if p[1] < q[1] else (q[1], p[1])
    return lo <= r[1] <= hi


def _collinear_relation(a1, a2, b1, b2) -> SegmentRelation:
    # All four points on one line; compare spans along the dominant axis.
    axis = 0 if a1[0] != a2[0] else 1
    alo, ahi = sorted((a1, a2), key=lambda p: p[axis])
    blo, bhi = sorted((b1, b2), key=lambda p: p[axis])
    if ahi[axis] < blo[axis] or bhi[axis] < alo[axis]:
        return SegmentRelation(RelationKind.DISJOINT)
    if ahi[axis] == blo[axis]:
        return SegmentRelation(RelationKind.SHARED_ENDPOINT, ahi)
    if bhi[axis] == alo[axis]:
        return SegmentRelation(RelationKind.SHARED_ENDPOINT, bhi)
    return SegmentRelation(RelationKind.COLLINEAR_OVERLAP)


def line_intersection(a1: Point, a2: Point, b1: Point, b2: Point) -> tuple:
    """Exact rational intersection of the two (non-parallel) support lines."""
    x1, y1 = Fraction(a1[0]), Fraction(a1[1])
    x2, y2 = Fraction(a2[0]), Fraction(a2[1])
    x3, y3 = Fraction(b1[0]), Fraction(b1[1])
    x4, y4 = Fraction(b2[0]), Fraction(b2[1])
    denom = (x1 - x2) * (y3 - y4) - (y1 - y2) * (x3 - x4)
    det_a = x1 * y2 - y1 * x2
    det_b = x3 * y4 - y3 * x4
    px = (det_a * (x3 - x4) - (x1 - x2) * det_b) / denom
    py = (det_a * (y3 - y4) - (y1 - y2) * det_b) / denom
    return (px, py)


def point_segment_sqdist(p: Point, a: Point, b: Point) -> Fraction:
    """Exact squared distance from point p to segment a-b."""
    px, py = Fraction(p[0]), Fraction(p[1])
    ax, ay = Fraction(a[0]), Fraction(a[1])
    bx, by = Fraction(b[0]), Fraction(b[1])
    dx, dy = bx - ax, by - ay
    length_sq = dx * dx + dy * dy
    if length_sq == 0:
        raise DegenerateSegmentError(f"zero-length segment {(a, b)}")
    proj = (px - ax) * dx + (py - ay) * dy
    if proj <= 0:
        return (px - ax) ** 2 + (py - ay) ** 2
    if proj >= length_sq:
        return (px - bx) ** 2 + (py - by) ** 2
    cross = (px - ax) * dy - (py - ay) * dx
    return cross * cross / length_sq


def sqdist(p: Point, q: Point) -> Fraction:
    """Exact squared distance between two points."""
    dx = Fraction(p[0]) - Fraction(q[0])
    dy = Fraction(p[1]) - Fraction(q[1])
    return dx * dx + dy * dy
