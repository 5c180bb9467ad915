"""General-position validation and exhaustive crossing counting.

The counter here scans every segment pair; it is the reference that the
plane sweep in :mod:`kplanar.sweep` is differentially tested against.

Validation enforces the drawing assumptions the rest of the package relies
on: no two edges sharing a line segment, no edge through a vertex, no two
crossing points of distinct edge pairs closer than a tolerance (which also
rules out three edges through one point), and simple routes. Tangency of
polylines has no finite exact test; the overlap and proximity checks are
the surrogate, and they are tolerance-based by design while all counting
stays exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .drawings import Drawing
from .errors import GeneralPositionViolationError
from .geometry import (
    RelationKind,
    point_segment_sqdist,
    segment_relation,
    sqdist,
)

DEFAULT_TOL_FACTOR = 1e-9


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str
    edges: tuple[int, ...]


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        if self.ok:
            return "ok"
        head = "; ".join(v.detail for v in self.violations[:3])
        more = len(self.violations) - 3
        return head + (f"; +{more} more" if more > 0 else "")


@dataclass(frozen=True)
class CrossingReport:
    """Proper crossing points of a drawing, keyed by unordered edge pair.

    ``pair_counts`` maps (i, j) with i < j to the number of proper crossings
    between the routes of edges i and j; pairs that do not cross are absent.
    ``points`` holds the exact rational crossing points per pair.
    """

    pair_counts: Mapping[tuple[int, int], int]
    total: int
    points: Mapping[tuple[int, int], tuple[tuple, ...]]

    def max_edge_index(self) -> int:
        return max((j for _, j in self.pair_counts), default=-1)


def default_tolerance(d: Drawing) -> float:
    min_x, min_y, max_x, max_y = d.bounding_box()
    diag = math.hypot(float(max_x) - float(min_x), float(max_y) - float(min_y))
    return DEFAULT_TOL_FACTOR * diag


def validate_general_position(d: Drawing, tol: float | None = None) -> ValidationReport:
    """Check the drawing assumptions; returns violations, never raises."""
    violations, _ = _scan(d, tol, validate=True)
    return ValidationReport(tuple(violations))


def count_crossings_bruteforce(d: Drawing, *, check: bool = True) -> CrossingReport:
    """Count proper crossings by examining all segment pairs of distinct edges.

    With ``check`` (the default) the drawing is validated first and a
    GeneralPositionViolationError is raised if it fails.
    """
    violations, crossings = _scan(d, None, validate=check)
    if check and violations:
        raise GeneralPositionViolationError(ValidationReport(tuple(violations)))
    return build_report(crossings)


def build_report(crossings: dict) -> CrossingReport:
    pairs = {pair: tuple(pts) for pair, pts in sorted(crossings.items())}
    counts = {pair: len(pts) for pair, pts in pairs.items()}
    return CrossingReport(counts, sum(counts.values()), pairs)


def _scan(d: Drawing, tol, validate: bool):
    """One pass over all segment pairs: violations and exact crossing points."""
    if tol is None:
        tol = default_tolerance(d)
    segs = list(d.segments())
    boxes = [
        (min(a[0], b[0]), min(a[1], b[1]), max(a[0], b[0]), max(a[1], b[1]))
        for _, _, a, b in segs
    ]
    violations: list[Violation] = []
    crossings: dict[tuple[int, int], list] = {}

    vertex_points = set(d.positions) if validate else ()

    for i in range(len(segs)):
        ei, si, a1, a2 = segs[i]
        bi = boxes[i]
        for j in range(i + 1, len(segs)):
            ej, sj, b1, b2 = segs[j]
            if ei == ej:
                if validate:
                    _check_same_route(d, ei, si, sj, a1, a2, b1, b2, violations)
                continue
            bj = boxes[j]
            if bi[2] < bj[0] or bj[2] < bi[0] or bi[3] < bj[1] or bj[3] < bi[1]:
                continue
            rel = segment_relation(a1, a2, b1, b2)
            kind = rel.kind
            if kind is RelationKind.DISJOINT:
                continue
            if kind is RelationKind.PROPER_CROSSING:
                crossings.setdefault((ei, ej), []).append(rel.point)
                continue
            if not validate:
                continue
            if kind is RelationKind.COLLINEAR_OVERLAP:
                violations.append(
                    Violation(
                        "collinear-overlap",
                        f"edges {ei} and {ej} overlap along a line",
                        (ei, ej),
                    )
                )
            elif kind is RelationKind.SHARED_ENDPOINT:
                shared = set(d.graph.edges[ei]) & set(d.graph.edges[ej])
                ok = shared and rel.point == d.positions[next(iter(shared))]
                if not ok:
                    # Routes touch at a point that is not their common
                    # vertex: a curve contact the counters cannot attribute.
                    violations.append(
                        Violation(
                            "curve-contact",
                            f"routes of edges {ei} and {ej} touch at {_fmt(rel.point)}",
                            (ei, ej),
                        )
                    )
            elif kind is RelationKind.ENDPOINT_ON_INTERIOR:
                if rel.point in vertex_points:
                    violations.append(
                        Violation(
                            "endpoint-on-interior",
                            f"a vertex endpoint of edge {ei} or {ej} lies inside "
                            f"the other route at {_fmt(rel.point)}",
                            (ei, ej),
                        )
                    )
                else:
                    violations.append(
                        Violation(
                            "curve-contact",
                            f"routes of edges {ei} and {ej} touch at {_fmt(rel.point)}",
                            (ei, ej),
                        )
                    )

    if validate:
        _check_vertex_clearance(d, segs, tol, violations)
        _check_crossing_spacing(crossings, tol, violations)
    return violations, crossings


def _check_same_route(d, e, si, sj, a1, a2, b1, b2, violations) -> None:
    rel = segment_relation(a1, a2, b1, b2)
    if abs(si - sj) == 1:
        # Adjacent segments of one route share exactly their bend; collinear
        # continuation is fine, overlap or a second contact is not.
        if rel.kind in (RelationKind.DISJOINT, RelationKind.SHARED_ENDPOINT):
            return
    elif rel.kind is RelationKind.DISJOINT:
        return
    violations.append(
        Violation(
            "self-intersection",
            f"route of edge {e} ({d.graph.edges[e]}) touches itself",
            (e,),
        )
    )


def _check_vertex_clearance(d, segs, tol, violations) -> None:
    tol_sq = Fraction(tol) ** 2 if tol > 0 else Fraction(0)
    pad = 2.0 * tol  # prefilter margin; the decisive comparison is exact
    for e, _, a, b in segs:
        edge = d.graph.edges[e]
        lo_x, hi_x = min(a[0], b[0]) - pad, max(a[0], b[0]) + pad
        lo_y, hi_y = min(a[1], b[1]) - pad, max(a[1], b[1]) + pad
        for v, p in enumerate(d.positions):
            if v in edge:
                continue
            if not (lo_x <= p[0] <= hi_x and lo_y <= p[1] <= hi_y):
                continue
            dist_sq = point_segment_sqdist(p, a, b)
            if dist_sq < tol_sq or dist_sq == 0:
                violations.append(
                    Violation(
                        "vertex-near-edge",
                        f"vertex {v} within tolerance of edge {e} ({edge})",
                        (e,),
                    )
                )


def _check_crossing_spacing(crossings, tol, violations) -> None:
    pts = [(pair, p) for pair, plist in crossings.items() for p in plist]
    tol_sq = Fraction(tol) ** 2 if tol > 0 else Fraction(0)
    guard = (2.0 * tol) ** 2
    for i in range(len(pts)):
        pair_i, p_i = pts[i]
        fx, fy = float(p_i[0]), float(p_i[1])
        for j in range(i + 1, len(pts)):
            pair_j, p_j = pts[j]
            if pair_i == pair_j:
                continue
            dx, dy = float(p_j[0]) - fx, float(p_j[1]) - fy
            if dx * dx + dy * dy > guard:
                continue
            dist_sq = sqdist(p_i, p_j)
            if dist_sq < tol_sq or dist_sq == 0:
                violations.append(
                    Violation(
                        "crossings-too-close",
                        f"crossings of pairs {pair_i} and {pair_j} within "
                        "tolerance (three edges may pass through one point)",
                        tuple(sorted(set(pair_i) | set(pair_j))),
                    )
                )


def _fmt(p) -> str:
    return f"({float(p[0]):.6g}, {float(p[1]):.6g})"
