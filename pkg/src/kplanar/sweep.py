"""Plane-sweep crossing counter (Bentley-Ottmann).

Every comparison runs in exact rational arithmetic, so the sweep agrees
with the exhaustive scan pair for pair and point for point. Vertical
segments are eliminated up front by shearing x by a small rational multiple
of y chosen so that no segment ends up vertical; the shear is an affine
bijection, preserves all incidences, and crossing points are reported in
the original coordinates.

Segments that merely touch (shared endpoints at vertices, endpoint-on-
interior contacts at polyline bends) are carried through the event
structure for correct ordering but never counted; only pairs interior to
both segments are crossings. The status is an ordered list: comparisons
cost O(log s) per operation, list shifts O(s), which is fast far beyond
the instance sizes this package targets.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction

from .crossings import CrossingReport, build_report, validate_general_position
from .drawings import Drawing
from .errors import GeneralPositionViolationError
from .geometry import RelationKind, line_intersection, segment_relation


@dataclass
class _Segment:
    sid: int
    edge: int
    a: tuple  # original endpoints, as given
    b: tuple
    left: tuple  # sheared endpoints (Fraction pairs), lexicographically ordered
    right: tuple
    slope: Fraction = field(init=False)

    def __post_init__(self):
        self.slope = (self.right[1] - self.left[1]) / (self.right[0] - self.left[0])

    def y_at(self, x: Fraction) -> Fraction:
        if x == self.left[0]:
            return self.left[1]
        if x == self.right[0]:
            return self.right[1]
        return self.left[1] + (x - self.left[0]) * self.slope


@dataclass
class _Event:
    starts: list = field(default_factory=list)
    ends: list = field(default_factory=list)
    passers: set = field(default_factory=set)


def count_crossings_sweep(d: Drawing, *, check: bool = True) -> CrossingReport:
    """Count proper crossings with a left-to-right plane sweep.

    Same contract and same report as the exhaustive counter; ``check``
    validates general position first.
    """
    if check:
        report = validate_general_position(d)
        if not report.ok:
            raise GeneralPositionViolationError(report)
    return _sweep(d)


def _shear_factor(raw_segments) -> Fraction:
    """Smallest candidate shear making every segment x-monotone."""
    bad = set()
    for a, b in raw_segments:
        dy = Fraction(b[1]) - Fraction(a[1])
        if dy != 0:
            bad.add(-(Fraction(b[0]) - Fraction(a[0])) / dy)
    eps = Fraction(0)
    scale = Fraction(1)
    while eps in bad:
        eps = scale
        scale /= 2
    return eps


def _sweep(d: Drawing) -> CrossingReport:
    raw = [(e, a, b) for e, _, a, b in d.segments()]
    eps = _shear_factor([(a, b) for _, a, b in raw])

    def shear(p) -> tuple:
        y = Fraction(p[1])
        return (Fraction(p[0]) + eps * y, y)

    segments: list[_Segment] = []
    events: dict[tuple, _Event] = {}
    heap: list[tuple] = []

    def event_at(key) -> _Event:
        ev = events.get(key)
        if ev is None:
            ev = events[key] = _Event()
            heapq.heappush(heap, key)
        return ev

    for e, a, b in raw:
        p, q = shear(a), shear(b)
        if p > q:
            p, q = q, p
        seg = _Segment(len(segments), e, a, b, p, q)
        segments.append(seg)
        event_at(p).starts.append(seg.sid)
        event_at(q).ends.append(seg.sid)

    status: list[int] = []
    crossings: dict[tuple[int, int], list] = {}

    def y_of(sid: int, x: Fraction) -> Fraction:
        return segments[sid].y_at(x)

    def schedule(sid_a: int, sid_b: int, after: tuple) -> None:
        sa, sb = segments[sid_a], segments[sid_b]
        rel = segment_relation(sa.a, sa.b, sb.a, sb.b)
        if rel.kind is RelationKind.DISJOINT:
            return
        if rel.kind is RelationKind.COLLINEAR_OVERLAP:
            raise GeneralPositionViolationError(
                _overlap_report(sa.edge, sb.edge),
                "sweep requires overlap-free input",
            )
        key = shear(rel.point)
        if key <= after:
            return
        ev = event_at(key)
        for seg in (sa, sb):
            if rel.point != seg.a and rel.point != seg.b:
                ev.passers.add(seg.sid)

    def locate_block(x: Fraction, y: Fraction) -> tuple[int, int]:
        """[lo, hi) of status segments whose line meets the sweep at (x, y)."""
        lo, hi = 0, len(status)
        while lo < hi:  # first index with y_of >= y
            mid = (lo + hi) // 2
            if y_of(status[mid], x) < y:
                lo = mid + 1
            else:
                hi = mid
        first = lo
        hi = len(status)
        while lo < hi:  # first index with y_of > y
            mid = (lo + hi) // 2
            if y_of(status[mid], x) <= y:
                lo = mid + 1
            else:
                hi = mid
        return first, lo

    while heap:
        key = heapq.heappop(heap)
        ev = events.pop(key)
        x, y = key

        for sid_a in ev.passers:
            for sid_b in ev.passers:
                if sid_a < sid_b and segments[sid_a].edge != segments[sid_b].edge:
                    ea, eb = segments[sid_a].edge, segments[sid_b].edge
                    pair = (ea, eb) if ea < eb else (eb, ea)
                    crossings.setdefault(pair, []).append(
                        (x - eps * y, y)  # unshear back to input coordinates
                    )

        lo, hi = locate_block(x, y)
        if set(status[lo:hi]) != set(ev.ends) | ev.passers:
            raise RuntimeError(
                "sweep status out of step at event "
                f"({float(x):.6g}, {float(y):.6g}); the drawing has a contact "
                "that general-position validation would reject"
            )
        del status[lo:hi]

        reinsert = sorted(
            list(ev.passers) + ev.starts,
            key=lambda sid: segments[sid].slope,
        )
        status[lo:lo] = reinsert

        if reinsert:
            if lo > 0:
                schedule(status[lo - 1], status[lo], key)
            top = lo + len(reinsert)
            if top < len(status):
                schedule(status[top - 1], status[top], key)
        elif 0 < lo < len(status):
            schedule(status[lo - 1], status[lo], key)

    return build_report(crossings)


def _overlap_report(edge_a: int, edge_b: int):
    from .crossings import ValidationReport, Violation

    return ValidationReport(
        (
            Violation(
                "collinear-overlap",
                f"edges {edge_a} and {edge_b} overlap along a line",
                (edge_a, edge_b),
            ),
        )
    )
