"""Vertex placements and edge routes in the plane.

A drawing gives every vertex a point and every edge a polyline route; the
straight-line case is the 2-point route. Coordinates are usually floats,
but any exact rational type works (translated layer drawings use fractions
so recounts stay exact).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import InvalidDrawingError, ValidationRetryLimitExceededError
from .geometry import Point
from .graphs import Graph

# Fixed jitter stream for circular layouts. Evenly spaced circle points put
# three or more chords through the exact center for composite n (K6 already
# fails the no-three-edges-through-one-point requirement); irregular angles
# break every such coincidence while keeping vertices in index order.
_CIRCLE_JITTER_SEED = 0x6A177E2


@dataclass(frozen=True)
class Drawing:
    graph: Graph
    positions: tuple[Point, ...]
    routes: tuple[tuple[Point, ...], ...]

    def __post_init__(self):
        g = self.graph
        if len(self.positions) != g.n:
            raise InvalidDrawingError(
                f"{len(self.positions)} positions for {g.n} vertices"
            )
        for p in self.positions:
            _check_finite(p)
        if len(self.routes) != g.m:
            raise InvalidDrawingError(f"{len(self.routes)} routes for {g.m} edges")
        for idx, (edge, route) in enumerate(zip(g.edges, self.routes)):
            u, v = edge
            if len(route) < 2:
                raise InvalidDrawingError(f"route of edge {edge} has < 2 points")
            for p in route:
                _check_finite(p)
            if route[0] != self.positions[u] or route[-1] != self.positions[v]:
                raise InvalidDrawingError(
                    f"route of edge {edge} does not join its endpoints"
                )
            for a, b in zip(route, route[1:]):
                if a == b:
                    raise InvalidDrawingError(
                        f"zero-length segment at {a} in route of edge {edge}"
                    )

    @property
    def is_straight_line(self) -> bool:
        return all(len(r) == 2 for r in self.routes)

    def segments(self):
        """Yield (edge_index, segment_index, a, b) over all route segments."""
        for e, route in enumerate(self.routes):
            for s, (a, b) in enumerate(zip(route, route[1:])):
                yield e, s, a, b

    def bounding_box(self):
        """(min_x, min_y, max_x, max_y) over positions and route points."""
        xs = [p[0] for p in self.positions] + [
            p[0] for r in self.routes for p in r
        ]
        ys = [p[1] for p in self.positions] + [
            p[1] for r in self.routes for p in r
        ]
        if not xs:
            return (0.0, 0.0, 0.0, 0.0)
        return (min(xs), min(ys), max(xs), max(ys))


def _check_finite(p) -> None:
    if len(p) != 2 or not all(math.isfinite(c) for c in p):
        raise InvalidDrawingError(f"non-finite point {p}")


def straight_line_drawing(g: Graph, positions) -> Drawing:
    """Drawing with every edge a single segment between its endpoints."""
    positions = tuple(tuple(p) for p in positions)
    routes = tuple((positions[u], positions[v]) for u, v in g.edges)
    return Drawing(g, positions, routes)


def translate_drawing(d: Drawing, dx, dy) -> Drawing:
    """Rigidly translate a whole drawing."""
    move = lambda p: (p[0] + dx, p[1] + dy)  # noqa: E731
    return Drawing(
        d.graph,
        tuple(move(p) for p in d.positions),
        tuple(tuple(move(p) for p in r) for r in d.routes),
    )


def circle_points(n: int) -> tuple[Point, ...]:
    """n distinct unit-circle points in angular order, deterministically
    jittered away from the regular n-gon."""
    rng = random.Random(_CIRCLE_JITTER_SEED)
    pts = []
    for i in range(n):
        theta = 2.0 * math.pi * (i + 0.15 + 0.7 * rng.random()) / n
        pts.append((math.cos(theta), math.sin(theta)))
    return tuple(pts)


def circular_drawing(g: Graph) -> Drawing:
    """Straight-line drawing with vertices on a unit circle in index order."""
    if g.n < 1:
        raise ValueError("circular drawing needs at least one vertex")
    return straight_line_drawing(g, circle_points(g.n))


_UNIT_BOX = ((0.0, 0.0), (1.0, 1.0))


def random_drawing(g: Graph, seed: int, box=_UNIT_BOX, max_retries: int = 32) -> Drawing:
    """Straight-line drawing with positions uniform in ``box``.

    Placement is resampled until general-position validation passes, so the
    result is always countable; deterministic for a fixed seed.
    """
    from .crossings import validate_general_position

    (x0, y0), (x1, y1) = box
    if not (x0 < x1 and y0 < y1):
        raise ValueError(f"degenerate box {box}")
    rng = random.Random(seed)
    for _ in range(max_retries):
        positions = [
            (x0 + rng.random() * (x1 - x0), y0 + rng.random() * (y1 - y0))
            for _ in range(g.n)
        ]
        d = straight_line_drawing(g, positions)
        if validate_general_position(d).ok:
            return d
    raise ValidationRetryLimitExceededError(
        f"no valid placement after {max_retries} attempts (seed {seed})"
    )


def k5_one_crossing() -> Drawing:
    """K5 drawn with a single crossing.

    Four vertices sit on a square with the fifth inside. Straight hull edges
    and spokes are crossing-free; the two square diagonals are routed as
    polylines through the unbounded face, where they cross each other exactly
    once at (8/3, -1). No straight-line placement of this vertex pattern can
    reach one crossing, which is why the diagonals bend.
    """
    g = Graph(5, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)))
    pos = ((0.0, 0.0), (4.0, 0.0), (4.0, 4.0), (0.0, 4.0), (2.0, 1.5))
    routes = {
        (0, 1): (pos[0], pos[1]),
        (0, 2): (pos[0], (2.0, -1.0), (5.0, -1.0), (5.0, 2.0), pos[2]),
        (0, 3): (pos[0], pos[3]),
        (0, 4): (pos[0], pos[4]),
        (1, 2): (pos[1], pos[2]),
        (1, 3): (pos[1], (2.0, -1.5), (-1.0, -1.5), (-1.0, 2.0), pos[3]),
        (1, 4): (pos[1], pos[4]),
        (2, 3): (pos[2], pos[3]),
        (2, 4): (pos[2], pos[4]),
        (3, 4): (pos[3], pos[4]),
    }
    return Drawing(g, pos, tuple(routes[e] for e in g.edges))
