"""Vertex labelings and the modular edge partition they induce.

Each vertex independently receives a label in {0..k-1}. An edge's type is
the unordered pair of its endpoint labels, and the edge goes to subgraph
(label(u) + label(v)) mod k, so edges of equal type always land together
and, within subgraph i, a vertex labeled g only meets the partner class
h(g) = (i - g) mod k. A crossing survives the split exactly when its two
edges have equal types; for vertex-disjoint edges that happens with
probability 2/k**2 - 1/k**3, for edges sharing a vertex with probability
1/k. All probabilities and expectations here are exact rationals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple

from .crossings import CrossingReport
from .errors import (
    ColoringSizeMismatchError,
    InvalidKError,
    LabelingSizeMismatchError,
    ReportGraphMismatchError,
)
from .graphs import Graph


class EdgeType(NamedTuple):
    """Unordered pair of endpoint labels, stored with g <= h."""

    g: int
    h: int

    @classmethod
    def of(cls, a: int, b: int) -> "EdgeType":
        return cls(a, b) if a <= b else cls(b, a)


@dataclass(frozen=True)
class VertexLabeling:
    k: int
    labels: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise InvalidKError(f"k must be >= 1, got {self.k}")
        if any(not (0 <= x < self.k) for x in self.labels):
            raise ValueError(f"label out of range for k={self.k}")


@dataclass(frozen=True)
class Decomposition:
    """The partition of a graph's edges into subgraphs G_0..G_{k-1}."""

    graph: Graph
    k: int
    assignment: tuple[int, ...]  # edge index -> subgraph index
    edge_types: tuple[EdgeType, ...]
    subgraphs: tuple[tuple[int, ...], ...]  # per subgraph: edge indices

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.subgraphs)

    @staticmethod
    def partner(k: int, i: int, g: int) -> int:
        """The unique class h with edges between classes g and h in subgraph i."""
        return (i - g) % k


def sample_labeling(n: int, k: int, seed: int) -> VertexLabeling:
    """n i.i.d. uniform labels in {0..k-1}, deterministic per seed."""
    if k < 1:
        raise InvalidKError(f"k must be >= 1, got {k}")
    if n < 0:
        raise ValueError(f"negative vertex count {n}")
    rng = random.Random(seed)
    return VertexLabeling(k, tuple(rng.randrange(k) for _ in range(n)))


def edge_assignment(l: VertexLabeling, uv: tuple[int, int]) -> tuple[EdgeType, int]:
    """Type and subgraph index of one edge under a labeling."""
    a, b = l.labels[uv[0]], l.labels[uv[1]]
    return EdgeType.of(a, b), (a + b) % l.k


def decompose(g: Graph, l: VertexLabeling) -> Decomposition:
    """Partition g's edges by the modular rule of ``edge_assignment``."""
    if len(l.labels) != g.n:
        raise LabelingSizeMismatchError(
            f"{len(l.labels)} labels for {g.n} vertices"
        )
    assignment = []
    types = []
    subgraphs: list[list[int]] = [[] for _ in range(l.k)]
    for idx, edge in enumerate(g.edges):
        t, i = edge_assignment(l, edge)
        assignment.append(i)
        types.append(t)
        subgraphs[i].append(idx)
    return Decomposition(
        g, l.k, tuple(assignment), tuple(types), tuple(tuple(s) for s in subgraphs)
    )


class PairPattern(Enum):
    DISJOINT_PAIR = "disjoint-pair"
    SHARED_VERTEX = "shared-vertex"
    SAME_EDGE = "same-edge"


def classify_pair(e1: tuple[int, int], e2: tuple[int, int]) -> PairPattern:
    shared = len(set(e1) & set(e2))
    if shared == 0:
        return PairPattern.DISJOINT_PAIR
    if shared == 1:
        return PairPattern.SHARED_VERTEX
    return PairPattern.SAME_EDGE


def same_type_probability(k: int, pattern: PairPattern) -> Fraction:
    """Probability that two edges get equal types under uniform labels.

    Vertex-disjoint edges: 2/k**2 - 1/k**3 (two distinct-label types of
    probability 2/k**2 each, k ways; two equal-label types of probability
    1/k**2 each, k ways). Edges sharing a vertex: the free endpoints must
    match, probability 1/k. An edge paired with itself: 1.
    """
    if k < 1:
        raise InvalidKError(f"k must be >= 1, got {k}")
    if pattern is PairPattern.DISJOINT_PAIR:
        return Fraction(2, k * k) - Fraction(1, k * k * k)
    if pattern is PairPattern.SHARED_VERTEX:
        return Fraction(1, k)
    return Fraction(1)


def _check_report(r: CrossingReport, g: Graph) -> None:
    if r.max_edge_index() >= g.m:
        raise ReportGraphMismatchError(
            f"report references edge {r.max_edge_index()}, graph has {g.m} edges"
        )


def expected_monochromatic_crossings(r: CrossingReport, g: Graph, k: int) -> Fraction:
    """Exact expected number of crossings surviving a uniform k-labeling."""
    if k < 1:
        raise InvalidKError(f"k must be >= 1, got {k}")
    _check_report(r, g)
    total = Fraction(0)
    for (i, j), count in r.pair_counts.items():
        pattern = classify_pair(g.edges[i], g.edges[j])
        total += count * same_type_probability(k, pattern)
    return total


def realized_crossings(r: CrossingReport, g: Graph, l: VertexLabeling) -> int:
    """Crossings whose two edges have equal types under the labeling."""
    if len(l.labels) != g.n:
        raise LabelingSizeMismatchError(
            f"{len(l.labels)} labels for {g.n} vertices"
        )
    _check_report(r, g)
    labels = l.labels
    total = 0
    for (i, j), count in r.pair_counts.items():
        u1, v1 = g.edges[i]
        u2, v2 = g.edges[j]
        a, b = labels[u1], labels[v1]
        c, e = labels[u2], labels[v2]
        if (a == c and b == e) or (a == e and b == c):
            total += count
    return total


@dataclass(frozen=True)
class EdgeColoring:
    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise InvalidKError(f"k must be >= 1, got {self.k}")
        if any(not (0 <= c < self.k) for c in self.colors):
            raise ValueError(f"color out of range for k={self.k}")


def uniform_edge_coloring(g: Graph, k: int, seed: int) -> EdgeColoring:
    """i.i.d. uniform color per edge, deterministic per seed.

    The positions-fixed variant: parts are not redrawn, so two crossing
    edges stay crossing exactly when their colors coincide (probability
    1/k), with no type refinement available.
    """
    if k < 1:
        raise InvalidKError(f"k must be >= 1, got {k}")
    rng = random.Random(seed)
    return EdgeColoring(k, tuple(rng.randrange(k) for _ in range(g.m)))


def monochromatic_crossings(r: CrossingReport, c: EdgeColoring) -> int:
    """Crossings whose two edges share a color (positions held fixed)."""
    if r.max_edge_index() >= len(c.colors):
        raise ColoringSizeMismatchError(
            f"report references edge {r.max_edge_index()}, "
            f"coloring has {len(c.colors)} colors"
        )
    return sum(
        count
        for (i, j), count in r.pair_counts.items()
        if c.colors[i] == c.colors[j]
    )
