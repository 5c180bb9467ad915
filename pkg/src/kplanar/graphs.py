"""Simple undirected graphs with canonical edge storage, plus generators."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    DuplicateEdgeError,
    EndpointOutOfRangeError,
    SelfLoopError,
    TooManyEdgesError,
)


@dataclass(frozen=True)
class Graph:
    """A simple graph on vertices 0..n-1.

    Edges are stored in input order, each as a (min, max) pair, so an
    unordered pair has exactly one stored form.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative vertex count {self.n}")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise SelfLoopError(f"self-loop edge ({u}, {v})")
            if not (0 <= u < self.n) or not (0 <= v < self.n):
                raise EndpointOutOfRangeError(
                    f"edge ({u}, {v}) outside vertex range [0, {self.n})"
                )
            if u > v:
                raise ValueError(f"edge ({u}, {v}) is not in canonical order")
            if (u, v) in seen:
                raise DuplicateEdgeError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))

    @property
    def m(self) -> int:
        return len(self.edges)


def build_graph(n: int, edges) -> Graph:
    """Validate and canonicalize an edge list into a Graph."""
    canonical = []
    for u, v in edges:
        canonical.append((u, v) if u <= v else (v, u))
    return Graph(n, tuple(canonical))


def complete_graph(n: int) -> Graph:
    """K_n: all C(n, 2) edges in lexicographic order."""
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def gnm_random(n: int, m: int, seed: int) -> Graph:
    """A uniformly random simple graph with exactly m edges, per seed."""
    total = n * (n - 1) // 2
    if m > total:
        raise TooManyEdgesError(f"{m} edges requested, K_{n} has only {total}")
    rng = random.Random(seed)
    ranks = sorted(rng.sample(range(total), m))
    return Graph(n, tuple(_unrank_pair(n, r) for r in ranks))


def _unrank_pair(n: int, rank: int) -> tuple[int, int]:
    """The rank-th pair (u, v), u < v, in lexicographic order."""
    # pairs_before(u) = u*n - u*(u+1)/2 is increasing; binary search u.
    lo, hi = 0, n - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid * n - mid * (mid + 1) // 2 <= rank:
            lo = mid
        else:
            hi = mid - 1
    u = lo
    v = u + 1 + (rank - (u * n - u * (u + 1) // 2))
    return (u, v)
