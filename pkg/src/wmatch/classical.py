"""Deterministic bipartite matching algorithms.

Augmenting-path search and maximum matching (Berge), Hall violators,
the Hungarian algorithm with its self-certifying weight cover, and the
minimum-weight perfect matching solver built on top of it.

Vertex encoding for paths: left vertex i is i, right vertex j is n + j,
so a path is a plain sequence of ints that alternates sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .graphs import BipartiteGraph, Matching, WeightAssignment, is_perfect_matching


class PerfectMatchingExistsError(ValueError):
    """Raised when a Hall violator is requested for a graph that has a
    perfect matching (the violator cannot exist)."""


@dataclass(frozen=True)
class AlternatingPath:
    """Path alternating between matched and unmatched edges.

    ``vertices`` uses the left=i / right=n+j encoding; ``in_matching``
    has one flag per edge saying whether that edge lies in the matching
    the path was built against.
    """

    vertices: tuple[int, ...]
    in_matching: tuple[bool, ...]

    def __post_init__(self):
        if len(self.vertices) < 2:
            raise ValueError("path needs at least one edge")
        if len(self.in_matching) != len(self.vertices) - 1:
            raise ValueError("need exactly one flag per edge")

    def edge_pairs(self, n: int) -> tuple[tuple[int, int], ...]:
        """Edges as (left, right) index pairs."""
        out = []
        for a, b in zip(self.vertices, self.vertices[1:]):
            left, right = (a, b) if a < n else (b, a)
            out.append((left, right - n))
        return tuple(out)

    def is_augmenting(self, g: BipartiteGraph, m: Matching) -> bool:
        """Check the defining conditions against g and m directly."""
        n = g.n
        matched = set(m.pairs)
        saturated = m.lefts() | {n + j for j in m.rights()}
        pairs = self.edge_pairs(n)
        # Consecutive vertices must alternate sides and be adjacent.
        for (a, b), pair in zip(zip(self.vertices, self.vertices[1:]), pairs):
            if (a < n) == (b < n):
                return False
            if not g.has_edge(*pair):
                return False
        flags = [pair in matched for pair in pairs]
        if tuple(flags) != self.in_matching:
            return False
        # Strict alternation, free endpoints, outer edges unmatched.
        for prev, cur in zip(flags, flags[1:]):
            if prev == cur:
                return False
        return (
            not flags[0]
            and not flags[-1]
            and self.vertices[0] not in saturated
            and self.vertices[-1] not in saturated
        )


def _alternating_reach(
    g: BipartiteGraph, m: Matching, start: int
) -> tuple[list[list[int]], dict[int, int]]:
    """Layered BFS over the directed alternation graph from left vertex
    ``start``: unmatched edges go left-to-right, matched edges go
    right-to-left.  Returns the layers and a trace of predecessors.

    A right vertex appears in some layer iff it is reachable from
    ``start`` by an alternating path; tracing back through ``trace``
    recovers one such path.
    """
    n = g.n
    match_of_left = m.as_dict()
    match_of_right = {j: i for i, j in m.pairs}
    layers = [[start]]
    trace: dict[int, int] = {}
    seen = {start}
    while True:
        frontier: list[int] = []
        for v in layers[-1]:
            if v < n:
                matched_right = match_of_left.get(v)
                targets = (
                    n + j
                    for j in g.neighbors(v)
                    if j != matched_right
                )
            else:
                i = match_of_right.get(v - n)
                targets = (i,) if i is not None else ()
            for t in targets:
                if t not in seen:
                    seen.add(t)
                    trace[t] = v
                    frontier.append(t)
        if not frontier:
            return layers, trace
        layers.append(frontier)


def _trace_path(
    g: BipartiteGraph, m: Matching, trace: dict[int, int], start: int, end: int
) -> AlternatingPath:
    vertices = [end]
    while vertices[-1] != start:
        vertices.append(trace[vertices[-1]])
    vertices.reverse()
    matched = set(m.pairs)
    n = g.n
    flags = []
    for a, b in zip(vertices, vertices[1:]):
        left, right = (a, b) if a < n else (b, a)
        flags.append((left, right - n) in matched)
    return AlternatingPath(tuple(vertices), tuple(flags))


def find_augmenting_path(
    g: BipartiteGraph, m: Matching
) -> Optional[AlternatingPath]:
    """Find an augmenting path for m in g, or None if none exists.

    Searches from each unsaturated left vertex in increasing index
    order; within a search, takes the unsaturated right vertex that is
    discovered first (earliest layer, then lowest index).  The returned
    path is re-verified to be augmenting before it is handed out.
    """
    n = g.n
    saturated_rights = m.rights()
    for s in range(n):
        if m.get(s) is not None:
            continue
        layers, trace = _alternating_reach(g, m, s)
        for layer in layers[1:]:
            for v in layer:
                if v >= n and (v - n) not in saturated_rights:
                    path = _trace_path(g, m, trace, s, v)
                    if not path.is_augmenting(g, m):
                        raise AssertionError("traced path failed augmenting check")
                    return path
    return None


def _augment(m: Matching, path: AlternatingPath, n: int) -> Matching:
    """Symmetric difference of m with the path's edges."""
    pairs = set(m.pairs)
    for pair in path.edge_pairs(n):
        if pair in pairs:
            pairs.remove(pair)
        else:
            pairs.add(pair)
    return Matching.from_pairs(pairs)


def maximum_matching(g: BipartiteGraph) -> Matching:
    """Maximum-cardinality matching by repeated augmentation."""
    m = Matching.empty()
    while True:
        path = find_augmenting_path(g, m)
        if path is None:
            return m
        m = _augment(m, path, g.n)


def neighborhood(g: BipartiteGraph, lefts: Sequence[int]) -> frozenset[int]:
    """Union of the right neighborhoods of the given left vertices."""
    out: set[int] = set()
    for i in lefts:
        out.update(g.neighbors(i))
    return frozenset(out)


def _violator_from(g: BipartiteGraph, m: Matching) -> tuple[int, ...]:
    """Hall violator given a maximum matching m that is not perfect:
    the least unsaturated left vertex plus everything it reaches by
    alternating paths."""
    n = g.n
    s = next(i for i in range(n) if m.get(i) is None)
    layers, _ = _alternating_reach(g, m, s)
    reached = {v for layer in layers[1:] for v in layer}
    violator = sorted({s} | {v for v in reached if v < n})
    return tuple(violator)


def hall_violator(g: BipartiteGraph) -> tuple[int, ...]:
    """Left vertex set S with |S| > |N(S)|, for a graph with no perfect
    matching.  Raises PerfectMatchingExistsError otherwise."""
    m = maximum_matching(g)
    if m.size == g.n:
        raise PerfectMatchingExistsError(
            "graph has a perfect matching; no Hall violator exists"
        )
    s = _violator_from(g, m)
    if len(neighborhood(g, s)) >= len(s):
        raise AssertionError("constructed violator fails |S| > |N(S)|")
    return s


class WeightCover(NamedTuple):
    """Row/column potentials with w[i][j] <= u[i] + v[j] for all i, j."""

    u: tuple[int, ...]
    v: tuple[int, ...]


def cover_cost(cover: WeightCover) -> int:
    return sum(cover.u) + sum(cover.v)


def is_cover(w: Sequence[Sequence[int]], cover: WeightCover) -> bool:
    """Does the cover inequality hold at every position of w?"""
    n = len(w)
    return all(
        w[i][j] <= cover.u[i] + cover.v[j] for i in range(n) for j in range(n)
    )


def _equality_subgraph(
    n: int, w: Sequence[Sequence[int]], u: Sequence[int], v: Sequence[int]
) -> BipartiteGraph:
    return BipartiteGraph.from_rows(
        [[w[i][j] == u[i] + v[j] for j in range(n)] for i in range(n)]
    )


def _hungarian_rounds(n: int, w: Sequence[Sequence[int]]):
    """Generator driving the Hungarian algorithm.

    Yields the cover at the start of each round; sends back nothing.
    The final round's cover certifies the matching returned by
    hungarian_max_weight: the equality subgraph of that cover has a
    perfect matching.
    """
    u = [max(w[i][j] for j in range(n)) for i in range(n)]
    v = [0] * n
    while True:
        yield WeightCover(tuple(u), tuple(v))
        h = _equality_subgraph(n, w, u, v)
        m = maximum_matching(h)
        if m.size == n:
            return
        s = _violator_from(h, m)
        ns = neighborhood(h, s)
        delta = min(
            u[i] + v[j] - w[i][j]
            for i in s
            for j in range(n)
            if j not in ns
        )
        for i in s:
            u[i] -= delta
        for j in ns:
            v[j] += delta


def hungarian_max_weight(
    n: int, w: Sequence[Sequence[int]]
) -> tuple[Matching, WeightCover]:
    """Maximum-weight matching of the complete n x n instance w, plus a
    minimum-cost weight cover certifying it.

    Starts from u[i] = max of row i, v = 0.  While the equality
    subgraph (positions with w[i][j] = u[i] + v[j]) has no perfect
    matching, a Hall violator S shrinks the cover: u drops by delta on
    S, v rises by delta on N(S), with delta the smallest slack between
    S and the rights outside N(S).  The cover cost strictly decreases
    by at least 1 per round, so termination is bounded by the initial
    cost.  At return, matching weight equals cover cost.
    """
    if n < 1:
        raise ValueError("instance dimension must be >= 1")
    if len(w) != n or any(len(row) != n for row in w):
        raise ValueError(f"weight grid must be {n}x{n}")
    if any(w[i][j] < 0 for i in range(n) for j in range(n)):
        raise ValueError("negative weights are not accepted")
    cover = None
    rounds = _hungarian_rounds(n, w)
    for cover in rounds:
        pass
    h = _equality_subgraph(n, w, cover.u, cover.v)
    m = maximum_matching(h)
    return m, cover


def mwpm(g: BipartiteGraph, w: WeightAssignment) -> Matching:
    """Minimum-weight perfect matching of g, or the empty matching if g
    has no perfect matching.

    Reduces to maximum-weight matching on the complete instance with
    transformed weights c - w on edges and 0 elsewhere, where
    c = n * max edge weight + 1.  Any perfect matching of g then beats
    every matching that uses a non-edge, so a non-edge in the result
    proves there is no perfect matching.
    """
    n = g.n
    if w.n != n:
        raise ValueError(f"weights are {w.n}x{w.n}, graph is {n}x{n}")
    edges = g.edge_list()
    max_w = max((w.value(i, j) for i, j in edges), default=0)
    c = n * max_w + 1
    transformed = [
        [c - w.value(i, j) if g.edges[i][j] else 0 for j in range(n)]
        for i in range(n)
    ]
    m, _ = hungarian_max_weight(n, transformed)
    if any(not g.has_edge(i, j) for i, j in m.pairs):
        return Matching.empty()
    if not is_perfect_matching(g, m):
        return Matching.empty()
    return m
