"""Isolating weight assignments for perfect matchings.

A weight assignment on a graph's edges is *isolating* when the
minimum-weight perfect matching is unique.  Random weights isolate with
high probability: among assignments drawn from [1, k]^m (m edges), the
non-isolating ones admit an explicit map from [0, m) x [1, k]^(m-1)
onto them, so their fraction is at most m/k.  As with the zero-set
witnesses, the map's surjectivity is the executable content of that
bound and is checked exhaustively at small sizes.

The non-isolating predicate itself is decided with the exact
minimum-weight perfect matching solver: a minimum matching ties with
another one iff deleting one of its edges leaves a perfect matching of
equal minimum weight.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

from .classical import mwpm
from .graphs import BipartiteGraph, WeightAssignment, matching_weight
from .oracle import DEFAULT_BUDGET, BudgetExceededError


def _check_edge_weights(g: BipartiteGraph, w: WeightAssignment, k: int) -> None:
    if w.n != g.n:
        raise ValueError(f"weights are {w.n}x{w.n}, graph is {g.n}x{g.n}")
    for i, j in g.edge_list():
        if not 1 <= w.value(i, j) <= k:
            raise ValueError(
                f"edge ({i}, {j}) has weight {w.value(i, j)} outside [1, {k}]"
            )


def is_nonisolating(g: BipartiteGraph, w: WeightAssignment, k: int) -> bool:
    """True iff g has two distinct minimum-weight perfect matchings
    under w.  Graphs without any perfect matching have nothing to
    isolate, so the answer there is False for every assignment."""
    _check_edge_weights(g, w, k)
    m = mwpm(g, w)
    if m.is_empty:
        return False
    target = matching_weight(m, w)
    for i, j in m.pairs:
        rival = mwpm(g.without_edge(i, j), w)
        if not rival.is_empty and matching_weight(rival, w) == target:
            # rival avoids (i, j) by construction, so it differs from m.
            return True
    return False


def nonisolating_witness(
    g: BipartiteGraph,
    k: int,
    i: int,
    w_rest: Sequence[int],
    dummy: WeightAssignment,
) -> WeightAssignment:
    """Map (edge index, weights for the other m-1 edges) to a
    non-isolating assignment.

    Let e_i = (a, b).  Find a minimum perfect matching M' of g minus
    the edge e_i, and a minimum perfect matching M1 of g minus both
    endpoints of e_i.  If both exist and w(M') - w(M1) lands in [1, k],
    splicing that difference in as e_i's weight makes M' and
    M1 + {e_i} two distinct minimum-weight perfect matchings, so the
    spliced assignment is non-isolating and is returned.  Otherwise the
    caller-supplied ``dummy`` (itself required to be non-isolating) is
    returned.
    """
    edges = g.edge_list()
    m = len(edges)
    if not 0 <= i < m:
        raise ValueError(f"edge index {i} out of range [0, {m})")
    if len(w_rest) != m - 1:
        raise ValueError(f"expected {m - 1} weights, got {len(w_rest)}")
    for v in w_rest:
        if not 1 <= v <= k:
            raise ValueError(f"weight {v} out of range [1, {k}]")
    if not is_nonisolating(g, dummy, k):
        raise ValueError("dummy assignment is not non-isolating")

    a, b = edges[i]
    rest_values = list(w_rest[:i]) + [0] + list(w_rest[i:])  # 0 fills e_i's slot
    grid = [[0] * g.n for _ in range(g.n)]
    for (r, c), v in zip(edges, rest_values):
        grid[r][c] = v
    w_partial = WeightAssignment.from_grid(grid)

    m_prime = mwpm(g.without_edge(a, b), w_partial)
    if m_prime.is_empty:
        return dummy

    if g.n == 1:
        # Deleting both endpoints leaves the empty graph, whose perfect
        # matching is the empty matching of weight 0.
        m1_weight = 0
    else:
        sub = g.without_vertices(a, b)
        sub_w = WeightAssignment.from_grid(
            [
                [grid[r][c] for c in range(g.n) if c != b]
                for r in range(g.n)
                if r != a
            ]
        )
        m1 = mwpm(sub, sub_w)
        if m1.is_empty:
            return dummy
        m1_weight = matching_weight(m1, sub_w)

    spliced = matching_weight(m_prime, w_partial) - m1_weight
    if not 1 <= spliced <= k:
        return dummy
    grid[a][b] = spliced
    return WeightAssignment.from_grid(grid)


def enumerate_nonisolating(
    g: BipartiteGraph, k: int, budget: int = DEFAULT_BUDGET
) -> Iterator[WeightAssignment]:
    """Stream the non-isolating assignments in [1, k]^m, lexicographic
    over the row-major edge list."""
    if k < 1:
        raise ValueError(f"weight range bound must be >= 1, got {k}")
    m = g.num_edges
    total = k ** m
    if total > budget:
        raise BudgetExceededError(
            f"bad-set enumeration needs {total} evaluations, budget is {budget}"
        )
    for values in product(range(1, k + 1), repeat=m):
        w = WeightAssignment.from_edge_values(g, values)
        if is_nonisolating(g, w, k):
            yield w


def nonisolating_fraction(
    g: BipartiteGraph, k: int, budget: int = DEFAULT_BUDGET
) -> Fraction:
    """Exact fraction of assignments in [1, k]^m that fail to isolate,
    by exhaustive count.  Always at most m/k."""
    count = sum(1 for _ in enumerate_nonisolating(g, k, budget))
    return Fraction(count, k ** g.num_edges)
