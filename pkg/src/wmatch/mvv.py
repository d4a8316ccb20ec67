"""The Mulmuley-Vazirani-Vazirani randomized matching pipeline.

Give every edge (i, j) the value 2^w(i,j) and evaluate the graph's edge
matrix there.  Each perfect matching contributes ±2^(its weight) to the
determinant, so when the minimum-weight perfect matching is unique its
weight survives as the position of the determinant's least significant
1-bit: everything below it cancels nothing and everything else is
divisible by a higher power of two.  That single number drives the
whole pipeline: it recovers the minimum weight, decides per-edge
membership in the unique minimum matching via minors, and (with random
weights to make uniqueness hold with probability >= 1/2) finds a
perfect matching.

The finder is Las Vegas here: the assembled edge set is verified to be
a perfect matching of the right weight before it is returned, so
non-isolating weights surface as explicit failure, never as a wrong
answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .edmonds import ZeroDeterminantError
from .graphs import (
    BipartiteGraph,
    Matching,
    WeightAssignment,
    is_perfect_matching,
    matching_weight,
    random_weights,
)
from .linalg import IntMatrix, det_berkowitz, trailing_zeros


def build_power_matrix(g: BipartiteGraph, w: WeightAssignment) -> IntMatrix:
    """Evaluation of g's edge matrix at 2^w: entry (i, j) is 2^w(i,j)
    on edges and 0 elsewhere."""
    if w.n != g.n:
        raise ValueError(f"weights are {w.n}x{w.n}, graph is {g.n}x{g.n}")
    n = g.n
    return IntMatrix(
        tuple(
            tuple(1 << w.value(i, j) if g.edges[i][j] else 0 for j in range(n))
            for i in range(n)
        )
    )


def extract_pm_weight_bounded(
    g: BipartiteGraph, w: WeightAssignment, b: IntMatrix, p: int
) -> Matching:
    """Extract a perfect matching of weight at most p = position of the
    least significant 1-bit of det(b).

    Works like plain nonzero-diagonal extraction, but at each row picks
    the cofactor term whose running product (chosen entries so far,
    times the entry, times the minor determinant) has the fewest
    trailing zero bits, least column index on ties.  The sum of the
    nonzero terms equals the current running product times the current
    determinant, whose trailing zeros stay at most p; a sum cannot have
    fewer trailing zeros than all its terms, so the minimum term keeps
    the invariant.  The final product of chosen entries is exactly
    2^(matching weight), hence the weight bound.  This holds whether or
    not the minimum-weight perfect matching is unique.
    """
    if b.n != g.n:
        raise ValueError(f"matrix is {b.n}x{b.n}, graph is {g.n}x{g.n}")
    det = det_berkowitz(b)
    if det == 0:
        raise ZeroDeterminantError("matrix has zero determinant; nothing to extract")
    if trailing_zeros(det) != p:
        raise ValueError(
            f"p={p} does not match the determinant's trailing zero count "
            f"{trailing_zeros(det)}"
        )
    n = b.n
    cur = b
    cols = list(range(n))
    sigma = [0] * n
    prod = 1  # product of the entries chosen so far
    for i in range(n - 1, 0, -1):
        best_j = None
        best_tz = None
        for j in range(i + 1):
            entry = cur.at(i, j)
            if entry == 0:
                continue
            d = det_berkowitz(cur.minor(i, j))
            if d == 0:
                continue
            tz = trailing_zeros(prod * entry * d)
            if best_tz is None or tz < best_tz:
                best_tz = tz
                best_j = j
        if best_j is None:
            raise AssertionError("nonzero determinant but no nonzero cofactor term")
        sigma[i] = cols[best_j]
        prod *= cur.at(i, best_j)
        cur = cur.minor(i, best_j)
        del cols[best_j]
    sigma[0] = cols[0]
    m = Matching.from_pairs(enumerate(sigma))
    if not is_perfect_matching(g, m):
        raise ValueError("extracted diagonal is not a matching of the graph; "
                         "was the matrix built from this graph?")
    if matching_weight(m, w) > p:
        raise AssertionError("extraction exceeded the weight bound")
    return m


def min_weight_via_trailing_zeros(
    g: BipartiteGraph, w: WeightAssignment, b: IntMatrix
) -> int:
    """Weight of the unique minimum-weight perfect matching, read off
    the determinant's trailing zero count.

    The caller is responsible for uniqueness; without it the returned
    number is still a lower bound realized by some perfect matching
    (see extract_pm_weight_bounded) but not necessarily the minimum
    weight.
    """
    det = det_berkowitz(b)
    if det == 0:
        raise ZeroDeterminantError(
            "determinant is zero: no perfect matching (or weights canceled, "
            "contradicting uniqueness)"
        )
    return trailing_zeros(det)


def edge_in_unique_min_pm(
    g: BipartiteGraph, w: WeightAssignment, b: IntMatrix, i: int, j: int
) -> bool:
    """Membership of edge (i, j) in the unique minimum-weight perfect
    matching: delete row i and column j and compare trailing zero
    counts: the edge is in iff the minor's count is defined and equals
    (minimum weight) - w(i,j)."""
    if not g.has_edge(i, j):
        raise ValueError(f"({i}, {j}) is not an edge")
    det = det_berkowitz(b)
    if det == 0:
        raise ZeroDeterminantError("determinant is zero; no unique minimum matching")
    if g.n == 1:
        return True  # the single edge is the matching
    target = trailing_zeros(det) - w.value(i, j)
    sub_tz = trailing_zeros(det_berkowitz(b.minor(i, j)))
    return sub_tz is not None and sub_tz == target


@dataclass(frozen=True)
class MvvTrial:
    """Full record of one randomized find attempt."""

    seed: int
    weights: WeightAssignment
    min_weight: Optional[int]  # trailing zero count of det, None if det = 0
    matching: Optional[Matching]  # verified perfect matching, None on failure

    @property
    def success(self) -> bool:
        return self.matching is not None


def mvv_trial(g: BipartiteGraph, seed: int) -> MvvTrial:
    """One attempt: draw uniform weights in [1, 2m], build the power
    matrix, and collect the edges passing the membership test.

    The collected set is only trusted after verification: it must be a
    perfect matching of g whose weight equals the determinant's
    trailing zero count.  Anything else (zero determinant, non-matching
    collection, weight mismatch) is reported as failure.
    """
    n = g.n
    m = g.num_edges
    if m == 0:
        empty_w = WeightAssignment.from_grid([[0] * n for _ in range(n)])
        return MvvTrial(seed, empty_w, None, None)
    w = random_weights(g, 2 * m, seed)
    b = build_power_matrix(g, w)
    det = det_berkowitz(b)
    if det == 0:
        return MvvTrial(seed, w, None, None)
    p = trailing_zeros(det)
    pairs = []
    for i, j in g.edge_list():
        if n == 1:
            pairs.append((i, j))
            continue
        sub_tz = trailing_zeros(det_berkowitz(b.minor(i, j)))
        if sub_tz is not None and sub_tz == p - w.value(i, j):
            pairs.append((i, j))
    if len(pairs) != n:
        return MvvTrial(seed, w, p, None)
    if len({i for i, _ in pairs}) != n or len({j for _, j in pairs}) != n:
        return MvvTrial(seed, w, p, None)
    candidate = Matching.from_pairs(pairs)
    if not is_perfect_matching(g, candidate):
        return MvvTrial(seed, w, p, None)
    if matching_weight(candidate, w) != p:
        return MvvTrial(seed, w, p, None)
    return MvvTrial(seed, w, p, candidate)


def mvv_find_pm(g: BipartiteGraph, seed: int) -> Optional[Matching]:
    """Randomized perfect matching finder.

    Returns a verified perfect matching, or None for an explicit
    failure.  When g has a perfect matching, one trial succeeds with
    probability at least 1/2 (random weights in [1, 2m] isolate with at
    least that probability); when it has none, every trial fails
    because the determinant is identically zero.
    """
    return mvv_trial(g, seed).matching
