"""Perfect matchings from nonzero determinants.

A bipartite graph has a perfect matching iff its edge matrix admits an
integer assignment with nonzero determinant (any perfect matching's
permutation matrix works, with determinant ±1).  This module makes the
reverse direction constructive: :func:`extract_pm` turns any nonzero
evaluation into a nonzero diagonal, i.e. a perfect matching.  On top of
that sits the one-sided randomized decision test of Lovász:
evaluate at a uniform random assignment and test the determinant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import BipartiteGraph, Matching, edmonds_eval, is_perfect_matching
from .linalg import IntMatrix, det_berkowitz
from .rng import SplitMix64


class ZeroDeterminantError(ValueError):
    """Raised where a nonzero determinant is a precondition."""


@dataclass(frozen=True)
class ExtractionTrace:
    """Record of one nonzero-diagonal extraction.

    ``steps`` lists, from the bottom row upward, the row handled, the
    chosen column inside the shrinking submatrix, and the original
    column it labels (the column-label bookkeeping plays the role of
    deleting rows/columns from an index matrix in lockstep with the
    value matrix).  ``sigma`` is the resulting permutation: row i is
    matched to column sigma[i].
    """

    steps: tuple[tuple[int, int, int], ...]
    sigma: tuple[int, ...]

    @property
    def matching(self) -> Matching:
        return Matching.from_pairs(enumerate(self.sigma))


def extract_pm_trace(g: BipartiteGraph, b: IntMatrix) -> ExtractionTrace:
    """Extract a nonzero diagonal of b, recording every choice.

    b must be an evaluation of g's edge matrix with det(b) != 0.  Work
    bottom-up: for the last row of the current submatrix, pick the
    least column j whose entry times the determinant of its minor is
    nonzero (one exists, by cofactor expansion along that row), then
    delete that row and column and recurse.  Each chosen entry is
    nonzero, hence sits on an edge of g.
    """
    n = b.n
    if b.n != g.n:
        raise ValueError(f"matrix is {b.n}x{b.n}, graph is {g.n}x{g.n}")
    if det_berkowitz(b) == 0:
        raise ZeroDeterminantError("matrix has zero determinant; no diagonal to extract")
    cur = b
    cols = list(range(n))
    steps = []
    sigma = [0] * n
    for i in range(n - 1, 0, -1):
        chosen = None
        for j in range(i + 1):
            if cur.at(i, j) != 0 and det_berkowitz(cur.minor(i, j)) != 0:
                chosen = j
                break
        if chosen is None:
            raise AssertionError("nonzero determinant but no nonzero cofactor term")
        sigma[i] = cols[chosen]
        steps.append((i, chosen, cols[chosen]))
        cur = cur.minor(i, chosen)
        del cols[chosen]
    # Row 0: a single 1x1 block remains and equals its own determinant.
    sigma[0] = cols[0]
    steps.append((0, 0, cols[0]))
    trace = ExtractionTrace(tuple(steps), tuple(sigma))
    if not is_perfect_matching(g, trace.matching):
        raise ValueError("extracted diagonal is not a matching of the graph; "
                         "was the matrix evaluated from this graph?")
    return trace


def extract_pm(g: BipartiteGraph, b: IntMatrix) -> Matching:
    """Perfect matching of g read off a nonzero-determinant evaluation b."""
    return extract_pm_trace(g, b).matching


def lovasz_sample(g: BipartiteGraph, seed: int) -> IntMatrix:
    """Evaluate g's edge matrix at a uniform random assignment.

    Each edge position independently takes a value in [1, 2n]; non-edge
    positions are structurally 0.  Deterministic in (g, seed).
    """
    n = g.n
    stream = SplitMix64(seed)
    rows = [[0] * n for _ in range(n)]
    for i, j in g.edge_list():
        rows[i][j] = stream.randint(1, 2 * n)
    return edmonds_eval(g, rows)


def lovasz_decide(g: BipartiteGraph, seed: int) -> bool:
    """One-sided randomized perfect-matching test.

    True means a perfect matching certainly exists (extract_pm on the
    same evaluation produces one).  False may be wrong with probability
    at most 1/2 when a perfect matching exists, and is always right
    when none does, since then every evaluation has determinant zero.
    """
    return det_berkowitz(lovasz_sample(g, seed)) != 0
