"""Brute-force ground truth and exhaustive verification helpers.

Everything here is deliberately naive: enumerations are complete,
deterministic, and order-stable, so they can serve as independent
oracles for the clever algorithms.  Budgets are explicit and enforced;
an oracle that silently samples is not an oracle.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import Callable, Iterable, NamedTuple, Optional

from .graphs import BipartiteGraph, Matching, WeightAssignment, matching_weight

DEFAULT_BUDGET = 10_000_000

ENUM_PM_MAX_N = 8
BRUTE_WEIGHT_MAX_N = 5


class BudgetExceededError(RuntimeError):
    """An exhaustive enumeration would exceed its evaluation budget."""


def worker_count() -> int:
    """Worker cap for partitioned enumerations, from WM_THREADS (>= 1)."""
    try:
        return max(1, int(os.environ.get("WM_THREADS", "1")))
    except ValueError:
        return 1


def enumerate_perfect_matchings(g: BipartiteGraph) -> list[Matching]:
    """All perfect matchings of g, in lexicographic order of the column
    sequence (row 0's partner varies slowest)."""
    n = g.n
    if n > ENUM_PM_MAX_N:
        raise ValueError(f"enumerate_perfect_matchings limited to n <= {ENUM_PM_MAX_N}, got {n}")
    out: list[Matching] = []
    assignment = [0] * n

    def walk(row: int, used: int):
        if row == n:
            out.append(Matching.from_pairs(enumerate(assignment)))
            return
        for j in range(n):
            if g.edges[row][j] and not (used >> j) & 1:
                assignment[row] = j
                walk(row + 1, used | (1 << j))

    walk(0, 0)
    return out


def brute_max_weight_matching(n: int, w) -> int:
    """Maximum total weight over *all* matchings (any size) of the
    complete n x n instance, by recursion over rows."""
    if n > BRUTE_WEIGHT_MAX_N:
        raise ValueError(f"brute_max_weight_matching limited to n <= {BRUTE_WEIGHT_MAX_N}, got {n}")

    def best(row: int, used: int) -> int:
        if row == n:
            return 0
        score = best(row + 1, used)  # leave this row unmatched
        for j in range(n):
            if not (used >> j) & 1:
                score = max(score, w[row][j] + best(row + 1, used | (1 << j)))
        return score

    return best(0, 0)


class BruteMinResult(NamedTuple):
    """Minimum perfect-matching weight and every matching achieving it.
    weight is None (and matchings empty) when no perfect matching exists."""

    weight: Optional[int]
    matchings: tuple[Matching, ...]

    @property
    def unique(self) -> bool:
        return len(self.matchings) == 1


def brute_min_weight_pms(g: BipartiteGraph, w: WeightAssignment) -> BruteMinResult:
    """Minimum-weight perfect matchings by full enumeration."""
    pms = enumerate_perfect_matchings(g)
    if not pms:
        return BruteMinResult(None, ())
    weighted = [(matching_weight(m, w), m) for m in pms]
    best = min(weight for weight, _ in weighted)
    return BruteMinResult(best, tuple(m for weight, m in weighted if weight == best))


@dataclass
class SurjectivityReport:
    """Verdict of an exhaustive surjectivity check.

    ``uncovered`` lists the target elements with no preimage; the map
    is surjective exactly when it is empty.
    """

    domain_size: int
    target_size: int
    covered_count: int
    uncovered: tuple = field(default_factory=tuple)

    @property
    def surjective(self) -> bool:
        return not self.uncovered

    def to_dict(self) -> dict:
        return {
            "domain_size": self.domain_size,
            "target_size": self.target_size,
            "covered_count": self.covered_count,
            "surjective": self.surjective,
            "uncovered": [_jsonify(x) for x in self.uncovered],
        }


def _jsonify(x):
    if isinstance(x, WeightAssignment):
        return [list(row) for row in x.grid]
    if isinstance(x, tuple):
        return [_jsonify(e) for e in x]
    return x


def _chunks(it: Iterable, size: int):
    it = iter(it)
    while True:
        chunk = list(islice(it, size))
        if not chunk:
            return
        yield chunk


def check_surjection(
    domain: Iterable,
    fn: Callable,
    target: Iterable,
    key: Optional[Callable] = None,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
) -> SurjectivityReport:
    """Exhaustively check that ``fn`` maps ``domain`` onto ``target``.

    ``key`` canonicalizes target elements to something hashable (the
    identity by default); two elements are considered equal when their
    keys are.  The domain is consumed in lexicographic chunks; with
    threads > 1 the chunks are mapped on a thread pool and the hit sets
    merged in chunk order, so the report is identical either way.
    """
    if key is None:
        key = lambda x: x

    target_list = list(target)
    if len(target_list) > budget:
        raise BudgetExceededError(
            f"target enumeration has {len(target_list)} elements, budget is {budget}"
        )

    hit: set = set()
    domain_size = 0
    chunk_size = 2048

    def eval_chunk(chunk: list) -> list:
        return [key(fn(x)) for x in chunk]

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for keys in pool.map(eval_chunk, _chunks(domain, chunk_size)):
                domain_size += len(keys)
                if domain_size > budget:
                    raise BudgetExceededError(
                        f"domain enumeration exceeded budget {budget}"
                    )
                hit.update(keys)
    else:
        for chunk in _chunks(domain, chunk_size):
            domain_size += len(chunk)
            if domain_size > budget:
                raise BudgetExceededError(f"domain enumeration exceeded budget {budget}")
            hit.update(eval_chunk(chunk))

    uncovered = tuple(t for t in target_list if key(t) not in hit)
    return SurjectivityReport(
        domain_size=domain_size,
        target_size=len(target_list),
        covered_count=len(target_list) - len(uncovered),
        uncovered=uncovered,
    )
