"""Bipartite graphs, matchings, and edge weights.

A graph on n + n vertices is a boolean n x n edge matrix: entry (i, j)
is True iff left vertex i is adjacent to right vertex j.  Matchings are
injective partial maps from left to right indices.  All indices are
0-based (file formats and internal APIs alike).

The module also owns the text file formats used by the CLI and the
evaluation of a graph's edge matrix at an integer assignment: position
(i, j) takes the assigned value on edges and is structurally 0 off
edges, so the resulting determinant depends only on edge positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Union

from .linalg import IntMatrix
from .rng import SplitMix64


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with n vertices per side and an n x n edge matrix."""

    edges: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        n = len(self.edges)
        if n == 0:
            raise ValueError("graph must have n >= 1")
        for i, row in enumerate(self.edges):
            if len(row) != n:
                raise ValueError(f"edge row {i} has {len(row)} entries, expected {n}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Union[bool, int]]]) -> "BipartiteGraph":
        return cls(tuple(tuple(bool(x) for x in row) for row in rows))

    @classmethod
    def complete(cls, n: int) -> "BipartiteGraph":
        return cls(tuple((True,) * n for _ in range(n)))

    @classmethod
    def empty(cls, n: int) -> "BipartiteGraph":
        return cls(tuple((False,) * n for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return self.edges[i][j]

    def edge_list(self) -> tuple[tuple[int, int], ...]:
        """All edges (i, j) in row-major order; fixes the enumeration
        e_0 ... e_{m-1} used wherever edges are indexed."""
        return tuple(
            (i, j)
            for i in range(self.n)
            for j in range(self.n)
            if self.edges[i][j]
        )

    @property
    def num_edges(self) -> int:
        return sum(row.count(True) for row in self.edges)

    def neighbors(self, i: int) -> tuple[int, ...]:
        """Right neighbors of left vertex i."""
        return tuple(j for j in range(self.n) if self.edges[i][j])

    def without_edge(self, i: int, j: int) -> "BipartiteGraph":
        rows = [list(row) for row in self.edges]
        rows[i][j] = False
        return BipartiteGraph.from_rows(rows)

    def without_vertices(self, i: int, j: int) -> "BipartiteGraph":
        """Delete left vertex i and right vertex j, reindexing the rest."""
        if self.n < 2:
            raise ValueError("cannot delete vertices from an n=1 graph")
        return BipartiteGraph(
            tuple(
                tuple(row[c] for c in range(self.n) if c != j)
                for r, row in enumerate(self.edges)
                if r != i
            )
        )


@dataclass(frozen=True)
class Matching:
    """Injective partial map from left to right vertex indices.

    Stored as pairs sorted by left index.  Perfect means total on
    [0, n) for the n of the graph it is validated against.
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        lefts = [i for i, _ in self.pairs]
        rights = [j for _, j in self.pairs]
        if len(set(lefts)) != len(lefts):
            raise ValueError("matching maps a left vertex twice")
        if len(set(rights)) != len(rights):
            raise ValueError("matching is not injective")
        if list(self.pairs) != sorted(self.pairs):
            raise ValueError("matching pairs must be sorted by left index")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Matching":
        return cls(tuple(sorted((int(i), int(j)) for i, j in pairs)))

    @classmethod
    def from_dict(cls, mapping: Mapping[int, int]) -> "Matching":
        return cls.from_pairs(mapping.items())

    @classmethod
    def empty(cls) -> "Matching":
        return cls(())

    @property
    def size(self) -> int:
        return len(self.pairs)

    @property
    def is_empty(self) -> bool:
        return not self.pairs

    def get(self, left: int) -> Optional[int]:
        for i, j in self.pairs:
            if i == left:
                return j
        return None

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def lefts(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.pairs)

    def rights(self) -> frozenset[int]:
        return frozenset(j for _, j in self.pairs)

    def __contains__(self, pair: tuple[int, int]) -> bool:
        return pair in self.pairs

    def permutation_matrix(self, n: int) -> IntMatrix:
        """0/1 matrix with a 1 at each matched pair; a permutation
        matrix exactly when the matching is perfect."""
        rows = [[0] * n for _ in range(n)]
        for i, j in self.pairs:
            rows[i][j] = 1
        return IntMatrix.from_rows(rows)


@dataclass(frozen=True)
class WeightAssignment:
    """Nonnegative integer weights on an n x n grid.

    Entries at non-edge positions are carried but ignored by every
    consumer; edge identity is positional, so subgraphs keep reading
    weights through the original coordinates.
    """

    grid: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.grid)
        if n == 0:
            raise ValueError("weight grid must have n >= 1")
        for i, row in enumerate(self.grid):
            if len(row) != n:
                raise ValueError(f"weight row {i} has {len(row)} entries, expected {n}")
            for x in row:
                if x < 0:
                    raise ValueError(f"negative weight {x} at row {i}")

    @classmethod
    def from_grid(cls, rows: Iterable[Iterable[int]]) -> "WeightAssignment":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def from_edge_values(
        cls, g: BipartiteGraph, values: Sequence[int]
    ) -> "WeightAssignment":
        """Place one value per edge (row-major edge order); non-edges get 0."""
        edges = g.edge_list()
        if len(values) != len(edges):
            raise ValueError(f"expected {len(edges)} edge values, got {len(values)}")
        rows = [[0] * g.n for _ in range(g.n)]
        for (i, j), v in zip(edges, values):
            rows[i][j] = v
        return cls.from_grid(rows)

    @property
    def n(self) -> int:
        return len(self.grid)

    def value(self, i: int, j: int) -> int:
        return self.grid[i][j]

    def edge_values(self, g: BipartiteGraph) -> tuple[int, ...]:
        """Weights read off in the graph's row-major edge order."""
        return tuple(self.grid[i][j] for i, j in g.edge_list())


GridLike = Union[IntMatrix, Sequence[Sequence[int]]]


def _as_rows(values: GridLike, n: int) -> tuple[tuple[int, ...], ...]:
    rows = values.rows if isinstance(values, IntMatrix) else tuple(
        tuple(int(x) for x in row) for row in values
    )
    if len(rows) != n or any(len(row) != n for row in rows):
        raise ValueError(f"value grid must be {n}x{n}")
    return rows


def edmonds_eval(g: BipartiteGraph, values: GridLike) -> IntMatrix:
    """Evaluate the graph's edge matrix at an integer assignment.

    Entry (i, j) of the result is values[i][j] when (i, j) is an edge
    and 0 otherwise, so non-edge positions never influence anything
    computed from the result.
    """
    rows = _as_rows(values, g.n)
    return IntMatrix(
        tuple(
            tuple(rows[i][j] if g.edges[i][j] else 0 for j in range(g.n))
            for i in range(g.n)
        )
    )


def is_perfect_matching(g: BipartiteGraph, m: Matching) -> bool:
    """True iff m is total on [0, n), injective, and uses only edges of g."""
    if m.size != g.n:
        return False
    return all(g.has_edge(i, j) for i, j in m.pairs)


def matching_weight(m: Matching, w: WeightAssignment) -> int:
    """Sum of w over the pairs of m; 0 for the empty matching."""
    return sum(w.value(i, j) for i, j in m.pairs)


def random_weights(g: BipartiteGraph, k: int, seed: int) -> WeightAssignment:
    """Independent uniform weights in [1, k] on every edge, 0 off edges.

    Draws come from SplitMix64 seeded with ``seed``, one draw per edge
    in row-major edge order, so the same (g, k, seed) always yields the
    same assignment on every platform.
    """
    if k < 1:
        raise ValueError(f"weight range bound must be >= 1, got {k}")
    stream = SplitMix64(seed)
    rows = [[0] * g.n for _ in range(g.n)]
    for i, j in g.edge_list():
        rows[i][j] = stream.randint(1, k)
    return WeightAssignment.from_grid(rows)


class FileFormatError(ValueError):
    """Malformed graph or weight file; carries the offending 1-based line
    (0 when the problem is not tied to a line, e.g. an unreadable file)
    and optionally the file it came from."""

    def __init__(self, line: int, message: str, source: Optional[str] = None):
        self.line = line
        self.message = message
        self.source = source
        prefix = f"{source}: " if source else ""
        where = f"line {line}: " if line else ""
        super().__init__(f"{prefix}{where}{message}")


def _parse_header(lines: list[str]) -> int:
    if not lines:
        raise FileFormatError(1, "empty file, expected dimension n on line 1")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise FileFormatError(1, f"expected integer dimension, got {lines[0].strip()!r}") from None
    if n < 1:
        raise FileFormatError(1, f"dimension must be >= 1, got {n}")
    if len(lines) < n + 1:
        raise FileFormatError(len(lines) + 1, f"expected {n} data rows, file ends after {len(lines) - 1}")
    for extra in range(n + 1, len(lines)):
        if lines[extra].strip():
            raise FileFormatError(extra + 1, "unexpected trailing content")
    return n


def _parse_row(line: str, lineno: int, n: int) -> list[int]:
    fields = line.split()
    if len(fields) != n:
        raise FileFormatError(lineno, f"expected {n} entries, got {len(fields)}")
    out = []
    for f in fields:
        try:
            out.append(int(f))
        except ValueError:
            raise FileFormatError(lineno, f"expected integer entry, got {f!r}") from None
    return out


def parse_graph(text: str) -> BipartiteGraph:
    """Parse the graph text format: line 1 is n, then n rows of n 0/1
    entries (row i lists the right neighbors of left vertex i)."""
    lines = text.splitlines()
    n = _parse_header(lines)
    rows = []
    for i in range(n):
        row = _parse_row(lines[1 + i], 2 + i, n)
        for x in row:
            if x not in (0, 1):
                raise FileFormatError(2 + i, f"edge entries must be 0 or 1, got {x}")
        rows.append([bool(x) for x in row])
    return BipartiteGraph.from_rows(rows)


def parse_weights(text: str) -> WeightAssignment:
    """Parse the weight text format: line 1 is n, then n rows of n
    nonnegative decimal integers (non-edge entries present, ignored)."""
    lines = text.splitlines()
    n = _parse_header(lines)
    rows = []
    for i in range(n):
        row = _parse_row(lines[1 + i], 2 + i, n)
        for x in row:
            if x < 0:
                raise FileFormatError(2 + i, f"weights must be nonnegative, got {x}")
        rows.append(row)
    return WeightAssignment.from_grid(rows)


def format_graph(g: BipartiteGraph) -> str:
    body = "\n".join(" ".join("1" if x else "0" for x in row) for row in g.edges)
    return f"{g.n}\n{body}\n"


def format_weights(w: WeightAssignment) -> str:
    body = "\n".join(" ".join(str(x) for x in row) for row in w.grid)
    return f"{w.n}\n{body}\n"
