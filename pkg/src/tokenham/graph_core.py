"""Simple undirected graphs: standard families, the join operation, components, exports.

Vertices are the integers ``0..order-1``.  Fan graphs use the canonical
labeling that everything downstream depends on: path vertices come first
(``v1..vn`` are ids ``0..n-1`` in path order), hubs after them
(``w1..wm`` are ids ``n..n+m-1``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import _search
from .errors import ParameterError

# Graphs at or below this order get a lazy bitset adjacency mirror for O(1)
# edge tests during brute-force search and verification.
BITSET_ORDER_LIMIT = 512


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: order plus sorted neighbor tuples per vertex."""

    order: int
    adj: tuple[tuple[int, ...], ...]

    def validate(self) -> None:
        """Check symmetry, irreflexivity, sortedness and id range; raise on failure."""
        if self.order < 1 or len(self.adj) != self.order:
            raise ParameterError("adjacency size does not match order")
        for v, row in enumerate(self.adj):
            if any(u < 0 or u >= self.order for u in row):
                raise ParameterError(f"vertex {v} has an out-of-range neighbor")
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                raise ParameterError(f"neighbor list of {v} is not strictly increasing")
            if v in row:
                raise ParameterError(f"loop at vertex {v}")
            for u in row:
                if v not in self.adj[u]:
                    raise ParameterError(f"edge ({v},{u}) is not symmetric")

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) with u < v, sorted."""
        return tuple((v, u) for v in range(self.order) for u in self.adj[v] if v < u)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def _bitrows(self) -> tuple[int, ...] | None:
        if self.order > BITSET_ORDER_LIMIT:
            return None
        rows = []
        for row in self.adj:
            mask = 0
            for u in row:
                mask |= 1 << u
            rows.append(mask)
        return tuple(rows)

    def has_edge(self, u: int, v: int) -> bool:
        rows = self._bitrows
        if rows is not None:
            return bool(rows[u] >> v & 1)
        row = self.adj[u]
        lo, hi = 0, len(row)
        while lo < hi:
            mid = (lo + hi) // 2
            if row[mid] < v:
                lo = mid + 1
            elif row[mid] > v:
                hi = mid
            else:
                return True
        return False

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Adjacency as (indptr, indices) int64 arrays for the search kernels."""
        indptr = np.zeros(self.order + 1, dtype=np.int64)
        for v, row in enumerate(self.adj):
            indptr[v + 1] = indptr[v] + len(row)
        indices = np.empty(int(indptr[-1]), dtype=np.int64)
        pos = 0
        for row in self.adj:
            for u in row:
                indices[pos] = u
                pos += 1
        return indptr, indices


def from_edges(order: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a validated Graph from an edge iterable (duplicates collapse)."""
    if order < 1:
        raise ParameterError("order must be positive")
    rows: list[set[int]] = [set() for _ in range(order)]
    for u, v in edges:
        if not (0 <= u < order and 0 <= v < order):
            raise ParameterError(f"edge ({u},{v}) out of range for order {order}")
        if u == v:
            raise ParameterError(f"loop at vertex {u}")
        rows[u].add(v)
        rows[v].add(u)
    return Graph(order, tuple(tuple(sorted(r)) for r in rows))


# ---------------------------------------------------------------------------
# standard families


def path_graph(n: int) -> Graph:
    """P_n: vertices 0..n-1, edges (i, i+1).  P_1 is a single vertex."""
    if n < 1:
        raise ParameterError("path needs n >= 1")
    return from_edges(n, ((i, i + 1) for i in range(n - 1)))


def empty_graph(m: int) -> Graph:
    """E_m: m isolated vertices."""
    if m < 1:
        raise ParameterError("empty graph needs m >= 1")
    return Graph(m, tuple(() for _ in range(m)))


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ParameterError("complete graph needs n >= 1")
    return from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ParameterError("cycle needs n >= 3")
    return from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """K_{a,b}: parts 0..a-1 and a..a+b-1."""
    if a < 1 or b < 1:
        raise ParameterError("bipartite parts must be positive")
    return from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def star_graph(m: int) -> Graph:
    """K_{1,m}: center 0, leaves 1..m."""
    if m < 1:
        raise ParameterError("star needs m >= 1")
    return from_edges(m + 1, ((0, i) for i in range(1, m + 1)))


def square_of_path_graph(n: int) -> Graph:
    """P_n^2: path edges plus the (i, i+2) chords."""
    if n < 1:
        raise ParameterError("path square needs n >= 1")
    edges = [(i, i + 1) for i in range(n - 1)] + [(i, i + 2) for i in range(n - 2)]
    return from_edges(n, edges)


def fan_graph(m: int, n: int) -> Graph:
    """F_{m,n}: the path P_n joined with m independent hubs.

    Path vertices are ids 0..n-1 in path order, hubs are ids n..n+m-1, and
    every hub is adjacent to every path vertex.  F_{m,1} is the star K_{1,m}
    with the lone path vertex as its center.
    """
    if m < 1 or n < 1:
        raise ParameterError("fan needs m >= 1 and n >= 1")
    return join(path_graph(n), empty_graph(m))


FAMILY_TAGS = (
    "path",
    "empty",
    "complete",
    "cycle",
    "complete_bipartite",
    "star",
    "square_of_path",
    "fan",
)

_FAMILY_ARITY = {
    "path": 1,
    "empty": 1,
    "complete": 1,
    "cycle": 1,
    "complete_bipartite": 2,
    "star": 1,
    "square_of_path": 1,
    "fan": 2,
}


def build_family(tag: str, params: Sequence[int]) -> Graph:
    """Dispatch on a family tag; used by the CLI."""
    if tag not in _FAMILY_ARITY:
        raise ParameterError(f"unknown family {tag!r}; choose one of {', '.join(FAMILY_TAGS)}")
    if len(params) != _FAMILY_ARITY[tag]:
        raise ParameterError(f"family {tag!r} takes {_FAMILY_ARITY[tag]} parameter(s)")
    builders = {
        "path": path_graph,
        "empty": empty_graph,
        "complete": complete_graph,
        "cycle": cycle_graph,
        "complete_bipartite": complete_bipartite_graph,
        "star": star_graph,
        "square_of_path": square_of_path_graph,
        "fan": fan_graph,
    }
    return builders[tag](*params)


# ---------------------------------------------------------------------------
# operations


def join(g: Graph, h: Graph) -> Graph:
    """Join of two graphs: disjoint union plus all cross edges.

    Vertices of h are shifted by g.order.  The result has
    |E(g)| + |E(h)| + |g||h| edges.
    """
    edges: list[tuple[int, int]] = list(g.edges)
    edges.extend((g.order + u, g.order + v) for u, v in h.edges)
    edges.extend((u, g.order + v) for u in range(g.order) for v in range(h.order))
    return from_edges(g.order + h.order, edges)


def connected_components(g: Graph, removed: Iterable[int] = ()) -> tuple[int, list[int]]:
    """Count components, optionally after deleting a vertex set.

    Returns (count, labels).  Labels are component ids in discovery order;
    removed vertices get label -1 and do not count.
    """
    alive = np.ones(g.order, dtype=np.uint8)
    for v in removed:
        if not 0 <= v < g.order:
            raise ParameterError(f"removed vertex {v} out of range")
        alive[v] = 0
    indptr, indices = g.csr
    count, labels = _search.components(indptr, indices, alive)
    return int(count), [int(x) for x in labels]


# ---------------------------------------------------------------------------
# exports


def fan_vertex_labels(m: int, n: int) -> list[str]:
    """Canonical fan labels v1..vn, w1..wm in id order."""
    return [f"v{i + 1}" for i in range(n)] + [f"w{j + 1}" for j in range(m)]


def to_dot(g: Graph, labels: Sequence[str] | None = None) -> str:
    """Undirected DOT text; edge lines sorted lexicographically for stable bytes."""
    if labels is None:
        labels = [str(v) for v in range(g.order)]
    if len(labels) != g.order:
        raise ParameterError("label count does not match order")
    lines = ["graph {"]
    lines.extend(f"  {labels[v]};" for v in range(g.order))
    lines.extend(sorted(f"  {labels[u]} -- {labels[v]};" for u, v in g.edges))
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edge_list(g: Graph) -> str:
    """One `u v` line per edge with u < v, numerically sorted, after an order header."""
    lines = [f"# order {g.order}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format written by to_edge_list."""
    order = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "order":
                if order is not None:
                    raise ParameterError("duplicate order header")
                try:
                    order = int(parts[1])
                except ValueError:
                    raise ParameterError(f"bad order header on line {lineno}") from None
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParameterError(f"expected 'u v' on line {lineno}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParameterError(f"non-integer edge on line {lineno}") from None
        edges.append((u, v))
    if order is None:
        raise ParameterError("missing '# order N' header")
    return from_edges(order, edges)
