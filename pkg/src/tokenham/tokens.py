"""k-subset vertices: colex ranking, token adjacency, and token-graph materialization.

A token vertex is a strictly increasing tuple of k vertex ids of a base
graph.  Two token vertices are adjacent exactly when their symmetric
difference is a pair of adjacent base vertices.  Vertices of a materialized
token graph are numbered by colexicographic rank, computed through the
combinatorial number system:

    rank(a) = sum of C(a[i], i+1) over the 0-indexed sorted members.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterator, Sequence

from .errors import CapExceeded, ContractViolation, ParameterError
from .graph_core import Graph

DEFAULT_CAP = 2_000_000
_CAP_ENV = "TOKENHAM_CAP"

TokenVertex = tuple[int, ...]


def materialization_cap(cap: int | None = None) -> int:
    """Effective vertex cap: explicit argument, else TOKENHAM_CAP, else the default."""
    if cap is not None:
        return cap
    env = os.environ.get(_CAP_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ParameterError(f"{_CAP_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_CAP


def validate_token(a: Sequence[int], order: int, k: int | None = None) -> TokenVertex:
    """Normalize to a tuple and enforce the token-vertex invariants."""
    t = tuple(a)
    if k is not None and len(t) != k:
        raise ContractViolation(f"expected a {k}-subset, got {len(t)} members")
    if not t:
        raise ContractViolation("token vertex must be nonempty")
    for i, x in enumerate(t):
        if not isinstance(x, int):
            raise ContractViolation(f"non-integer member {x!r}")
        if not 0 <= x < order:
            raise ContractViolation(f"member {x} out of range for order {order}")
        if i and t[i - 1] >= x:
            raise ContractViolation(f"members not strictly increasing: {t}")
    return t


def rank(a: Sequence[int], n: int) -> int:
    """Colex rank of a k-subset among all k-subsets of {0..n-1}."""
    t = validate_token(a, n)
    return sum(comb(x, i + 1) for i, x in enumerate(t))


def unrank(r: int, n: int, k: int) -> TokenVertex:
    """Inverse of rank: the r-th k-subset of {0..n-1} in colex order."""
    if k < 1 or k > n:
        raise ParameterError(f"k={k} out of range for n={n}")
    if not 0 <= r < comb(n, k):
        raise ContractViolation(f"rank {r} out of range for C({n},{k})")
    out = [0] * k
    for i in range(k - 1, -1, -1):
        # largest c with C(c, i+1) <= r
        c = i
        while comb(c + 1, i + 1) <= r:
            c += 1
        out[i] = c
        r -= comb(c, i + 1)
    return tuple(out)


def token_adjacent(g: Graph, a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff the symmetric difference of a and b is an edge of g."""
    ta = validate_token(a, g.order)
    tb = validate_token(b, g.order, k=len(ta))
    diff = set(ta) ^ set(tb)
    if len(diff) != 2:
        return False
    u, v = diff
    return g.has_edge(u, v)


def token_neighbors(g: Graph, a: Sequence[int]) -> Iterator[TokenVertex]:
    """Stream the token-graph neighbors of a, without materializing anything.

    For each member x of a and each base neighbor u of x outside a, yields
    a - {x} + {u}.  Order is deterministic: members ascending, then base
    neighbors ascending.
    """
    t = validate_token(a, g.order)
    members = set(t)
    for x in t:
        for u in g.neighbors(x):
            if u not in members:
                yield tuple(sorted(members - {x} | {u}))


def complement_vertex(a: Sequence[int], n: int) -> TokenVertex:
    """The complement subset {0..n-1} - a; an involution."""
    t = validate_token(a, n)
    members = set(t)
    return tuple(x for x in range(n) if x not in members)


@dataclass(frozen=True)
class TokenGraph:
    """Materialized k-token graph: base graph, k, and adjacency over colex ranks."""

    base: Graph
    k: int
    graph: Graph

    @cached_property
    def vertices(self) -> tuple[TokenVertex, ...]:
        n = self.base.order
        return tuple(unrank(r, n, self.k) for r in range(self.graph.order))

    def vertex(self, r: int) -> TokenVertex:
        return self.vertices[r]

    def rank_of(self, a: Sequence[int]) -> int:
        return rank(a, self.base.order)


def token_graph(g: Graph, k: int, cap: int | None = None) -> TokenGraph:
    """Materialize the k-token graph of g with vertices in colex order.

    Raises CapExceeded when C(order, k) exceeds the cap; use token_neighbors
    for streaming adjacency in that regime.
    """
    n = g.order
    if k < 1 or k > n - 1:
        raise ParameterError(f"k must satisfy 1 <= k <= order-1, got k={k}, order={n}")
    count = comb(n, k)
    limit = materialization_cap(cap)
    if count > limit:
        raise CapExceeded(
            f"C({n},{k}) = {count} exceeds the materialization cap {limit}; "
            "use token_neighbors for streaming verification"
        )
    rows: list[tuple[int, ...]] = []
    for r in range(count):
        a = unrank(r, n, k)
        rows.append(tuple(sorted(rank(b, n) for b in token_neighbors(g, a))))
    return TokenGraph(base=g, k=k, graph=Graph(count, tuple(rows)))


def format_token(a: Sequence[int], fan: tuple[int, int] | None = None) -> str:
    """Render a token vertex, with v/w names when a fan (m, n) context is given."""
    if fan is None:
        return "{" + ",".join(str(x) for x in a) + "}"
    m, n = fan
    names = []
    for x in a:
        names.append(f"v{x + 1}" if x < n else f"w{x - n + 1}")
    return "{" + ",".join(names) + "}"
