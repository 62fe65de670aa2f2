"""Independent oracles: certificate checking, exhaustive search, witness and isomorphism checks.

Everything here is deliberately separate from the constructive machinery so
that constructions can be tested against it.  verify_cycle never materializes
the token graph; the brute-force searches and witness checks do (within the
configured cap).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from . import _search
from .certificates import FAN_CANONICAL, CycleCertificate
from .errors import ParameterError
from .graph_core import Graph, connected_components
from .tokens import (
    complement_vertex,
    materialization_cap,
    rank,
    token_graph,
    validate_token,
)

DEFAULT_BUDGET = 50_000_000

FOUND = "found"
NONE = "none"
BUDGET_EXHAUSTED = "budget_exhausted"

_STATUS_NAMES = {
    _search.STATUS_NONE: NONE,
    _search.STATUS_FOUND: FOUND,
    _search.STATUS_BUDGET: BUDGET_EXHAUSTED,
}


@dataclass(frozen=True)
class Verdict:
    """Accept/reject outcome with a machine-readable reason code."""

    ok: bool
    reason: str | None = None
    index: int | None = None
    detail: str | None = None

    def to_json(self) -> str:
        return json.dumps(
            {"ok": self.ok, "reason": self.reason, "index": self.index, "detail": self.detail}
        ) + "\n"


def _reject(reason: str, index: int | None = None, detail: str | None = None) -> Verdict:
    return Verdict(False, reason=reason, index=index, detail=detail)


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an exhaustive Hamiltonian search."""

    status: str
    sequence: tuple[int, ...] | None
    expansions: int

    @property
    def found(self) -> bool:
        return self.status == FOUND


@dataclass(frozen=True)
class WitnessCheck:
    cut_size: int
    component_count: int
    proves: bool


def verify_cycle(g: Graph, k: int, cert: CycleCertificate) -> Verdict:
    """Check a claimed Hamiltonian cycle of g's k-token graph.

    Accepts iff the sequence has length C(order, k), all entries are distinct
    valid k-subsets, every cyclically consecutive pair is token-adjacent, and
    the marker (if claimed) sits on cyclically consecutive positions holding
    {w1, v1..v[k-1]} and {v1..vk} under the fan-canonical labeling.
    Structured rejection, never an exception, on malformed input.
    """
    n = g.order
    if cert.base_order != n:
        return _reject("malformed", detail=f"certificate order {cert.base_order} != graph order {n}")
    seq = cert.cycle
    expected = comb(n, k)
    if len(seq) != expected:
        return _reject("wrong_length", detail=f"expected {expected} vertices, got {len(seq)}")
    for i, a in enumerate(seq):
        if len(a) != k:
            return _reject("malformed", index=i, detail=f"entry has {len(a)} members, expected {k}")
        if any(not 0 <= x < n for x in a):
            return _reject("malformed", index=i, detail="member out of range")
        if any(a[j] >= a[j + 1] for j in range(k - 1)):
            return _reject("malformed", index=i, detail="members not strictly increasing")
    seen = set()
    for i, a in enumerate(seq):
        r = rank(a, n)
        if r in seen:
            return _reject("duplicate", index=i, detail=f"vertex {a} repeats")
        seen.add(r)
    total = len(seq)
    for i in range(total):
        a, b = seq[i], seq[(i + 1) % total]
        diff = set(a) ^ set(b)
        if len(diff) != 2:
            return _reject("non_edge_at", index=i, detail=f"{a} and {b} differ in {len(diff)} members")
        u, v = diff
        if not g.has_edge(u, v):
            return _reject("non_edge_at", index=i, detail=f"({u},{v}) is not a base edge")
    if cert.marker is not None:
        p, q = cert.marker
        if not (0 <= p < total and 0 <= q < total):
            return _reject("marker_mismatch", detail="marker positions out of range")
        if (p + 1) % total != q and (q + 1) % total != p:
            return _reject("marker_mismatch", detail="marker positions not cyclically consecutive")
        if cert.labeling == FAN_CANONICAL:
            x = tuple(sorted([cert.n] + list(range(k - 1))))
            y = tuple(range(k))
            if seq[p] != x or seq[q] != y:
                return _reject(
                    "marker_mismatch",
                    detail=f"expected {x} and {y} at positions {p},{q}",
                )
    return Verdict(True)


def _run_search(g: Graph, want_cycle: bool, budget: int) -> SearchResult:
    if budget < 1:
        raise ParameterError("budget must be positive")
    indptr, indices = g.csr
    status, path, expansions = _search.ham_search(indptr, indices, want_cycle, budget)
    name = _STATUS_NAMES[int(status)]
    seq = tuple(int(x) for x in path) if name == FOUND else None
    return SearchResult(status=name, sequence=seq, expansions=int(expansions))


def brute_ham_cycle(g: Graph, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Exact Hamiltonian-cycle search; distinguishes `none` from budget exhaustion.

    Deterministic exploration (rooted at vertex 0, neighbors in ascending
    order) with degree and connectivity pruning, so `none` is a proof.
    """
    if g.order < 3:
        raise ParameterError("cycle search needs order >= 3")
    return _run_search(g, True, budget)


def brute_ham_path(g: Graph, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Exact Hamiltonian-path search; same contract as brute_ham_cycle."""
    if g.order < 1:
        raise ParameterError("path search needs order >= 1")
    return _run_search(g, False, budget)


def check_witness(
    g: Graph, k: int, cut: Iterable[Sequence[int]], cap: int | None = None
) -> WitnessCheck:
    """Delete a token-vertex cut and count leftover components exactly.

    proves is True iff component_count > |cut|, which certifies the k-token
    graph of g is not Hamiltonian.
    """
    cut_ranks = set()
    for a in cut:
        t = validate_token(a, g.order, k=k)
        cut_ranks.add(rank(t, g.order))
    if not cut_ranks:
        raise ParameterError("cut must be nonempty")
    tg = token_graph(g, k, cap=materialization_cap(cap))
    count, _ = connected_components(tg.graph, removed=cut_ranks)
    return WitnessCheck(cut_size=len(cut_ranks), component_count=count, proves=count > len(cut_ranks))


def check_complement_iso(g: Graph, k: int, cap: int | None = None) -> bool:
    """True iff subset complementation maps g's k-token graph onto its (n-k)-token graph."""
    n = g.order
    t1 = token_graph(g, k, cap=cap)
    t2 = token_graph(g, n - k, cap=cap)
    if t1.graph.edge_count != t2.graph.edge_count:
        return False
    image = [rank(complement_vertex(t1.vertex(r), n), n) for r in range(t1.graph.order)]
    for u, v in t1.graph.edges:
        if not t2.graph.has_edge(image[u], image[v]):
            return False
    return True


def numba_enabled() -> bool:
    """Whether the compiled search kernels are active (TOKENHAM_NUMBA controls this)."""
    return _search.NUMBA_ENABLED
