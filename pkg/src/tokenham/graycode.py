"""Gray codes for k-combinations via Hamiltonian cycles of token graphs.

A k-combination of {1..n} is a length-n binary word of weight k (bit i,
counted from the left starting at 1, marks element i).  A closeness relation
says which pairs of combinations may appear consecutively; a listing of all
C(n,k) combinations whose consecutive (and, when cyclic, wraparound) pairs
are close is a (cyclic) Gray code.  Each relation has an underlying base
graph whose k-token graph has exactly the close pairs as edges, so cyclic
Gray codes are Hamiltonian cycles of that token graph and Gray codes are
Hamiltonian paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .certificates import CycleCertificate
from .errors import ParameterError
from .fan_ham import fan_cycle
from .graph_core import (
    Graph,
    complete_graph,
    fan_graph,
    path_graph,
    square_of_path_graph,
)
from .tokens import TokenVertex, token_graph
from .verification import (
    BUDGET_EXHAUSTED,
    DEFAULT_BUDGET,
    FOUND,
    NONE,
    Verdict,
    brute_ham_cycle,
    brute_ham_path,
)

TRANSPOSITION = "transposition"
ADJACENT = "adjacent"
APART2 = "apart2"
GRAPH_INDUCED = "graph"

RELATION_TAGS = (TRANSPOSITION, ADJACENT, APART2, GRAPH_INDUCED)


@dataclass(frozen=True)
class ClosenessRelation:
    """A closeness relation on k-subsets of {1..n}.

    transposition: swap any two elements; adjacent: swap i with i+1;
    apart2: swap i with j where |i-j| <= 2; graph: swaps along the edges of
    an arbitrary base graph of order n.
    """

    tag: str
    n: int
    graph: Graph | None = None

    def __post_init__(self):
        if self.tag not in RELATION_TAGS:
            raise ParameterError(f"unknown relation {self.tag!r}")
        if self.tag == GRAPH_INDUCED:
            if self.graph is None:
                raise ParameterError("graph relation needs a base graph")
            if self.graph.order != self.n:
                raise ParameterError("base graph order does not match n")

    @classmethod
    def transposition(cls, n: int) -> "ClosenessRelation":
        return cls(TRANSPOSITION, n)

    @classmethod
    def adjacent_transposition(cls, n: int) -> "ClosenessRelation":
        return cls(ADJACENT, n)

    @classmethod
    def one_or_two_apart(cls, n: int) -> "ClosenessRelation":
        return cls(APART2, n)

    @classmethod
    def graph_induced(cls, g: Graph) -> "ClosenessRelation":
        return cls(GRAPH_INDUCED, g.order, g)


def closeness_graph(rel: ClosenessRelation) -> Graph:
    """The base graph whose k-token graph realizes the relation.

    transposition gives K_n, adjacent transposition gives P_n, one-or-two
    apart gives P_n with its distance-2 chords, and the graph relation gives
    its own base graph.
    """
    if rel.n < 2:
        raise ParameterError("relation needs n >= 2")
    if rel.tag == TRANSPOSITION:
        return complete_graph(rel.n)
    if rel.tag == ADJACENT:
        return path_graph(rel.n)
    if rel.tag == APART2:
        return square_of_path_graph(rel.n)
    return rel.graph


@dataclass(frozen=True)
class GrayCodeListing:
    """An ordered listing of weight-k binary words claiming a closeness relation."""

    n: int
    k: int
    words: tuple[str, ...]
    cyclic: bool
    relation: str | None = None

    def to_text(self) -> str:
        lines = list(self.words)
        if self.cyclic:
            lines.append("# cyclic")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "relation": self.relation,
            "cyclic": self.cyclic,
            "words": list(self.words),
        }


def _encode(subset: Sequence[int], n: int) -> str:
    members = set(subset)
    return "".join("1" if i in members else "0" for i in range(n))


def code_from_cycle(
    cert: CycleCertificate | Iterable[TokenVertex],
    n: int | None = None,
    cyclic: bool = True,
    relation: str | None = None,
) -> GrayCodeListing:
    """Translate a token-vertex sequence into a binary-word listing.

    Accepts a CycleCertificate (always cyclic) or a bare sequence of subsets
    with an explicit ground-set size.  Ordering is preserved verbatim.
    """
    if isinstance(cert, CycleCertificate):
        subsets = list(cert.cycle)
        n = cert.base_order
        k = cert.k
        cyclic = True
    else:
        if n is None:
            raise ParameterError("ground-set size n is required for a bare sequence")
        subsets = [tuple(s) for s in cert]
        if not subsets:
            raise ParameterError("empty listing")
        k = len(subsets[0])
    words = tuple(_encode(s, n) for s in subsets)
    return GrayCodeListing(n=n, k=k, words=words, cyclic=cyclic, relation=relation)


def verify_code(listing: GrayCodeListing, rel: ClosenessRelation) -> Verdict:
    """Check a listing against a closeness relation.

    Accepts iff all words are distinct weight-k words of length n, the count
    is C(n,k), and every consecutive pair (plus the wraparound pair when
    cyclic) differs in exactly two positions that are adjacent in the base
    graph of the relation.
    """
    if rel.n != listing.n:
        return Verdict(False, reason="malformed", detail="relation and listing disagree on n")
    base = closeness_graph(rel)
    n, k = listing.n, listing.k
    for i, w in enumerate(listing.words):
        if len(w) != n or any(c not in "01" for c in w):
            return Verdict(False, reason="malformed", index=i, detail=f"bad word {w!r}")
        if w.count("1") != k:
            return Verdict(False, reason="malformed", index=i, detail=f"word weight != {k}")
    if len(listing.words) != comb(n, k):
        return Verdict(
            False,
            reason="wrong_length",
            detail=f"expected {comb(n, k)} words, got {len(listing.words)}",
        )
    seen = set()
    for i, w in enumerate(listing.words):
        if w in seen:
            return Verdict(False, reason="duplicate", index=i, detail=f"word {w} repeats")
        seen.add(w)
    total = len(listing.words)
    last = total if listing.cyclic else total - 1
    for i in range(last):
        a, b = listing.words[i], listing.words[(i + 1) % total]
        diff = [pos for pos in range(n) if a[pos] != b[pos]]
        if len(diff) != 2 or not base.has_edge(diff[0], diff[1]):
            return Verdict(
                False,
                reason="not_close",
                index=i,
                detail=f"step {a} -> {b} is not a close pair",
            )
    return Verdict(True)


def fan_gray_code(m: int, n: int, k: int) -> GrayCodeListing:
    """Cyclic Gray code for k-subsets of [n+m] closed under fan-graph swaps.

    Purely constructive (no search): the fan certificate is translated word
    for word.
    """
    cert = fan_cycle(m, n, k)
    return code_from_cycle(cert, relation=GRAPH_INDUCED)


def search_gray_code(
    rel: ClosenessRelation, k: int, budget: int = DEFAULT_BUDGET, cap: int | None = None
) -> tuple[str, GrayCodeListing | None]:
    """Brute-force a Gray code for a relation: cyclic first, then open.

    Returns (status, listing) with status found/none/budget_exhausted; the
    listing is cyclic when a Hamiltonian cycle of the token graph exists,
    open when only a Hamiltonian path does.
    """
    base = closeness_graph(rel)
    tg = token_graph(base, k, cap=cap)
    subsets = tg.vertices
    exhausted = False
    if tg.graph.order >= 3:
        result = brute_ham_cycle(tg.graph, budget=budget)
        if result.found:
            listing = code_from_cycle(
                [subsets[r] for r in result.sequence], n=rel.n, cyclic=True, relation=rel.tag
            )
            return FOUND, listing
        exhausted = exhausted or result.status == BUDGET_EXHAUSTED
    result = brute_ham_path(tg.graph, budget=budget)
    if result.found:
        listing = code_from_cycle(
            [subsets[r] for r in result.sequence], n=rel.n, cyclic=False, relation=rel.tag
        )
        return FOUND, listing
    if exhausted or result.status == BUDGET_EXHAUSTED:
        return BUDGET_EXHAUSTED, None
    return NONE, None


def fan_relation(m: int, n: int) -> ClosenessRelation:
    """The relation induced by swaps along the fan F_{m,n}."""
    return ClosenessRelation.graph_induced(fan_graph(m, n))
