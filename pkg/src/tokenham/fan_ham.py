"""Constructive Hamiltonicity for token graphs of fans and joins.

All constructions work over the canonical fan labeling (path ids 0..n-1,
hub ids n..n+m-1) and emit CycleCertificate values whose marker edge joins
{w1, v1..v[k-1]} and {v1..vk}; that edge is what lets certificates compose
recursively.  Every constructor verifies its own output through
verification.verify_cycle before returning and aborts loudly otherwise.

For k = 2 the feasibility boundary is decided exactly: a certificate is
produced whenever n >= 2 and m <= 2n (or the n = 1, m = 3 star), and a
component-count witness or exhaustive refutation is produced otherwise.
"""

from __future__ import annotations

from dataclasses import replace
from typing import Sequence

from .certificates import (
    HAMILTONIAN,
    JOIN,
    NOT_HAMILTONIAN,
    UNKNOWN,
    CycleCertificate,
    FanFeasibility,
    NonHamWitness,
)
from .errors import ConstructionError, ContractViolation, ParameterError
from .graph_core import Graph, fan_graph, join
from .tokens import TokenVertex, token_graph
from . import verification


def hub_mod(x: int, m: int) -> int:
    """Reduce a 1-based hub index modulo m, mapping multiples of m to m itself."""
    return (x - 1) % m + 1


def hub_pair_owner(i: int, j: int, n: int) -> int:
    """Which ladder path owns the hub pair {w_i, w_j} in the m = 2n construction.

    Takes 1 <= i < j <= 2n and returns t such that {w_i, w_j} lies on the
    ladder of hub t.  Every hub pair is owned exactly once.
    """
    m = 2 * n
    if not (1 <= i < j <= m):
        raise ParameterError(f"need 1 <= i < j <= {m}")
    if i == 1:
        return j
    if i <= n:
        return i if j <= i + n - 1 else j
    return i


def _locate_marker(seq: list[TokenVertex], m: int, n: int, k: int) -> tuple[int, int]:
    x = tuple(sorted([n] + list(range(k - 1))))
    y = tuple(range(k))
    try:
        p = seq.index(x)
        q = seq.index(y)
    except ValueError:
        raise ConstructionError(f"marker vertices missing from cycle for (m,n,k)=({m},{n},{k})")
    total = len(seq)
    if (p + 1) % total != q and (q + 1) % total != p:
        raise ConstructionError(f"marker vertices not consecutive for (m,n,k)=({m},{n},{k})")
    return p, q


def _finalize(
    m: int,
    n: int,
    k: int,
    seq: list[TokenVertex],
    with_marker: bool = True,
    base: Graph | None = None,
) -> CycleCertificate:
    marker = _locate_marker(seq, m, n, k) if with_marker else None
    cert = CycleCertificate(m=m, n=n, k=k, cycle=tuple(seq), marker=marker)
    graph = base if base is not None else fan_graph(m, n)
    verdict = verification.verify_cycle(graph, k, cert)
    if not verdict.ok:
        raise ConstructionError(
            f"construction for (m,n,k)=({m},{n},{k}) failed verification: "
            f"{verdict.reason} at {verdict.index} ({verdict.detail})"
        )
    return cert


def _open_at_marker(
    seq: Sequence[TokenVertex], marker: tuple[int, int], start_at_x: bool
) -> list[TokenVertex]:
    """Cut the marker edge out of a cycle, giving the Hamiltonian path X..Y (or Y..X)."""
    p, q = marker
    total = len(seq)
    if (p + 1) % total == q:
        path = [seq[(p - t) % total] for t in range(total)]
    else:
        path = [seq[(p + t) % total] for t in range(total)]
    return path if start_at_x else path[::-1]


# ---------------------------------------------------------------------------
# k = 2: the four regimes


def double_cycle_m1(n: int) -> CycleCertificate:
    """Hamiltonian cycle of the 2-token graph of the one-hub fan F_{1,n}.

    For n >= 3 the pair set splits into ladders T_i = {v_i,w_1}, {v_i,v_i+1},
    ..., {v_i,v_n}; concatenating them with every odd-indexed ladder reversed
    closes into a cycle through the edge ({v_n,w_1}, {v_1,v_n}).
    """
    if n < 2:
        raise ParameterError("double_cycle_m1 needs n >= 2")
    w1 = n
    if n == 2:
        seq = [(0, 1), (0, w1), (1, w1)]
        return _finalize(1, n, 2, seq)
    seq: list[TokenVertex] = []
    for i in range(1, n + 1):
        vi = i - 1
        if i < n:
            block = [tuple(sorted((vi, w1)))]
            block.extend((vi, j - 1) for j in range(i + 1, n + 1))
        else:
            block = [(n - 1, w1)]
        if i % 2 == 1:
            block.reverse()
        seq.extend(block)
    return _finalize(1, n, 2, seq)


def _label_pair(a: tuple[str, int], b: tuple[str, int]) -> frozenset:
    return frozenset((a, b))


def _m1_cycle_labels(n: int) -> list[frozenset]:
    """double_cycle_m1(n) rewritten over ('v', i) / ('w', j) labels."""
    cert = double_cycle_m1(n)

    def lab(x: int) -> tuple[str, int]:
        return ("v", x + 1) if x < n else ("w", 1)

    return [frozenset(lab(x) for x in pair) for pair in cert.cycle]


def _ladder_labels(i: int, n: int) -> list[frozenset]:
    """The pair ladder of hub i in the full 2n-hub construction, over labels.

    Hubs 2..n open with {w_i,v_n}, {w_i,w_1}; hubs n+1..2n open with
    {w_i,v_n}, {w_i,w_(i+n)}.  Both then descend {w_i,v_j}, {w_i,w_(i+j)}
    for j = n-1..1, hub indices reduced modulo 2n into 1..2n.
    """
    m = 2 * n
    wi = ("w", i)
    out = [_label_pair(wi, ("v", n))]
    if i <= n:
        out.append(_label_pair(wi, ("w", 1)))
    else:
        out.append(_label_pair(wi, ("w", hub_mod(i + n, m))))
    for j in range(n - 1, 0, -1):
        out.append(_label_pair(wi, ("v", j)))
        out.append(_label_pair(wi, ("w", hub_mod(i + j, m))))
    return out


def _labels_to_ids(seq: list[frozenset], m: int, n: int) -> list[TokenVertex]:
    def vid(lab: tuple[str, int]) -> int:
        kind, idx = lab
        if kind == "v":
            return idx - 1
        if idx > m:
            raise ConstructionError(f"hub w{idx} does not exist for m={m}")
        return n + idx - 1

    return [tuple(sorted(vid(lab) for lab in pair)) for pair in seq]


def double_cycle_max(n: int) -> CycleCertificate:
    """Hamiltonian cycle of the 2-token graph of F_{2n,n} (the m = 2n boundary).

    The one-hub cycle, opened at ({v_n,w_1}, {v_1,v_n}), becomes the first
    block; each further hub contributes its ladder, and the blocks chain into
    a cycle closing at {v_n,w_1}.
    """
    if n < 2:
        raise ParameterError("double_cycle_max needs n >= 2")
    m = 2 * n
    seq: list[frozenset] = list(reversed(_m1_cycle_labels(n)))
    for i in range(2, m + 1):
        seq.extend(_ladder_labels(i, n))
    return _finalize(m, n, 2, _labels_to_ids(seq, m, n))


def double_cycle_mid(m: int, n: int) -> CycleCertificate:
    """Hamiltonian cycle of the 2-token graph of F_{m,n} for 1 < m < 2n.

    Reuses the first m ladders of the 2n-hub construction, dropping every
    hub pair {w_i, w_j} with j > m.  The last ladder first swaps the
    positions of {w_m, w_(m+1)} and {w_m, w_1} so that, after the drops, it
    ends at {w_m, w_1}, which closes the cycle to {v_n, w_1}.  Every splice
    is re-checked by the final verification pass.
    """
    if not (1 < m < 2 * n):
        raise ParameterError("double_cycle_mid needs 1 < m < 2n")
    if n < 2:
        raise ParameterError("double_cycle_mid needs n >= 2")
    m2 = 2 * n
    seq: list[frozenset] = list(reversed(_m1_cycle_labels(n)))
    for i in range(2, m + 1):
        ladder = _ladder_labels(i, n)
        if i == m:
            a = ladder.index(_label_pair(("w", m), ("w", hub_mod(m + 1, m2))))
            b = ladder.index(_label_pair(("w", m), ("w", 1)))
            ladder[a], ladder[b] = ladder[b], ladder[a]
        kept = []
        for pair in ladder:
            hub_ids = [idx for kind, idx in pair if kind == "w"]
            if any(idx > m for idx in hub_ids):
                continue
            kept.append(pair)
        seq.extend(kept)
    return _finalize(m, n, 2, _labels_to_ids(seq, m, n))


def star_double_cycle() -> CycleCertificate:
    """The 6-cycle through the 2-token graph of the star K_{1,3} (fan F_{3,1}).

    This token graph is a plain 6-cycle; the certificate walks it once.  No
    marker edge exists here because the fan has a single path vertex.
    """
    v1, w1, w2, w3 = 0, 1, 2, 3
    seq = [
        (v1, w1),
        (w1, w2),
        (v1, w2),
        (w2, w3),
        (v1, w3),
        (w1, w3),
    ]
    return _finalize(3, 1, 2, [tuple(sorted(p)) for p in seq], with_marker=False)


def witness_over(m: int, n: int) -> NonHamWitness:
    """Non-Hamiltonicity witness for the 2-token graph of F_{m,n} when m > 2n.

    The cut is every hub-path pair {w_i, v_j} (mn vertices).  Removing it
    isolates all C(m,2) hub pairs and leaves the path pairs as one more
    component, so the component count beats the cut size whenever m > 2n.
    """
    if n < 2 or m <= 2 * n:
        raise ParameterError("witness_over needs n >= 2 and m > 2n")
    cut = tuple((j, n + i) for i in range(m) for j in range(n))
    check = verification.check_witness(fan_graph(m, n), 2, cut)
    if not check.proves:
        raise ConstructionError(f"cut failed to prove non-Hamiltonicity for (m,n)=({m},{n})")
    return NonHamWitness(cut=cut, cut_size=check.cut_size, component_count=check.component_count)


def _star_witness(m: int) -> NonHamWitness:
    # n = 1, m >= 4: cutting the m center-hub pairs isolates all C(m,2) hub
    # pairs, and C(m,2) > m exactly when m >= 4.
    cut = tuple((0, 1 + i) for i in range(m))
    check = verification.check_witness(fan_graph(m, 1), 2, cut)
    if not check.proves:
        raise ConstructionError(f"star cut failed for m={m}")
    return NonHamWitness(cut=cut, cut_size=check.cut_size, component_count=check.component_count)


def double_cycle(m: int, n: int) -> FanFeasibility:
    """Decide Hamiltonicity of the 2-token graph of F_{m,n}, with evidence.

    Produces a verified cycle certificate for n >= 2 with m <= 2n and for the
    (m, n) = (3, 1) star; a component-count witness for m > 2n (and for the
    stars with m >= 4); an exhaustive refutation for the two tiny stars.
    """
    if m < 1 or n < 1:
        raise ParameterError("double_cycle needs m >= 1 and n >= 1")
    if n == 1:
        if m == 3:
            return FanFeasibility(status=HAMILTONIAN, certificate=star_double_cycle())
        if m >= 4:
            return FanFeasibility(status=NOT_HAMILTONIAN, witness=_star_witness(m))
        if m == 1:
            # C(2,2) = 1 token vertex; a cycle needs at least three.
            return FanFeasibility(
                status=NOT_HAMILTONIAN,
                reason="the 2-token graph of F_{1,1} has a single vertex",
            )
        result = verification.brute_ham_cycle(token_graph(fan_graph(m, n), 2).graph)
        if result.found:
            raise ConstructionError("expected F_{2,1} refutation, search found a cycle")
        return FanFeasibility(
            status=NOT_HAMILTONIAN,
            reason="exhaustive search proved the 2-token graph of F_{2,1} has no Hamiltonian cycle",
        )
    if m == 1:
        return FanFeasibility(status=HAMILTONIAN, certificate=double_cycle_m1(n))
    if m == 2 * n:
        return FanFeasibility(status=HAMILTONIAN, certificate=double_cycle_max(n))
    if m < 2 * n:
        return FanFeasibility(status=HAMILTONIAN, certificate=double_cycle_mid(m, n))
    return FanFeasibility(status=NOT_HAMILTONIAN, witness=witness_over(m, n))


# ---------------------------------------------------------------------------
# general k


def single_hub_cycle(n: int, k: int) -> CycleCertificate:
    """Marker-edged Hamiltonian cycle of the k-token graph of F_{1,n}, 2 <= k <= n-1.

    Recursive block construction: treating the hub as position 0 of the
    extended path, the k-subsets split by their largest position into blocks;
    each block with a fixed largest element is a smaller one-hub fan problem
    with k-1 tokens, solved recursively and opened at its marker edge.  A
    hand-built prefix covers the two or three smallest blocks (which prefix
    depends on the parity of n - k), and the opened blocks chain on with
    alternating orientation.
    """
    if n < 3 or k < 2 or k > n - 1:
        raise ParameterError("single_hub_cycle needs n >= 3 and 2 <= k <= n-1")
    if k == 2:
        return double_cycle_m1(n)

    hub = n

    def vid(pos: int) -> int:
        # position 0 is the hub; position i >= 1 is path vertex v_i
        return hub if pos == 0 else pos - 1

    blocks: list[list[TokenVertex]] = []
    if (n - k) % 2 == 1:
        low = [vid(t) for t in range(k + 1)]
        prefix = []
        for j in [k] + list(range(k)):
            prefix.append(tuple(sorted(set(low) - {vid(j)})))
        first = k + 1
    else:
        positions = list(range(k + 2))

        def a(i: int, j: int) -> TokenVertex:
            return tuple(sorted(vid(t) for t in positions if t != i and t != j))

        ring = [a(1, k), a(1, k + 1), a(1, 0)]
        ring.extend(a(1, x) for x in range(k - 1, 1, -1))
        for t in range(2, k):
            ring.append(a(t, 0))
            ring.append(a(t, k + 1))
            ring.extend(a(t, x) for x in range(k, t, -1))
        ring.append(a(k, 0))
        opened = [ring[-1]] + ring[:-1]
        prefix = [a(k, k + 1), a(0, k + 1)] + opened
        first = k + 2
    blocks.append(prefix)

    for i in range(first, n + 1):
        sub = single_hub_cycle(i - 1, k - 1)
        token = i - 1  # id of path vertex v_i, fixed throughout this block
        mapped = [
            tuple(sorted([t if t < i - 1 else hub for t in s] + [token])) for s in sub.cycle
        ]
        forward = (i - first) % 2 == 0
        blocks.append(_open_at_marker(mapped, sub.marker, start_at_x=forward))

    seq = [v for block in blocks for v in block]
    return _finalize(1, n, k, seq)


def _complement_boundary_cycle(n: int) -> CycleCertificate:
    """The k = n boundary for one hub: complement the fan's own Hamiltonian cycle.

    F_{1,n} itself has the Hamiltonian cycle w1 v1 ... vn; replacing each
    vertex x by the complement set V - {x} yields a Hamiltonian cycle of the
    n-token graph, and the (vn, w1) edge maps exactly onto the marker edge.
    """
    everything = set(range(n + 1))
    ring = [n] + list(range(n))
    seq = [tuple(sorted(everything - {x})) for x in ring]
    return _finalize(1, n, n, seq)


def fan_cycle(m: int, n: int, k: int) -> CycleCertificate:
    """Marker-edged Hamiltonian cycle of the k-token graph of F_{m,n}.

    Requires k >= 2, n >= k and 1 <= m <= 2n.  For k = 2 this is the exact
    boundary construction; for one hub it is the recursive block build (or
    its k = n complement variant).  Otherwise the vertex set splits on
    membership of w1: the subsets containing w1 form a copy of the
    (m-1)-hub problem with k-1 tokens, the rest a copy with k tokens.  Both
    sub-cycles are opened at their marker edges and stitched across the two
    cross edges between the opened endpoints.
    """
    if k < 2:
        raise ParameterError("fan_cycle needs k >= 2")
    if n < k:
        raise ParameterError("fan_cycle needs n >= k")
    if not 1 <= m <= 2 * n:
        raise ParameterError("fan_cycle needs 1 <= m <= 2n")
    if k == 2:
        feasibility = double_cycle(m, n)
        if feasibility.certificate is None:
            raise ConstructionError(f"no k=2 certificate for (m,n)=({m},{n})")
        return feasibility.certificate
    if m == 1:
        if k <= n - 1:
            return single_hub_cycle(n, k)
        return _complement_boundary_cycle(n)

    sub1 = fan_cycle(m - 1, n, k - 1)
    sub2 = fan_cycle(m - 1, n, k)

    def embed(x: int) -> int:
        # reopen id slot n for w1: sub-fan hubs shift up by one
        return x if x < n else x + 1

    with_w1 = [tuple(sorted([embed(x) for x in s] + [n])) for s in sub1.cycle]
    without_w1 = [tuple(sorted(embed(x) for x in s)) for s in sub2.cycle]
    p1 = _open_at_marker(with_w1, sub1.marker, start_at_x=True)
    p2 = _open_at_marker(without_w1, sub2.marker, start_at_x=False)
    return _finalize(m, n, k, p1 + p2)


def join_cycle(g1: Graph, g2: Graph, hpath: Sequence[int], k: int) -> CycleCertificate:
    """Hamiltonian cycle of the k-token graph of g1 + g2, given a Hamiltonian path of g2.

    The path vertices of g2 play v1..vn and the vertices of g1 play the hubs,
    so the fan construction transfers along the relabeling: the fan is a
    spanning subgraph of the join.  Requires k >= 2, |g2| >= k and
    |g1| <= 2|g2|.  The resulting certificate carries no marker because the
    join labeling is not fan-canonical.
    """
    m, n = g1.order, g2.order
    path = list(hpath)
    if sorted(path) != list(range(n)):
        raise ContractViolation("hpath must visit every vertex of g2 exactly once")
    for i in range(n - 1):
        if not g2.has_edge(path[i], path[i + 1]):
            raise ContractViolation(f"hpath step ({path[i]},{path[i + 1]}) is not an edge of g2")
    if k < 2 or n < k or not 1 <= m <= 2 * n:
        raise ParameterError("join_cycle needs k >= 2, |g2| >= k and 1 <= |g1| <= 2|g2|")
    cert = fan_cycle(m, n, k)
    joined = join(g1, g2)

    def relabel(x: int) -> int:
        return m + path[x] if x < n else x - n

    seq = [tuple(sorted(relabel(x) for x in s)) for s in cert.cycle]
    out = CycleCertificate(m=m, n=n, k=k, cycle=tuple(seq), marker=None, labeling=JOIN)
    verdict = verification.verify_cycle(joined, k, out)
    if not verdict.ok:
        raise ConstructionError(
            f"join certificate failed verification: {verdict.reason} at {verdict.index}"
        )
    return out


# ---------------------------------------------------------------------------
# dispatch and normalization


def fan_feasibility(m: int, n: int, k: int) -> FanFeasibility:
    """Full dispatcher over (m, n, k): certificate, witness, or unknown.

    k = 2 is decided exactly.  For k > 2 a certificate is produced whenever
    n >= k and m <= 2n; outside that range no claim is made either way.
    """
    if m < 1 or n < 1:
        raise ParameterError("need m >= 1 and n >= 1")
    if k < 2 or k > m + n - 1:
        raise ParameterError(f"k must satisfy 2 <= k <= m+n-1, got {k}")
    if k == 2:
        return double_cycle(m, n)
    if n >= k and m <= 2 * n:
        return FanFeasibility(status=HAMILTONIAN, certificate=fan_cycle(m, n, k))
    return FanFeasibility(
        status=UNKNOWN,
        reason=f"(m,n,k)=({m},{n},{k}) lies outside the constructive range (need n >= k and m <= 2n)",
    )


def normalize_certificate(cert: CycleCertificate) -> CycleCertificate:
    """Rotate (and reflect if needed) so the marker pair sits at positions 0 and 1."""
    if cert.marker is None:
        return cert
    p, q = cert.marker
    total = len(cert.cycle)
    step = 1 if (p + 1) % total == q else -1
    cycle = tuple(cert.cycle[(p + step * t) % total] for t in range(total))
    return replace(cert, cycle=cycle, marker=(0, 1))
