from itertools import combinations
from math import comb

import pytest

from tokenham import (
    ContractViolation,
    HAMILTONIAN,
    NOT_HAMILTONIAN,
    UNKNOWN,
    ParameterError,
    brute_ham_cycle,
    complete_graph,
    cycle_graph,
    double_cycle,
    double_cycle_m1,
    double_cycle_max,
    double_cycle_mid,
    empty_graph,
    fan_cycle,
    fan_feasibility,
    fan_graph,
    hub_pair_owner,
    join,
    join_cycle,
    normalize_certificate,
    path_graph,
    single_hub_cycle,
    star_double_cycle,
    token_graph,
    verify_cycle,
    witness_over,
)
from tokenham.fan_ham import hub_mod


def _assert_verified(cert, m, n, k):
    verdict = verify_cycle(fan_graph(m, n), k, cert)
    assert verdict.ok, verdict
    assert len(cert.cycle) == comb(m + n, k)


# ---------------------------------------------------------------------------
# k = 2, one hub


def test_m1_n2_triangle():
    cert = double_cycle_m1(2)
    assert cert.cycle == ((0, 1), (0, 2), (1, 2))


def test_m1_n3_exact_sequence():
    # executes the ladder recipe by hand: v1v3, v1v2, v1w1, v2w1, v2v3, v3w1
    cert = double_cycle_m1(3)
    assert cert.cycle == ((0, 2), (0, 1), (0, 3), (1, 3), (1, 2), (2, 3))


@pytest.mark.parametrize("n", range(2, 9))
def test_m1_range_verified_with_marker(n):
    cert = double_cycle_m1(n)
    _assert_verified(cert, 1, n, 2)
    assert cert.marker is not None


def test_m1_rejects_n1():
    with pytest.raises(ParameterError):
        double_cycle_m1(1)


# ---------------------------------------------------------------------------
# k = 2, m = 2n


@pytest.mark.parametrize("n", range(2, 6))
def test_max_verified(n):
    cert = double_cycle_max(n)
    _assert_verified(cert, 2 * n, n, 2)


def test_max_n2_length():
    assert len(double_cycle_max(2).cycle) == 15


def test_max_last_ladder_ends_at_w1_w2n():
    # the closing vertex pairs the first hub with the last one, adjacent to
    # the opening vertex {v_n, w_1}
    for n in (2, 3, 4):
        cert = double_cycle_max(n)
        m = 2 * n
        assert cert.cycle[-1] == (n, n + m - 1)  # {w_1, w_2n}
        assert cert.cycle[0] == (n - 1, n)  # {v_n, w_1}


def test_hub_pair_owner_total_and_unique():
    for n in range(2, 6):
        m = 2 * n
        for i, j in combinations(range(1, m + 1), 2):
            t = hub_pair_owner(i, j, n)
            assert 1 <= t <= m
            # the owner is one of the two hubs, except pairs with w_1 which
            # always live on the other hub's ladder
            assert t in (i, j)


def test_hub_pair_owner_matches_construction():
    for n in (2, 3):
        m = 2 * n
        cert = double_cycle_max(n)
        # split the cycle back into ladders: the first block is the opened
        # one-hub cycle of length C(n+1,2); each following ladder has 2n pairs
        blocks = [list(cert.cycle[: comb(n + 1, 2)])]
        rest = list(cert.cycle[comb(n + 1, 2) :])
        for i in range(2, m + 1):
            blocks.append(rest[: 2 * n])
            rest = rest[2 * n :]
        assert not rest
        for i, j in combinations(range(1, m + 1), 2):
            owner = hub_pair_owner(i, j, n)
            pair = tuple(sorted((n + i - 1, n + j - 1)))
            holders = [t for t, block in enumerate(blocks, start=1) if pair in block]
            assert holders == [owner]


def test_hub_mod_convention():
    assert hub_mod(4, 4) == 4
    assert hub_mod(5, 4) == 1
    assert hub_mod(8, 4) == 4


# ---------------------------------------------------------------------------
# k = 2, 1 < m < 2n


@pytest.mark.parametrize("m,n", [(2, 2), (3, 2), (2, 3), (4, 3), (5, 3), (3, 4), (7, 4)])
def test_mid_verified(m, n):
    cert = double_cycle_mid(m, n)
    _assert_verified(cert, m, n, 2)


def test_mid_lengths():
    assert len(double_cycle_mid(2, 2).cycle) == comb(4, 2)
    assert len(double_cycle_mid(3, 2).cycle) == comb(5, 2)


def test_mid_trimmed_ladders_keep_endpoints():
    # interior ladders keep their endpoints; the last one ends at {w_m, w_1}
    for m, n in [(3, 3), (4, 3), (5, 4)]:
        cert = double_cycle_mid(m, n)
        full = double_cycle_max(n)
        start = comb(n + 1, 2)
        mid_blocks = []
        rest = list(cert.cycle[start:])
        full_blocks = []
        full_rest = list(full.cycle[start:])
        for i in range(2, m + 1):
            size = 2 * n - sum(
                1
                for pair in full_rest[: 2 * n]
                if all(x >= n for x in pair) and any(x - n + 1 > m for x in pair)
            )
            mid_blocks.append(rest[:size])
            rest = rest[size:]
            full_blocks.append(full_rest[: 2 * n])
            full_rest = full_rest[2 * n :]
        assert not rest
        for idx, (trimmed, original) in enumerate(zip(mid_blocks, full_blocks), start=2):
            assert trimmed[0] == original[0]
            if idx < m:
                assert trimmed[-1] == original[-1]
            else:
                assert trimmed[-1] == (n, n + m - 1)  # {w_1, w_m}


# ---------------------------------------------------------------------------
# n = 1 and the witness regime


def test_star_cycle_exact():
    cert = star_double_cycle()
    assert cert.cycle == ((0, 1), (1, 2), (0, 2), (2, 3), (0, 3), (1, 3))
    assert len(set(cert.cycle)) == 6
    assert brute_ham_cycle(token_graph(fan_graph(3, 1), 2).graph).found


def test_witness_5_2():
    w = witness_over(5, 2)
    assert w.cut_size == 10
    assert w.component_count == 11


def test_witness_7_3():
    w = witness_over(7, 3)
    assert w.cut_size == 21
    assert w.component_count == comb(7, 2) + 1 == 22


def test_witness_excludes_stars():
    with pytest.raises(ParameterError):
        witness_over(3, 1)


# ---------------------------------------------------------------------------
# the k = 2 dispatcher


@pytest.mark.parametrize(
    "m,n,status",
    [
        (1, 2, HAMILTONIAN),
        (5, 2, NOT_HAMILTONIAN),
        (3, 1, HAMILTONIAN),
        (1, 1, NOT_HAMILTONIAN),
        (2, 1, NOT_HAMILTONIAN),
        (4, 1, NOT_HAMILTONIAN),
    ],
)
def test_dispatcher_verdicts(m, n, status):
    feas = double_cycle(m, n)
    assert feas.status == status
    if status == HAMILTONIAN:
        assert verify_cycle(fan_graph(m, n), 2, feas.certificate).ok
    elif feas.witness is not None:
        assert feas.witness.component_count > feas.witness.cut_size


def test_dispatcher_star_witness_counts():
    feas = double_cycle(4, 1)
    assert feas.witness.cut_size == 4
    assert feas.witness.component_count == comb(4, 2)


def test_feasibility_boundary_matches_brute_force():
    # exact verdict agreement wherever exhaustive search is cheap
    for n in range(1, 5):
        for m in range(1, 9):
            if comb(m + n, 2) > 30 or comb(m + n, 2) < 3:
                continue
            feas = double_cycle(m, n)
            found = brute_ham_cycle(token_graph(fan_graph(m, n), 2).graph).found
            assert found == (feas.status == HAMILTONIAN), (m, n)


# ---------------------------------------------------------------------------
# general k: one hub


def test_single_hub_routing_to_k2():
    assert single_hub_cycle(3, 2).cycle == double_cycle_m1(3).cycle


@pytest.mark.parametrize("n,k", [(4, 3), (5, 3), (5, 4), (6, 3), (6, 5), (7, 4)])
def test_single_hub_verified(n, k):
    cert = single_hub_cycle(n, k)
    _assert_verified(cert, 1, n, k)
    assert cert.marker is not None


def test_single_hub_lengths():
    assert len(single_hub_cycle(4, 3).cycle) == 10  # odd parity branch
    assert len(single_hub_cycle(5, 3).cycle) == 20  # even parity branch


def test_single_hub_max_position_blocks_partition():
    # grouping the k-subsets by largest member (hub counted lowest) splits
    # the vertex set into the blocks the construction walks through
    n, k = 6, 3
    cert = single_hub_cycle(n, k)

    def position(x):  # hub id n plays position 0, path id i plays i+1
        return 0 if x == n else x + 1

    groups = {}
    for subset in cert.cycle:
        top = max(position(x) for x in subset)
        groups.setdefault(top, set()).add(subset)
    assert sum(len(g) for g in groups.values()) == comb(n + 1, k)
    assert set(groups) == set(range(k - 1, n + 1))
    for top, members in groups.items():
        assert len(members) == comb(top, k - 1)


def test_single_hub_parameter_errors():
    with pytest.raises(ParameterError):
        single_hub_cycle(3, 3)
    with pytest.raises(ParameterError):
        single_hub_cycle(2, 2)


# ---------------------------------------------------------------------------
# general k: many hubs


@pytest.mark.parametrize("m,n,k", [(2, 3, 3), (4, 4, 3), (2, 4, 4), (3, 3, 3), (6, 3, 3)])
def test_fan_cycle_verified(m, n, k):
    cert = fan_cycle(m, n, k)
    _assert_verified(cert, m, n, k)
    assert cert.marker is not None


def test_fan_cycle_lengths():
    assert len(fan_cycle(2, 3, 3).cycle) == 10
    assert len(fan_cycle(4, 4, 3).cycle) == 56


def test_fan_cycle_k2_routing():
    assert fan_cycle(1, 5, 2).cycle == double_cycle_m1(5).cycle


def test_fan_cycle_k_equals_n_boundary():
    # forces the complement step at the bottom of the hub recursion
    cert = fan_cycle(2, 3, 3)
    _assert_verified(cert, 2, 3, 3)
    cert = fan_cycle(1, 4, 4)
    _assert_verified(cert, 1, 4, 4)


def test_fan_cycle_marker_subsets():
    for m, n, k in [(2, 3, 3), (3, 4, 3), (1, 5, 3)]:
        cert = fan_cycle(m, n, k)
        p, q = cert.marker
        assert cert.cycle[p] == tuple(sorted([n] + list(range(k - 1))))
        assert cert.cycle[q] == tuple(range(k))
        assert (p + 1) % len(cert.cycle) == q or (q + 1) % len(cert.cycle) == p


def test_fan_cycle_split_sizes():
    # subsets containing w1 vs not: C(n+m-1, k-1) against the rest
    for m, n, k in [(2, 3, 3), (3, 4, 3)]:
        cert = fan_cycle(m, n, k)
        with_w1 = [s for s in cert.cycle if n in s]
        assert len(with_w1) == comb(n + m - 1, k - 1)
        assert len(cert.cycle) == comb(n + m, k)


def test_fan_cycle_parameter_errors():
    with pytest.raises(ParameterError):
        fan_cycle(1, 2, 3)
    with pytest.raises(ParameterError):
        fan_cycle(7, 3, 3)
    with pytest.raises(ParameterError):
        fan_cycle(2, 3, 1)


# ---------------------------------------------------------------------------
# joins


def test_join_cycle_fan_is_join_of_parts():
    cert = join_cycle(empty_graph(1), path_graph(3), [0, 1, 2], 2)
    fan_cert = double_cycle_m1(3)
    # relabel: fan path id t -> join id 1 + t, fan hub -> join id 0
    relabel = {0: 1, 1: 2, 2: 3, 3: 0}
    expected = tuple(tuple(sorted(relabel[x] for x in s)) for s in fan_cert.cycle)
    assert cert.cycle == expected


def test_join_cycle_k3_c4():
    g1, g2 = complete_graph(3), cycle_graph(4)
    cert = join_cycle(g1, g2, [0, 1, 2, 3], 2)
    assert len(cert.cycle) == comb(7, 2)
    assert verify_cycle(join(g1, g2), 2, cert).ok


def test_join_cycle_nonhamiltonian_base():
    # E_4 + P_3 has no Hamiltonian cycle itself, its 3-token graph does
    g1, g2 = empty_graph(4), path_graph(3)
    assert brute_ham_cycle(join(g1, g2)).status == "none"
    cert = join_cycle(g1, g2, [0, 1, 2], 3)
    assert verify_cycle(join(g1, g2), 3, cert).ok


def test_join_cycle_rejects_bad_hpath():
    g1, g2 = empty_graph(2), cycle_graph(4)
    with pytest.raises(ContractViolation) as err:
        join_cycle(g1, g2, [0, 2, 1, 3], 2)
    assert "(0,2)" in str(err.value)
    with pytest.raises(ContractViolation):
        join_cycle(g1, g2, [0, 1, 2], 2)


# ---------------------------------------------------------------------------
# dispatch and normalization


def test_fan_feasibility_routes():
    assert fan_feasibility(1, 3, 2).status == HAMILTONIAN
    assert fan_feasibility(2, 3, 3).status == HAMILTONIAN
    assert fan_feasibility(5, 2, 3).status == UNKNOWN
    assert fan_feasibility(5, 2, 2).status == NOT_HAMILTONIAN
    with pytest.raises(ParameterError):
        fan_feasibility(1, 2, 9)


def test_normalize_marker_to_front():
    for m, n, k in [(1, 4, 2), (2, 3, 3), (4, 2, 2)]:
        cert = fan_cycle(m, n, k)
        norm = normalize_certificate(cert)
        assert norm.marker == (0, 1)
        assert norm.cycle[0] == tuple(sorted([n] + list(range(k - 1))))
        assert norm.cycle[1] == tuple(range(k))
        assert verify_cycle(fan_graph(m, n), k, norm).ok
        assert sorted(norm.cycle) == sorted(cert.cycle)


def test_normalize_without_marker_is_identity():
    cert = star_double_cycle()
    assert normalize_certificate(cert) is cert
