#!/usr/bin/env python3
"""Side-by-side benchmark: numba-compiled search kernels vs the interpreted fallback.

Runs the exhaustive Hamiltonian-cycle search on a handful of token graphs and
checks that both execution paths return identical results.  The compiled path
is what `TOKENHAM_NUMBA` unset (or any value but 0/off/false/no) selects at
import time; here both callables are exercised directly.

Usage: python benchmarks/bench_search.py
"""

import time

from tokenham import (
    complete_bipartite_graph,
    cycle_graph,
    fan_graph,
    star_graph,
    token_graph,
)
from tokenham import _search

BUDGET = 3_000_000

CASES = [
    ("C7^{2}   (refute)", token_graph(cycle_graph(7), 2).graph),
    ("C9^{2}   (refute)", token_graph(cycle_graph(9), 2).graph),
    ("K33^{2}  (refute)", token_graph(complete_bipartite_graph(3, 3), 2).graph),
    ("K13^{2}  (find)", token_graph(star_graph(3), 2).graph),
    ("F15^{3}  (find)", token_graph(fan_graph(1, 5), 3).graph),
    ("F16^{4}  (find)", token_graph(fan_graph(1, 6), 4).graph),
    ("F64^{2}  (find)", token_graph(fan_graph(6, 4), 2).graph),
]


def run(kernel, graph):
    indptr, indices = graph.csr
    t0 = time.perf_counter()
    status, path, expansions = kernel(indptr, indices, True, BUDGET)
    dt = time.perf_counter() - t0
    return (int(status), list(path), int(expansions)), dt


def main():
    if not _search.NUMBA_ENABLED:
        print("numba is disabled (TOKENHAM_NUMBA=0); nothing to compare against")
        return

    print("warming up the JIT (first call compiles)...")
    t0 = time.perf_counter()
    run(_search.ham_search, CASES[0][1])
    print(f"warmup: {time.perf_counter() - t0:.2f}s\n")

    print(f"{'instance':<20} {'verts':>5} {'expansions':>11} {'python (s)':>11} {'numba (s)':>10} {'speedup':>8}")
    print("-" * 72)
    for name, graph in CASES:
        compiled, t_nb = run(_search.ham_search, graph)
        interpreted, t_py = run(_search.ham_search_python, graph)
        assert compiled == interpreted, f"kernel mismatch on {name}"
        speedup = t_py / t_nb if t_nb > 0 else float("inf")
        print(
            f"{name:<20} {graph.order:>5} {compiled[2]:>11} {t_py:>11.3f} {t_nb:>10.4f} {speedup:>7.1f}x"
        )
    print("\nall results identical across both paths")


if __name__ == "__main__":
    main()
