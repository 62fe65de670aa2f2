"""Hot search kernels: exhaustive Hamiltonian search and component counting.

Both kernels are written once, in plain array code, and compiled with numba
when it is available.  Setting the environment variable ``TOKENHAM_NUMBA=0``
(before import) selects the interpreted fallback; the two paths run the same
code and produce bit-identical results.  ``benchmarks/bench_search.py``
compares their speed.
"""

from __future__ import annotations

import os

import numpy as np

STATUS_NONE = 0
STATUS_FOUND = 1
STATUS_BUDGET = 2


def _ham_search_impl(indptr, indices, want_cycle, budget):
    # Exhaustive backtracking over a CSR adjacency structure.
    #
    # Exploration order is fixed: cycles are rooted at vertex 0, paths try
    # every start vertex in ascending order, and neighbors are scanned in
    # ascending id order.  Three sound prunes run at every extension; all
    # rest on the fact that the remaining walk must cover every unvisited
    # vertex consecutively before (for cycles) closing at the root:
    #   * degree: an unvisited vertex needs two usable neighbors for a
    #     cycle (unvisited, the endpoint, or the root); for a path, no
    #     unvisited vertex may be isolated and at most one may have a
    #     single usable neighbor;
    #   * forced edges (cycles only): an unvisited vertex with exactly two
    #     usable neighbors uses both incident edges, so any vertex
    #     collecting three forced edges, or the endpoint/root collecting
    #     two, is a contradiction; a path endpoint needs only one edge, so
    #     this rule must not run in path mode;
    #   * connectivity: the subgraph induced by the unvisited vertices
    #     alone must be connected;
    #   * root door (cycles): the root must keep an unvisited neighbor to
    #     receive the closing edge.
    # Returns (status, vertex sequence, expansions); the sequence is only
    # meaningful when status == STATUS_FOUND.  An expansion is one vertex
    # pushed onto the partial path.
    n = indptr.shape[0] - 1
    path = np.full(n, -1, np.int64)
    ptr = np.zeros(n, np.int64)
    visited = np.zeros(n, np.uint8)
    queue = np.zeros(n, np.int64)
    inq = np.zeros(n, np.uint8)
    forced = np.zeros(n, np.int64)
    expansions = 0

    n_starts = 1 if want_cycle else n
    for s in range(n_starts):
        for i in range(n):
            visited[i] = 0
        path[0] = s
        visited[s] = 1
        ptr[0] = indptr[s]
        expansions += 1
        depth = 0
        while depth >= 0:
            if depth == n - 1:
                closed = True
                if want_cycle:
                    # binary search for the root in the endpoint's row
                    closed = False
                    lo = indptr[path[depth]]
                    hi = indptr[path[depth] + 1]
                    while lo < hi:
                        mid = (lo + hi) // 2
                        if indices[mid] < s:
                            lo = mid + 1
                        elif indices[mid] > s:
                            hi = mid
                        else:
                            closed = True
                            break
                if closed:
                    return STATUS_FOUND, path.copy(), expansions
                visited[path[depth]] = 0
                depth -= 1
                continue
            cur = path[depth]
            advanced = False
            while ptr[depth] < indptr[cur + 1]:
                u = indices[ptr[depth]]
                ptr[depth] += 1
                if visited[u] == 1:
                    continue
                visited[u] = 1
                feasible = True

                singles = 0
                if want_cycle:
                    for i in range(n):
                        forced[i] = 0
                for x in range(n):
                    if visited[x] == 1:
                        continue
                    cnt = 0
                    for t in range(indptr[x], indptr[x + 1]):
                        y = indices[t]
                        if visited[y] == 0 or y == u or (want_cycle and y == s):
                            cnt += 1
                    if want_cycle:
                        if cnt < 2:
                            feasible = False
                            break
                        if cnt == 2:
                            for t in range(indptr[x], indptr[x + 1]):
                                y = indices[t]
                                if visited[y] == 0 or y == u or y == s:
                                    forced[y] += 1
                    else:
                        if cnt == 0:
                            feasible = False
                            break
                        if cnt == 1:
                            singles += 1
                            if singles > 1:
                                feasible = False
                                break
                if feasible and want_cycle:
                    for x in range(n):
                        limit = 2
                        if x == u or x == s:
                            limit = 1
                        elif visited[x] == 1:
                            continue
                        if forced[x] > limit:
                            feasible = False
                            break

                remaining = n - depth - 2
                if feasible and remaining > 0:
                    first = -1
                    for i in range(n):
                        if visited[i] == 0:
                            first = i
                            break
                    for i in range(n):
                        inq[i] = 0
                    queue[0] = first
                    inq[first] = 1
                    head = 0
                    tail = 1
                    reached = 1
                    while head < tail:
                        x = queue[head]
                        head += 1
                        for t in range(indptr[x], indptr[x + 1]):
                            y = indices[t]
                            if inq[y] == 0 and visited[y] == 0:
                                inq[y] = 1
                                queue[tail] = y
                                tail += 1
                                reached += 1
                    if reached != remaining:
                        feasible = False
                    if feasible and want_cycle:
                        door = False
                        for t in range(indptr[s], indptr[s + 1]):
                            if visited[indices[t]] == 0:
                                door = True
                                break
                        if not door:
                            feasible = False

                if feasible:
                    if expansions >= budget:
                        return STATUS_BUDGET, path.copy(), expansions
                    depth += 1
                    path[depth] = u
                    ptr[depth] = indptr[u]
                    expansions += 1
                    advanced = True
                    break
                visited[u] = 0
            if not advanced:
                visited[cur] = 0
                depth -= 1
    return STATUS_NONE, path, expansions


def _components_impl(indptr, indices, alive):
    # Iterative DFS component labelling restricted to `alive` vertices.
    # Returns (count, labels); dead vertices keep label -1.
    n = indptr.shape[0] - 1
    labels = np.full(n, -1, np.int64)
    stack = np.zeros(n, np.int64)
    count = 0
    for s in range(n):
        if alive[s] == 0 or labels[s] >= 0:
            continue
        labels[s] = count
        stack[0] = s
        top = 1
        while top > 0:
            top -= 1
            x = stack[top]
            for t in range(indptr[x], indptr[x + 1]):
                y = indices[t]
                if alive[y] == 1 and labels[y] < 0:
                    labels[y] = count
                    stack[top] = y
                    top += 1
        count += 1
    return count, labels


ham_search_python = _ham_search_impl
components_python = _components_impl

_flag = os.environ.get("TOKENHAM_NUMBA", "auto").strip().lower()
if _flag in ("0", "off", "false", "no"):
    NUMBA_ENABLED = False
else:
    try:
        from numba import njit

        NUMBA_ENABLED = True
    except ImportError:
        NUMBA_ENABLED = False

if NUMBA_ENABLED:
    ham_search = njit(cache=True)(_ham_search_impl)
    components = njit(cache=True)(_components_impl)
else:
    ham_search = _ham_search_impl
    components = _components_impl
