"""Brute-force oracles for the test suite.

These deliberately recompute everything from definitions: cycles are
enumerated generically and chord counts are read off the adjacency relation
per cycle, with no shared code or reformulation from the searchers under
test. The permutation-based enumerator cross-validates the DFS enumerator on
tiny graphs so the faster one can be trusted at n = 7, 8.
"""

from __future__ import annotations

from itertools import combinations, permutations

import numpy as np

from chordspec.graphs import Graph


def cycles_by_permutation(g: Graph):
    """Every simple cycle as a canonical vertex tuple, via permutations."""
    seen = set()
    for size in range(3, g.n + 1):
        for subset in combinations(range(g.n), size):
            first = subset[0]
            for rest in permutations(subset[1:]):
                cyc = (first,) + rest
                if rest[0] > rest[-1]:
                    continue  # one orientation per cycle
                if all(
                    g.has_edge(cyc[i], cyc[(i + 1) % size]) for i in range(size)
                ):
                    seen.add(cyc)
    return seen


def cycles_by_dfs(g: Graph):
    """Every simple cycle as a canonical vertex tuple (root = least vertex,
    second < last), via depth-first path extension. Lazy, so callers that
    stop at the first witness do not pay for the full enumeration."""
    n = g.n
    for root in range(n):
        path = [root]

        def extend(v: int, visited: int):
            for w in g.neighbors(v):
                if w <= root:
                    if w == root and len(path) >= 3 and path[1] < path[-1]:
                        yield tuple(path)
                    continue
                if visited >> w & 1:
                    continue
                path.append(w)
                yield from extend(w, visited | 1 << w)
                path.pop()

        yield from extend(root, 1 << root)


def oracle_apex_chords(g: Graph, k: int) -> bool:
    """Some cycle has >= k chords incident to one of its vertices: for each
    cycle and each on-cycle vertex u, the chords at u are u's edges into the
    cycle minus its two cycle neighbors."""
    for cyc in cycles_by_dfs(g):
        m = len(cyc)
        members = set(cyc)
        for i, u in enumerate(cyc):
            inside = sum(1 for v in members if v != u and g.has_edge(u, v))
            if inside - 2 >= k:
                return True
    return False


def oracle_chorded(g: Graph, min_chords: int) -> bool:
    """Some cycle carries >= min_chords chords in total."""
    for cyc in cycles_by_dfs(g):
        m = len(cyc)
        members = list(cyc)
        e = sum(
            1
            for a, b in combinations(members, 2)
            if g.has_edge(a, b)
        )
        if e - m >= min_chords:
            return True
    return False


def oracle_longest_cycle_length(g: Graph) -> int | None:
    best = None
    for cyc in cycles_by_dfs(g):
        if best is None or len(cyc) > best:
            best = len(cyc)
    return best


def oracle_longest_path_order(g: Graph) -> int:
    """Most vertices on a path, by brute permutation extension."""
    best = 1
    n = g.n

    def extend(v: int, visited: int, length: int):
        nonlocal best
        best = max(best, length)
        for w in g.neighbors(v):
            if not visited >> w & 1:
                extend(w, visited | 1 << w, length + 1)

    for start in range(n):
        extend(start, 1 << start, 1)
    return best


def oracle_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    ge = {(min(u, v), max(u, v)) for u, v in g.edges()}
    he = {(min(a, b), max(a, b)) for a, b in h.edges()}
    for perm in permutations(range(h.n)):
        if all(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) in he for u, v in ge
        ):
            return True
    return False


def oracle_q(g: Graph) -> float:
    """Index via the dense symmetric eigensolver, straight from A + D."""
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    q = a + np.diag(a.sum(axis=1))
    return float(np.linalg.eigvalsh(q)[-1])
