"""Chorded-cycle certificate search.

A chord of a cycle is an edge of the graph joining two non-consecutive cycle
vertices. The apex searcher looks for a cycle carrying k chords that all meet
one cycle vertex u, by reducing to paths in G - u: a path whose two endpoints
are neighbors of u closes through u to a cycle, and every internal path vertex
adjacent to u contributes one chord at u. The general searcher enumerates
cycles rooted at their least vertex and counts surplus edges inside the cycle
vertex set.

verify_certificate is deliberately a from-scratch checker of the certificate
conditions, sharing no code with the searchers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, GraphError, bits_to_vertices


@dataclass(frozen=True)
class Certificate:
    """A cycle (closed implicitly), its chords, and an optional apex."""

    cycle: tuple[int, ...]
    chords: tuple[tuple[int, int], ...]
    apex: int | None = None

    def to_text(self) -> str:
        parts = [
            "cycle=" + ",".join(str(v) for v in self.cycle),
            "chords=" + ",".join(f"{a}-{b}" for a, b in self.chords),
        ]
        if self.apex is not None:
            parts.append(f"apex={self.apex}")
        return ";".join(parts)

    @staticmethod
    def from_text(text: str) -> "Certificate":
        fields = dict(item.split("=", 1) for item in text.strip().split(";"))
        cycle = tuple(int(v) for v in fields["cycle"].split(","))
        chords = tuple(
            (int(a), int(b))
            for a, b in (pair.split("-") for pair in fields["chords"].split(",") if pair)
        )
        apex = int(fields["apex"]) if "apex" in fields else None
        return Certificate(cycle=cycle, chords=chords, apex=apex)

    def to_json_dict(self) -> dict:
        d = {"cycle": list(self.cycle), "chords": [list(c) for c in self.chords]}
        if self.apex is not None:
            d["apex"] = self.apex
        return d


def find_k_chords_at_apex(g: Graph, k: int) -> Certificate | None:
    """First (in DFS order over ascending vertex indices) cycle with k chords
    incident to a common cycle vertex, or None.

    For apex u the cycle is u plus a path in G - u whose endpoints are
    neighbors of u and which has at least k internal vertices in N(u); a
    branch is abandoned once the unvisited N(u) supply cannot reach k chords
    plus the closing endpoint.
    """
    if k < 1:
        raise GraphError(f"need k >= 1, got {k}")
    n = g.n
    if n < k + 3:
        return None
    adj = [g.adj_bits(v) for v in range(n)]
    for u in range(n):
        nu = adj[u]
        if nu.bit_count() < k + 2:
            continue
        path: list[int] = []

        def dfs(v: int, visited: int, hits: int) -> Certificate | None:
            # hits counts internal path vertices (everything before v) in N(u)
            path.append(v)
            try:
                if len(path) >= 2 and (nu >> v & 1) and hits >= k:
                    chords = tuple(
                        (u, w) for w in path[1:-1] if nu >> w & 1
                    )[:k]
                    return Certificate(
                        cycle=(u,) + tuple(path), chords=chords, apex=u
                    )
                supply = (nu & ~visited).bit_count() + (1 if nu >> v & 1 else 0)
                if hits + supply < k + 1:
                    return None
                # v turns internal on extension unless it is the path start
                nhits = hits + (1 if (len(path) >= 2 and nu >> v & 1) else 0)
                for w in bits_to_vertices(adj[v] & ~visited & ~(1 << u)):
                    found = dfs(w, visited | 1 << w, nhits)
                    if found is not None:
                        return found
                return None
            finally:
                path.pop()

        for start in bits_to_vertices(nu):
            found = dfs(start, 1 << start | 1 << u, 0)
            if found is not None:
                return found
    return None


def find_chorded_cycle(g: Graph, min_chords: int) -> Certificate | None:
    """First cycle whose vertex set carries at least ``min_chords`` surplus
    edges (edges beyond the cycle itself), with that many chords attached.

    Cycles are enumerated once each: rooted at their least vertex, oriented
    toward the smaller of the root's two cycle neighbors.
    """
    if min_chords < 1:
        raise GraphError(f"need min_chords >= 1, got {min_chords}")
    n = g.n
    adj = [g.adj_bits(v) for v in range(n)]

    def chords_of(path: list[int]) -> tuple[tuple[int, int], ...] | None:
        m = len(path)
        inside = 0
        for v in path:
            inside |= 1 << v
        surplus = sum((adj[v] & inside).bit_count() for v in path) // 2 - m
        if surplus < min_chords:
            return None
        onpath = {v: i for i, v in enumerate(path)}
        out = []
        for i, v in enumerate(path):
            for w in bits_to_vertices(adj[v] & inside):
                j = onpath[w]
                if j <= i:
                    continue
                if j - i in (1, m - 1):
                    continue  # cycle edge, not a chord
                out.append((v, w))
                if len(out) == min_chords:
                    return tuple(out)
        return tuple(out)

    for root in range(n):
        allowed = ~((1 << (root + 1)) - 1)  # only vertices above the root
        path = [root]

        def dfs(v: int, visited: int) -> Certificate | None:
            if len(path) >= 3 and (adj[v] >> root & 1) and path[1] < path[-1]:
                chords = chords_of(path)
                if chords is not None:
                    return Certificate(cycle=tuple(path), chords=chords, apex=None)
            for w in bits_to_vertices(adj[v] & allowed & ~visited):
                path.append(w)
                found = dfs(w, visited | 1 << w)
                path.pop()
                if found is not None:
                    return found
            return None

        found = dfs(root, 1 << root)
        if found is not None:
            return found
    return None


def verify_certificate(
    g: Graph, cert: Certificate, k: int, require_apex: bool
) -> bool:
    """Independent check of the certificate conditions; never raises on a bad
    certificate, just returns False."""
    cyc = cert.cycle
    m = len(cyc)
    if m < 3 or len(set(cyc)) != m:
        return False
    if any(not 0 <= v < g.n for v in cyc):
        return False
    for i in range(m):
        if not g.has_edge(cyc[i], cyc[(i + 1) % m]):
            return False
    pos = {v: i for i, v in enumerate(cyc)}
    seen = set()
    for a, b in cert.chords:
        key = (min(a, b), max(a, b))
        if key in seen:
            return False
        seen.add(key)
        if a not in pos or b not in pos:
            return False
        if not g.has_edge(a, b):
            return False
        gap = abs(pos[a] - pos[b])
        if gap in (0, 1, m - 1):
            return False  # loop or consecutive on the cycle
    if len(cert.chords) < k:
        return False
    if require_apex:
        if cert.apex is None or cert.apex not in pos:
            return False
        if any(cert.apex not in (a, b) for a, b in cert.chords):
            return False
    return True


def longest_cycle(g: Graph) -> tuple[int, tuple[int, ...]] | None:
    """A maximum-length cycle as (length, vertex sequence); None for forests.

    Plain backtracking over root-canonical paths; fine for the intended
    n <= 16 regime.
    """
    n = g.n
    adj = [g.adj_bits(v) for v in range(n)]
    best: tuple[int, tuple[int, ...]] | None = None
    for mask in g.component_masks():
        comp_size = mask.bit_count()
        if comp_size < 3:
            continue
        if best is not None and best[0] >= comp_size:
            continue
        for root in bits_to_vertices(mask):
            allowed = mask & ~((1 << (root + 1)) - 1)
            path = [root]

            def dfs(v: int, visited: int) -> None:
                nonlocal best
                if (
                    len(path) >= 3
                    and (adj[v] >> root & 1)
                    and path[1] < path[-1]
                    and (best is None or len(path) > best[0])
                ):
                    best = (len(path), tuple(path))
                if best is not None and best[0] >= comp_size:
                    return
                for w in bits_to_vertices(adj[v] & allowed & ~visited):
                    path.append(w)
                    dfs(w, visited | 1 << w)
                    path.pop()
                    if best is not None and best[0] >= comp_size:
                        return

            dfs(root, 1 << root)
            if best is not None and best[0] >= comp_size:
                break
    return best


def max_path_order(g: Graph) -> int:
    """Most vertices on any path of G (1 for edgeless nonempty graphs)."""
    if g.n == 0:
        raise GraphError("empty graph has no paths")
    n = g.n
    adj = [g.adj_bits(v) for v in range(n)]
    best = 1
    for mask in g.component_masks():
        comp_size = mask.bit_count()
        if comp_size <= best:
            continue

        def dfs(v: int, visited: int, length: int) -> None:
            nonlocal best
            if length > best:
                best = length
            if best >= comp_size:
                return
            for w in bits_to_vertices(adj[v] & ~visited):
                dfs(w, visited | 1 << w, length + 1)
                if best >= comp_size:
                    return

        for start in bits_to_vertices(mask):
            dfs(start, 1 << start, 1)
            if best >= comp_size:
                break
    return best
