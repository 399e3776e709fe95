"""Simple undirected graphs over 0..n-1 with bit-set adjacency rows.

Graphs are immutable; "mutating" helpers return new values, so instances can
be shared freely across parallel workers. Adjacency rows are Python ints used
as bit sets, which covers both the fast small-graph regime (rows fit in a
machine word for n <= 64) and the documented cap of n <= 256.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator

MAX_VERTICES = 256


class GraphError(ValueError):
    """Invalid graph construction or query."""


class Graph6Error(GraphError):
    """Malformed graph6 text."""


class Graph:
    __slots__ = ("n", "_adj")

    def __init__(self, n: int, adj: tuple[int, ...]):
        # internal constructor: callers go through make_graph / helpers
        self.n = n
        self._adj = adj

    # -- queries -------------------------------------------------------------

    def adj_bits(self, u: int) -> int:
        return self._adj[u]

    def degree(self, u: int) -> int:
        return self._adj[u].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self._adj)

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self._adj) // 2

    @property
    def max_degree(self) -> int:
        return max((a.bit_count() for a in self._adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((a.bit_count() for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return tuple(bits_to_vertices(self._adj[u]))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            rest = self._adj[u] >> (u + 1) << (u + 1)
            out.extend((u, v) for v in bits_to_vertices(rest))
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"

    # -- derived graphs -------------------------------------------------------

    def add_edges(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self._adj)
        for u, v in pairs:
            _check_pair(self.n, u, v)
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def remove_edges(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self._adj)
        for u, v in pairs:
            _check_pair(self.n, u, v)
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabelled by the sorted vertex order."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        adj = [0] * len(vs)
        for v in vs:
            for w in bits_to_vertices(self._adj[v]):
                if w in pos:
                    adj[pos[v]] |= 1 << pos[w]
        return Graph(len(vs), tuple(adj))

    # -- connectivity ----------------------------------------------------------

    def component_masks(self) -> list[int]:
        """Vertex bit masks of connected components, ordered by least vertex."""
        seen = 0
        full = (1 << self.n) - 1
        comps = []
        while seen != full:
            start = (~seen & full) & -(~seen & full)
            comp = start
            frontier = start
            while frontier:
                nxt = 0
                for v in bits_to_vertices(frontier):
                    nxt |= self._adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            comps.append(comp)
            seen |= comp
        return comps

    def components(self) -> list[tuple[int, ...]]:
        return [tuple(bits_to_vertices(m)) for m in self.component_masks()]

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_masks()) == 1


def bits_to_vertices(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"vertex out of range: ({u}, {v}) with n={n}")
    if u == v:
        raise GraphError(f"loop edge at vertex {u}")


def make_graph(n: int, edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a graph on vertices 0..n-1; duplicate edges are idempotent."""
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def join(g: Graph, h: Graph) -> Graph:
    """All of g, all of h (shifted), plus every edge between the two."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise GraphError(f"join order {n} exceeds {MAX_VERTICES}")
    hi = ((1 << h.n) - 1) << g.n
    lo = (1 << g.n) - 1
    adj = [a | hi for a in g._adj]
    adj += [(a << g.n) | lo for a in h._adj]
    return Graph(n, tuple(adj))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise GraphError(f"union order {n} exceeds {MAX_VERTICES}")
    adj = list(g._adj) + [a << g.n for a in h._adj]
    return Graph(n, tuple(adj))


def edge_counts(g: Graph, s: Iterable[int], t: Iterable[int]) -> int:
    """e(S, T): edges with one end in S and one in T.

    With S == T this is e(G[S]). Distinct overlapping sets are rejected: every
    use here has either S == T or disjoint sets, and the overlap convention
    would otherwise be a silent choice.
    """
    sm = vertices_to_bits(g.n, s)
    tm = vertices_to_bits(g.n, t)
    if sm == tm:
        return sum((g._adj[v] & sm).bit_count() for v in bits_to_vertices(sm)) // 2
    if sm & tm:
        raise GraphError("edge_counts: distinct S and T must be disjoint")
    return sum((g._adj[v] & tm).bit_count() for v in bits_to_vertices(sm))


def vertices_to_bits(n: int, vs: Iterable[int]) -> int:
    mask = 0
    for v in vs:
        if not 0 <= v < n:
            raise GraphError(f"vertex {v} out of range for n={n}")
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class ApexPartition:
    """Vertex split around an apex z: its neighborhood Z, the rest W,
    and Z itself split by having neighbors inside Z (Zplus) or not (Z0)."""

    z: int
    Z: frozenset[int]
    W: frozenset[int]
    Z0: frozenset[int]
    Zplus: frozenset[int]


def apex_partition(g: Graph, z: int) -> ApexPartition:
    if not 0 <= z < g.n:
        raise GraphError(f"apex {z} out of range")
    zbits = g._adj[z]
    full = (1 << g.n) - 1
    wbits = full & ~zbits & ~(1 << z)
    z0 = 0
    for v in bits_to_vertices(zbits):
        if not (g._adj[v] & zbits):
            z0 |= 1 << v
    return ApexPartition(
        z=z,
        Z=frozenset(bits_to_vertices(zbits)),
        W=frozenset(bits_to_vertices(wbits)),
        Z0=frozenset(bits_to_vertices(z0)),
        Zplus=frozenset(bits_to_vertices(zbits & ~z0)),
    )


# -- isomorphism ---------------------------------------------------------------


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Pairwise isomorphism by backtracking over degree-refined classes.

    Intended for small orders (n <= 12 or so); an order mismatch is just
    False, not an error.
    """
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    cg, ch = _refine_colors_jointly(g, h)
    if sorted(cg) != sorted(ch):
        return False
    n = g.n
    # map g-vertices in a fixed order, most-constrained colors first
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(ch[v], []).append(v)
    order = sorted(range(n), key=lambda v: (len(by_color[cg[v]]), v))
    mapping = [-1] * n
    used = 0

    def extend(idx: int) -> bool:
        nonlocal used
        if idx == n:
            return True
        u = order[idx]
        for v in by_color[cg[u]]:
            if used >> v & 1:
                continue
            ok = True
            for w in order[:idx]:
                if g.has_edge(u, w) != h.has_edge(v, mapping[w]):
                    ok = False
                    break
            if ok:
                mapping[u] = v
                used |= 1 << v
                if extend(idx + 1):
                    return True
                used &= ~(1 << v)
                mapping[u] = -1
        return False

    return extend(0)


def _refine_colors_jointly(g: Graph, h: Graph) -> tuple[list[int], list[int]]:
    """Iterated (color, neighbor-color multiset) refinement with ids shared
    between the two graphs, so equal colors mean equal refinement history."""
    cg = list(g.degrees())
    ch = list(h.degrees())
    for _ in range(g.n):
        kg = [
            (cg[v], tuple(sorted(cg[w] for w in g.neighbors(v)))) for v in range(g.n)
        ]
        kh = [
            (ch[v], tuple(sorted(ch[w] for w in h.neighbors(v)))) for v in range(h.n)
        ]
        canon = {k: i for i, k in enumerate(sorted(set(kg) | set(kh)))}
        ng = [canon[k] for k in kg]
        nh = [canon[k] for k in kh]
        if ng == cg and nh == ch:
            break
        cg, ch = ng, nh
    return cg, ch


def automorphism_count(g: Graph) -> int:
    """|Aut(G)| by brute force; for tiny n only (used as a test oracle hook)."""
    count = 0
    edges = set()
    for u, v in g.edges():
        edges.add((u, v))
    for perm in permutations(range(g.n)):
        if all(
            ((perm[u], perm[v]) in edges or (perm[v], perm[u]) in edges)
            for (u, v) in edges
        ):
            count += 1
    return count


# -- edge-bitmask conventions ---------------------------------------------------

# Pair (i, j) with i < j maps to bit j*(j-1)/2 + i: increasing j, then i.
# This is the graph6 bit order, and enumeration in ascending mask order is the
# canonical sweep order for the exhaustive verifier.


def edge_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def index_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_mask(n: int, mask: int) -> Graph:
    adj = [0] * n
    b = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> b & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            b += 1
    return Graph(n, tuple(adj))


def mask_from_graph(g: Graph) -> int:
    mask = 0
    for u, v in g.edges():
        mask |= 1 << edge_index(u, v)
    return mask


# -- graph6 ---------------------------------------------------------------------


def graph6_encode(g: Graph) -> str:
    """Standard graph6: size header, then upper-triangle bits packed 6 per byte."""
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    elif n <= 258047:
        head = "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    else:
        raise Graph6Error(f"order {n} too large for graph6")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        chars.append(chr(63 + val))
    return head + "".join(chars)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise Graph6Error("graph6 byte outside printable range")
    if data[0] < 63:
        n = data[0]
        body = data[1:]
    else:
        if len(data) < 4 or data[1] == 63:
            raise Graph6Error("malformed graph6 long-form header")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    if n == 0:
        raise Graph6Error("graph6 order 0 not supported here")
    if n > MAX_VERTICES:
        raise Graph6Error(f"graph6 order {n} exceeds cap {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise Graph6Error(f"graph6 length mismatch: got {len(body)} groups, need {need}")
    bits = []
    for d in body:
        bits.extend((d >> s) & 1 for s in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise Graph6Error("graph6 trailing padding bits are nonzero")
    adj = [0] * n
    b = 0
    for j in range(1, n):
        for i in range(j):
            if bits[b]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            b += 1
    return Graph(n, tuple(adj))
