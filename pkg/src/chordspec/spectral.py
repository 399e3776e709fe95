"""Signless Laplacian spectra: the index q(G), Perron vectors, the degree-based
eta bound, partition quotient matrices, and exact characteristic polynomials.

Numeric route: power iteration on Q + I per connected component (the shift
makes the top eigenvalue strictly dominant in modulus, since Q is positive
semidefinite, so bipartite-style reflected spectra cannot stall the
iteration). Exact route: integer characteristic polynomials via the
Faddeev-LeVerrier recurrence and Sturm-chain root isolation, used to resolve
orderings that floats cannot.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .graphs import Graph, GraphError, bits_to_vertices
from .polynomials import (
    EQUAL,
    GREATER,
    LESS,
    IntPolynomial,
    compare_largest_roots,
)

DEFAULT_TOL = 1e-12
MAX_ITERATIONS = 10**6


class SpectralError(RuntimeError):
    """Iteration failed to converge (near-degenerate dominant pair)."""


@dataclass(frozen=True)
class SpectralResult:
    q: float
    vector: tuple[float, ...]
    residual: float
    iterations: int


def signless_laplacian(g: Graph) -> np.ndarray:
    """Q(G) = A(G) + D(G) as an integer array."""
    n = g.n
    q = np.zeros((n, n), dtype=np.int64)
    for u in range(n):
        for v in g.neighbors(u):
            q[u, v] = 1
        q[u, u] = g.degree(u)
    return q


def q_index(g: Graph, tol: float = DEFAULT_TOL) -> SpectralResult:
    """Largest signless Laplacian eigenvalue with its Perron vector.

    Disconnected graphs are handled per component and the max is taken; the
    returned vector is the Perron vector of the achieving component embedded
    in R^n (zero elsewhere).
    """
    best_q = -1.0
    best_vec: list[float] | None = None
    best_comp: list[int] | None = None
    best_res = 0.0
    total_iters = 0
    for mask in g.component_masks():
        comp = list(bits_to_vertices(mask))
        qval, vec, res, iters = _power_component(g, comp, tol)
        total_iters += iters
        if qval > best_q + 1e-15:
            best_q, best_vec, best_comp, best_res = qval, vec, comp, res
    assert best_vec is not None and best_comp is not None
    full = [0.0] * g.n
    for v, x in zip(best_comp, best_vec):
        full[v] = x
    return SpectralResult(
        q=best_q, vector=tuple(full), residual=best_res, iterations=total_iters
    )


def _power_component(g: Graph, comp: list[int], tol: float):
    m = len(comp)
    if m == 1:
        return 0.0, [1.0], 0.0, 0
    pos = {v: i for i, v in enumerate(comp)}
    M = np.zeros((m, m))
    for v in comp:
        i = pos[v]
        M[i, i] = g.degree(v) + 1.0  # Q + I shift
        for w in g.neighbors(v):
            M[i, pos[w]] = 1.0
    x = np.full(m, 1.0 / np.sqrt(m))
    for it in range(1, MAX_ITERATIONS + 1):
        y = M @ x
        mu = float(x @ y)
        res = float(np.max(np.abs(y - mu * x)))
        if res <= tol:
            return mu - 1.0, [float(v) for v in x], res, it
        x = y / np.linalg.norm(y)
    raise SpectralError(
        f"power iteration did not reach residual {tol} in {MAX_ITERATIONS} steps"
    )


def eta(g: Graph, v: int) -> Fraction:
    """d(v) + (sum of neighbor degrees) / d(v), exactly."""
    d = g.degree(v)
    if d == 0:
        raise GraphError(f"eta undefined on isolated vertex {v}")
    return Fraction(d) + Fraction(sum(g.degree(u) for u in g.neighbors(v)), d)


def max_eta(g: Graph) -> Fraction:
    return max(eta(g, v) for v in range(g.n) if g.degree(v) > 0)


# -- quotient matrices ----------------------------------------------------------


@dataclass(frozen=True)
class QuotientMatrix:
    blocks: tuple[tuple[int, ...], ...]
    entries: tuple[tuple[Fraction, ...], ...]
    equitable: bool

    @property
    def dim(self) -> int:
        return len(self.blocks)

    def as_floats(self) -> np.ndarray:
        return np.array([[float(e) for e in row] for row in self.entries])

    def spectral_radius(self) -> float:
        """Perron root of the (nonnegative) quotient matrix."""
        ev = np.linalg.eigvals(self.as_floats())
        return float(np.max(ev.real))

    def charpoly(self) -> IntPolynomial:
        """Exact det(xI - B); entries must be integers."""
        rows = []
        for row in self.entries:
            ints = []
            for e in row:
                if e.denominator != 1:
                    raise GraphError("charpoly needs an integer quotient matrix")
                ints.append(int(e))
            rows.append(ints)
        return charpoly_int_matrix(rows)


def quotient_matrix(g: Graph, blocks: Sequence[Iterable[int]]) -> QuotientMatrix:
    """Block-averaged Q(G) over a vertex partition, with an equitability flag.

    Equitable means every vertex of block i has the same Q row sum into block
    j, for all i, j; in that case the quotient shares the index q(G).
    """
    tblocks = tuple(tuple(sorted(b)) for b in blocks)
    seen: set[int] = set()
    count = 0
    for b in tblocks:
        if not b:
            raise GraphError("empty block in partition")
        seen.update(b)
        count += len(b)
    if count != g.n or seen != set(range(g.n)):
        raise GraphError("blocks do not partition the vertex set")

    Q = signless_laplacian(g)
    m = len(tblocks)
    entries = []
    equitable = True
    for i in range(m):
        row = []
        for j in range(m):
            sums = [int(Q[u, list(tblocks[j])].sum()) for u in tblocks[i]]
            if any(s != sums[0] for s in sums):
                equitable = False
            row.append(Fraction(sum(sums), len(tblocks[i])))
        entries.append(tuple(row))
    return QuotientMatrix(blocks=tblocks, entries=tuple(entries), equitable=equitable)


# -- exact characteristic polynomials ---------------------------------------------


def charpoly_int_matrix(rows: Sequence[Sequence[int]]) -> IntPolynomial:
    """det(xI - A) for an integer matrix, by Faddeev-LeVerrier.

    All arithmetic is arbitrary-precision; the trace divisions are exact by
    the recurrence's integrality (asserted).
    """
    m = len(rows)
    if any(len(r) != m for r in rows):
        raise ValueError("matrix is not square")
    A = [[int(c) for c in r] for r in rows]
    coeffs = [0] * (m + 1)
    coeffs[m] = 1
    M = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    for k in range(1, m + 1):
        AM = [
            [sum(A[i][t] * M[t][j] for t in range(m)) for j in range(m)]
            for i in range(m)
        ]
        tr = sum(AM[i][i] for i in range(m))
        assert tr % k == 0, "Faddeev-LeVerrier trace must divide exactly"
        c = -(tr // k)
        coeffs[m - k] = c
        for i in range(m):
            AM[i][i] += c
        M = AM
    return IntPolynomial(coeffs)


def charpoly_graph(g: Graph) -> IntPolynomial:
    """Exact characteristic polynomial of Q(G)."""
    Q = signless_laplacian(g)
    return charpoly_int_matrix(Q.tolist())


def q_exact_compare(g: Graph, h: Graph) -> int:
    """Exact ordering of q(G) vs q(H): LESS, EQUAL or GREATER.

    Goes through integer characteristic polynomials of Q and Sturm-chain
    isolation of the largest roots, so exact ties (including equality between
    non-isomorphic graphs) are decided correctly.
    """
    return compare_largest_roots(charpoly_graph(g), charpoly_graph(h))


__all__ = [
    "DEFAULT_TOL",
    "EQUAL",
    "GREATER",
    "LESS",
    "QuotientMatrix",
    "SpectralError",
    "SpectralResult",
    "charpoly_graph",
    "charpoly_int_matrix",
    "eta",
    "max_eta",
    "q_exact_compare",
    "q_index",
    "quotient_matrix",
    "signless_laplacian",
]
