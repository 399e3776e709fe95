"""Pure-Python implementation of the sweep kernels.

Mirrors the compiled extension's interface. The exhaustive q-sweep is
vectorized with numpy over blocks of edge bitmasks; the per-graph detectors
defer to the reference searcher in chords.py.

Soundness contract of sweep_range: a mask may only be dropped when its
signless Laplacian index is provably below q_floor. Cheap degree bounds
(q <= 2*maxdeg and q <= max over edges of d(u)+d(v)) go first; the remainder
is decided by eigenvalue computation with comfortable float margin.
"""

from __future__ import annotations

import numpy as np

from . import chords
from .graphs import graph_from_mask, index_pairs

IS_COMPILED = False

_BLOCK = 1 << 14


def sweep_range(n: int, lo: int, hi: int, q_floor: float):
    """Scan edge bitmasks in [lo, hi).

    Returns (no_isolated_count, survivors): survivors are the masks of graphs
    without isolated vertices whose index is not provably below q_floor.
    """
    pairs = index_pairs(n)
    nbits = len(pairs)
    incident = np.zeros((n, nbits), dtype=bool)
    for b, (i, j) in enumerate(pairs):
        incident[i, b] = incident[j, b] = True
    iarr = np.array([i for i, _ in pairs])
    jarr = np.array([j for _, j in pairs])

    no_isolated = 0
    survivors: list[int] = []
    for start in range(lo, hi, _BLOCK):
        stop = min(start + _BLOCK, hi)
        masks = np.arange(start, stop, dtype=np.int64)
        bits = (masks[:, None] >> np.arange(nbits)) & 1  # (block, nbits)
        deg = bits @ incident.T.astype(np.int64)  # (block, n)
        ok = deg.min(axis=1) >= 1
        no_isolated += int(ok.sum())
        cand = ok & (2 * deg.max(axis=1) >= q_floor)
        if cand.any():
            # max over present edges of d(i)+d(j); absent edges contribute 0
            esum = (deg[:, iarr] + deg[:, jarr]) * bits
            cand &= esum.max(axis=1) >= q_floor
        for m in masks[cand]:
            if _q_eigen(n, int(m)) >= q_floor:
                survivors.append(int(m))
    return no_isolated, survivors


def _q_eigen(n: int, mask: int) -> float:
    a = np.zeros((n, n))
    b = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> b & 1:
                a[i, j] = a[j, i] = 1.0
            b += 1
    q = a + np.diag(a.sum(axis=1))
    return float(np.linalg.eigvalsh(q)[-1])


def q_power(n: int, mask: int) -> float:
    """Index of the mask graph; fallback uses the dense symmetric solver."""
    return _q_eigen(n, mask)


def apex_has_config(n: int, mask: int, k: int) -> bool:
    """Whether some cycle has k chords at a common vertex."""
    return chords.find_k_chords_at_apex(graph_from_mask(n, mask), k) is not None


def chorded_has(n: int, mask: int, min_chords: int) -> bool:
    """Whether some cycle carries at least min_chords chords."""
    return chords.find_chorded_cycle(graph_from_mask(n, mask), min_chords) is not None
