# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled sweep kernels: exhaustive index sweeps over edge-bitmask graph
ranges plus boolean chord-configuration tests.

Same interface and the same soundness contract as the pure-Python twin in
_sweep_py.py: sweep_range may drop a mask only when the signless Laplacian
index is provably below q_floor. The upper bound used after the cheap degree
filters is Collatz-Wielandt on Q + I with a strictly positive iterate:
lambda_max(M) <= max_i (Mx)_i / x_i.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

IS_COMPILED = True

DEF MAXN = 11  # edge bitmasks fit 64 bits up to n = 11; sweeps use n <= 8
DEF MAXB = 55  # MAXN * (MAXN - 1) / 2 edge slots

cdef int _popcount(uint64_t x) noexcept nogil:
    return __builtin_popcountll(x)


cdef void _mask_adj(int n, uint64_t mask, uint64_t* adj) noexcept nogil:
    cdef int i, j, b = 0
    for i in range(n):
        adj[i] = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> b & 1:
                adj[i] |= (<uint64_t>1) << j
                adj[j] |= (<uint64_t>1) << i
            b += 1


cdef double _q_upper_decide(int n, uint64_t* adj, double q_floor) noexcept nogil:
    """Return +1.0 if the index is certainly >= q_floor is possible
    (survivor), -1.0 if certainly below q_floor."""
    cdef double x[MAXN]
    cdef double y[MAXN]
    cdef double m[MAXN][MAXN]
    cdef int i, j, it
    cdef double ub, ratio, ray, norm2, xx
    for i in range(n):
        x[i] = 1.0
        for j in range(n):
            m[i][j] = 0.0
        m[i][i] = _popcount(adj[i]) + 1.0  # Q + I
        for j in range(n):
            if adj[i] >> j & 1:
                m[i][j] = 1.0
    for it in range(200):
        ub = 0.0
        ray = 0.0
        xx = 0.0
        for i in range(n):
            y[i] = 0.0
            for j in range(n):
                y[i] += m[i][j] * x[j]
            ratio = y[i] / x[i]
            if ratio > ub:
                ub = ratio
            ray += x[i] * y[i]
            xx += x[i] * x[i]
        if ub - 1.0 < q_floor - 1e-9:
            return -1.0
        if ray / xx - 1.0 >= q_floor:
            return 1.0
        norm2 = 0.0
        for i in range(n):
            norm2 += y[i] * y[i]
        norm2 = norm2 ** 0.5
        for i in range(n):
            x[i] = y[i] / norm2
            # the Collatz-Wielandt bound needs x strictly positive; slow
            # components of disconnected graphs may decay, so floor them
            # (the bound stays valid for any positive vector)
            if x[i] < 1e-250:
                x[i] = 1e-250
    return 1.0  # undecided after the cap: keep it (conservative)


def sweep_range(int n, object lo, object hi, double q_floor):
    """Scan edge bitmasks in [lo, hi); see _sweep_py.sweep_range."""
    if n < 1 or n > MAXN:
        raise ValueError(f"sweep supports 1..{MAXN} vertices, got {n}")
    cdef uint64_t mask, mlo = lo, mhi = hi
    cdef uint64_t adj[MAXN]
    cdef uint64_t inc[MAXN]
    cdef int bi[MAXB]
    cdef int bj[MAXB]
    cdef int i, j, b, nbits, deg, dmax, dmin, esum, di
    cdef int degs[MAXN]
    cdef long long no_isolated = 0
    cdef uint64_t rest
    survivors = []

    b = 0
    for i in range(n):
        inc[i] = 0
    for j in range(1, n):
        for i in range(j):
            inc[i] |= (<uint64_t>1) << b
            inc[j] |= (<uint64_t>1) << b
            bi[b] = i
            bj[b] = j
            b += 1
    nbits = b

    for mask in range(mlo, mhi):
        dmin = n
        dmax = 0
        for i in range(n):
            deg = _popcount(mask & inc[i])
            degs[i] = deg
            if deg < dmin:
                dmin = deg
            if deg > dmax:
                dmax = deg
        if dmin == 0:
            continue
        no_isolated += 1
        if 2.0 * dmax < q_floor:
            continue
        esum = 0
        rest = mask
        while rest:
            b = _bit_index(rest & (~rest + 1))
            rest &= rest - 1
            di = degs[bi[b]] + degs[bj[b]]
            if di > esum:
                esum = di
        if esum < q_floor:
            continue
        _mask_adj(n, mask, adj)
        if _q_upper_decide(n, adj, q_floor) > 0:
            survivors.append(mask)
    return no_isolated, survivors


cdef int _bit_index(uint64_t low) noexcept nogil:
    cdef int k = 0
    while not (low & 1):
        low >>= 1
        k += 1
    return k


def q_power(int n, object mask):
    """Index of the mask graph by converged power iteration on Q + I."""
    if n < 1 or n > MAXN:
        raise ValueError(f"q_power supports 1..{MAXN} vertices, got {n}")
    cdef uint64_t adj[MAXN]
    cdef double x[MAXN]
    cdef double y[MAXN]
    cdef double m[MAXN][MAXN]
    cdef int i, j, it
    cdef double mu, res, r, norm2
    _mask_adj(n, <uint64_t>mask, adj)
    for i in range(n):
        x[i] = 1.0 / (n ** 0.5)
        for j in range(n):
            m[i][j] = 0.0
        m[i][i] = _popcount(adj[i]) + 1.0
        for j in range(n):
            if adj[i] >> j & 1:
                m[i][j] = 1.0
    for it in range(100000):
        mu = 0.0
        for i in range(n):
            y[i] = 0.0
            for j in range(n):
                y[i] += m[i][j] * x[j]
            mu += x[i] * y[i]
        res = 0.0
        for i in range(n):
            r = y[i] - mu * x[i]
            if r < 0:
                r = -r
            if r > res:
                res = r
        if res <= 1e-12:
            return mu - 1.0
        norm2 = 0.0
        for i in range(n):
            norm2 += y[i] * y[i]
        norm2 = norm2 ** 0.5
        for i in range(n):
            x[i] = y[i] / norm2
    return mu - 1.0


# -- chord configuration tests ---------------------------------------------------


cdef bint _apex_rec(uint64_t* adj, uint64_t nu, int u, int v, uint64_t visited,
                    int hits, int k, int pathlen) noexcept nogil:
    cdef uint64_t cand, low
    cdef int w, supply, nhits
    if pathlen >= 2 and (nu >> v & 1) and hits >= k:
        return True
    supply = _popcount(nu & ~visited)
    if nu >> v & 1:
        supply += 1
    if hits + supply < k + 1:
        return False
    nhits = hits
    if pathlen >= 2 and (nu >> v & 1):
        nhits += 1
    cand = adj[v] & ~visited
    while cand:
        low = cand & (~cand + 1)
        cand ^= low
        w = _bit_index(low)
        if _apex_rec(adj, nu, u, w, visited | low, nhits, k, pathlen + 1):
            return True
    return False


def apex_has_config(int n, object mask, int k):
    """Whether some cycle has k chords at a common vertex (mask graph)."""
    if n < 1 or n > MAXN:
        raise ValueError(f"apex_has_config supports 1..{MAXN} vertices, got {n}")
    cdef uint64_t adj[MAXN]
    cdef uint64_t nu, cand, low
    cdef int u, start
    if n < k + 3:
        return False
    _mask_adj(n, <uint64_t>mask, adj)
    for u in range(n):
        nu = adj[u]
        if _popcount(nu) < k + 2:
            continue
        cand = nu
        while cand:
            low = cand & (~cand + 1)
            cand ^= low
            start = _bit_index(low)
            if _apex_rec(adj, nu, u, start,
                         low | ((<uint64_t>1) << u), 0, k, 1):
                return True
    return False


cdef bint _cyc_rec(uint64_t* adj, int root, int second, int v, uint64_t visited,
                   int m, uint64_t allowed, int min_chords) noexcept nogil:
    cdef uint64_t cand, low, tt
    cdef int w, e, i
    if m >= 3 and (adj[v] >> root & 1) and second < v:
        e = 0
        tt = visited
        while tt:
            low = tt & (~tt + 1)
            tt ^= low
            i = _bit_index(low)
            e += _popcount(adj[i] & visited)
        e //= 2
        if e - m >= min_chords:
            return True
    cand = adj[v] & allowed & ~visited
    while cand:
        low = cand & (~cand + 1)
        cand ^= low
        w = _bit_index(low)
        if _cyc_rec(adj, root, w if m == 1 else second, w, visited | low,
                    m + 1, allowed, min_chords):
            return True
    return False


def chorded_has(int n, object mask, int min_chords):
    """Whether some cycle carries at least min_chords chords (mask graph)."""
    if n < 1 or n > MAXN:
        raise ValueError(f"chorded_has supports 1..{MAXN} vertices, got {n}")
    cdef uint64_t adj[MAXN]
    cdef uint64_t allowed, full
    cdef int root
    _mask_adj(n, <uint64_t>mask, adj)
    full = ((<uint64_t>1) << n) - 1
    for root in range(n):
        allowed = full & ~(((<uint64_t>1) << (root + 1)) - 1)
        if _cyc_rec(adj, root, -1, root, (<uint64_t>1) << root, 1,
                    allowed, min_chords):
            return True
    return False
