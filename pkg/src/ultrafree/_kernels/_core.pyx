# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the pure-Python search kernels.

Same inputs, outputs, tie-breaking, and budget charging as
``ultrafree._kernels.fallback``; the uint64 fast path covers graphs on at
most 64 vertices, and larger inputs are delegated to the fallback.
"""

from libc.stdint cimport int64_t, uint64_t

from . import fallback

__all__ = [
    "count_cliques",
    "list_cliques",
    "max_clique",
    "chromatic_number",
    "enumerate_mis",
]

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline int uf_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int uf_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    #else
    static inline int uf_popcount(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; ++c; }
        return c;
    }
    static inline int uf_ctz(unsigned long long x) {
        int c = 0;
        while (!(x & 1ULL)) { x >>= 1; ++c; }
        return c;
    }
    #endif
    """
    int uf_popcount(uint64_t x) nogil
    int uf_ctz(uint64_t x) nogil


cdef inline bint _fits(object adj, object mask):
    return len(adj) <= 64 and (mask >> 64) == 0


cdef int _fill(uint64_t* adjc, object adj) except -1:
    cdef int i, n = len(adj)
    for i in range(n):
        adjc[i] = adj[i]
    return 0


# ---------------------------------------------------------------- counting

cdef int64_t _count(uint64_t* adjc, int b, uint64_t mask, object meter) except -1:
    if b == 1:
        return uf_popcount(mask)
    cdef int64_t total = 0
    cdef uint64_t m = mask, low, sub
    cdef int v
    while m:
        low = m & (~m + 1)
        v = uf_ctz(low)
        m &= m - 1
        if meter is not None:
            meter.charge()
        sub = adjc[v] & m
        if uf_popcount(sub) >= b - 1:
            total += _count(adjc, b - 1, sub, meter)
    return total


def count_cliques(adj, b, mask, meter=None):
    """Number of b-vertex cliques (as vertex subsets) inside ``mask``."""
    if b < 0:
        raise ValueError("clique size must be nonnegative")
    if b == 0:
        return 1
    if b == 1:
        return mask.bit_count()
    if not _fits(adj, mask):
        return fallback.count_cliques(adj, b, mask, meter)
    cdef uint64_t adjc[64]
    _fill(adjc, adj)
    return _count(adjc, b, mask, meter)


cdef int _list(uint64_t* adjc, int need, uint64_t cand, uint64_t cur, list out, object meter) except -1:
    cdef uint64_t m = cand, low, sub
    cdef int v
    if need == 1:
        while m:
            low = m & (~m + 1)
            m ^= low
            out.append(cur | low)
        return 0
    while m:
        low = m & (~m + 1)
        v = uf_ctz(low)
        m ^= low
        if meter is not None:
            meter.charge()
        sub = adjc[v] & m
        if uf_popcount(sub) >= need - 1:
            _list(adjc, need - 1, sub, cur | low, out, meter)
    return 0


def list_cliques(adj, b, mask, meter=None):
    """All b-cliques inside ``mask`` as bitmasks, lexicographic by member tuple."""
    if b < 0:
        raise ValueError("clique size must be nonnegative")
    if b == 0:
        return [0]
    if not _fits(adj, mask):
        return fallback.list_cliques(adj, b, mask, meter)
    cdef uint64_t adjc[64]
    _fill(adjc, adj)
    out = []
    _list(adjc, b, mask, 0, out, meter)
    return out


# -------------------------------------------------------------- max clique

cdef int _color_order(uint64_t* adjc, uint64_t cand, int* order, int* bounds):
    cdef int color = 0, k = 0, v
    cdef uint64_t rem = cand, avail, low
    while rem:
        color += 1
        avail = rem
        while avail:
            low = avail & (~avail + 1)
            v = uf_ctz(low)
            avail &= ~adjc[v]
            avail ^= low
            rem ^= low
            order[k] = v
            bounds[k] = color
            k += 1
    return k


cdef int _expand(uint64_t* adjc, uint64_t cand, uint64_t cur, int size,
                 int64_t* best_size, uint64_t* best_mask, object meter) except -1:
    cdef int order[64]
    cdef int bounds[64]
    cdef int k = _color_order(adjc, cand, order, bounds)
    cdef int i, v
    cdef uint64_t bit, sub
    for i in range(k - 1, -1, -1):
        if size + bounds[i] <= best_size[0]:
            return 0
        v = order[i]
        bit = (<uint64_t>1) << v
        if meter is not None:
            meter.charge()
        sub = cand & adjc[v]
        if sub:
            _expand(adjc, sub, cur | bit, size + 1, best_size, best_mask, meter)
        elif size + 1 > best_size[0]:
            best_size[0] = size + 1
            best_mask[0] = cur | bit
        cand &= ~bit
    return 0


def max_clique(adj, mask, meter=None):
    """Largest clique inside ``mask``: returns ``(size, witness_mask)``."""
    if not _fits(adj, mask):
        return fallback.max_clique(adj, mask, meter)
    cdef uint64_t adjc[64]
    cdef int64_t best_size = 0
    cdef uint64_t best_mask = 0
    cdef uint64_t m = mask
    _fill(adjc, adj)
    if m:
        _expand(adjc, m, 0, 0, &best_size, &best_mask, meter)
    return int(best_size), int(best_mask)


# ---------------------------------------------------------------- coloring

cdef int _dsatur_bound(uint64_t* adjc, int n) except -1:
    cdef uint64_t sat[64]
    cdef int colors[64]
    cdef int i, u, v, c, best_v, sc, deg, best_sc, best_deg
    cdef uint64_t m, low
    if n == 0:
        return 0
    for i in range(n):
        sat[i] = 0
        colors[i] = -1
    cdef int done, top = 0
    for done in range(n):
        best_v = -1
        best_sc = -1
        best_deg = -1
        for u in range(n):
            if colors[u] != -1:
                continue
            sc = uf_popcount(sat[u])
            deg = uf_popcount(adjc[u])
            # ties: larger saturation, then larger degree, then smaller id
            if sc > best_sc or (sc == best_sc and (deg > best_deg or (deg == best_deg and (best_v == -1 or u < best_v)))):
                best_sc = sc
                best_deg = deg
                best_v = u
        v = best_v
        c = 0
        while (sat[v] >> c) & 1:
            c += 1
        colors[v] = c
        if c + 1 > top:
            top = c + 1
        m = adjc[v]
        while m:
            low = m & (~m + 1)
            sat[uf_ctz(low)] |= (<uint64_t>1) << c
            m ^= low
    return top


cdef int _krec(uint64_t* adjc, int* order, int n, int k, uint64_t* color_masks,
               int i, int used, object meter) except -1:
    if i == n:
        return 1
    cdef int v = order[i]
    cdef uint64_t bit = (<uint64_t>1) << v
    cdef uint64_t nb = adjc[v]
    cdef int c, lim = used + 1
    if k < lim:
        lim = k
    for c in range(lim):
        if color_masks[c] & nb:
            continue
        if meter is not None:
            meter.charge()
        color_masks[c] |= bit
        if _krec(adjc, order, n, k, color_masks, i + 1,
                 used if c < used else c + 1, meter):
            return 1
        color_masks[c] &= ~bit
    return 0


def chromatic_number(adj, n, meter=None):
    """Exact chromatic number of the graph on vertices 0..n-1."""
    if n == 0:
        return 0
    if not any(adj):
        return 1
    if n > 64:
        return fallback.chromatic_number(adj, n, meter)
    cdef uint64_t adjc[64]
    cdef uint64_t color_masks[64]
    cdef int order[64]
    cdef int i, k, lb, ub, nn = n
    _fill(adjc, adj)
    lb = max_clique(adj, (1 << n) - 1, meter)[0]
    ub = _dsatur_bound(adjc, nn)
    # order: degree descending, id ascending on ties
    pyorder = sorted(range(nn), key=lambda v: (-(adj[v]).bit_count(), v))
    for i in range(nn):
        order[i] = pyorder[i]
    k = lb
    while k < ub:
        for i in range(nn):
            color_masks[i] = 0
        if _krec(adjc, order, nn, k, color_masks, 0, 0, meter):
            break
        k += 1
    return k


# --------------------------------------------------- maximal independent sets

cdef int _bk(uint64_t* cadj, uint64_t r, uint64_t p, uint64_t x, list out, object meter) except -1:
    if meter is not None:
        meter.charge()
    if p == 0 and x == 0:
        out.append(int(r))
        return 0
    cdef uint64_t px = p | x, m, low
    cdef int u, v, best_u = -1, best_cnt = -1, cnt
    m = px
    while m:
        low = m & (~m + 1)
        u = uf_ctz(low)
        m ^= low
        cnt = uf_popcount(p & cadj[u])
        if cnt > best_cnt:
            best_cnt = cnt
            best_u = u
    m = p & ~cadj[best_u]
    while m:
        low = m & (~m + 1)
        v = uf_ctz(low)
        m ^= low
        _bk(cadj, r | low, p & cadj[v], x & cadj[v], out, meter)
        p ^= low
        x |= low
    return 0


def enumerate_mis(adj, n, meter=None):
    """All maximal independent sets as bitmasks, sorted by member tuple."""
    if n > 64:
        return fallback.enumerate_mis(adj, n, meter)
    cdef uint64_t cadj[64]
    cdef uint64_t full = 0
    cdef int v
    if n:
        full = ((<uint64_t>1) << (n - 1) << 1) - 1
    for v in range(n):
        cadj[v] = full & ~(<uint64_t>adj[v]) & ~((<uint64_t>1) << v)
    out = []
    _bk(cadj, 0, full, 0, out, meter)
    out.sort(key=fallback._members)
    return out
