"""Pure-Python search kernels over bitmask adjacency.

``adj`` is a list where ``adj[v]`` is the neighbor bitmask of vertex ``v``
(no self-bit).  Vertex subsets are bitmasks too.  These are the hot inner
loops of the package; ``ultrafree._kernels`` swaps in the compiled twin
when it is available, so keep the two implementations behaviorally
identical, including tie-breaking and output order.
"""

from __future__ import annotations

__all__ = [
    "count_cliques",
    "list_cliques",
    "max_clique",
    "chromatic_number",
    "enumerate_mis",
]


def _members(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def count_cliques(adj, b, mask, meter=None):
    """Number of b-vertex cliques (as vertex subsets) inside ``mask``."""
    if b < 0:
        raise ValueError("clique size must be nonnegative")
    if b == 0:
        return 1
    if b == 1:
        return mask.bit_count()
    return _count(adj, b, mask, meter)


def _count(adj, b, mask, meter):
    if b == 1:
        return mask.bit_count()
    total = 0
    m = mask
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        if meter is not None:
            meter.charge()
        # cliques whose lowest vertex is v: rest lives among later vertices
        sub = adj[v] & m
        if sub.bit_count() >= b - 1:
            total += _count(adj, b - 1, sub, meter)
    return total


def list_cliques(adj, b, mask, meter=None):
    """All b-cliques inside ``mask`` as bitmasks, lexicographic by member tuple."""
    if b < 0:
        raise ValueError("clique size must be nonnegative")
    if b == 0:
        return [0]
    out = []
    _list(adj, b, mask, 0, out, meter)
    return out


def _list(adj, need, cand, cur, out, meter):
    if need == 1:
        m = cand
        while m:
            low = m & -m
            m ^= low
            out.append(cur | low)
        return
    m = cand
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        if meter is not None:
            meter.charge()
        sub = adj[v] & m
        if sub.bit_count() >= need - 1:
            _list(adj, need - 1, sub, cur | low, out, meter)


def max_clique(adj, mask, meter=None):
    """Largest clique inside ``mask``: returns ``(size, witness_mask)``.

    Branch and bound with a greedy-coloring upper bound.
    """
    best = [0, 0]
    if mask:
        _expand(adj, mask, 0, 0, best, meter)
    return best[0], best[1]


def _color_order(adj, cand):
    # Greedy color classes; vertices listed class by class with the class
    # index as an upper bound on the clique extension through that vertex.
    order = []
    bounds = []
    color = 0
    rem = cand
    while rem:
        color += 1
        avail = rem
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~adj[v]
            avail ^= low
            rem ^= low
            order.append(v)
            bounds.append(color)
    return order, bounds


def _expand(adj, cand, cur, size, best, meter):
    order, bounds = _color_order(adj, cand)
    for i in range(len(order) - 1, -1, -1):
        if size + bounds[i] <= best[0]:
            return
        v = order[i]
        bit = 1 << v
        if meter is not None:
            meter.charge()
        sub = cand & adj[v]
        if sub:
            _expand(adj, sub, cur | bit, size + 1, best, meter)
        elif size + 1 > best[0]:
            best[0] = size + 1
            best[1] = cur | bit
        cand &= ~bit


def _dsatur_bound(adj, n):
    if n == 0:
        return 0
    colors = [-1] * n
    sat = [0] * n  # bitmask of colors seen on neighbors
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] == -1),
            key=lambda u: (sat[u].bit_count(), adj[u].bit_count(), -u),
        )
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        m = adj[v]
        while m:
            low = m & -m
            sat[low.bit_length() - 1] |= 1 << c
            m ^= low
    return max(colors) + 1


def _kcolorable(adj, order, k, meter):
    color_masks = [0] * k
    n = len(order)

    def rec(i, used):
        if i == n:
            return True
        v = order[i]
        bit = 1 << v
        nb = adj[v]
        for c in range(min(used + 1, k)):
            if color_masks[c] & nb:
                continue
            if meter is not None:
                meter.charge()
            color_masks[c] |= bit
            if rec(i + 1, used if c < used else c + 1):
                return True
            color_masks[c] &= ~bit
        return False

    return rec(0, 0)


def chromatic_number(adj, n, meter=None):
    """Exact chromatic number of the graph on vertices 0..n-1."""
    if n == 0:
        return 0
    if not any(adj):
        return 1
    lb = max_clique(adj, (1 << n) - 1, meter)[0]
    ub = _dsatur_bound(adj, n)
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    k = lb
    while k < ub and not _kcolorable(adj, order, k, meter):
        k += 1
    return k


def enumerate_mis(adj, n, meter=None):
    """All maximal independent sets as bitmasks, sorted by member tuple.

    Bron-Kerbosch with pivoting, run on the complement adjacency.
    """
    full = (1 << n) - 1
    cadj = [full & ~adj[v] & ~(1 << v) for v in range(n)]
    out = []

    def bk(r, p, x):
        if meter is not None:
            meter.charge()
        if p == 0 and x == 0:
            out.append(r)
            return
        # pivot: maximize candidates eliminated; lowest such vertex on ties
        px = p | x
        best_u = -1
        best_cnt = -1
        m = px
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            cnt = (p & cadj[u]).bit_count()
            if cnt > best_cnt:
                best_cnt = cnt
                best_u = u
        m = p & ~cadj[best_u]
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            bk(r | low, p & cadj[v], x & cadj[v])
            p ^= low
            x |= low

    bk(0, full, 0)
    out.sort(key=_members)
    return out
