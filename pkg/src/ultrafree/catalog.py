"""Exhaustive small-graph catalogs and canonical forms.

Graphs are canonicalized by iterated neighborhood-color refinement with
individualization on the first non-singleton cell; the certificate is
the minimum relabeled adjacency tuple over the search leaves.  The
catalog generates all graphs up to isomorphism level by level (every
n-vertex graph is an (n-1)-vertex graph plus one vertex) and keeps the
connected ones.
"""

from __future__ import annotations

import random

from .constructions import random_graph
from .graphs import Graph

__all__ = [
    "canonical_form",
    "is_isomorphic",
    "all_graphs",
    "connected_graphs",
    "seeded_random_graphs",
]


def _refine(adj, colors):
    n = len(adj)
    while True:
        keys = []
        for v in range(n):
            seen: dict[int, int] = {}
            nb = adj[v]
            while nb:
                low = nb & -nb
                nb ^= low
                c = colors[low.bit_length() - 1]
                seen[c] = seen.get(c, 0) + 1
            keys.append((colors[v], tuple(sorted(seen.items()))))
        rank = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [rank[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def _certificate(adj, colors):
    # discrete coloring: colors is a bijection onto 0..n-1
    n = len(adj)
    out = [0] * n
    for v in range(n):
        nb = adj[v]
        m = 0
        while nb:
            low = nb & -nb
            nb ^= low
            m |= 1 << colors[low.bit_length() - 1]
        out[colors[v]] = m
    return tuple(out)


def canonical_form(G: Graph) -> tuple[int, ...]:
    """Adjacency masks of a canonical relabeling; equal for isomorphic
    graphs and distinct otherwise."""
    n = G.n
    if n == 0:
        return ()
    adj = G.adj
    best = None

    def dfs(colors):
        nonlocal best
        colors = _refine(adj, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            cert = _certificate(adj, colors)
            if best is None or cert < best:
                best = cert
            return
        for v in target:
            child = list(colors)
            child[v] = n  # fresh color, renormalized by the next refine
            dfs(child)

    dfs([0] * n)
    return best


def is_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or G.edge_count() != H.edge_count():
        return False
    if sorted(m.bit_count() for m in G.adj) != sorted(m.bit_count() for m in H.adj):
        return False
    return canonical_form(G) == canonical_form(H)


_LEVELS: list[list[Graph]] = [[Graph(0)]]


def all_graphs(n: int) -> list[Graph]:
    """All graphs on n vertices up to isomorphism, canonical labels."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    while len(_LEVELS) <= n:
        m = len(_LEVELS)
        seen: dict[tuple[int, ...], Graph] = {}
        for G in _LEVELS[m - 1]:
            for nb in range(1 << (m - 1)):
                adj = list(G.adj) + [nb]
                for v in range(m - 1):
                    if nb >> v & 1:
                        adj[v] |= 1 << (m - 1)
                cert = canonical_form(Graph.from_masks(adj))
                if cert not in seen:
                    seen[cert] = Graph.from_masks(cert)
        _LEVELS.append([seen[c] for c in sorted(seen)])
    return list(_LEVELS[n])


def connected_graphs(max_n: int) -> list[Graph]:
    """All connected graphs with 1 <= n <= max_n, up to isomorphism."""
    out = []
    for n in range(1, max_n + 1):
        out.extend(G for G in all_graphs(n) if G.is_connected())
    return out


def seeded_random_graphs(count: int, max_n: int, seed: int) -> list[Graph]:
    """Reproducible random graphs with 1 <= n <= max_n."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randrange(1, max_n + 1)
        num, den = rng.choice(((1, 4), (1, 2), (3, 4)))
        out.append(random_graph(n, num, den, rng.randrange(1 << 30)))
    return out
