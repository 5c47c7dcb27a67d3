"""Independent brute-force references for the exact solvers.

Everything here recomputes from the definitions with itertools and no
pruning, sharing no code with the package internals.  Slow on purpose;
keep the inputs small.
"""

from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb

from hypothesis import strategies as st

from ultrafree.graphs import Graph


def is_clique(G, vs):
    return all(G.has_edge(u, v) for u, v in combinations(vs, 2))


def is_independent(G, vs):
    return all(not G.has_edge(u, v) for u, v in combinations(vs, 2))


def cliques(G, b, within=None):
    pool = range(G.n) if within is None else sorted(within)
    return [vs for vs in combinations(pool, b) if is_clique(G, vs)]


def clique_number(G):
    return max((b for b in range(1, G.n + 1) if cliques(G, b)), default=0)


def chromatic_number(G):
    if G.n == 0:
        return 0
    for k in range(1, G.n + 1):
        for colors in product(range(k), repeat=G.n):
            if all(colors[u] != colors[v] for u, v in G.edges()):
                return k
    raise AssertionError("n colors always suffice")


def maximal_independent_sets(G):
    out = []
    for r in range(G.n + 1):
        for vs in combinations(range(G.n), r):
            if not is_independent(G, vs):
                continue
            chosen = set(vs)
            if any(
                is_independent(G, vs + (w,)) for w in range(G.n) if w not in chosen
            ):
                continue
            out.append(vs)
    return sorted(out)


def transversal_number(F):
    if any(s == 0 for s in F.sets):
        raise ValueError("empty member admits no transversal")
    for k in range(F.ground + 1):
        for pts in combinations(range(F.ground), k):
            m = 0
            for p in pts:
                m |= 1 << p
            if all(s & m for s in F.sets):
                return k
    raise AssertionError("the whole ground is always a transversal")


def matching_number(F):
    best = 0
    for k in range(len(F.sets) + 1):
        for idxs in combinations(range(len(F.sets)), k):
            union = 0
            for i in idxs:
                if F.sets[i] & union:
                    break
                union |= F.sets[i]
            else:
                best = k
    return best


def vc_dimension(F):
    best = 0
    for k in range(1, F.ground + 1):
        for pts in combinations(range(F.ground), k):
            m = 0
            for p in pts:
                m |= 1 << p
            if len({s & m for s in F.sets}) == 1 << k:
                best = k
    return best


def max_shattered_sets(F):
    """All shattered point tuples of maximum size."""
    d = vc_dimension(F)
    if d == 0:
        return [()]
    out = []
    for pts in combinations(range(F.ground), d):
        m = 0
        for p in pts:
            m |= 1 << p
        if len({s & m for s in F.sets}) == 1 << d:
            out.append(pts)
    return out


def helly_number(F):
    # conventions match the library: 0 for the empty family, 1 when the
    # whole family shares a point
    if not F.sets:
        return 0
    full = (1 << F.ground) - 1

    def inter(idxs):
        x = full
        for i in idxs:
            x &= F.sets[i]
        return x

    if inter(range(len(F.sets))):
        return 1
    best = 0
    for k in range(1, len(F.sets) + 1):
        for idxs in combinations(range(len(F.sets)), k):
            if inter(idxs):
                continue
            # a singleton is minimal by convention even over an empty
            # ground, where inter(()) == 0 would deny it
            if k == 1 or all(inter(idxs[:j] + idxs[j + 1:]) for j in range(k)):
                best = max(best, k)
    return best


def pq_property(F, p, q):
    full = (1 << F.ground) - 1

    def inter(idxs):
        x = full
        for i in idxs:
            x &= F.sets[i]
        return x

    return all(
        any(inter(sub) for sub in combinations(idxs, q))
        for idxs in combinations(range(len(F.sets)), p)
    )


def maximal_intersecting(F):
    full = (1 << F.ground) - 1
    good = []
    for k in range(1, len(F.sets) + 1):
        for idxs in combinations(range(len(F.sets)), k):
            x = full
            for i in idxs:
                x &= F.sets[i]
            if x:
                good.append(frozenset(idxs))
    maximal = [g for g in good if not any(g < h for h in good)]
    return sorted(tuple(sorted(g)) for g in maximal)


def nu_bi(G):
    darts = [(u, v) for u, v in G.edges()] + [(v, u) for u, v in G.edges()]
    best = 0
    for k in range(1, G.n // 2 + 1):
        found = False
        for sel in combinations(darts, k):
            flat = [x for pair in sel for x in pair]
            if len(set(flat)) != 2 * k:
                continue
            if all(
                G.has_edge(sel[i][0], sel[j][1]) == (i == j)
                for i in range(k)
                for j in range(k)
            ):
                found = True
                break
        if not found:
            break
        best = k
    return best


def epsilon_star(G, r):
    vals = []
    for u, v in G.non_edges():
        common = [
            w for w in range(G.n) if G.has_edge(u, w) and G.has_edge(v, w)
        ]
        vals.append(Fraction(len(cliques(G, r - 2, within=common)), G.n ** (r - 2)))
    return min(vals, default=None)


def codegree_min(G, a):
    sizes = [
        sum(1 for w in range(G.n) if all(G.has_edge(v, w) for v in I))
        for I in combinations(range(G.n), a)
        if is_independent(G, I)
    ]
    return min(sizes, default=None)


def clique_codensity(G, a, b):
    best = None
    for I in combinations(range(G.n), a):
        if not is_independent(G, I):
            continue
        common = [w for w in range(G.n) if all(G.has_edge(v, w) for v in I)]
        if len(common) < b:
            dens = Fraction(0)
        else:
            dens = Fraction(len(cliques(G, b, within=common)), comb(len(common), b))
        if best is None or dens < best:
            best = dens
    return best


def isomorphic(G, H):
    if G.n != H.n or G.edge_count() != H.edge_count():
        return False
    return any(
        all(
            G.has_edge(u, v) == H.has_edge(perm[u], perm[v])
            for u, v in combinations(range(G.n), 2)
        )
        for perm in permutations(range(G.n))
    )


@st.composite
def graphs(draw, max_n=8, min_n=0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    flags = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, f in zip(pairs, flags) if f])


@st.composite
def set_systems(draw, max_ground=6, max_sets=6):
    ground = draw(st.integers(min_value=0, max_value=max_ground))
    masks = draw(
        st.lists(
            st.integers(min_value=0, max_value=(1 << ground) - 1),
            min_size=0,
            max_size=max_sets,
        )
    )
    from ultrafree.setsystems import SetSystem

    return SetSystem.from_masks(ground, tuple(masks))
