"""Abstract convexity spaces over finite point sets.

A space is given by its generating sets; the convex sets are all
intersections of generators, plus the empty set and the full ground by
convention.  Hulls therefore never materialize the closure: conv Y is the
intersection of the generators containing Y.

Three kinds are built in: the space derived from a graph (points are the
maximal independent sets, generators are the per-vertex stars), the
subcube space over {0,1}^n, and explicit spaces from any set system.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .budget import SearchBudget
from .graphs import Graph, members
from . import graphs as _graphs
from . import setsystems as _ss
from .reports import Check, Report, digest_of

__all__ = [
    "ConvexitySpace",
    "Measure",
    "mis_space",
    "subcube_space",
    "explicit_space",
    "convex_hull",
    "radon_number",
    "radon_partition",
    "space_helly_number",
    "weak_eps_net",
    "verify_correspondence",
]


class Measure:
    """Finitely supported probability measure on the points of a space."""

    __slots__ = ("weights",)

    def __init__(self, weights):
        w = {int(p): Fraction(x) for p, x in dict(weights).items()}
        if any(x < 0 for x in w.values()):
            raise ValueError("measure weights must be nonnegative")
        if sum(w.values(), Fraction(0)) != 1:
            raise ValueError("measure must sum to exactly 1")
        self.weights = {p: x for p, x in w.items() if x}

    @classmethod
    def uniform(cls, size: int) -> "Measure":
        if size < 1:
            raise ValueError("need at least one point")
        return cls({p: Fraction(1, size) for p in range(size)})

    def mass(self, mask: int) -> Fraction:
        return sum(
            (x for p, x in self.weights.items() if mask >> p & 1), Fraction(0)
        )


class ConvexitySpace:
    """Points 0..ground_size-1 plus generating sets (as a SetSystem).

    ``points`` carries per-point payloads: the vertex mask of the maximal
    independent set for graph spaces, the coordinate code for subcube
    spaces, and the point index itself for explicit spaces.
    """

    __slots__ = ("tag", "generators", "points", "graph")

    def __init__(self, tag: str, generators: _ss.SetSystem, points, graph=None):
        if tag not in ("from_graph", "subcubes", "explicit"):
            raise ValueError(f"unknown space kind {tag!r}")
        self.tag = tag
        self.generators = generators
        self.points = tuple(points)
        self.graph = graph

    @property
    def ground_size(self) -> int:
        return self.generators.ground

    @property
    def full_mask(self) -> int:
        return (1 << self.ground_size) - 1

    def hull_mask(self, point_mask: int) -> int:
        """conv Y as a bitmask; conv of the empty set is empty."""
        if point_mask == 0:
            return 0
        out = self.full_mask
        for g in self.generators.sets:
            if g & point_mask == point_mask:
                out &= g
        return out

    def convex_sets(self, budget: SearchBudget | None = None) -> tuple[int, ...]:
        """All distinct nonempty convex sets (closure of the generators
        plus the full ground), sorted by member tuple."""
        meter = None if budget is None else budget.meter("convex_sets")
        gens = [g for g in set(self.generators.sets) if g]
        closure = set(gens)
        closure.add(self.full_mask)
        frontier = list(closure)
        while frontier:
            fresh = []
            for a in frontier:
                for g in gens:
                    if meter is not None:
                        meter.charge()
                    x = a & g
                    if x and x not in closure:
                        closure.add(x)
                        fresh.append(x)
            frontier = fresh
        return tuple(sorted(closure, key=members))


def mis_space(G: Graph, budget: SearchBudget | None = None) -> ConvexitySpace:
    """The convexity space of a graph: points are its maximal independent
    sets (lex order), generators are the stars of the vertices."""
    mis = _ss.mis_family(G, budget)
    stars = _ss.dual(mis)
    return ConvexitySpace("from_graph", stars, mis.sets, graph=G)


def subcube_space(n: int) -> ConvexitySpace:
    """The space of subcubes of {0,1}^n: points are coordinate codes in
    binary order, one generator per subcube (free/0/1 per coordinate)."""
    if n < 1:
        raise ValueError("need n >= 1")
    npoints = 1 << n
    masks = []
    for pattern in range(3**n):
        mask = 0
        for p in range(npoints):
            t = pattern
            ok = True
            for i in range(n):
                want = t % 3
                t //= 3
                if want != 2 and (p >> i & 1) != want:
                    ok = False
                    break
            if ok:
                mask |= 1 << p
        masks.append(mask)
    gens = _ss.SetSystem.from_masks(npoints, masks)
    return ConvexitySpace("subcubes", gens, range(npoints))


def explicit_space(F: _ss.SetSystem) -> ConvexitySpace:
    return ConvexitySpace("explicit", F, range(F.ground))


def _point_mask(S: ConvexitySpace, Y) -> int:
    m = 0
    for p in Y:
        if not 0 <= p < S.ground_size:
            raise ValueError(f"point {p} out of range")
        if m >> p & 1:
            raise ValueError(f"duplicate point {p}")
        m |= 1 << p
    return m


def convex_hull(S: ConvexitySpace, Y) -> tuple[int, ...]:
    """The points of conv Y."""
    return members(S.hull_mask(_point_mask(S, Y)))


def _split_points(pts: tuple[int, ...], selector: int):
    y2 = tuple(p for i, p in enumerate(pts[1:]) if selector >> i & 1)
    y1 = tuple(p for p in pts if p not in y2)
    return y1, y2


def _mis_hulls_cross_check(S: ConvexitySpace, y1, y2, intersects: bool) -> None:
    # Independent reformulation for graph spaces: the two hulls meet
    # exactly when no edge joins the intersections of the chosen sets.
    G = S.graph
    a = G.full_mask
    for p in y1:
        a &= S.points[p]
    b = G.full_mask
    for p in y2:
        b &= S.points[p]
    has_edge = any(G.adj[v] & b for v in members(a))
    if intersects != (not has_edge):
        raise RuntimeError("hull/edge reformulation mismatch on a graph space")


def _radon_split(S: ConvexitySpace, pts: tuple[int, ...]):
    """First bipartition (by binary counter) with intersecting hulls."""
    k = len(pts)
    check = S.tag == "from_graph"
    for selector in range(1, 1 << (k - 1)):
        y1, y2 = _split_points(pts, selector)
        h = S.hull_mask(_point_mask(S, y1)) & S.hull_mask(_point_mask(S, y2))
        if check:
            _mis_hulls_cross_check(S, y1, y2, bool(h))
        if h:
            return y1, y2
    return None


def radon_partition(S: ConvexitySpace, Y):
    """A partition of Y into two nonempty parts with intersecting hulls,
    or None.  Y must hold at least two distinct points."""
    given = tuple(Y)
    pts = tuple(sorted(set(given)))
    if len(pts) < 2 or len(pts) != len(given):
        raise ValueError("need at least two distinct points")
    return _radon_split(S, pts)


def radon_number(S: ConvexitySpace, cap: int):
    """Least r <= cap such that every set of r+1 points admits a partition
    into two nonempty parts with intersecting hulls; None beyond cap."""
    if not 1 <= cap <= S.ground_size:
        raise ValueError("cap must be between 1 and the number of points")
    for r in range(1, cap + 1):
        if all(
            _radon_split(S, pts) is not None
            for pts in combinations(range(S.ground_size), r + 1)
        ):
            return r
    return None


def space_helly_number(S: ConvexitySpace, budget: SearchBudget | None = None) -> int:
    """Helly number over the space's convex sets."""
    sets = S.convex_sets(budget)
    return _ss.helly_number(_ss.SetSystem.from_masks(S.ground_size, sets), budget)


def weak_eps_net(S: ConvexitySpace, mu: Measure, eps) -> tuple[int, ...]:
    """A point set meeting every convex set of measure >= eps.

    Greedy over the enumerated heavy convex sets: correct by construction,
    not guaranteed minimum.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    heavy = [c for c in S.convex_sets() if mu.mass(c) >= eps]
    net: list[int] = []
    while heavy:
        best_p = min(
            range(S.ground_size),
            key=lambda p: (-sum(1 for c in heavy if c >> p & 1), p),
        )
        net.append(best_p)
        heavy = [c for c in heavy if not c >> best_p & 1]
    return tuple(sorted(net))


def _graph_digest(G: Graph, *extra) -> str:
    return digest_of({"n": G.n, "edges": G.edges()}, *extra)


def verify_correspondence(G: Graph, r: int, budget: SearchBudget | None = None) -> Report:
    """Check the dictionary between a graph and its star system: coloring
    vs covering, cliques vs matchings, edges vs disjointness, clique
    freeness vs the (r,2)-property, and independence vs intersection."""
    stars = _ss.mis_star_system(G, budget)
    checks = []

    chi = _graphs.chromatic_number(G, budget)
    tau, tau_witness = _ss.transversal_number(stars, budget)
    checks.append(
        Check(
            "chromatic-equals-transversal",
            "chromatic-equals-transversal",
            "pass" if chi == tau else "fail",
            value={"chi": chi, "tau": tau},
            witness=None if chi == tau else {"transversal": tau_witness},
        )
    )

    omega = _graphs.clique_number(G, budget)
    nu, nu_witness = _ss.matching_number(stars, budget)
    checks.append(
        Check(
            "clique-equals-matching",
            "clique-equals-matching",
            "pass" if omega == nu else "fail",
            value={"omega": omega, "nu": nu},
            witness=None if omega == nu else {"matching": nu_witness},
        )
    )

    bad_pair = None
    for u, v in combinations(range(G.n), 2):
        disjoint = not stars.sets[u] & stars.sets[v]
        if G.has_edge(u, v) != disjoint:
            bad_pair = (u, v)
            break
    checks.append(
        Check(
            "edges-match-disjoint-stars",
            "edges-match-disjoint-stars",
            "pass" if bad_pair is None else "fail",
            witness=bad_pair,
        )
    )

    rebuilt = _ss.disjointness_graph(stars)
    same = rebuilt.n == G.n and rebuilt.adj == G.adj
    checks.append(
        Check(
            "disjointness-reconstructs-graph",
            "disjointness-reconstructs-graph",
            "pass" if same else "fail",
            witness=None if same else {"rebuilt_edges": rebuilt.edges()},
        )
    )

    free = _graphs.is_kr_free(G, r, budget)
    pq = _ss.has_pq_property(stars, r, 2)
    checks.append(
        Check(
            "clique-free-matches-pq",
            "clique-free-matches-pq",
            "pass" if free == pq else "fail",
            value={"r": r, "kr_free": free, "pq": pq},
            witness=None if free == pq else {"r": r},
        )
    )

    mis = _graphs.enumerate_mis(G, budget)
    maximal_stars = _ss.maximal_intersecting_subfamilies(stars)
    same_families = sorted(mis) == sorted(maximal_stars)
    checks.append(
        Check(
            "mis-match-maximal-stars",
            "mis-match-maximal-stars",
            "pass" if same_families else "fail",
            witness=None
            if same_families
            else {"mis": mis, "maximal_stars": maximal_stars},
        )
    )

    expected_h = 2 if G.edge_count() >= 1 else 1
    h = _ss.helly_number(stars, budget)
    checks.append(
        Check(
            "star-helly-matches-edges",
            "star-helly-matches-edges",
            "pass" if h == expected_h else "fail",
            value={"helly": h, "expected": expected_h},
            witness=None if h == expected_h else {"helly": h},
        )
    )

    return Report(_graph_digest(G, {"r": r}), checks)
