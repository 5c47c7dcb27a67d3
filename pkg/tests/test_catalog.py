import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings

from ultrafree.catalog import (
    all_graphs,
    canonical_form,
    connected_graphs,
    is_isomorphic,
    seeded_random_graphs,
)
from ultrafree.graphs import Graph

import oracles


def relabel(G, perm):
    adj = [0] * G.n
    for u, v in G.edges():
        adj[perm[u]] |= 1 << perm[v]
        adj[perm[v]] |= 1 << perm[u]
    return Graph.from_masks(adj)


class TestCanonicalForm:
    def test_trivial(self):
        assert canonical_form(Graph(0)) == ()
        assert canonical_form(Graph(1)) == (0,)
        assert canonical_form(Graph.complete(2)) == (2, 1)

    def test_permutation_invariant(self):
        rng = random.Random(7)
        for _ in range(30):
            n = rng.randrange(1, 8)
            G = Graph(
                n,
                [
                    (u, v)
                    for u, v in combinations(range(n), 2)
                    if rng.random() < 0.5
                ],
            )
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_form(relabel(G, perm)) == canonical_form(G)

    def test_idempotent(self):
        for G in all_graphs(5):
            cert = canonical_form(G)
            assert canonical_form(Graph.from_masks(cert)) == cert

    def test_catalog_already_canonical(self):
        for G in all_graphs(4):
            assert G.adj == canonical_form(G)

    def test_separates_at_n5(self):
        # certificates agree exactly when a brute-force bijection exists
        level = all_graphs(5)
        for G, H in combinations(level, 2):
            assert canonical_form(G) != canonical_form(H)
            assert not oracles.isomorphic(G, H)


class TestIsIsomorphic:
    def test_basic(self):
        assert is_isomorphic(Graph.cycle(5), relabel(Graph.cycle(5), [2, 4, 1, 3, 0]))
        assert not is_isomorphic(Graph.cycle(5), Graph.path(5))
        assert not is_isomorphic(Graph(3), Graph(4))

    def test_matches_brute(self):
        rng = random.Random(11)
        graphs5 = all_graphs(5)
        for _ in range(40):
            G, H = rng.choice(graphs5), rng.choice(graphs5)
            perm = list(range(5))
            rng.shuffle(perm)
            H2 = relabel(H, perm)
            assert is_isomorphic(G, H2) == oracles.isomorphic(G, H2)

    @given(oracles.graphs(max_n=6))
    @settings(max_examples=50, deadline=None)
    def test_reflexive_under_relabeling(self, G):
        perm = list(range(G.n))
        random.Random(G.n).shuffle(perm)
        assert is_isomorphic(G, relabel(G, perm))


class TestAllGraphs:
    def test_counts(self):
        # https://oeis.org/A000088
        assert [len(all_graphs(n)) for n in range(8)] == [
            1, 1, 2, 4, 11, 34, 156, 1044,
        ]

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            all_graphs(-1)

    def test_level_is_fresh_list(self):
        a = all_graphs(3)
        a.append(Graph(0))
        assert len(all_graphs(3)) == 4

    def test_pairwise_nonisomorphic_n4(self):
        level = all_graphs(4)
        for G, H in combinations(level, 2):
            assert not oracles.isomorphic(G, H)

    def test_complete_n4(self):
        # every 4-vertex graph appears: 2^C(4,2) labelings collapse to 11
        seen = set()
        for bits in range(1 << 6):
            pairs = list(combinations(range(4), 2))
            G = Graph(4, [pairs[i] for i in range(6) if bits >> i & 1])
            seen.add(canonical_form(G))
        assert len(seen) == 11
        assert seen == {G.adj for G in all_graphs(4)}


class TestConnectedGraphs:
    def test_counts(self):
        # https://oeis.org/A001349 partial sums by level
        got = connected_graphs(7)
        by_n = {}
        for G in got:
            by_n[G.n] = by_n.get(G.n, 0) + 1
        assert [by_n[n] for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]
        assert len(got) == 996

    def test_all_connected(self):
        assert all(G.is_connected() for G in connected_graphs(5))


class TestSeededRandom:
    def test_deterministic(self):
        a = seeded_random_graphs(20, 10, 123)
        b = seeded_random_graphs(20, 10, 123)
        assert a == b

    def test_seed_matters(self):
        assert seeded_random_graphs(20, 10, 1) != seeded_random_graphs(20, 10, 2)

    def test_bounds(self):
        for G in seeded_random_graphs(50, 9, 5):
            assert 1 <= G.n <= 9
