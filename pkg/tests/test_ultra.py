from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from ultrafree.budget import BudgetExceeded, SearchBudget
from ultrafree.constructions import blowup, half_min, turan
from ultrafree.errors import InternalContradiction, PreconditionViolated
from ultrafree.graphs import Graph, is_maximal_kr_free
from ultrafree.ultra import (
    BiInducedMatching,
    HalfGraphEmbedding,
    UltraCertificate,
    build_half_from_matching,
    check_vc_clique_bound,
    find_half_graph,
    is_eps_ultra,
    nu_bi,
    ultra_parameter,
)

import oracles

C5 = Graph.cycle(5)


class TestUltraParameter:
    def test_c5(self):
        cert = ultra_parameter(C5, 3)
        assert cert == UltraCertificate(3, Fraction(1, 5), (0, 2, 1))
        assert cert.admits(Fraction(1, 5))
        assert cert.admits(Fraction(1, 6))
        assert not cert.admits(Fraction(1, 4))

    def test_no_nonadjacent_pair(self):
        cert = ultra_parameter(Graph.complete(4), 5)
        assert cert.epsilon_star is None and cert.worst_pair is None
        assert cert.admits(100)

    def test_rejects(self):
        with pytest.raises(ValueError):
            ultra_parameter(C5, 2)
        with pytest.raises(PreconditionViolated, match="3-clique"):
            ultra_parameter(Graph.complete(3), 3)

    @given(oracles.graphs(max_n=7), st.integers(3, 4))
    @settings(max_examples=60, deadline=None)
    def test_match_brute(self, G, r):
        if oracles.cliques(G, r):
            return
        cert = ultra_parameter(G, r)
        assert cert.epsilon_star == oracles.epsilon_star(G, r)
        if cert.worst_pair is not None:
            u, v, count = cert.worst_pair
            assert not G.has_edge(u, v) and u != v
            assert Fraction(count, G.n ** (r - 2)) == cert.epsilon_star


class TestIsEpsUltra:
    def test_c5(self):
        assert is_eps_ultra(C5, 3, Fraction(1, 5))
        assert not is_eps_ultra(C5, 3, Fraction(1, 4))

    def test_clique_present_is_false(self):
        # not a precondition failure here: the predicate just fails
        assert not is_eps_ultra(Graph.complete(3), 3, Fraction(1, 2))

    def test_half_graph_is_not_ultra(self):
        G = half_min(2)
        assert not is_eps_ultra(G, 3, Fraction(1, 100))

    def test_rejects_nonpositive_eps(self):
        with pytest.raises(ValueError):
            is_eps_ultra(C5, 3, 0)

    @given(oracles.graphs(max_n=6, min_n=1))
    @settings(max_examples=60, deadline=None)
    def test_ultra_implies_maximal(self, G):
        if is_eps_ultra(G, 3, Fraction(1, max(G.n, 1) ** 2)):
            assert is_maximal_kr_free(G, 3)


class TestHalfGraphEmbedding:
    def test_identity_on_half_min(self):
        k = 4
        G = half_min(k)
        emb = HalfGraphEmbedding(tuple(range(k)), tuple(range(k, 2 * k)))
        emb.validate(G)

    def test_rejects(self):
        with pytest.raises(ValueError, match="equal length"):
            HalfGraphEmbedding((0,), (1, 2)).validate(C5)
        with pytest.raises(ValueError, match="distinct"):
            HalfGraphEmbedding((0, 1), (2, 0)).validate(C5)
        with pytest.raises(ValueError, match="non-edge"):
            HalfGraphEmbedding((0,), (1,)).validate(C5)
        with pytest.raises(ValueError, match="must be an edge"):
            HalfGraphEmbedding((0, 1), (3, 4)).validate(C5)


class TestBiInducedMatching:
    def test_empty_and_single(self):
        BiInducedMatching(()).validate(C5)
        BiInducedMatching(((0, 1),)).validate(C5)

    def test_c5_pair(self):
        BiInducedMatching(((0, 1), (3, 2))).validate(C5)

    def test_rejects(self):
        with pytest.raises(ValueError, match="distinct"):
            BiInducedMatching(((0, 1), (1, 2))).validate(C5)
        with pytest.raises(ValueError, match="pattern"):
            BiInducedMatching(((0, 2),)).validate(C5)  # diagonal must be an edge
        with pytest.raises(ValueError, match="pattern"):
            BiInducedMatching(((0, 1), (2, 3))).validate(C5)  # edge (2,1) off-diagonal


class TestNuBi:
    def test_c5(self):
        assert nu_bi(C5) == (2, BiInducedMatching(((0, 1), (3, 2))))

    def test_small(self):
        assert nu_bi(Graph(3)) == (0, BiInducedMatching(()))
        assert nu_bi(Graph.complete(4))[0] == 1
        # two parts of size >= 2 allow the swap pattern (a,b),(b',a')
        assert nu_bi(turan(6, 3))[0] == 2
        assert nu_bi(half_min(2))[0] == 1

    def test_blowup_grows_value(self):
        B, _ = blowup(C5, [2] * 5)
        assert nu_bi(B)[0] == 3

    @given(oracles.graphs(max_n=6))
    @settings(max_examples=40, deadline=None)
    def test_match_brute(self, G):
        k, witness = nu_bi(G)
        assert k == oracles.nu_bi(G)
        assert len(witness.pairs) == k
        witness.validate(G)

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            nu_bi(Graph.cycle(9), SearchBudget(max_nodes=2))


class TestFindHalfGraph:
    def test_half_min_found(self):
        for k in (1, 2, 3):
            emb = find_half_graph(half_min(k), k)
            assert emb is not None and len(emb.xs) == k
            emb.validate(half_min(k))

    def test_c5(self):
        emb = find_half_graph(C5, 2)
        assert emb is not None
        emb.validate(C5)

    def test_too_large(self):
        assert find_half_graph(C5, 3) is None

    def test_complete_has_none(self):
        assert find_half_graph(Graph.complete(4), 1) is None

    def test_single_nonedge(self):
        assert find_half_graph(Graph(2), 1) == HalfGraphEmbedding((0,), (1,))

    def test_rejects(self):
        with pytest.raises(ValueError):
            find_half_graph(C5, 0)

    @given(oracles.graphs(max_n=6), st.integers(1, 3))
    @settings(max_examples=40, deadline=None)
    def test_found_embeddings_validate(self, G, k):
        emb = find_half_graph(G, k)
        if emb is not None:
            emb.validate(G)


def _crafted():
    # four matched pairs (i, i+4) plus two heads 8 and 9 whose neighborhoods
    # drive the pigeonhole rounds deterministically
    return Graph(
        10,
        [(0, 4), (1, 5), (2, 6), (3, 7), (8, 1), (8, 2), (8, 4), (9, 2), (9, 5)],
    )


CRAFTED_M = BiInducedMatching(((0, 4), (1, 5), (2, 6), (3, 7)))


class TestBuildHalf:
    def test_success(self):
        emb = build_half_from_matching(_crafted(), CRAFTED_M, 3, 1, trust_ultra=True)
        assert emb == HalfGraphEmbedding((0, 1), (8, 9))
        emb.validate(_crafted())

    def test_accepts_plain_pairs(self):
        emb = build_half_from_matching(
            _crafted(), [(0, 4), (1, 5), (2, 6), (3, 7)], 3, 1, trust_ultra=True
        )
        assert emb == HalfGraphEmbedding((0, 1), (8, 9))

    def test_out_of_cliques(self):
        G = _crafted()
        edges = [e for e in G.edges() if e != (2, 9)]
        broken = Graph(10, edges)
        with pytest.raises(InternalContradiction, match="pigeonhole") as exc:
            build_half_from_matching(broken, CRAFTED_M, 3, 1, trust_ultra=True)
        assert exc.value.witness == (1, 5)

    def test_exposed_clique(self):
        G = _crafted()
        bulked = G.with_edge(0, 8)
        with pytest.raises(InternalContradiction, match="dominates") as exc:
            build_half_from_matching(bulked, CRAFTED_M, 3, 1, trust_ultra=True)
        assert exc.value.witness == (0, 4, 8)

    def test_matching_too_small(self):
        with pytest.raises(PreconditionViolated, match="below 2/eps"):
            build_half_from_matching(
                C5, BiInducedMatching(((0, 1), (3, 2))), 3, Fraction(1, 5)
            )

    def test_not_ultra(self):
        G = half_min(2)
        with pytest.raises(PreconditionViolated, match="not eps-ultra"):
            build_half_from_matching(
                G, BiInducedMatching(((1, 2),)), 3, Fraction(3, 2)
            )

    def test_invalid_matching(self):
        with pytest.raises(PreconditionViolated, match="not a bipartite"):
            build_half_from_matching(C5, [(0, 1), (1, 2)], 3, 1, trust_ultra=True)

    def test_rejects(self):
        with pytest.raises(ValueError, match="eps"):
            build_half_from_matching(C5, CRAFTED_M, 3, 0)
        with pytest.raises(ValueError, match="eps"):
            build_half_from_matching(C5, CRAFTED_M, 3, 2)
        with pytest.raises(ValueError, match="r >= 3"):
            build_half_from_matching(C5, CRAFTED_M, 2, 1)


class TestVcCliqueBound:
    def test_c5(self):
        R = check_vc_clique_bound(C5, 3, Fraction(1, 5))
        assert R.passed
        assert [c.name for c in R.checks] == [
            "neighborhood-vc-bound",
            "ultra-precondition",
        ]
        vc_check = R.checks[0]
        assert vc_check.value == {"vc": 2, "bound": Fraction(5), "r": 3}

    def test_eps_beyond_parameter(self):
        with pytest.raises(PreconditionViolated, match="exceeds"):
            check_vc_clique_bound(C5, 3, Fraction(1, 4))

    def test_clique_present(self):
        with pytest.raises(PreconditionViolated):
            check_vc_clique_bound(Graph.complete(3), 3, 1)

    def test_rejects_nonpositive_eps(self):
        with pytest.raises(ValueError):
            check_vc_clique_bound(C5, 3, 0)
