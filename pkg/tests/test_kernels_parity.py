"""The compiled kernels must be bit-for-bit interchangeable with the
pure-Python ones, including on graphs too large for the 64-bit fast path."""

import pytest

from ultrafree import BACKEND
from ultrafree._kernels import fallback
from ultrafree.budget import BudgetExceeded, SearchBudget
from ultrafree.constructions import random_graph
from ultrafree.graphs import Graph

core = pytest.importorskip(
    "ultrafree._kernels._core", reason="compiled backend not built"
)

CASES = [Graph(0), Graph(1), Graph.complete(5), Graph.cycle(9)]
CASES += [random_graph(n, num, den, seed) for n, num, den, seed in [
    (12, 1, 4, 1),
    (18, 1, 2, 2),
    (24, 3, 4, 3),
    (40, 1, 3, 4),
    (63, 1, 5, 5),
    (64, 1, 5, 6),
    (70, 1, 6, 7),  # beyond the word size: exercises the delegation path
]]


def test_backend_label():
    assert BACKEND in ("pure", "compiled")


@pytest.mark.parametrize("G", CASES, ids=lambda g: f"n{g.n}m{g.edge_count()}")
def test_count_and_list_cliques(G):
    full = G.full_mask
    for b in (1, 2, 3, 4):
        assert core.count_cliques(G.adj, b, full, None) == fallback.count_cliques(
            G.adj, b, full, None
        )
    for b in (0, 1, 2, 3):
        assert core.list_cliques(G.adj, b, full, None) == fallback.list_cliques(
            G.adj, b, full, None
        )


@pytest.mark.parametrize("G", CASES, ids=lambda g: f"n{g.n}m{g.edge_count()}")
def test_max_clique(G):
    got = core.max_clique(G.adj, G.full_mask, None)
    want = fallback.max_clique(G.adj, G.full_mask, None)
    assert got == want


@pytest.mark.parametrize("G", [g for g in CASES if g.n <= 40], ids=lambda g: f"n{g.n}")
def test_chromatic(G):
    assert core.chromatic_number(G.adj, G.n, None) == fallback.chromatic_number(
        G.adj, G.n, None
    )


@pytest.mark.parametrize("G", [g for g in CASES if g.n <= 64], ids=lambda g: f"n{g.n}")
def test_enumerate_mis(G):
    assert core.enumerate_mis(G.adj, G.n, None) == fallback.enumerate_mis(
        G.adj, G.n, None
    )


def test_restricted_masks_agree():
    G = random_graph(20, 1, 2, 11)
    for mask in (0, 0b1111, 0b1010101010, G.full_mask >> 3):
        for b in (1, 2, 3):
            assert core.count_cliques(G.adj, b, mask, None) == fallback.count_cliques(
                G.adj, b, mask, None
            )
            assert core.list_cliques(G.adj, b, mask, None) == fallback.list_cliques(
                G.adj, b, mask, None
            )
        assert core.max_clique(G.adj, mask, None) == fallback.max_clique(
            G.adj, mask, None
        )


def test_budget_respected_by_both():
    G = random_graph(40, 1, 2, 12)
    for mod in (core, fallback):
        meter = SearchBudget(max_nodes=5).meter("chromatic_number")
        with pytest.raises(BudgetExceeded):
            mod.chromatic_number(G.adj, G.n, meter)
