from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from balanced_slp.generate import octahedron, random_sphere
from balanced_slp.coloring import bicolor_from_3coloring
from balanced_slp.laman import SimpleGraph, blue_graph, brute_force_23_sparse, is_23_sparse

K3 = SimpleGraph.from_edges(combinations(range(3), 2))
K4 = SimpleGraph.from_edges(combinations(range(4), 2))


def test_small_graphs():
    assert is_23_sparse(K3).sparse
    v = is_23_sparse(K4)
    assert not v.sparse and v.violation == (0, 1, 2, 3) and v.violation_edges == 6
    assert brute_force_23_sparse(K4) == v
    assert brute_force_23_sparse(SimpleGraph.from_edges([(1, 2)])).sparse


def test_octahedron_blue_cycle():
    c, k = octahedron()
    g = blue_graph(c, bicolor_from_3coloring(k, 3))
    assert len(g.edges) == 4 and is_23_sparse(g).sparse


def test_blue_graph(subdivided_tet, tet_21):
    c, pi = subdivided_tet
    g = blue_graph(c, pi)
    assert g.edges == K4.edges.__class__((a + 1, b + 1) for a, b in K4.edges)
    assert blue_graph(c, {v: "r" for v in c.vertices}).edges == frozenset()
    t, tpi = tet_21
    assert blue_graph(t, tpi).edges == frozenset({(1, 2), (1, 3), (2, 3)})


def test_loops_rejected():
    with pytest.raises(ValueError):
        SimpleGraph.from_edges([(1, 1)])


@pytest.mark.parametrize("seed", range(200))
def test_random_graphs_agree(seed):
    rng = np.random.default_rng(seed)
    pairs = list(combinations(range(8), 2))
    dens = rng.uniform(0.2, 0.7)
    g = SimpleGraph.from_edges([e for e in pairs if rng.random() < dens], range(8))
    a, b = is_23_sparse(g), brute_force_23_sparse(g)
    assert a.sparse == b.sparse
    if not a.sparse:
        W = a.violation
        assert g.induced_edge_count(W) >= 2 * len(W) - 2


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 12).flatmap(
    lambda n: st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]))
))
def test_pebble_game_matches_brute_force(edges):
    g = SimpleGraph.from_edges(edges)
    assert is_23_sparse(g).sparse == brute_force_23_sparse(g).sparse


@pytest.mark.parametrize("n", [4, 5, 6, 8, 10])
def test_triangulation_graphs_not_sparse(n):
    c = random_sphere(n, n)
    g = SimpleGraph.from_edges(c.edges)
    assert len(g.edges) == 3 * n - 6
    assert not is_23_sparse(g).sparse
