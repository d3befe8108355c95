from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from xconn.families import generate
from xconn.graph import Graph, GraphError, complete, cycle, is_connected, path
from xconn.invariants import (INF, girth, hypothesis_report, max_internally_disjoint_paths,
                              qualifying_g, vertex_connectivity, vertex_count_lower_bound)
from xconn.named import heawood, mcgee, petersen

from conftest import random_connected_graphs

nx = pytest.importorskip("networkx")


def _nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


@pytest.mark.parametrize("G, expected", [
    (cycle(7), 7), (path(5), INF), (petersen(), 5), (heawood(), 6), (mcgee(), 7),
    (complete(4), 3), (Graph(1, []), INF),
])
def test_girth_examples(G, expected):
    assert girth(G) == expected


def test_disjoint_paths_examples():
    assert max_internally_disjoint_paths(cycle(6), 0, 3) == 2
    assert max_internally_disjoint_paths(path(4), 0, 3) == 1
    assert max_internally_disjoint_paths(petersen(), 0, 2) == 3
    with pytest.raises(GraphError):
        max_internally_disjoint_paths(cycle(6), 0, 1)
    with pytest.raises(GraphError):
        max_internally_disjoint_paths(cycle(6), 2, 2)


@pytest.mark.parametrize("G, expected", [
    (complete(4), 3), (cycle(9), 2), (generate("strong(cycle:5,cycle:5)"), 8),
    (path(4), 1), (Graph(4, [(0, 1), (2, 3)]), 0), (petersen(), 3), (mcgee(), 3),
])
def test_vertex_connectivity_examples(G, expected):
    assert vertex_connectivity(G) == expected


def test_hypothesis_reports():
    r = hypothesis_report(cycle(5))
    assert (r.k, r.kappa, r.girth, r.qualifies_for_g) == (2, 2, 5, 1)
    assert hypothesis_report(cycle(7)).qualifies_for_g == 3
    r = hypothesis_report(mcgee())
    assert (r.k, r.kappa, r.girth, r.qualifies_for_g) == (3, 3, 7, 3)
    assert hypothesis_report(path(4)).k is None
    assert hypothesis_report(cycle(3)).qualifies_for_g is None
    assert qualifying_g(3, False, 7) is None


def test_vertex_count_bound():
    assert vertex_count_lower_bound(2, 5) == 5 == cycle(5).n
    assert vertex_count_lower_bound(3, 5) == 8 <= petersen().n
    assert vertex_count_lower_bound(3, 7) == 12 <= mcgee().n
    with pytest.raises(ValueError):
        vertex_count_lower_bound(1, 5)
    with pytest.raises(ValueError):
        vertex_count_lower_bound(3, 4)


def _brute_separator(G, x, y):
    others = [v for v in range(G.n) if v not in (x, y)]
    for s in range(len(others) + 1):
        for S in combinations(others, s):
            H = _nx(G)
            H.remove_nodes_from(S)
            if not nx.has_path(H, x, y):
                return s
    raise AssertionError("unreachable")


@pytest.mark.parametrize("G", random_connected_graphs(25, 9, seed=11))
def test_menger_equals_brute_force_separator(G):
    for x, y in combinations(range(G.n), 2):
        if not G.has_edge(x, y):
            assert max_internally_disjoint_paths(G, x, y) == _brute_separator(G, x, y)


@pytest.mark.parametrize("G", random_connected_graphs(60, 14, seed=5)
                         + [petersen(), heawood(), mcgee(), generate("strong(cycle:4,cycle:5)")])
def test_against_networkx(G):
    H = _nx(G)
    assert vertex_connectivity(G) == nx.node_connectivity(H)
    assert girth(G) == nx.girth(H)


@st.composite
def graphs(draw):
    n = draw(st.integers(2, 11))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph(n, draw(st.lists(st.sampled_from(pairs), unique=True)))


@settings(max_examples=120, deadline=None)
@given(graphs())
def test_connectivity_bounded_by_min_degree(G):
    k = vertex_connectivity(G)
    assert 0 <= k <= min(G.degree(u) for u in range(G.n))
    assert (k > 0) == is_connected(G)
