import pytest
from hypothesis import given, settings, strategies as st

from xconn.families import build, generate
from xconn.graph import (Graph, GraphError, closed_neighborhood, complete, components, cycle,
                         is_connected, is_k_regular, min_degree, neighbors, open_boundary, path,
                         read_edge_list, write_edge_list)
from xconn.named import mcgee, petersen


def test_neighbors():
    assert neighbors(cycle(5), 0) == {1, 4}
    assert neighbors(complete(4), 2) == {0, 1, 3}
    # outer cycle 0..4 plus spoke 0-5
    assert neighbors(petersen(), 0) == {1, 4, 5}
    with pytest.raises(GraphError):
        neighbors(cycle(5), 5)


def test_open_boundary():
    assert open_boundary(cycle(5), {0, 1}) == {2, 4}
    assert open_boundary(cycle(5), range(5)) == frozenset()
    assert open_boundary(cycle(6), {0, 2, 4}) == {1, 3, 5}
    with pytest.raises(GraphError):
        open_boundary(cycle(5), {7})


def test_closed_neighborhood():
    assert closed_neighborhood(cycle(5), {0}) == {4, 0, 1}
    assert closed_neighborhood(complete(4), {0}) == {0, 1, 2, 3}
    P = petersen()
    assert all(len(closed_neighborhood(P, {u})) == 4 for u in range(10))


def test_components():
    assert components(cycle(6), {0, 3}) == [{1, 2}, {4, 5}]
    assert components(cycle(6), set()) == [frozenset(range(6))]
    assert components(complete(4), {0}) == [{1, 2, 3}]
    assert components(path(5), {1, 3}) == [{0}, {2}, {4}]


def test_regularity():
    assert is_k_regular(cycle(7)) == 2
    assert is_k_regular(petersen()) == 3
    assert is_k_regular(path(4)) is None
    assert min_degree(path(4)) == 1


@pytest.mark.parametrize("spec, n, m", [
    ("cycle:5", 5, 5),
    ("path:4", 4, 3),
    ("complete:5", 5, 10),
    ("petersen", 10, 15),
    ("heawood", 14, 21),
    ("mcgee", 24, 36),
    ("strong(cycle:5,cycle:5)", 25, 100),
    ("cartesian(path:2,path:3)", 6, 7),
    ("strong(strong(path:2,path:2),path:2)", 8, 28),
])
def test_generate_sizes(spec, n, m):
    G = generate(spec)
    assert (G.n, G.m) == (n, m)
    G.validate()


@pytest.mark.parametrize("spec", ["cycle:2", "blob", "cycle:x", "strong(cycle:5)", "path:0",
                                  "strong(cycle:5,cycle:5"])
def test_generate_errors(spec):
    with pytest.raises(GraphError):
        build(spec)


def test_named_graphs_match_networkx():
    nx = pytest.importorskip("networkx")
    from xconn.named import heawood
    assert nx.is_isomorphic(nx.Graph(list(petersen().edges())), nx.petersen_graph())
    assert nx.is_isomorphic(nx.Graph(list(heawood().edges())), nx.heawood_graph())
    assert nx.is_isomorphic(nx.Graph(list(mcgee().edges())), nx.LCF_graph(24, [12, 7, -7], 8))


def test_graph_is_immutable():
    G = cycle(4)
    with pytest.raises(AttributeError):
        G.n = 3


def test_edge_list_read():
    G = read_edge_list("p 3 3\ne 0 1\ne 1 2\ne 0 2\n")
    assert G == complete(3)


def test_edge_list_comments_and_blanks():
    G = read_edge_list("# triangle\n\np 3 3\ne 0 1  # first\n\ne 1 2\ne 0 2\n")
    assert G == complete(3)


def test_edge_list_round_trip():
    text = "p 4 3\ne 2 3\ne 0 1\ne 1 2\n"
    G = read_edge_list(text)
    assert write_edge_list(G) == "p 4 3\ne 0 1\ne 1 2\ne 2 3\n"
    assert read_edge_list(write_edge_list(G)) == G


@pytest.mark.parametrize("text, msg", [
    ("p 3 1\ne 0 0\n", "self-loop"),
    ("p 3 2\ne 0 1\ne 0 1\n", "duplicate"),
    ("p 3 1\ne 0 3\n", "0 <= u < v < n"),
    ("p 3 1\ne 1 0\n", "0 <= u < v < n"),
    ("p 3\ne 0 1\n", "header"),
    ("e 0 1\n", "before header"),
    ("p 3 2\ne 0 1\n", "declares 2"),
    ("p 3 1\nx 0 1\n", "unknown record"),
])
def test_edge_list_errors(text, msg):
    with pytest.raises(GraphError, match=msg):
        read_edge_list(text)


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@settings(max_examples=150, deadline=None)
@given(graphs(), st.data())
def test_graph_properties(G, data):
    G.validate()
    assert sum(G.degree(u) for u in range(G.n)) == 2 * G.m
    A = data.draw(st.sets(st.integers(0, G.n - 1)))
    assert len(open_boundary(G, A)) + len(A) == len(closed_neighborhood(G, A))
    assert not open_boundary(G, A) & A
    assert (len(components(G)) == 1) == is_connected(G)
    parts = components(G, A)
    assert frozenset().union(*parts) == frozenset(range(G.n)) - A if parts else len(A) == G.n
    assert [min(p) for p in parts] == sorted(min(p) for p in parts)


def test_graph_pickles():
    import pickle
    G = petersen()
    H = pickle.loads(pickle.dumps(G))
    assert H == G and H.name == G.name and H.masks == G.masks
