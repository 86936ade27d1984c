import networkx as nx
import pytest
from hypothesis import given, strategies as st

from equicorona.families import (
    complete,
    complete_bipartite,
    connected_cubic_graphs,
    cycle,
    mobius_ladder,
    named,
    petersen,
    prism,
)
from equicorona.graph import (
    Graph,
    GraphFormatError,
    format_graph,
    is_complete,
    is_connected,
    is_cubic,
    is_k33,
    parse_edgelist,
    parse_graph,
    parse_graph6,
    to_edgelist,
    to_graph6,
)

from conftest import graphs


def to_nx(g):
    x = nx.Graph()
    x.add_nodes_from(range(g.n))
    x.add_edges_from(g.edges)
    return x


def test_edges_are_normalized():
    g = Graph.from_edges(3, [(2, 0), (1, 2)])
    assert g.edges == ((0, 2), (1, 2))
    assert g.adj == ((2,), (2,), (0, 1))
    assert g == Graph.from_edges(3, [(0, 2), (2, 1)])


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 1), (1, 0)], [(0, 3)], [(-1, 0)]])
def test_invalid_edges_rejected(edges):
    with pytest.raises(GraphFormatError):
        Graph.from_edges(3, edges)


def test_edgelist_with_comments():
    text = "# triangle\n3 3\n0 1\n1 2  # middle\n\n2 0\n"
    g = parse_edgelist(text)
    assert g == complete(3)


@pytest.mark.parametrize(
    "text",
    ["", "3\n", "3 1\n", "3 1\n0 1 2\n", "3 1\n0 x\n", "2 1\n0 2\n", "2 2\n0 1\n1 0\n", "-1 0\n"],
)
def test_edgelist_errors(text):
    with pytest.raises(GraphFormatError):
        parse_edgelist(text)


@given(graphs(max_n=12))
def test_edgelist_roundtrip(g):
    assert parse_edgelist(to_edgelist(g)) == g


@given(graphs(max_n=12))
def test_graph6_matches_networkx(g):
    expected = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert to_graph6(g) == expected
    assert parse_graph6(expected) == g


@pytest.mark.parametrize("n", [0, 1, 62, 63, 64, 200])
def test_graph6_size_encodings(n):
    g = cycle(n) if n >= 3 else Graph(n, ())
    text = to_graph6(g)
    assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert parse_graph6(">>graph6<<" + text + "\n") == g


@pytest.mark.parametrize("text", ["", "A~~", "\x7f", "~"])
def test_graph6_errors(text):
    with pytest.raises(GraphFormatError):
        parse_graph6(text)


@pytest.mark.parametrize("fmt", ["edgelist", "graph6"])
def test_format_dispatch(fmt):
    g = petersen()
    assert parse_graph(format_graph(g, fmt), fmt) == g
    with pytest.raises(GraphFormatError):
        parse_graph("", "adjacency")


@given(graphs(max_n=10))
def test_connectivity_matches_networkx(g):
    # the null graph counts as disconnected here; networkx refuses to decide
    expected = g.n > 0 and nx.is_connected(to_nx(g))
    assert is_connected(g) == expected


@given(graphs(max_n=10), st.data())
def test_induced_subgraph(g, data):
    verts = data.draw(st.permutations(range(g.n)))[: data.draw(st.integers(0, g.n))]
    sub = g.induced(verts)
    assert sub.n == len(verts)
    for i, u in enumerate(verts):
        for j, v in enumerate(verts):
            if i != j:
                assert sub.has_edge(i, j) == g.has_edge(u, v)


def test_predicates():
    assert is_cubic(complete(4)) and is_complete(complete(4))
    assert is_k33(complete_bipartite(3, 3)) and not is_k33(prism())
    assert not is_cubic(cycle(5))
    assert all(is_cubic(named(name)) for name in ("k4", "k33", "prism", "cube", "wagner", "petersen"))


def test_named_graphs_are_what_they_claim():
    assert nx.is_isomorphic(to_nx(petersen()), nx.petersen_graph())
    assert nx.is_isomorphic(to_nx(named("cube")), nx.hypercube_graph(3))
    assert nx.is_isomorphic(to_nx(prism()), nx.circular_ladder_graph(3))
    assert nx.is_isomorphic(to_nx(mobius_ladder(8)), nx.circulant_graph(8, [1, 4]))
    with pytest.raises(KeyError):
        named("nonesuch")


@pytest.mark.parametrize("n, count", [(4, 1), (6, 2), (8, 5), (10, 19)])
def test_connected_cubic_counts(n, count):
    found = connected_cubic_graphs(n)
    assert len(found) == count
    assert all(is_cubic(g) and is_connected(g) for g in found)
    as_nx = [to_nx(g) for g in found]
    for i in range(len(as_nx)):
        for j in range(i):
            assert not nx.is_isomorphic(as_nx[i], as_nx[j])


def test_connected_cubic_odd_order_empty():
    assert connected_cubic_graphs(7) == ()
