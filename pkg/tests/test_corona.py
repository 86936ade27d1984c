import networkx as nx
import pytest
from hypothesis import given, strategies as st

from equicorona.corona import (
    CoronaAddress,
    CoronaSpec,
    VertexBudgetExceeded,
    copy_range,
    corona_product,
    decode_address,
    embed_subcorona,
    encode_address,
    l_corona,
)
from equicorona.families import complete, named, path, petersen, prism

from conftest import graphs

small = graphs(min_n=1, max_n=5)


def nx_corona(g, h):
    """Corona built from networkx primitives with nodes relabelled to our layout."""
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges)
    for v in range(g.n):
        copy = nx.relabel_nodes(nx.Graph(list(h.edges)), lambda j, v=v: g.n + v * h.n + j)
        out.add_nodes_from(g.n + v * h.n + j for j in range(h.n))
        out.add_edges_from(copy.edges)
        out.add_edges_from((v, g.n + v * h.n + j) for j in range(h.n))
    return out


@given(small, small)
def test_corona_matches_networkx_construction(g, h):
    c = corona_product(g, h)
    expected = nx_corona(g, h)
    assert c.n == expected.number_of_nodes()
    assert set(c.edges) == {tuple(sorted(e)) for e in expected.edges}


@given(small, small, st.integers(0, 3))
def test_sizes_and_edge_counts(g, h, depth):
    spec = CoronaSpec(g, h, depth)
    prod = l_corona(spec)
    assert prod.n == g.n * (h.n + 1) ** depth == spec.size()
    n, m = g.n, g.m
    for _ in range(depth):
        n, m = n * (h.n + 1), m + n * (h.m + h.n)
    assert prod.m == m


@given(small, small, st.integers(1, 3))
def test_earlier_levels_are_a_prefix(g, h, depth):
    big = l_corona(CoronaSpec(g, h, depth))
    small_ = l_corona(CoronaSpec(g, h, depth - 1))
    assert big.induced(range(small_.n)) == small_


def test_cubic_corona_degrees():
    g, h = named("k33"), prism()
    prod = l_corona(CoronaSpec(g, h, 2))
    # the newest copies keep degree 3 + 1, everything older gained a whole copy
    n1 = g.n * 7
    assert {prod.degree(v) for v in range(n1, prod.n)} == {4}
    assert {prod.degree(v) for v in range(g.n)} == {3 + 6 + 6}


def test_vertex_budget():
    with pytest.raises(VertexBudgetExceeded):
        l_corona(CoronaSpec(petersen(), petersen(), 4), vertex_budget=10_000)
    with pytest.raises(ValueError):
        CoronaSpec(petersen(), petersen(), -1)


@given(small, small, st.integers(1, 3), st.data())
def test_address_roundtrip(g, h, depth, data):
    spec = CoronaSpec(g, h, depth)
    flat = data.draw(st.integers(0, spec.size() - 1))
    addr = decode_address(spec, flat)
    assert encode_address(spec, addr) == flat
    if addr.level:
        assert 0 <= addr.within < h.n
        assert flat in copy_range(spec.size(addr.level - 1), h.n, addr.parent)
        prod = l_corona(spec)
        assert prod.has_edge(addr.parent, flat)


def test_address_examples():
    spec = CoronaSpec(complete(4), complete(4), 2)
    assert decode_address(spec, 3) == CoronaAddress(3, 0)
    assert decode_address(spec, 4) == CoronaAddress(4, 1, 0, 0)
    assert decode_address(spec, 19) == CoronaAddress(19, 1, 3, 3)
    assert decode_address(spec, 20) == CoronaAddress(20, 2, 0, 0)
    with pytest.raises(IndexError):
        decode_address(spec, 100)


@given(st.integers(2, 6), st.integers(1, 3), st.integers(1, 3), st.data())
def test_embed_subcorona(n_center, n_outer, depth, data):
    g = path(n_center)
    h = path(n_outer)
    chosen = data.draw(st.lists(st.integers(0, n_center - 1), unique=True, min_size=1))
    sub = l_corona(CoronaSpec(g.induced(chosen), h, depth))
    full = l_corona(CoronaSpec(g, h, depth))
    mapping = embed_subcorona(chosen, n_center, n_outer, depth)
    assert len(mapping) == sub.n == len(set(mapping))
    assert full.induced(mapping) == sub
