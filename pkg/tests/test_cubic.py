import itertools

import networkx as nx
import pytest

from equicorona.coloring import Coloring, verify_proper
from equicorona.cubic import ClassificationError, classify_cubic, normalize_parts
from equicorona.families import connected_cubic_graphs, cycle, disjoint_union, named


def colorable(g, k):
    return any(
        all(c[u] != c[v] for u, v in g.edges) for c in itertools.product(range(k), repeat=g.n)
    )


@pytest.mark.parametrize(
    "name, label",
    [
        ("k4", "Q4"),
        ("k33", "Q2(3)"),
        ("cube", "Q2(4)"),
        ("prism", "Q3(2,2,2)"),
        ("wagner", "Q3(3,3,2)"),
        ("petersen", "Q3(4,3,3)"),
        ("prism5", "Q3(4,3,3)"),
        ("prism7", "Q3(5,5,4)"),
        ("mobius12", "Q3(4,4,4)"),
        ("mobius16", "Q3(6,5,5)"),
    ],
)
def test_named_classes(name, label):
    g = named(name)
    cls = classify_cubic(g)
    assert str(cls) == label
    assert verify_proper(g, cls.witness)
    assert cls.witness.profile == cls.profile or cls.kind == "Q2"


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_kind_matches_chromatic_number(n):
    for g in connected_cubic_graphs(n):
        cls = classify_cubic(g)
        x = nx.Graph(list(g.edges))
        if nx.is_bipartite(x):
            assert cls.kind == "Q2"
        elif n == 4:
            assert cls.kind == "Q4"
        else:
            assert cls.kind == "Q3" and colorable(g, 3)
        assert cls.chromatic == {"Q2": 2, "Q3": 3, "Q4": 4}[cls.kind]


@pytest.mark.parametrize("n", [6, 8, 10])
def test_q3_profile_is_most_balanced(n):
    for g in connected_cubic_graphs(n):
        cls = classify_cubic(g)
        if cls.kind != "Q3":
            continue
        spreads = []
        for c in itertools.product(range(3), repeat=g.n):
            if all(c[u] != c[v] for u, v in g.edges):
                sizes = [c.count(i) for i in range(3)]
                spreads.append(max(sizes) - min(sizes))
        assert cls.profile[0] - cls.profile[2] == min(spreads)
        assert list(cls.profile) == sorted(cls.profile, reverse=True)


def test_parts_are_normalized():
    cls = classify_cubic(named("petersen"))
    parts = cls.parts
    keys = [(-len(p), p[0]) for p in parts]
    assert keys == sorted(keys)


def test_normalize_parts():
    c = normalize_parts(Coloring((3, 3, 1, 2, 2, 3), 3))
    assert c.colors == (1, 1, 3, 2, 2, 1)


def test_rejects_non_cubic():
    with pytest.raises(ClassificationError):
        classify_cubic(cycle(6))
    with pytest.raises(ClassificationError):
        classify_cubic(disjoint_union(named("k4"), named("k4")))
