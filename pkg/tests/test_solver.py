import itertools
import warnings

import pytest
from hypothesis import given, strategies as st

from equicorona.coloring import is_equitable, is_semi_equitable, verify_proper
from equicorona.families import complete, complete_bipartite, connected_cubic_graphs, cycle, named, petersen, prism
from equicorona.graph import Graph
from equicorona.solver import (
    BudgetExhausted,
    PreconditionWarning,
    SearchBudget,
    chromatic_number,
    equitable_chromatic_number,
    find_coloring_with_profile,
    find_equitable_k,
    find_proper_coloring,
    find_semi_equitable,
    find_strong_equitable_k,
    independence_blocks,
    minimum_coloring,
    search_order,
    semi_equitable_preconditions,
    semi_equitable_profile,
)

from conftest import graphs


def all_profiles(g, k):
    """Every ordered class-size vector of a proper k-coloring, by enumeration."""
    found = set()
    for colors in itertools.product(range(k), repeat=g.n):
        if all(colors[u] != colors[v] for u, v in g.edges):
            sizes = [0] * k
            for c in colors:
                sizes[c] += 1
            found.add(tuple(sizes))
    return found


def brute_alpha(g, members):
    best = 0
    for r in range(len(members) + 1):
        for sub in itertools.combinations(members, r):
            if all(not g.has_edge(u, v) for u, v in itertools.combinations(sub, 2)):
                best = r
    return best


@given(graphs(max_n=7), st.integers(1, 4), st.data())
def test_profile_search_matches_enumeration(g, k, data):
    realizable = all_profiles(g, k)
    profile = tuple(data.draw(st.lists(st.integers(0, g.n), min_size=k, max_size=k)))
    if sum(profile) != g.n:
        return
    c = find_coloring_with_profile(g, profile)
    assert (c is not None) == (profile in realizable)
    if c is not None:
        assert verify_proper(g, c) and c.profile == profile


@given(graphs(max_n=7), st.integers(1, 5))
def test_equitable_search_matches_enumeration(g, k):
    expect = any(is_equitable(p) for p in all_profiles(g, k))
    c = find_equitable_k(g, k)
    assert (c is not None) == expect
    if c is not None:
        assert verify_proper(g, c) and is_equitable(c) and c.k == k


@given(graphs(max_n=7))
def test_chromatic_number_matches_enumeration(g):
    expect = min((k for k in range(1, g.n + 1) if all_profiles(g, k)), default=0)
    assert chromatic_number(g) == expect


@given(graphs(max_n=7))
def test_equitable_chromatic_number_matches_enumeration(g):
    expect = next(k for k in range(1, g.n + 2) if any(is_equitable(p) for p in all_profiles(g, k)))
    res = equitable_chromatic_number(g)
    assert res.status == "exact" and res.value == expect
    assert verify_proper(g, res.witness) and is_equitable(res.witness)


@given(graphs(min_n=1, max_n=12))
def test_block_alpha_tables(g):
    order = search_order(g)
    block, bit, alpha = independence_blocks(g, order, max_block=5)
    for q in range(alpha.shape[0]):
        members = [v for v in range(g.n) if block[v] == q]
        assert 1 <= len(members) <= 5
        mask = 0
        for v in members:
            mask |= int(bit[v])
        assert alpha[q, mask] == brute_alpha(g, members)
        drop = members[1:]
        sub = mask & ~int(bit[members[0]])
        assert alpha[q, sub] == brute_alpha(g, drop)


def test_search_order():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (1, 3), (2, 3)])
    assert search_order(g) == [1, 2, 3, 0]


def test_profile_examples():
    assert find_coloring_with_profile(complete(4), (1, 1, 1, 1)).colors == (1, 2, 3, 4)
    assert find_coloring_with_profile(complete_bipartite(3, 3), (2, 2, 2)) is None
    assert find_coloring_with_profile(prism(), (2, 2, 2)) is not None
    with pytest.raises(ValueError):
        find_coloring_with_profile(prism(), (2, 2, 1))
    with pytest.raises(ValueError):
        find_coloring_with_profile(prism(), (7, -1))


def test_equitable_examples():
    assert find_equitable_k(complete_bipartite(3, 3), 3) is None
    assert find_equitable_k(complete(4), 4) is not None
    assert find_strong_equitable_k(prism(), 3).profile == (2, 2, 2)
    assert find_strong_equitable_k(complete_bipartite(3, 3), 3) is None
    assert find_strong_equitable_k(petersen(), 4) is None


def test_chi_eq_examples():
    assert equitable_chromatic_number(complete_bipartite(3, 3)).value == 2
    assert equitable_chromatic_number(complete(4)).value == 4
    # star: the centre sits alone, so the leaves need two more balanced classes
    assert equitable_chromatic_number(complete_bipartite(1, 4)).value == 3
    assert chromatic_number(complete_bipartite(3, 3)) == 2
    assert chromatic_number(petersen()) == 3
    assert chromatic_number(Graph(0, ())) == 0


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_cubic_completeness(n):
    for g in connected_cubic_graphs(n):
        for k in (4, 5):
            c = find_equitable_k(g, k)
            assert c is not None and verify_proper(g, c) and is_equitable(c)
        assert equitable_chromatic_number(g).value in (2, 3, 4)


def test_budget_exhausted_is_not_none():
    # a witness needs ten placements, one node cannot decide
    with pytest.raises(BudgetExhausted) as info:
        find_equitable_k(petersen(), 3, SearchBudget(nodes=1))
    assert info.value.nodes >= 1


def test_time_budget_resumes_identically():
    g = petersen()
    a = find_equitable_k(g, 3)
    b = find_equitable_k(g, 3, SearchBudget(nodes=None, seconds=60))
    assert a == b


def test_chi_eq_bounds_when_budget_runs_out():
    g = cycle(9)
    res = equitable_chromatic_number(g, SearchBudget(nodes=1))
    assert res.status in ("bounds", "exhausted")
    assert res.value is None
    assert str(res).startswith(f"{res.lo}..")


def test_determinism():
    g = named("mobius12")
    assert find_equitable_k(g, 4) == find_equitable_k(g, 4)
    assert minimum_coloring(g) == minimum_coloring(g)


def test_proper_coloring_allows_unused_colors():
    c = find_proper_coloring(complete_bipartite(3, 3), 4)
    assert c.k == 4 and verify_proper(complete_bipartite(3, 3), c)


def test_semi_equitable():
    g12 = connected_cubic_graphs(12)[0]
    c = find_semi_equitable(g12, 5, 0)
    assert c.profile == (3, 3, 3, 3, 0) and is_semi_equitable(c, 5) and verify_proper(g12, c)
    g14 = prism(7)
    c = find_semi_equitable(g14, 5, 2)
    assert c.profile == (3, 3, 3, 3, 2) and verify_proper(g14, c)
    assert semi_equitable_profile(14, 5, 2) == (3, 3, 3, 3, 2)
    assert semi_equitable_preconditions(g14, 5, 2) == []


def test_semi_equitable_outside_guarantee_warns():
    g = complete_bipartite(3, 3)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        find_semi_equitable(g, 5, 0)
    assert any(issubclass(w.category, PreconditionWarning) for w in caught)
    assert semi_equitable_preconditions(g, 5, 0)
