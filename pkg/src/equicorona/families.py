"""Named small graphs and an enumerator for connected cubic graphs."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import networkx as nx

from .graph import Graph


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def prism(m: int = 3) -> Graph:
    """C_m x K_2: outer cycle ``0..m-1``, inner cycle ``m..2m-1``, rungs ``i -- m+i``."""
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(m + i, m + (i + 1) % m) for i in range(m)]
    edges += [(i, m + i) for i in range(m)]
    return Graph.from_edges(2 * m, edges)


def mobius_ladder(n: int) -> Graph:
    """Cycle on ``n`` (even) vertices plus all long diagonals."""
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, i + n // 2) for i in range(n // 2)]
    return Graph.from_edges(n, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def cube() -> Graph:
    return Graph.from_edges(8, [(v, v ^ (1 << b)) for v in range(8) for b in range(3) if v < v ^ (1 << b)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges]
        offset += g.n
    return Graph.from_edges(offset, edges)


NAMED = {
    "k4": lambda: complete(4),
    "k33": lambda: complete_bipartite(3, 3),
    "prism": prism,
    "cube": cube,
    "wagner": lambda: mobius_ladder(8),
    "petersen": petersen,
    "prism5": lambda: prism(5),
    "prism7": lambda: prism(7),
    "mobius12": lambda: mobius_ladder(12),
    "mobius16": lambda: mobius_ladder(16),
}


def named(name: str) -> Graph:
    try:
        return NAMED[name]()
    except KeyError:
        raise KeyError(f"unknown graph name {name!r}; known: {', '.join(sorted(NAMED))}") from None


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def _bfs_labelled_cubic(n: int):
    """Yield edge lists of connected cubic graphs in which fresh vertices are
    introduced in increasing label order; every connected cubic graph has at
    least one such labelling (its BFS order from vertex 0)."""
    deg = [0] * n
    adj = [set() for _ in range(n)]
    edges: list[tuple[int, int]] = []

    def fill(v):
        if v == n:
            yield list(edges)
            return
        if v > 0 and deg[v] == 0:
            return
        need = 3 - deg[v]
        cands = [w for w in range(v + 1, n) if deg[w] < 3 and w not in adj[v]]
        for chosen in combinations(cands, need):
            fresh = [w for w in cands if deg[w] == 0]
            used_fresh = [w for w in chosen if deg[w] == 0]
            if used_fresh != fresh[: len(used_fresh)]:
                continue
            for w in chosen:
                deg[v] += 1
                deg[w] += 1
                adj[v].add(w)
                adj[w].add(v)
                edges.append((v, w))
            yield from fill(v + 1)
            for w in chosen:
                deg[v] -= 1
                deg[w] -= 1
                adj[v].discard(w)
                adj[w].discard(v)
                edges.pop()

    yield from fill(0)


def _invariant(g: Graph) -> tuple:
    """Isomorphism invariant: multiset of (triangles at v, distance histogram from v)."""
    tri = [sum(1 for a, b in combinations(g.adj[v], 2) if g.has_edge(a, b)) for v in range(g.n)]
    dist_profile = []
    for s in range(g.n):
        dist = {s: 0}
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        nxt.append(w)
            frontier = nxt
        row = [0] * g.n
        for d in dist.values():
            row[d] += 1
        dist_profile.append((tri[s], tuple(row)))
    return tuple(sorted(dist_profile))


@lru_cache(maxsize=None)
def connected_cubic_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of connected cubic graphs on n vertices.

    Exhaustive over BFS-canonical labellings, then deduplicated up to
    isomorphism. Practical for n <= 12. Order is deterministic.
    """
    if n < 4 or n % 2:
        return ()
    found: list[Graph] = []
    buckets: dict[tuple, list[nx.Graph]] = {}
    for edges in _bfs_labelled_cubic(n):
        cand = Graph.from_edges(n, edges)
        bucket = buckets.setdefault(_invariant(cand), [])
        h = _to_nx(cand)
        if any(nx.is_isomorphic(h, other) for other in bucket):
            continue
        bucket.append(h)
        found.append(cand)
    return tuple(found)
