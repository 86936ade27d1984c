"""Corona and l-corona products with a fixed vertex layout.

Layout of ``G o H``: vertices ``0..n_G-1`` are the center; the copy of H
hanging off center vertex ``v`` occupies ``n_G + v*n_H .. n_G + v*n_H + n_H - 1``
in H's own vertex order. Iterating the product keeps every earlier level as
a prefix, so a coloring of level ``l-1`` is literally the first slice of a
coloring of level ``l``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph

DEFAULT_VERTEX_BUDGET = 200_000


class VertexBudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class CoronaSpec:
    center: Graph
    outer: Graph
    depth: int

    def __post_init__(self) -> None:
        if self.depth < 0:
            raise ValueError("depth must be nonnegative")
        if self.center.n == 0 or self.outer.n == 0:
            raise ValueError("center and outer graphs must be nonempty")

    def size(self, level: Optional[int] = None) -> int:
        level = self.depth if level is None else level
        return self.center.n * (self.outer.n + 1) ** level


@dataclass(frozen=True)
class CoronaAddress:
    flat: int
    level: int
    parent: Optional[int] = None
    within: Optional[int] = None


def corona_product(g: Graph, h: Graph) -> Graph:
    ng, nh = g.n, h.n
    edges = list(g.edges)
    for v in range(ng):
        base = ng + v * nh
        edges.extend((base + a, base + b) for a, b in h.edges)
        edges.extend((v, base + j) for j in range(nh))
    return Graph.from_edges(ng * (nh + 1), edges)


def l_corona(spec: CoronaSpec, vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> Graph:
    total = spec.size()
    if total > vertex_budget:
        raise VertexBudgetExceeded(
            f"G o^{spec.depth} H has {total} vertices, over the budget of {vertex_budget}"
        )
    g = spec.center
    for _ in range(spec.depth):
        g = corona_product(g, spec.outer)
    return g


def decode_address(spec: CoronaSpec, flat: int) -> CoronaAddress:
    total = spec.size()
    if not 0 <= flat < total:
        raise IndexError(f"vertex {flat} out of range 0..{total - 1}")
    ng, nh = spec.center.n, spec.outer.n
    if flat < ng:
        return CoronaAddress(flat, 0)
    level, prev = 1, ng
    while flat >= prev * (nh + 1):
        prev *= nh + 1
        level += 1
    parent, within = divmod(flat - prev, nh)
    return CoronaAddress(flat, level, parent, within)


def encode_address(spec: CoronaSpec, addr: CoronaAddress) -> int:
    if addr.level == 0:
        return addr.flat
    prev = spec.size(addr.level - 1)
    return prev + addr.parent * spec.outer.n + addr.within


def copy_range(n_prev: int, n_outer: int, parent: int) -> range:
    """Flat indices of the copy linked to ``parent`` when a graph on ``n_prev``
    vertices is extended by one corona step."""
    start = n_prev + parent * n_outer
    return range(start, start + n_outer)


def embed_subcorona(center_vertices: list[int], n_center: int, n_outer: int, depth: int) -> list[int]:
    """Map flat indices of ``G[S] o^l H`` to flat indices of ``G o^l H``.

    ``center_vertices`` lists S in the order used to relabel ``G[S]``.
    """
    mapping = list(center_vertices)
    sub_prev, full_prev = len(center_vertices), n_center
    for _ in range(depth):
        level = [0] * (sub_prev * n_outer)
        for p in range(sub_prev):
            base = full_prev + mapping[p] * n_outer
            for j in range(n_outer):
                level[p * n_outer + j] = base + j
        mapping.extend(level)
        sub_prev *= n_outer + 1
        full_prev *= n_outer + 1
    return mapping
