"""Exact equitable colorings of a single corona ``G o H`` by counting.

Once the center is colored, the copies of H only interact through the class
totals, so it suffices to know which class-size vectors G and H can realize.
Both are symmetric under renaming colors, so only partitions are tested by
search; a dynamic program over the copies then combines them.
"""

from __future__ import annotations

from itertools import permutations
from typing import Optional

from .coloring import Coloring
from .corona import copy_range
from .graph import Graph
from .solver import DEFAULT_BUDGET, SearchBudget, find_coloring_with_profile


def _partitions(n: int, parts: int, largest: Optional[int] = None):
    """Nonincreasing tuples of length ``parts`` summing to ``n``."""
    largest = n if largest is None else largest
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(min(n, largest), -1, -1):
        if first * parts < n:
            break
        for rest in _partitions(n - first, parts - 1, first):
            yield (first,) + rest


def realizable_profiles(g: Graph, k: int, budget: SearchBudget = DEFAULT_BUDGET) -> dict[tuple[int, ...], Coloring]:
    """Every ordered class-size vector of a proper k-coloring of g, with a witness."""
    out: dict[tuple[int, ...], Coloring] = {}
    for part in _partitions(g.n, k):
        c = find_coloring_with_profile(g, part, budget)
        if c is None:
            continue
        for perm in set(permutations(range(k))):
            vec = tuple(part[perm[i]] for i in range(k))
            if vec not in out:
                # color i of the permuted witness is color perm[i] of the original
                inverse = {perm[i] + 1: i + 1 for i in range(k)}
                out[vec] = Coloring(tuple(inverse[x] for x in c.colors), k)
    return out


def equitable_corona_k(g: Graph, h: Graph, k: int, budget: SearchBudget = DEFAULT_BUDGET) -> Optional[Coloring]:
    """An equitable k-coloring of ``G o H`` in the standard layout, or None if none exists."""
    total = g.n * (h.n + 1)
    hi = -(-total // k)
    lo = total // k
    outer = realizable_profiles(h, k - 1, budget)
    if not outer:
        return None
    alpha = max(max(v) for v in outer)

    def lift(vec: tuple[int, ...], skip: int) -> tuple[int, ...]:
        return vec[:skip] + (0,) + vec[skip:]

    lifted = [[lift(v, d) for v in outer] for d in range(k)]
    for part in _partitions(g.n, k):
        center = find_coloring_with_profile(g, part, budget)
        if center is None:
            continue
        layers = _forward(g.n, center, lifted, part, lo, hi, alpha)
        final = next((s for s in layers[-1] if min(s) >= lo), None) if layers else None
        if final is None:
            continue
        return _assemble(g, h, k, center, layers, final, outer)
    return None


def _forward(n_center, center, lifted, part, lo, hi, alpha):
    """Reachable class totals after each copy, with back-pointers."""
    k = len(part)
    layers: list[dict] = []
    states: dict[tuple[int, ...], tuple] = {tuple(part): ()}
    pending = list(part)
    for p in range(n_center):
        d = center.colors[p] - 1
        pending[d] -= 1
        later = n_center - p - 1
        nxt: dict[tuple[int, ...], tuple] = {}
        for state in states:
            for vec in lifted[d]:
                s = tuple(a + b for a, b in zip(state, vec))
                if s in nxt or max(s) > hi:
                    continue
                # copies still to come only add to classes unlike their parent
                if any(s[e] + (later - pending[e]) * alpha < lo for e in range(k)):
                    continue
                nxt[s] = (state, vec)
        if not nxt:
            return []
        layers.append(nxt)
        states = nxt
    return layers


def _assemble(g, h, k, center, layers, final, outer) -> Coloring:
    chosen: list[tuple[int, ...]] = []
    cur = final
    for layer in reversed(layers):
        cur, vec = layer[cur]
        chosen.append(vec)
    chosen.reverse()
    colors = list(center.colors) + [0] * (g.n * h.n)
    for p, vec in enumerate(chosen):
        d = center.colors[p] - 1
        witness = outer[vec[:d] + vec[d + 1:]]
        free = [c for c in range(1, k + 1) if c != d + 1]
        for j, v in enumerate(copy_range(g.n, h.n, p)):
            colors[v] = free[witness.colors[j] - 1]
    return Coloring(tuple(colors), k)
