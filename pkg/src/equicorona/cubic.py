"""Classification of connected cubic graphs into Q2(t), Q3(u,v,w) and Q4."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .coloring import Coloring
from .graph import Graph, is_complete, is_connected, is_cubic
from .solver import DEFAULT_BUDGET, SearchBudget, find_coloring_with_profile, find_proper_coloring


class ClassificationError(ValueError):
    pass


@dataclass(frozen=True)
class CubicClass:
    """Chromatic class of a cubic graph plus a witness coloring.

    The witness is normalized: color ``j`` is partition set ``X_j``, with sets
    ordered by size descending and ties broken by smallest vertex.
    """

    kind: str
    profile: tuple[int, ...]
    witness: Coloring

    @property
    def chromatic(self) -> int:
        return {"Q2": 2, "Q3": 3, "Q4": 4}[self.kind]

    @property
    def parts(self) -> list[list[int]]:
        return self.witness.classes()

    def __str__(self) -> str:
        if self.kind == "Q4":
            return "Q4"
        return f"{self.kind}({','.join(map(str, self.profile))})"


def normalize_parts(c: Coloring) -> Coloring:
    """Relabel so classes run largest first, ties by smallest member."""
    classes = [cl for cl in c.classes() if cl]
    classes.sort(key=lambda cl: (-len(cl), cl[0]))
    colors = [0] * c.n
    for i, cl in enumerate(classes, 1):
        for v in cl:
            colors[v] = i
    return Coloring(tuple(colors), len(classes))


def _balanced_triples(n: int):
    """Triples u >= v >= w summing to n, ordered by spread u - w."""
    triples = [(u, v, n - u - v) for u in range(n + 1) for v in range(u + 1) if 0 <= n - u - v <= v]
    triples.sort(key=lambda t: (t[0] - t[2], t))
    return triples


def classify_cubic(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> CubicClass:
    if not is_cubic(g):
        raise ClassificationError("graph is not cubic")
    if not is_connected(g):
        raise ClassificationError("graph is not connected")
    if g.n == 4 and is_complete(g):
        return CubicClass("Q4", (1, 1, 1, 1), Coloring((1, 2, 3, 4), 4))

    two = find_proper_coloring(g, 2, budget)
    if two is not None:
        return CubicClass("Q2", (g.n // 2,), normalize_parts(two))

    best: Coloring | None = None
    spread = None
    for triple in _balanced_triples(g.n):
        if spread is not None and triple[0] - triple[2] > spread:
            break
        for caps in sorted(set(permutations(triple))):
            c = find_coloring_with_profile(g, caps, budget)
            if c is not None and (best is None or c.colors < best.colors):
                best = c
                spread = triple[0] - triple[2]
    if best is None:
        raise ClassificationError("cubic graph other than K4 without a 3-coloring")
    witness = normalize_parts(best)
    return CubicClass("Q3", witness.profile, witness)
