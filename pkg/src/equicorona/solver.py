"""Exact backtracking search for proper, equitable and semi-equitable colorings.

Every search distinguishes a proven negative (``None``) from running out of
budget (:class:`BudgetExhausted`). Results are deterministic: vertices are
visited by descending degree then index, colors ascending.
"""

from __future__ import annotations

import math
import time
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import _kernel
from .coloring import Coloring, equitable_profile
from .graph import Graph, is_complete, is_k33

DEFAULT_NODE_LIMIT = 10**8
_SLICE = 1 << 20


class BudgetExhausted(RuntimeError):
    """The search hit its node or time limit before reaching a decision."""

    def __init__(self, nodes: int, what: str = "search"):
        super().__init__(f"{what}: budget exhausted after {nodes} nodes")
        self.nodes = nodes


class PreconditionWarning(UserWarning):
    """Inputs fall outside the range where existence is guaranteed."""


class SolverDefect(RuntimeError):
    """A search proved absence of a coloring whose existence is a theorem."""


@dataclass(frozen=True)
class SearchBudget:
    nodes: Optional[int] = DEFAULT_NODE_LIMIT
    seconds: Optional[float] = None

    def __post_init__(self) -> None:
        if self.nodes is not None and self.nodes <= 0:
            raise ValueError("node limit must be positive")
        if self.seconds is not None and self.seconds <= 0:
            raise ValueError("time limit must be positive")


DEFAULT_BUDGET = SearchBudget()


def search_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))


def _csr(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(g.n + 1, dtype=np.int32)
    for v in range(g.n):
        indptr[v + 1] = indptr[v] + len(g.adj[v])
    indices = np.fromiter((u for a in g.adj for u in a), dtype=np.int32, count=int(indptr[-1]))
    return indptr, indices


MAX_BLOCK = 12


def independence_blocks(g: Graph, order: Sequence[int], max_block: int = MAX_BLOCK):
    """Partition vertices into small connected groups for the capacity bound.

    Groups grow from the end of the search order, always absorbing the
    latest-ordered unassigned neighbor, so they gather vertices that are
    colored late (in a corona: whole copies of the outer graph). Returns the
    group of each vertex, each vertex's bit within its group, and a table of
    independence numbers for every subset of every group.
    """
    pos = {v: i for i, v in enumerate(order)}
    block = np.full(g.n, -1, dtype=np.int32)
    bit = np.zeros(g.n, dtype=np.int32)
    groups: list[list[int]] = []
    for v in reversed(order):
        if block[v] >= 0:
            continue
        members = [v]
        block[v] = len(groups)
        frontier = {u for u in g.adj[v] if block[u] < 0}
        while frontier and len(members) < max_block:
            u = max(frontier, key=pos.__getitem__)
            frontier.discard(u)
            block[u] = len(groups)
            members.append(u)
            frontier.update(w for w in g.adj[u] if block[w] < 0)
        groups.append(members)
    width = max(len(m) for m in groups)
    alpha = np.zeros((len(groups), 1 << width), dtype=np.int32)
    for q, members in enumerate(groups):
        idx = {v: i for i, v in enumerate(members)}
        for v, i in idx.items():
            bit[v] = 1 << i
        nbr = np.array([sum(1 << idx[u] for u in g.adj[v] if u in idx) for v in members], dtype=np.int64)
        _kernel.subset_alpha(nbr, len(members), alpha[q])
    return block, bit, alpha


def _run(g: Graph, caps: Sequence[int], exact: bool, budget: SearchBudget) -> Optional[Coloring]:
    k = len(caps)
    if g.n == 0:
        return Coloring((), max(k, 1)) if not exact or not any(caps) else None
    indptr, indices = _csr(g)
    order_list = search_order(g)
    order = np.asarray(order_list, dtype=np.int32)
    block, bit, alpha = independence_blocks(g, order_list)
    caps_arr = np.asarray(caps, dtype=np.int32)
    prev_same = np.full(k, -1, dtype=np.int32)
    last: dict[int, int] = {}
    for c, cap in enumerate(caps):
        if cap in last:
            prev_same[c] = last[cap]
        last[cap] = c
    color, count, forb, bmask, avail, trycol, state = _kernel.make_state(block, bit, alpha, k)

    limit = budget.nodes if budget.nodes is not None else np.iinfo(np.int64).max
    deadline = None if budget.seconds is None else time.monotonic() + budget.seconds
    while True:
        quota = limit if deadline is None else min(limit, int(state[1]) + _SLICE)
        status = _kernel.search(indptr, indices, order, caps_arr, prev_same, exact, block, bit, alpha,
                                color, count, forb, bmask, avail, trycol, state, quota)
        if status == _kernel.FOUND:
            return Coloring(tuple(int(c) + 1 for c in color), k)
        if status == _kernel.NONE:
            return None
        if state[1] >= limit or (deadline is not None and time.monotonic() >= deadline):
            raise BudgetExhausted(int(state[1]))


def find_coloring_with_profile(
    g: Graph, profile: Sequence[int], budget: SearchBudget = DEFAULT_BUDGET
) -> Optional[Coloring]:
    """Proper coloring whose class ``i`` has exactly ``profile[i]`` vertices."""
    if sum(profile) != g.n:
        raise ValueError(f"profile sums to {sum(profile)}, graph has {g.n} vertices")
    if any(p < 0 for p in profile):
        raise ValueError("profile entries must be nonnegative")
    return _run(g, profile, True, budget)


def find_proper_coloring(g: Graph, k: int, budget: SearchBudget = DEFAULT_BUDGET) -> Optional[Coloring]:
    """Any proper coloring with colors drawn from ``1..k``."""
    if k < 1:
        raise ValueError("k must be positive")
    return _run(g, [g.n] * k, False, budget)


def find_equitable_k(g: Graph, k: int, budget: SearchBudget = DEFAULT_BUDGET) -> Optional[Coloring]:
    if k < 1:
        raise ValueError("k must be positive")
    return find_coloring_with_profile(g, equitable_profile(g.n, k), budget)


def find_strong_equitable_k(g: Graph, k: int, budget: SearchBudget = DEFAULT_BUDGET) -> Optional[Coloring]:
    if k < 1:
        raise ValueError("k must be positive")
    if g.n % k:
        return None
    return find_coloring_with_profile(g, [g.n // k] * k, budget)


def semi_equitable_profile(n: int, k: int, s: int) -> tuple[int, ...]:
    """Type ``[ceil, ..., floor, s]`` with the special class last."""
    return equitable_profile(n - s, k - 1) + (s,)


def semi_equitable_preconditions(g: Graph, k: int, s: int) -> list[str]:
    """Reasons the existence theorem for semi-equitable colorings does not apply."""
    issues = []
    if k < 4:
        issues.append(f"k={k} < 4")
    if s > math.ceil(g.n / 3):
        issues.append(f"s={s} > ceil(n/3)={math.ceil(g.n / 3)}")
    if g.max_degree() > 3:
        issues.append("graph is not subcubic")
    if g.n == 4 and is_complete(g):
        issues.append("graph is K4")
    if is_k33(g):
        issues.append("graph is K_{3,3}")
    return issues


def find_semi_equitable(
    g: Graph, k: int, s: int, budget: SearchBudget = DEFAULT_BUDGET
) -> Optional[Coloring]:
    """Proper k-coloring of type ``[ceil((n-s)/(k-1)), ..., floor((n-s)/(k-1)), s]``.

    Outside the guaranteed range a :class:`PreconditionWarning` is issued and
    the search still runs. Inside it, a proven negative is a
    :class:`SolverDefect`.
    """
    if not 0 <= s <= g.n:
        raise ValueError(f"special size {s} outside 0..{g.n}")
    if k < 2:
        raise ValueError("k must be at least 2")
    issues = semi_equitable_preconditions(g, k, s)
    if issues:
        warnings.warn("; ".join(issues), PreconditionWarning, stacklevel=2)
    result = find_coloring_with_profile(g, semi_equitable_profile(g.n, k, s), budget)
    if result is None and not issues:
        raise SolverDefect(f"no semi-equitable {k}-coloring with s={s} on a graph where one must exist")
    return result


@dataclass(frozen=True)
class ChiEqResult:
    """Equitable chromatic number, exact or bracketed.

    ``status`` is ``"exact"`` (lo == hi), ``"bounds"`` (some k below ``hi``
    was left undecided) or ``"exhausted"`` (no witness found at all).
    """

    status: str
    lo: int
    hi: Optional[int]
    witness: Optional[Coloring]

    @property
    def value(self) -> Optional[int]:
        return self.lo if self.status == "exact" else None

    def __str__(self) -> str:
        if self.status == "exact":
            return str(self.lo)
        return f"{self.lo}..{self.hi if self.hi is not None else '?'}"


def equitable_chromatic_number(
    g: Graph, budget: SearchBudget = DEFAULT_BUDGET, k_max: Optional[int] = None, k_min: int = 1
) -> ChiEqResult:
    """Smallest k with an equitable k-coloring.

    Each k is decided independently since equitable colorability is not
    monotone in k. The budget applies to each decision separately.
    ``k_min`` is a lower bound the caller already knows (e.g. the chromatic
    number of a subgraph); smaller k are not tried.
    """
    start = max(k_min, 1 if g.m == 0 else 2)
    stop = k_max if k_max is not None else max(g.n, 1)
    lo = None
    for k in range(start, stop + 1):
        try:
            c = find_equitable_k(g, k, budget)
        except BudgetExhausted:
            if lo is None:
                lo = k
            continue
        if c is not None:
            if lo is None:
                return ChiEqResult("exact", k, k, c)
            return ChiEqResult("bounds", lo, k, c)
    return ChiEqResult("exhausted", lo if lo is not None else start, None, None)


def chromatic_number(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> int:
    return minimum_coloring(g, budget).k if g.n else 0


def minimum_coloring(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> Coloring:
    """Proper coloring with the fewest colors; its ``k`` is the chromatic number."""
    if g.n == 0:
        return Coloring((), 1)
    for k in range(1, g.n + 1):
        c = find_proper_coloring(g, k, budget)
        if c is not None:
            return c
    raise AssertionError("unreachable: n colors always suffice")


__all__ = [
    "BudgetExhausted",
    "ChiEqResult",
    "DEFAULT_BUDGET",
    "PreconditionWarning",
    "SearchBudget",
    "SolverDefect",
    "chromatic_number",
    "equitable_chromatic_number",
    "find_coloring_with_profile",
    "find_equitable_k",
    "find_proper_coloring",
    "find_semi_equitable",
    "find_strong_equitable_k",
    "minimum_coloring",
    "semi_equitable_profile",
]
