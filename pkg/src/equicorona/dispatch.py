"""Pick the right construction for ``G o^l H`` and report chi_= with a witness."""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import Coloring, is_equitable, verify_proper
from .corona import DEFAULT_VERTEX_BUDGET, CoronaSpec, l_corona
from .corona_dp import equitable_corona_k
from .cubic import CubicClass, classify_cubic
from .engine import (
    EngineDefect,
    NotEquitable3,
    PreconditionError,
    _equitable4_q2,
    color_complete_outer,
    equitable3,
    equitable5_general,
    extend_strong_4,
    small_center_fallback,
)
from .graph import Graph
from .solver import DEFAULT_BUDGET, BudgetExhausted, SearchBudget, find_equitable_k, find_strong_equitable_k


def table1_cell(gc: CubicClass, hc: CubicClass) -> tuple[int, int]:
    """Range of possible chi_=(G o^l H) for the class pair."""
    if hc.kind == "Q4":
        return (5, 5)
    if hc.kind == "Q2":
        return (4, 4) if gc.kind == "Q4" else (3, 4)
    if gc.kind == "Q4":
        return (4, 4)
    if gc.kind == "Q2":
        return (4, 4) if gc.profile[0] % 2 == 0 else (4, 5)
    return (4, 5)


def table2_value(gc: CubicClass, hc: CubicClass) -> int:
    """chi(G o^l H) for l >= 1."""
    return max(gc.chromatic, hc.chromatic + 1)


@dataclass(frozen=True)
class DispatchResult:
    lo: int
    hi: int
    witness: Coloring
    method: str
    table_cell: str
    detail: str = ""

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def chi_eq(self) -> str:
        return str(self.lo) if self.exact else f"{self.lo}..{self.hi}"


def dispatch(
    g: Graph,
    h: Graph,
    depth: int,
    budget: SearchBudget = DEFAULT_BUDGET,
    exact: bool = False,
    vertex_budget: int = DEFAULT_VERTEX_BUDGET,
) -> DispatchResult:
    """Equitable chromatic number of ``G o^depth H`` (or its bracket) with a witness.

    With ``exact`` set, a bracket (4, 5) is settled by exact search for an
    equitable 4-coloring of the whole product when the budget allows.
    """
    if depth < 1:
        raise PreconditionError("depth must be at least 1")
    gc = classify_cubic(g, budget)
    hc = classify_cubic(h, budget)
    cell = f"{gc.kind}/{hc.kind}"
    product = l_corona(CoronaSpec(g, h, depth), vertex_budget)

    if hc.kind == "Q4":
        result = DispatchResult(5, 5, color_complete_outer(g, 4, depth, budget), "thm7", cell)
    elif hc.kind == "Q2":
        three = equitable3(g, h, depth, budget)
        if isinstance(three, NotEquitable3):
            witness, case = _equitable4_q2(g, h, depth, budget)
            result = DispatchResult(4, 4, witness, "thm4", cell, f"{case}; no equitable 3: {three.reason}")
        else:
            result = DispatchResult(3, 3, three, "thm3", cell)
    else:
        strong4 = find_strong_equitable_k(g, 4, budget)
        if strong4 is not None:
            result = DispatchResult(4, 4, extend_strong_4(g, strong4, h, depth, hc), "thm4_cub3", cell)
        elif g.n == 6:
            witness = small_center_fallback(g, h, depth, budget)
            result = DispatchResult(4, 5, witness, "thm6", cell, "six-vertex center: exact search + greedy levels")
        else:
            result = DispatchResult(4, 5, equitable5_general(g, h, depth, budget), "thm6", cell)
        if exact and not result.exact:
            result = _settle(g, h, depth, product, result, budget)

    _check(product, result, table1_cell(gc, hc))
    return result


def _settle(g: Graph, h: Graph, depth: int, product: Graph, result: DispatchResult, budget: SearchBudget) -> DispatchResult:
    """Decide between 4 and 5 for a bracketed result."""
    def settled(lo, witness, detail):
        return DispatchResult(lo, lo, witness if witness is not None else result.witness, "exact",
                              result.table_cell, detail)

    if depth == 1:
        four = equitable_corona_k(g, h, 4, budget)
        if four is None:
            return settled(5, None, "no equitable 4-coloring (class-count search)")
        return settled(4, four, "equitable 4-coloring found (class-count search)")
    try:
        return settled(4, small_center_fallback(g, h, depth, budget, k=4), "equitable 4-coloring found (greedy levels)")
    except (EngineDefect, PreconditionError):
        pass
    try:
        four = find_equitable_k(product, 4, budget)
    except BudgetExhausted as exc:
        return DispatchResult(result.lo, result.hi, result.witness, result.method, result.table_cell,
                              f"exact search undecided ({exc.nodes} nodes)")
    if four is None:
        return settled(5, None, "no equitable 4-coloring")
    return settled(4, four, "equitable 4-coloring found")


def _check(product: Graph, result: DispatchResult, cell: tuple[int, int]) -> None:
    w = result.witness
    if not verify_proper(product, w):
        raise EngineDefect(f"{result.method} witness is not proper")
    if not is_equitable(w):
        raise EngineDefect(f"{result.method} witness is not equitable: {list(w.profile)}")
    if w.k != result.hi:
        raise EngineDefect(f"witness uses {w.k} colors, reported {result.hi}")
    if not (cell[0] <= result.lo <= result.hi <= cell[1]):
        raise EngineDefect(f"result {result.chi_eq} lies outside table cell {cell}")
