"""Per-instance records for the table reproduction and their CSV form."""

from __future__ import annotations

import csv
import hashlib
import io
import time
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Iterable, Optional

from .coloring import format_coloring, verify_proper
from .corona import CoronaSpec, VertexBudgetExceeded, l_corona
from .corona_dp import equitable_corona_k
from .cubic import classify_cubic
from .dispatch import dispatch, table2_value
from .engine import ordinary_coloring
from .graph import Graph
from .solver import BudgetExhausted, SearchBudget, chromatic_number, equitable_chromatic_number

# leading columns are fixed by the report contract; the rest are extras
COLUMNS = ("center", "outer", "l", "cell", "method", "chi_lo", "chi_hi", "exact_solver", "agree", "n", "millis",
           "chi_ord", "chi_ord_exact", "agree_ord", "witness_sha")


@dataclass
class RunReport:
    center: str
    outer: str
    l: int
    cell: str = ""
    method: str = ""
    chi_lo: str = ""
    chi_hi: str = ""
    exact_solver: str = ""
    agree: str = ""
    n: str = ""
    millis: str = ""
    chi_ord: str = ""
    chi_ord_exact: str = ""
    agree_ord: str = ""
    witness_sha: str = ""


def exact_chi_eq(g: Graph, h: Graph, depth: int, budget: SearchBudget) -> Optional[int]:
    """chi_= of ``G o^depth H`` by search alone, or None when undecided.

    A single corona level is decided by class-count search, which is exact and
    fast; deeper products go to the generic solver under ``budget``.
    """
    if depth == 1:
        for k in range(1, g.n * (h.n + 1) + 1):
            if equitable_corona_k(g, h, k, budget) is not None:
                return k
    # every copy of H plus its parent is a subgraph, so its chromatic number bounds chi_= below
    apex = Graph.from_edges(h.n + 1, list(h.edges) + [(v, h.n) for v in range(h.n)])
    lower = chromatic_number(apex, budget)
    result = equitable_chromatic_number(l_corona(CoronaSpec(g, h, depth)), budget, k_min=lower)
    return result.value


def _flag(ok: bool) -> str:
    return "true" if ok else "false"


def run_instance(
    center_id: str,
    g: Graph,
    outer_id: str,
    h: Graph,
    depth: int,
    budget: SearchBudget,
    exact_max_n: int,
    coloring_dir: Optional[Path] = None,
    timing: bool = False,
) -> RunReport:
    """Dispatch one instance and cross-check it; failures land in ``method``."""
    row = RunReport(center_id, outer_id, depth)
    start = time.perf_counter()
    try:
        gc, hc = classify_cubic(g, budget), classify_cubic(h, budget)
        row.cell = f"{gc}/{hc}"
        size = CoronaSpec(g, h, depth).size()
        row.n = str(size)
        res = dispatch(g, h, depth, budget)
        row.method = res.method
        row.chi_lo, row.chi_hi = str(res.lo), str(res.hi)
        text = format_coloring(res.witness)
        row.witness_sha = hashlib.sha256(text.encode()).hexdigest()[:16]
        if coloring_dir is not None:
            (coloring_dir / f"{center_id}__{outer_id}__l{depth}.col").write_text(text)

        ordinary = ordinary_coloring(g, h, depth, budget)
        row.chi_ord = str(ordinary.k)
        if ordinary.k != table2_value(gc, hc):
            raise AssertionError("ordinary coloring disagrees with the class formula")
        if size <= exact_max_n:
            try:
                exact = exact_chi_eq(g, h, depth, budget)
            except BudgetExhausted:
                exact = None
            if exact is not None:
                row.exact_solver = str(exact)
                row.agree = _flag(res.lo <= exact <= res.hi)
            if depth == 1:
                product = l_corona(CoronaSpec(g, h, depth))
                try:
                    chi = chromatic_number(product, budget)
                except BudgetExhausted:
                    chi = None
                if chi is not None:
                    row.chi_ord_exact = str(chi)
                    row.agree_ord = _flag(chi == ordinary.k and verify_proper(product, ordinary))
    except (BudgetExhausted, VertexBudgetExceeded) as exc:
        row.method = f"error:{type(exc).__name__}"
    except Exception as exc:  # recorded in-row so the run continues
        row.method = f"error:{type(exc).__name__}:{exc}"
    if timing:
        row.millis = str(round((time.perf_counter() - start) * 1000))
    return row


def to_csv(rows: Iterable[RunReport]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=[f.name for f in fields(RunReport)], lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(asdict(row))
    return buf.getvalue()
