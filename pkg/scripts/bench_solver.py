"""Time the generic solver and the class-count search on single corona levels."""

import argparse
import time

from equicorona.corona import CoronaSpec, l_corona
from equicorona.corona_dp import equitable_corona_k
from equicorona.families import named
from equicorona.solver import BudgetExhausted, SearchBudget, find_equitable_k

CASES = [
    ("k33", "prism", 4),
    ("prism", "prism", 4),
    ("k33", "prism", 5),
    ("k33", "k33", 3),
    ("prism", "cube", 3),
    ("petersen", "cube", 3),
    ("k33", "petersen", 5),
    ("k33", "petersen", 4),
]


def timed(fn):
    start = time.perf_counter()
    try:
        out = "found" if fn() is not None else "none"
    except BudgetExhausted:
        out = "exhausted"
    return out, time.perf_counter() - start


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--budget-nodes", type=int, default=3 * 10**7)
    args = parser.parse_args()
    budget = SearchBudget(nodes=args.budget_nodes)
    find_equitable_k(named("k4"), 4)  # compile the kernel outside the timings
    print(f"{'center':>9} {'outer':>9} {'k':>2}  {'generic':>18}  {'class-count':>18}")
    for center, outer, k in CASES:
        g, h = named(center), named(outer)
        product = l_corona(CoronaSpec(g, h, 1))
        a, ta = timed(lambda: find_equitable_k(product, k, budget))
        b, tb = timed(lambda: equitable_corona_k(g, h, k, budget))
        print(f"{center:>9} {outer:>9} {k:>2}  {a:>9} {ta:7.2f}s  {b:>9} {tb:7.2f}s")


if __name__ == "__main__":
    main()
