"""Command-line front end: classify, color, verify and table."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .coloring import (
    ColoringFormatError,
    format_coloring,
    is_equitable,
    is_semi_equitable,
    is_strong_equitable,
    parse_coloring,
    verify_proper,
)
from .corona import DEFAULT_VERTEX_BUDGET, CoronaSpec, VertexBudgetExceeded, l_corona
from .corona_dp import equitable_corona_k
from .cubic import ClassificationError, classify_cubic
from .dispatch import dispatch
from .engine import EngineDefect, PreconditionError
from .graph import FORMATS, Graph, GraphFormatError, parse_graph
from .report import run_instance, to_csv
from .solver import BudgetExhausted, SearchBudget, find_equitable_k

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


class InputError(Exception):
    pass


def _format_for(path: Path, fmt: Optional[str]) -> str:
    if fmt:
        return fmt
    return "graph6" if path.suffix in (".g6", ".graph6") else "edgelist"


def read_graph(path: str, fmt: Optional[str] = None) -> Graph:
    p = Path(path)
    try:
        return parse_graph(p.read_text(), _format_for(p, fmt))
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except GraphFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _budget(args) -> SearchBudget:
    return SearchBudget(nodes=args.budget_nodes)


def cmd_classify(args) -> int:
    g = read_graph(args.graph, args.format)
    try:
        print(classify_cubic(g, _budget(args)))
    except ClassificationError as exc:
        raise InputError(str(exc)) from None
    return EXIT_OK


def cmd_color(args) -> int:
    g = read_graph(args.center, args.format)
    h = read_graph(args.outer, args.format)
    spec = CoronaSpec(g, h, args.l)
    budget = _budget(args)
    if args.colors is not None:
        # a specific number of colors: decide it by search
        if args.l == 1:
            witness = equitable_corona_k(g, h, args.colors, budget)
        else:
            witness = find_equitable_k(l_corona(spec, args.max_vertices), args.colors, budget)
        if witness is None:
            print(f"no equitable {args.colors}-coloring n={spec.size()}")
            return EXIT_FAIL
        summary = f"chi_eq<={args.colors} method=search n={spec.size()}"
    else:
        try:
            res = dispatch(g, h, args.l, budget, exact=args.mode == "exact", vertex_budget=args.max_vertices)
        except (ClassificationError, PreconditionError) as exc:
            raise InputError(str(exc)) from None
        witness = res.witness
        summary = f"chi_eq={res.chi_eq} method={res.method} n={witness.n}"
    if args.out:
        Path(args.out).write_text(format_coloring(witness))
    print(summary)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_graph(args.graph, args.format)
    try:
        c = parse_coloring(Path(args.coloring).read_text())
    except OSError as exc:
        raise InputError(f"{args.coloring}: {exc.strerror}") from None
    except ColoringFormatError as exc:
        raise InputError(f"{args.coloring}: {exc}") from None
    if c.n != g.n:
        raise InputError(f"coloring has {c.n} vertices, graph has {g.n}")
    checks = []
    if args.proper or not (args.equitable or args.strong or args.semi is not None):
        checks.append(("proper", verify_proper(g, c)))
    if args.equitable:
        checks.append(("equitable", is_equitable(c)))
    if args.strong:
        checks.append(("strong", is_strong_equitable(c)))
    if args.semi is not None:
        checks.append((f"semi special={args.semi}", is_semi_equitable(c, args.semi)))
    for name, ok in checks:
        print(f"{name}: {'pass' if ok else 'fail'}")
    print(f"profile: {list(c.profile)}")
    return EXIT_OK if all(ok for _, ok in checks) else EXIT_FAIL


def _graph_files(directory: str) -> list[Path]:
    d = Path(directory)
    if not d.is_dir():
        raise InputError(f"{directory}: not a directory")
    return sorted(p for p in d.iterdir() if p.is_file() and not p.name.startswith("."))


def cmd_table(args) -> int:
    centers = [(p.name, read_graph(str(p), args.format)) for p in _graph_files(args.centers)]
    outers = [(p.name, read_graph(str(p), args.format)) for p in _graph_files(args.outers)]
    out_dir = None
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
    budget = _budget(args)
    rows = []
    for cid, g in centers:
        for oid, h in outers:
            for depth in sorted(set(args.l)):
                if CoronaSpec(g, h, depth).size() > args.max_vertices:
                    continue
                rows.append(run_instance(cid, g, oid, h, depth, budget, args.exact_max_n, out_dir, args.timing))
    rows.sort(key=lambda r: (r.center, r.outer, r.l))
    text = to_csv(rows)
    if args.csv:
        Path(args.csv).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _depth(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("depth must be at least 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None,
                        help="graph file format (default: graph6 for .g6 files, else edgelist)")
    common.add_argument("--budget-nodes", type=int, default=10**8, help="search node limit per decision")
    common.add_argument("--max-vertices", type=int, default=DEFAULT_VERTEX_BUDGET,
                        help="refuse to build products larger than this")

    parser = argparse.ArgumentParser(prog="equicorona", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="print Q2(t), Q3(u,v,w) or Q4")
    p.add_argument("graph")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("color", parents=[common], help="equitably color an l-corona product")
    p.add_argument("--center", required=True)
    p.add_argument("--outer", required=True)
    p.add_argument("-l", type=_depth, default=1, help="corona depth")
    p.add_argument("--mode", choices=("paper", "exact"), default="paper",
                   help="exact settles 4..5 brackets by search")
    p.add_argument("--colors", type=int, default=None, help="search for this many colors instead")
    p.add_argument("--out", help="write the witness coloring here")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", parents=[common], help="check a coloring file against a graph")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--proper", action="store_true")
    p.add_argument("--equitable", action="store_true")
    p.add_argument("--strong", action="store_true")
    p.add_argument("--semi", type=int, metavar="I", default=None,
                   help="semi-equitable with color I as the off-size class")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", parents=[common], help="CSV over all center/outer pairs")
    p.add_argument("centers", help="directory of center graphs")
    p.add_argument("outers", help="directory of outer graphs")
    p.add_argument("-l", type=_depth, nargs="+", default=[1], help="corona depths")
    p.add_argument("--out", help="directory for witness coloring files")
    p.add_argument("--csv", help="write CSV here instead of stdout")
    p.add_argument("--exact-max-n", type=int, default=2000,
                   help="run the exact cross-check only on products up to this size")
    p.add_argument("--timing", action="store_true", help="fill the millis column (breaks byte-identical output)")
    p.set_defaults(func=cmd_table, budget_nodes=2 * 10**6)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BudgetExhausted, VertexBudgetExceeded) as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except EngineDefect as exc:
        print(f"defect: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
