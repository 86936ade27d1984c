"""Write the desk-scale graph grid to disk and run the table command over it.

    python3 scripts/reproduce_tables.py --workdir runs/tables -l 1 2
"""

import argparse
from pathlib import Path

from equicorona.cli import main as cli_main
from equicorona.families import named
from equicorona.graph import format_graph

CENTERS = ("k4", "k33", "prism", "cube", "wagner", "petersen", "prism5", "mobius12", "prism7")
OUTERS = ("k4", "k33", "prism", "cube", "petersen")


def write_graphs(directory: Path, names) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    for name in names:
        (directory / name).write_text(format_graph(named(name)))


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--workdir", type=Path, default=Path("runs/tables"))
    parser.add_argument("-l", type=int, nargs="+", default=[1, 2])
    parser.add_argument("--budget-nodes", type=int, default=2 * 10**6)
    parser.add_argument("--exact-max-n", type=int, default=2000)
    parser.add_argument("--timing", action="store_true")
    args = parser.parse_args()

    write_graphs(args.workdir / "centers", CENTERS)
    write_graphs(args.workdir / "outers", OUTERS)
    argv = [
        "table", str(args.workdir / "centers"), str(args.workdir / "outers"),
        "-l", *map(str, args.l),
        "--out", str(args.workdir / "colorings"),
        "--csv", str(args.workdir / "table.csv"),
        "--budget-nodes", str(args.budget_nodes),
        "--exact-max-n", str(args.exact_max_n),
    ]
    if args.timing:
        argv.append("--timing")
    code = cli_main(argv)
    print(f"wrote {args.workdir / 'table.csv'}")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
