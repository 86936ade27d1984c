"""Vertex colorings and the equitability predicates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .graph import Graph


class ColoringFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Coloring:
    """Total assignment of colors ``1..k`` to vertices ``0..n-1``.

    Classes may be empty; ``k`` counts them regardless.
    """

    colors: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.k < 1 and self.colors:
            raise ValueError("k must be positive")
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.k:
                raise ValueError(f"vertex {v} has color {c} outside 1..{self.k}")

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def profile(self) -> tuple[int, ...]:
        sizes = [0] * self.k
        for c in self.colors:
            sizes[c - 1] += 1
        return tuple(sizes)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c - 1].append(v)
        return out

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    def restrict(self, vertices: Sequence[int]) -> Coloring:
        return Coloring(tuple(self.colors[v] for v in vertices), self.k)

    def used_colors(self) -> int:
        return len(set(self.colors))


ProfileLike = Union[Coloring, Sequence[int]]


def _sizes(x: ProfileLike) -> tuple[int, ...]:
    return x.profile if isinstance(x, Coloring) else tuple(x)


def verify_proper(g: Graph, c: Coloring) -> bool:
    if c.n != g.n:
        raise ValueError(f"coloring has {c.n} vertices, graph has {g.n}")
    col = c.colors
    return all(col[u] != col[v] for u, v in g.edges)


def is_equitable(x: ProfileLike) -> bool:
    sizes = _sizes(x)
    return not sizes or max(sizes) - min(sizes) <= 1


def is_strong_equitable(x: ProfileLike) -> bool:
    sizes = _sizes(x)
    return not sizes or max(sizes) == min(sizes)


def is_semi_equitable(x: ProfileLike, special: int) -> bool:
    """``special`` is the 1-based index of the off-size class."""
    sizes = _sizes(x)
    k = len(sizes)
    if not 1 <= special <= k:
        raise ValueError(f"special class {special} outside 1..{k}")
    n = sum(sizes)
    if sizes[special - 1] in (n // k, -(-n // k)):
        return False
    return is_equitable(sizes[: special - 1] + sizes[special:])


def equitable_profile(n: int, k: int) -> tuple[int, ...]:
    """Class sizes of an equitable k-partition of n, larger classes first."""
    q, r = divmod(n, k)
    return (q + 1,) * r + (q,) * (k - r)


# ---------------------------------------------------------------------------
# text format: "n k" then n lines "<vertex> <color>"


def format_coloring(c: Coloring) -> str:
    lines = [f"{c.n} {c.k}"]
    lines.extend(f"{v} {col}" for v, col in enumerate(c.colors))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> Coloring:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows or len(rows[0]) != 2:
        raise ColoringFormatError("missing 'n k' header")
    try:
        n, k = int(rows[0][0]), int(rows[0][1])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError:
        raise ColoringFormatError("non-integer token in coloring file") from None
    if len(pairs) != n:
        raise ColoringFormatError(f"header declares {n} vertices, found {len(pairs)} lines")
    colors: list[int | None] = [None] * n
    for v, col in pairs:
        if not 0 <= v < n:
            raise ColoringFormatError(f"vertex {v} out of range")
        if colors[v] is not None:
            raise ColoringFormatError(f"vertex {v} listed twice")
        colors[v] = col
    try:
        return Coloring(tuple(colors), k)  # type: ignore[arg-type]
    except ValueError as exc:
        raise ColoringFormatError(str(exc)) from None


def from_classes(n: int, classes: Iterable[Iterable[int]]) -> Coloring:
    """Build a coloring whose color ``i+1`` is the i-th vertex set."""
    classes = [list(cl) for cl in classes]
    colors = [0] * n
    for i, cl in enumerate(classes, 1):
        for v in cl:
            colors[v] = i
    if 0 in colors:
        raise ValueError("classes do not cover every vertex")
    return Coloring(tuple(colors), len(classes))
