"""Simple undirected graphs, text formats, and structural checks."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Raised when graph text cannot be parsed into a simple graph."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` is normalized to sorted ``(u, v)`` pairs with ``u < v``, so two
    graphs compare equal iff they have the same labelled edge set.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphFormatError(f"negative vertex count {self.n}")
        seen: set[tuple[int, int]] = set()
        for u, v in self.edges:
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={self.n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise GraphFormatError(f"duplicate edge {e}")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, relabelled to ``0..len(vertices)-1`` in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise ValueError("vertex list contains repeats")
        edges = [
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        ]
        return Graph.from_edges(len(vertices), edges)


# ---------------------------------------------------------------------------
# text formats


def parse_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment."""
    rows: list[list[str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise GraphFormatError("empty edge-list input")
    header = rows[0]
    if len(header) != 2:
        raise GraphFormatError(f"malformed header {' '.join(header)!r}; expected 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError(f"malformed header {' '.join(header)!r}") from None
    if n < 0 or m < 0:
        raise GraphFormatError("negative counts in header")
    body = rows[1:]
    if len(body) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(body)} edge lines follow")
    edges = []
    for row in body:
        if len(row) != 2:
            raise GraphFormatError(f"malformed edge line {' '.join(row)!r}")
        try:
            edges.append((int(row[0]), int(row[1])))
        except ValueError:
            raise GraphFormatError(f"malformed edge line {' '.join(row)!r}") from None
    return Graph.from_edges(n, edges)


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _g6_size(data: bytes) -> tuple[int, int]:
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        chunk, start = data[2:8], 8
    else:
        chunk, start = data[1:4], 4
    if len(chunk) < (6 if start == 8 else 3):
        raise GraphFormatError("truncated graph6 size field")
    n = 0
    for b in chunk:
        n = (n << 6) | (b - 63)
    return n, start


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphFormatError("empty graph6 input")
    data = s.encode("ascii")
    if any(b < 63 or b > 126 for b in data):
        raise GraphFormatError("graph6 bytes must lie in 63..126")
    n, start = _g6_size(data)
    nbits = n * (n - 1) // 2
    body = data[start:]
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    bits = []
    for b in body:
        v = b - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        out = [n + 63]
    elif n < 258048:
        out = [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    else:
        out = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    for p in range(0, len(bits), 6):
        v = 0
        for b in bits[p:p + 6]:
            v = (v << 1) | b
        out.append(v + 63)
    return bytes(out).decode("ascii")


FORMATS = ("edgelist", "graph6")


def parse_graph(source: str, format: str = "edgelist") -> Graph:
    if format == "edgelist":
        return parse_edgelist(source)
    if format == "graph6":
        return parse_graph6(source)
    raise GraphFormatError(f"unknown graph format {format!r}")


def format_graph(g: Graph, format: str = "edgelist") -> str:
    if format == "edgelist":
        return to_edgelist(g)
    if format == "graph6":
        return to_graph6(g) + "\n"
    raise GraphFormatError(f"unknown graph format {format!r}")


# ---------------------------------------------------------------------------
# structural checks


def is_cubic(g: Graph) -> bool:
    return g.n > 0 and all(len(a) == 3 for a in g.adj)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if not seen[u]:
                seen[u] = True
                count += 1
                queue.append(u)
    return count == g.n


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def is_k33(g: Graph) -> bool:
    """True iff ``g`` is isomorphic to the complete bipartite graph K_{3,3}."""
    if g.n != 6 or g.m != 9:
        return False
    side = set(u for u in range(6) if u not in g.adj[0])
    return len(side) == 3 and all(set(g.adj[v]) == set(range(6)) - side for v in side)
