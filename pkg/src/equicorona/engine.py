"""Constructive colorings of l-corona products of cubic graphs.

Each builder starts from a coloring of the center graph (found by exact
search where only existence is known) and extends it one corona level at a
time: every copy of H is colored from the color of the vertex it hangs off
and H's partition into independent sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Optional, Sequence

from .coloring import Coloring, equitable_profile, is_equitable, is_strong_equitable, verify_proper
from .corona_dp import equitable_corona_k
from .corona import CoronaSpec, embed_subcorona, l_corona
from .cubic import CubicClass, classify_cubic
from .graph import Graph
from .solver import (
    DEFAULT_BUDGET,
    SearchBudget,
    SolverDefect,
    find_equitable_k,
    find_semi_equitable,
    find_strong_equitable_k,
    minimum_coloring,
)


class PreconditionError(ValueError):
    """Inputs violate the hypotheses of the construction."""


class NotCovered(PreconditionError):
    """The construction does not handle this center size."""


class EngineDefect(RuntimeError):
    """A construction produced something its proof says cannot happen."""


# ---------------------------------------------------------------------------
# level-by-level extension


def extend_levels(
    base: Sequence[int],
    n_outer: int,
    depth: int,
    copy_colors: Callable[[int, int], Sequence[int]],
) -> list[int]:
    """Extend a color list through ``depth`` corona steps.

    ``copy_colors(parent, parent_color)`` returns the colors of the copy
    linked to ``parent``, in H's vertex order.
    """
    colors = list(base)
    for _ in range(depth):
        n_prev = len(colors)
        for p in range(n_prev):
            block = copy_colors(p, colors[p])
            if len(block) != n_outer:
                raise ValueError("copy coloring has wrong length")
            colors.extend(block)
    return colors


def rotate_extend(base: Coloring, n_outer: int, part_of: Sequence[int], depth: int, k: int) -> Coloring:
    """Copy linked to an i-vertex gets color ``((i + j - 1) mod k) + 1`` on part ``j``.

    ``part_of[v]`` is the 1-based part of outer vertex ``v``; parts must number
    fewer than ``k`` so no copy vertex reuses its parent's color.
    """
    if max(part_of, default=0) >= k:
        raise PreconditionError(f"{max(part_of)} parts do not fit a rotation over {k} colors")
    table = {
        i: tuple((i + j - 1) % k + 1 for j in part_of)
        for i in range(1, k + 1)
    }
    return Coloring(tuple(extend_levels(base.colors, n_outer, depth, lambda _p, c: table[c])), k)


def _require_strong(g: Graph, c: Coloring, k: int) -> None:
    if c.n != g.n or c.k != k:
        raise PreconditionError(f"expected a {k}-coloring of the {g.n}-vertex center")
    if g.n % k:
        raise PreconditionError(f"{k} does not divide n_G={g.n}")
    if not verify_proper(g, c):
        raise PreconditionError("center coloring is not proper")
    if not is_strong_equitable(c):
        raise PreconditionError(f"center coloring {list(c.profile)} is not strong equitable")


def extend_strong_k(
    g: Graph,
    c: Coloring,
    h: Graph,
    depth: int,
    k: int,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> Coloring:
    """Strong equitable k-coloring (k >= 5) of ``G o^depth H`` from one of G.

    H is split into k-1 independent sets by an equitable (k-1)-coloring,
    which exists for every subcubic graph once k-1 >= 4.
    """
    if k < 5:
        raise PreconditionError("rotation over k colors needs k >= 5 for arbitrary cubic H")
    _require_strong(g, c, k)
    parts = find_equitable_k(h, k - 1, budget)
    if parts is None:
        raise SolverDefect(f"no equitable {k - 1}-coloring of the outer graph")
    return rotate_extend(c, h.n, parts.colors, depth, k)


def extend_strong_4(
    g: Graph,
    c: Coloring,
    h: Graph,
    depth: int,
    h_class: Optional[CubicClass] = None,
) -> Coloring:
    """Strong equitable 4-coloring of ``G o^depth H`` for H in Q2 or Q3."""
    hc = h_class or classify_cubic(h)
    if hc.kind == "Q4":
        raise PreconditionError("outer graph K4 needs four parts; no rotation over 4 colors exists")
    _require_strong(g, c, 4)
    return rotate_extend(c, h.n, hc.witness.colors, depth, 4)


# ---------------------------------------------------------------------------
# H in Q2


@dataclass(frozen=True)
class Recursion3State:
    n1: int
    n2: int
    n3: int
    t: int
    depth: int
    sizes: tuple[int, int, int]


def recursion3(n1: int, n2: int, n3: int, t: int, depth: int) -> Recursion3State:
    """Class sizes of the rotated 3-coloring of ``G o^depth H`` with H in Q2(t).

    Each step adds ``t`` to a class for every vertex outside it, since the two
    sides of a copy take the two colors its parent lacks.
    """
    if not n1 >= n2 >= n3 >= 0:
        raise ValueError("need n1 >= n2 >= n3 >= 0")
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    a, b, c = n1, n2, n3
    for _ in range(depth):
        a, b, c = a + (b + c) * t, b + (a + c) * t, c + (a + b) * t
    return Recursion3State(n1, n2, n3, t, depth, (a, b, c))


@dataclass(frozen=True)
class NotEquitable3:
    """Certificate that ``G o^l H`` has no equitable 3-coloring."""

    reason: str


def equitable3(
    g: Graph, h: Graph, depth: int, budget: SearchBudget = DEFAULT_BUDGET
) -> Coloring | NotEquitable3:
    hc = classify_cubic(h, budget)
    if hc.kind != "Q2":
        return NotEquitable3(f"outer graph is {hc}, not bipartite")
    if g.n % 6:
        return NotEquitable3(f"6 does not divide n_G={g.n}")
    base = find_strong_equitable_k(g, 3, budget)
    if base is None:
        return NotEquitable3("center graph has no strong equitable 3-coloring")
    return rotate_extend(base, h.n, hc.witness.colors, depth, 3)


def _equitable4_q2(
    g: Graph, h: Graph, depth: int, budget: SearchBudget
) -> tuple[Coloring, str]:
    hc = classify_cubic(h, budget)
    if hc.kind != "Q2":
        raise PreconditionError(f"outer graph must be bipartite, got {hc}")
    gc = classify_cubic(g, budget)
    side = hc.witness.colors  # 1 = X, 2 = Y

    if gc.kind == "Q2":
        x = g.n // 2
        a, b = gc.parts
        base = [0] * g.n
        hi = -(-x // 2)
        for pos, v in enumerate(a):
            base[v] = 1 if pos < hi else 2
        for pos, v in enumerate(b):
            base[v] = 3 if pos < hi else 4
        low = tuple(3 if s == 1 else 4 for s in side)
        high = tuple(1 if s == 1 else 2 for s in side)
        colors = extend_levels(base, h.n, depth, lambda _p, c: low if c <= 2 else high)
        return Coloring(tuple(colors), 4), "case1"

    if gc.kind == "Q4" or g.n % 4 == 0:
        base4 = find_strong_equitable_k(g, 4, budget)
        if base4 is None:
            raise SolverDefect("no strong equitable 4-coloring of a cubic graph with 4 | n")
        return extend_strong_4(g, base4, h, depth, hc), "case3" if gc.kind == "Q4" else "subcase2.1"

    base4 = find_equitable_k(g, 4, budget)
    if base4 is None:
        raise SolverDefect("no equitable 4-coloring of a cubic graph")
    v1 = base4.colors.index(1)
    v2 = base4.colors.index(2)
    special = {
        v1: tuple(2 if s == 1 else 3 for s in side),
        v2: tuple(4 if s == 1 else 1 for s in side),
    }
    rot = {i: tuple((i + s - 1) % 4 + 1 for s in side) for i in range(1, 5)}
    colors = extend_levels(base4.colors, h.n, depth, lambda p, c: special.get(p) or rot[c])
    return Coloring(tuple(colors), 4), "subcase2.2"


def equitable4_Q2outer(g: Graph, h: Graph, depth: int, budget: SearchBudget = DEFAULT_BUDGET) -> Coloring:
    """Equitable 4-coloring of ``G o^depth H`` for cubic G and bipartite cubic H.

    With G bipartite, one side takes colors 1/2 and the other 3/4, and copies
    hanging off 1/2-vertices use 3/4 (and vice versa). With G in Q3 and
    ``n_G = 4s + 2``, two designated vertices carrying the surplus colors 1
    and 2 keep that role at every level; their copies use the fixed patterns
    X->2, Y->3 and X->4, Y->1, everything else rotates.
    """
    return _equitable4_q2(g, h, depth, budget)[0]


# ---------------------------------------------------------------------------
# H in Q3


def five_targets(n: int) -> tuple[int, ...]:
    """Class sizes for an equitable 5-coloring; colors 1..(n mod 5) are larger."""
    return equitable_profile(n, 5)


def div4_deficits(n_center: int, n_outer: int, depth: int) -> tuple[int, int, int, int]:
    """How many vertices of each of colors 1..4 move to color 5."""
    total = n_center * (n_outer + 1) ** depth
    per = total // 4
    targets = five_targets(total)
    return tuple(per - targets[i] for i in range(4))


def equitable5_div4(
    g: Graph,
    h: Graph,
    depth: int,
    base: Optional[Coloring] = None,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> Coloring:
    """Equitable 5-coloring of ``G o^depth H`` for subcubic G with 4 | n_G and H in Q3.

    Start from the rotated strong 4-coloring, then move ``d_i`` vertices of
    color i to color 5. They come from the largest part X_1 of level-``depth``
    copies whose parent has color i-1 (4 before 1), lowest addresses first;
    each X_1 is independent and distinct copies are nonadjacent, so the
    recolored set stays independent.
    """
    if depth < 1:
        raise PreconditionError("depth must be at least 1")
    if g.n < 4 or g.n % 4:
        raise PreconditionError(f"need 4 | n_G >= 4, got n_G={g.n}")
    hc = classify_cubic(h, budget)
    if hc.kind != "Q3":
        raise PreconditionError(f"outer graph must be 3-chromatic, got {hc}")
    if base is None:
        base = find_strong_equitable_k(g, 4, budget)
        if base is None:
            raise SolverDefect("no strong equitable 4-coloring of a subcubic graph with 4 | n")
    colors = list(extend_strong_4(g, base, h, depth, hc).colors)

    n_prev = g.n * (h.n + 1) ** (depth - 1)
    x1 = [j for j, part in enumerate(hc.witness.colors) if part == 1]
    for i, need in enumerate(div4_deficits(g.n, h.n, depth), 1):
        src = (i - 2) % 4 + 1
        moved = 0
        for p in range(n_prev):
            if moved == need:
                break
            if colors[p] != src:
                continue
            start = n_prev + p * h.n
            for j in x1:
                if moved == need:
                    break
                colors[start + j] = 5
                moved += 1
        if moved < need:
            raise EngineDefect(f"recolor pool for color {i} holds {moved} < {need} vertices")
    return Coloring(tuple(colors), 5)


def theorem6_split(g: Graph, seed: Coloring) -> tuple[list[int], list[int]]:
    """Split the center into V^e (lowest e/4 vertices of each color 1..4) and the rest."""
    n = g.n
    e = 4 * (5 - n % 5)
    chosen: list[int] = []
    for color in range(1, 5):
        members = [v for v in range(n) if seed.colors[v] == color]
        chosen.extend(members[: e // 4])
    s = sorted(chosen)
    taken = set(s)
    return s, [v for v in range(n) if v not in taken]


def equitable5_general(
    g: Graph, h: Graph, depth: int, budget: SearchBudget = DEFAULT_BUDGET
) -> Coloring:
    """Equitable 5-coloring of ``G o^depth H`` for cubic G with n_G >= 8 and H in Q3.

    If 5 | n_G the strong 5-rotation does it. Otherwise a semi-equitable
    5-coloring of G with four classes of ``(n + 5 - r)/5`` and color 5 on the
    remaining ``(n - e)/5`` vertices is split: V^e (e/4 vertices per color
    1..4) is handled by :func:`equitable5_div4`, and the rest, now strongly
    5-colored, by the 5-rotation. The rest contributes equally to all five
    classes, so the union stays equitable.
    """
    n = g.n
    if n < 8:
        raise NotCovered(f"n_G={n} < 8")
    r = n % 5
    if r == 1 and n < 16:
        raise NotCovered(f"n_G={n} has n mod 5 = 1 but is below 16")
    hc = classify_cubic(h, budget)
    if hc.kind != "Q3":
        raise PreconditionError(f"outer graph must be 3-chromatic, got {hc}")
    if r == 0:
        base = find_strong_equitable_k(g, 5, budget)
        if base is None:
            raise SolverDefect("no strong equitable 5-coloring of a subcubic graph with 5 | n")
        return extend_strong_k(g, base, h, depth, 5, budget)

    e = 4 * (5 - r)
    seed = find_semi_equitable(g, 5, (n - e) // 5, budget)
    if seed is None:
        raise SolverDefect(f"no semi-equitable 5-coloring of type s={(n - e) // 5}")
    core, rest = theorem6_split(g, seed)

    colors = [0] * (n * (h.n + 1) ** depth)
    sub = g.induced(core)
    part = equitable5_div4(sub, h, depth, Coloring(seed.restrict(core).colors, 4), budget)
    for src, dst in enumerate(embed_subcorona(core, n, h.n, depth)):
        colors[dst] = part.colors[src]
    if rest:
        sub = g.induced(rest)
        part = extend_strong_k(sub, seed.restrict(rest), h, depth, 5, budget)
        for src, dst in enumerate(embed_subcorona(rest, n, h.n, depth)):
            colors[dst] = part.colors[src]
    return Coloring(tuple(colors), 5)


def small_center_fallback(
    g: Graph,
    h: Graph,
    depth: int,
    budget: SearchBudget = DEFAULT_BUDGET,
    k: int = 5,
) -> Coloring:
    """Equitable k-coloring for the six-vertex centers, where no construction applies.

    Level 1 is colored exactly by :func:`equitable_corona_k`. Deeper levels are
    filled greedily: each copy takes the partition of H and color assignment
    (avoiding the parent's color) that leaves the smallest spread of class
    sizes so far, and leaf copies are then re-chosen one at a time while that
    narrows the spread.
    The result is checked and a failure raises :class:`EngineDefect`.
    """
    if depth < 1:
        raise PreconditionError("depth must be at least 1")
    hc = classify_cubic(h, budget)
    if hc.chromatic >= k:
        raise PreconditionError(f"outer graph {hc} cannot be colored beside its parent with {k} colors")
    start = equitable_corona_k(g, h, k, budget)
    if start is None:
        raise EngineDefect(f"no equitable {k}-coloring of the level-1 corona exists")
    colors = list(start.colors)
    counts = [0] * (k + 1)
    for c in colors:
        counts[c] += 1
    # partitions of H into 3..k-1 independent sets; parts of odd size keep
    # class-size parities adjustable
    options = [hc.parts]
    for m in range(hc.chromatic + 1, k):
        eq = find_equitable_k(h, m, budget)
        if eq is not None:
            options.append([cl for cl in eq.classes() if cl])

    def choices(parent_color):
        free = [c for c in range(1, k + 1) if c != parent_color]
        for parts in options:
            for assign in permutations(free, len(parts)):
                yield tuple((c, members) for c, members in zip(assign, parts))

    def score(choice, sign=1):
        for c, members in choice:
            counts[c] += sign * len(members)
        key = (max(counts[1:]) - min(counts[1:]), sum(x * x for x in counts[1:]))
        for c, members in choice:
            counts[c] -= sign * len(members)
        return key

    def apply(start, choice, sign=1):
        for c, members in choice:
            counts[c] += sign * len(members)
            for v in members:
                colors[start + v] = c

    last: list[tuple] = []
    for _ in range(depth - 1):
        n_prev = len(colors)
        colors.extend([0] * (n_prev * h.n))
        last = []
        for p in range(n_prev):
            best = min(choices(colors[p]), key=score)
            apply(n_prev + p * h.n, best)
            last.append(best)

    # leaf copies touch nothing below them, so they can be recolored freely
    n_prev = len(colors) // (h.n + 1)
    improved = bool(last)
    while improved and max(counts[1:]) - min(counts[1:]) > 1:
        improved = False
        for p, current in enumerate(last):
            start = n_prev + p * h.n
            apply(start, current, -1)
            before = score(current)
            best = min(choices(colors[p]), key=score)
            if score(best) < before:
                last[p] = best
                improved = True
            apply(start, last[p])
    result = Coloring(tuple(colors), k)
    if not is_equitable(result):
        raise EngineDefect(f"greedy extension ended unbalanced: {list(result.profile)}")
    return result


# ---------------------------------------------------------------------------
# H = K_m and ordinary coloring


def color_complete_outer(g: Graph, m: int, depth: int, budget: SearchBudget = DEFAULT_BUDGET) -> Coloring:
    """Equitable (m+1)-coloring of ``G o^depth K_m``.

    The copy of K_m at an i-vertex takes the m colors other than i in
    ascending order, so each step adds one vertex to every class per copy
    except the parent's own class; from any proper coloring of G with at most
    m+1 colors the first step already balances all classes exactly.
    """
    base = minimum_coloring(g, budget)
    if base.k > m + 1:
        raise PreconditionError(f"chi(G)={base.k} exceeds m+1={m + 1}")
    table = {i: tuple(c for c in range(1, m + 2) if c != i) for i in range(1, m + 2)}
    colors = extend_levels(base.colors, m, depth, lambda _p, c: table[c])
    return Coloring(tuple(colors), m + 1)


def ordinary_coloring(g: Graph, h: Graph, depth: int, budget: SearchBudget = DEFAULT_BUDGET) -> Coloring:
    """Proper coloring of ``G o^depth H`` with ``max(chi(G), chi(H) + 1)`` colors.

    G gets a minimum coloring; every copy's r partition sets take colors
    ``i+1, ..., i+r`` (mod k) from its parent color i.
    """
    base = minimum_coloring(g, budget)
    hc = classify_cubic(h, budget)
    k = max(base.k, hc.chromatic + 1)
    return rotate_extend(Coloring(base.colors, k), h.n, hc.witness.colors, depth, k)
