"""Backtracking kernel for capacity-constrained proper colorings.

All state lives in caller-owned arrays so a search can pause after a node
quota and resume later with no loss.
"""

import numpy as np
from numba import njit

FOUND = 0
NONE = 1
PAUSED = 2


@njit(cache=True)
def _gain(x, d, block, bit, alpha, bmask, avail):
    q = block[x]
    old = alpha[q, bmask[q, d]]
    bmask[q, d] |= bit[x]
    avail[d] += alpha[q, bmask[q, d]] - old


@njit(cache=True)
def _lose(x, d, block, bit, alpha, bmask, avail):
    q = block[x]
    old = alpha[q, bmask[q, d]]
    bmask[q, d] &= ~bit[x]
    avail[d] += alpha[q, bmask[q, d]] - old


@njit(cache=True)
def subset_alpha(nbr, size, out):
    """Fill ``out[S]`` with the independence number of member subset S."""
    out[0] = 0
    for s in range(1, 1 << size):
        low = 0
        while not (s >> low) & 1:
            low += 1
        rest = s & ~(1 << low)
        a = out[rest]
        b = 1 + out[rest & ~nbr[low]]
        out[s] = a if a > b else b


@njit(cache=True)
def _undo(v, indptr, indices, color, count, forb, block, bit, alpha, bmask, avail, k):
    c = color[v]
    for p in range(indptr[v], indptr[v + 1]):
        u = indices[p]
        if color[u] < 0:
            if forb[u, c] == 1:
                _gain(u, c, block, bit, alpha, bmask, avail)
            forb[u, c] -= 1
    for d in range(k):
        if forb[v, d] == 0:
            _gain(v, d, block, bit, alpha, bmask, avail)
    count[c] -= 1
    color[v] = -1


@njit(cache=True)
def search(indptr, indices, order, caps, prev_same, exact, block, bit, alpha,
           color, count, forb, bmask, avail, trycol, state, node_limit):
    """Advance the search; returns FOUND, NONE or PAUSED.

    ``state[0]`` is the current depth, ``state[1]`` the running node count.
    ``prev_same[c]`` is the previous color with the same cap (or -1); a color
    may open only after that one is in use, which removes relabelings of
    interchangeable classes. With ``exact`` set, caps are exact class sizes
    and a branch dies as soon as some class can no longer be filled.

    ``block`` partitions the vertices into small groups and ``bit[v]`` is v's
    bit inside its group. ``bmask[q, d]`` holds the uncolored members of q
    that may still take color d, ``alpha[q, S]`` the independence number of
    member set S, and ``avail[d]`` the sum of ``alpha[q, bmask[q, d]]``: an
    upper bound on how many more vertices class d can absorb.
    """
    n = order.shape[0]
    k = caps.shape[0]
    pos = state[0]
    nodes = state[1]
    while True:
        if pos == n:
            state[0] = pos
            state[1] = nodes
            return FOUND
        if nodes >= node_limit:
            state[0] = pos
            state[1] = nodes
            return PAUSED
        v = order[pos]
        chosen = -1
        c = trycol[pos]
        while c < k:
            if forb[v, c] == 0 and count[c] < caps[c]:
                q = prev_same[c]
                if count[c] > 0 or q < 0 or count[q] > 0:
                    chosen = c
                    break
            c += 1
        if chosen < 0:
            if pos == 0:
                state[0] = 0
                state[1] = nodes
                return NONE
            pos -= 1
            u = order[pos]
            cu = color[u]
            _undo(u, indptr, indices, color, count, forb, block, bit, alpha, bmask, avail, k)
            trycol[pos] = cu + 1
            continue

        nodes += 1
        color[v] = chosen
        count[chosen] += 1
        for d in range(k):
            if forb[v, d] == 0:
                _lose(v, d, block, bit, alpha, bmask, avail)
        for p in range(indptr[v], indptr[v + 1]):
            u = indices[p]
            if color[u] < 0:
                forb[u, chosen] += 1
                if forb[u, chosen] == 1:
                    _lose(u, chosen, block, bit, alpha, bmask, avail)

        ok = True
        for p in range(indptr[v], indptr[v + 1]):
            u = indices[p]
            if color[u] < 0:
                alive = False
                for d in range(k):
                    if forb[u, d] == 0 and count[d] < caps[d]:
                        alive = True
                        break
                if not alive:
                    ok = False
                    break
        if ok and exact:
            for d in range(k):
                if caps[d] - count[d] > avail[d]:
                    ok = False
                    break

        if ok:
            pos += 1
            trycol[pos] = 0
        else:
            _undo(v, indptr, indices, color, count, forb, block, bit, alpha, bmask, avail, k)
            trycol[pos] = chosen + 1


def make_state(block, bit, alpha, k):
    n = block.shape[0]
    full = np.zeros(alpha.shape[0], dtype=np.int32)
    np.bitwise_or.at(full, block, bit)
    total = int(alpha[np.arange(alpha.shape[0]), full].sum())
    return (
        np.full(n, -1, dtype=np.int32),                    # color
        np.zeros(k, dtype=np.int32),                       # count
        np.zeros((n, k), dtype=np.int32),                  # forb
        np.repeat(full[:, None], k, axis=1),               # bmask
        np.full(k, total, dtype=np.int32),                 # avail
        np.zeros(n + 1, dtype=np.int32),                   # trycol
        np.zeros(2, dtype=np.int64),                       # depth, nodes
    )
