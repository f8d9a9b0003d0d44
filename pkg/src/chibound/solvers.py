"""Exact desk-scale solvers: cliques, colouring, containment, perfection.

All searches branch on vertices in increasing index order, so ties are
broken lexicographically and results are reproducible.
"""
from __future__ import annotations

from itertools import combinations

import numpy as np

from . import config
from .config import Deadline, require
from .graph import (
    Coloring, Graph, VertexPartition, Witness, bits, complement, induced, mask_of, popcount,
)


def _color_bound(G: Graph, cand: int) -> int:
    """Number of colours a greedy sequential colouring uses on ``cand``."""
    k = 0
    while cand:
        k += 1
        avail = cand
        while avail:
            v = (avail & -avail).bit_length() - 1
            cand &= ~(1 << v)
            avail &= ~G.adj[v] & ~(1 << v)
    return k


def _max_clique_mask(G: Graph, within: int, deadline: Deadline) -> int:
    best = 0
    best_size = 0

    def expand(current: int, size: int, cand: int) -> None:
        nonlocal best, best_size
        deadline.check()
        if not cand:
            if size > best_size:
                best, best_size = current, size
            return
        if size + _color_bound(G, cand) <= best_size:
            return
        while cand:
            if size + popcount(cand) <= best_size:
                return
            v = (cand & -cand).bit_length() - 1
            expand(current | 1 << v, size + 1, cand & G.adj[v])
            cand &= ~(1 << v)
        if size > best_size:
            best, best_size = current, size

    expand(0, 0, within)
    return best


def max_clique(G: Graph, within=None, timeout: float | None = None) -> frozenset[int]:
    """Lexicographically least maximum clique (branch and bound).

    ``within`` optionally restricts the search to a vertex set.
    """
    w = G.vertex_mask if within is None else (within if isinstance(within, int) else mask_of(within))
    return frozenset(bits(_max_clique_mask(G, w, Deadline(timeout))))


def clique_number(G: Graph, within=None) -> int:
    return len(max_clique(G, within))


def has_clique(G: Graph, size: int, within=None) -> bool:
    w = G.vertex_mask if within is None else (within if isinstance(within, int) else mask_of(within))
    if size <= 0:
        return True
    deadline = Deadline(None)

    def search(k: int, cand: int) -> bool:
        if k == 0:
            return True
        if popcount(cand) < k or _color_bound(G, cand) < k:
            return False
        while cand:
            v = (cand & -cand).bit_length() - 1
            if search(k - 1, cand & G.adj[v]):
                return True
            cand &= ~(1 << v)
            if popcount(cand) < k:
                return False
        deadline.check()
        return False

    return search(size, w)


def dsatur_coloring(G: Graph) -> Coloring:
    """DSATUR greedy colouring. Heuristic only: the count is an upper bound on chi."""
    n = G.n
    colors = [0] * n
    sat: list[set[int]] = [set() for _ in range(n)]
    deg = [G.degree(v) for v in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if not colors[u]), key=lambda u: (len(sat[u]), deg[u], -u))
        c = 1
        while c in sat[v]:
            c += 1
        colors[v] = c
        for u in bits(G.adj[v]):
            sat[u].add(c)
    return Coloring(tuple(colors))


def chromatic_number(G: Graph, cap: int | None = None, timeout: float | None = None) -> tuple[int, Coloring]:
    """Exact chromatic number with an optimal colouring.

    Branch and bound in DSATUR order, seeded with a maximum clique as the
    lower bound and the DSATUR colouring as the incumbent.
    """
    require(G.n, config.caps.chromatic if cap is None else cap, "chromatic_number")
    n = G.n
    if n == 0:
        return 0, Coloring(())
    deadline = Deadline(timeout)
    clique = sorted(max_clique(G))
    lower = len(clique)
    best = dsatur_coloring(G)
    if best.count == lower:
        return lower, best.normalized()
    best_k = best.count
    best_colors = list(best.colors)

    colors = [0] * n
    # nb_count[v][c]: number of coloured neighbours of v with colour c
    nb_count = [[0] * (n + 2) for _ in range(n)]
    sat = [0] * n
    deg = [G.degree(v) for v in range(n)]
    nbrs = [G.neighbors(v) for v in range(n)]

    def assign(v: int, c: int) -> None:
        colors[v] = c
        for u in nbrs[v]:
            nb_count[u][c] += 1
            if nb_count[u][c] == 1:
                sat[u] += 1

    def unassign(v: int) -> None:
        c = colors[v]
        colors[v] = 0
        for u in nbrs[v]:
            nb_count[u][c] -= 1
            if nb_count[u][c] == 0:
                sat[u] -= 1

    # the clique is pre-coloured 1..lower; this loses no generality
    for i, v in enumerate(clique):
        assign(v, i + 1)

    def search(used: int, remaining: int) -> bool:
        nonlocal best_k, best_colors
        deadline.check()
        if remaining == 0:
            best_k = used
            best_colors = colors[:]
            return best_k == lower
        v = -1
        key = (-1, -1)
        for u in range(n):
            if not colors[u]:
                k = (sat[u], deg[u])
                if k > key:
                    key, v = k, u
        row = nb_count[v]
        for c in range(1, min(used + 1, best_k - 1) + 1):
            if row[c]:
                continue
            assign(v, c)
            done = search(max(used, c), remaining - 1)
            unassign(v)
            if done:
                return True
            if c > used:
                break
        return False

    search(lower, n - lower)
    return best_k, Coloring(tuple(best_colors)).normalized().check(G)


def _maximal_low_omega_sets(G: Graph, bound: int) -> list[int]:
    n = G.n
    size = 1 << n
    omega = np.zeros(size, dtype=np.int8)
    for S in range(1, size):
        v = (S & -S).bit_length() - 1
        rest = S & ~(1 << v)
        omega[S] = max(omega[rest], 1 + omega[rest & G.adj[v]])
    ok = omega <= bound
    out = []
    for S in np.flatnonzero(ok):
        S = int(S)
        if all(not ok[S | 1 << v] for v in range(n) if not S >> v & 1):
            out.append(S)
    return out


def chi_upto(G: Graph, n: int, cap: int | None = None) -> int:
    """Largest chromatic number of an induced subgraph with clique number at most ``n``."""
    require(G.n, config.caps.chi_upto if cap is None else cap, "chi_upto")
    if G.n == 0 or n <= 0:
        return 0
    best = 0
    for S in _maximal_low_omega_sets(G, n):
        best = max(best, chromatic_number(induced(G, bits(S)))[0])
    return best


def contains_induced(G: Graph, H: Graph, timeout: float | None = None, within=None) -> Witness | None:
    """Lexicographically least induced embedding of ``H`` into ``G``, if any.

    Pattern vertex ``i`` maps to ``witness.mapping[i]``.
    """
    if H.n > G.n:
        return None
    if H.n == 0:
        return Witness(())
    deadline = Deadline(timeout)
    host = G.vertex_mask if within is None else (within if isinstance(within, int) else mask_of(within))
    hdeg = [H.degree(i) for i in range(H.n)]
    gdeg = [G.degree(v) for v in range(G.n)]
    image = [0] * H.n

    def extend(i: int, cand_masks: list[int], used: int) -> bool:
        deadline.check()
        if i == H.n:
            return True
        cand = cand_masks[i] & ~used
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            if gdeg[v] < hdeg[i]:
                continue
            image[i] = v
            nxt = cand_masks[:]
            ok = True
            for j in range(i + 1, H.n):
                nxt[j] &= G.adj[v] if H.adj[i] >> j & 1 else ~G.adj[v] & ~(1 << v)
                if not nxt[j] & ~used & ~(1 << v):
                    ok = False
                    break
            if ok and extend(i + 1, nxt, used | 1 << v):
                return True
        return False

    if extend(0, [host] * H.n, 0):
        return Witness(tuple(image))
    return None


def _odd_holes(G: Graph, min_len: int = 5, first_only: bool = False) -> list[tuple[int, ...]]:
    """Induced odd cycles of length >= ``min_len``, as vertex sequences starting at their least vertex."""
    found: list[tuple[int, ...]] = []

    def grow(path: list[int], inner: int, avail: int) -> bool:
        # inner: path vertices other than the first and the last
        s, last = path[0], path[-1]
        for w in bits(G.adj[last] & avail):
            if G.adj[w] & inner:
                continue
            if G.adj[w] >> s & 1:
                length = len(path) + 1
                if length >= min_len and length % 2 and path[1] < w:
                    found.append(tuple(path + [w]))
                    if first_only:
                        return True
                continue
            if grow(path + [w], inner | 1 << last, avail & ~(1 << w)):
                return True
        return False

    for s in range(G.n):
        higher = G.vertex_mask & ~((1 << (s + 1)) - 1)
        for v in bits(G.adj[s] & higher):
            if grow([s, v], 0, higher & ~(1 << v)) and first_only:
                return found
    return found


def find_odd_hole(G: Graph) -> tuple[int, ...] | None:
    holes = _odd_holes(G, first_only=True)
    return holes[0] if holes else None


def is_perfect(G: Graph, cap: int | None = None) -> tuple[bool, Witness | None]:
    """Perfection by exhaustive odd hole / odd antihole enumeration.

    The witness maps cycle position ``i`` to a host vertex; its ``note`` says
    whether it is a hole or an antihole.
    """
    require(G.n, config.caps.perfect if cap is None else cap, "is_perfect")
    hole = find_odd_hole(G)
    if hole is not None:
        return False, Witness(hole, note="odd hole")
    anti = find_odd_hole(complement(G))
    if anti is not None:
        return False, Witness(anti, note="odd antihole")
    return True, None


def _imperfect_cores(G: Graph) -> list[int]:
    cores = {mask_of(h) for h in _odd_holes(G)}
    cores |= {mask_of(h) for h in _odd_holes(complement(G))}
    return sorted(cores)


def is_k_perfect(G: Graph, k: int, cap: int | None = None) -> VertexPartition | None:
    """Partition into at most ``k`` blocks each inducing a perfect graph, if possible."""
    require(G.n, config.caps.k_perfect if cap is None else cap, "is_k_perfect")
    n = G.n
    if n == 0:
        return VertexPartition((), ())
    if k <= 0:
        return None
    subsets = np.arange(1 << n, dtype=np.int64)
    perfect = np.ones(1 << n, dtype=bool)
    for core in _imperfect_cores(G):
        perfect &= (subsets & core) != core

    def cover(rest: int, left: int) -> list[int] | None:
        if not rest:
            return []
        if left == 0:
            return None
        if perfect[rest]:
            return [rest]
        low = rest & -rest
        others = rest & ~low
        # perfect blocks containing the least remaining vertex, largest first
        sub = others
        choices = []
        while True:
            block = sub | low
            if perfect[block]:
                choices.append(block)
            if sub == 0:
                break
            sub = (sub - 1) & others
        for block in sorted(choices, key=lambda b: (-popcount(b), b)):
            tail = cover(rest & ~block, left - 1)
            if tail is not None:
                return [block] + tail
        return None

    blocks = cover(G.vertex_mask, k)
    if blocks is None:
        return None
    return VertexPartition(tuple(frozenset(bits(b)) for b in blocks), ("perfect",) * len(blocks))
