"""Constructive colourings for the polynomially chi-bounded classes.

Each colourer follows an inductive argument step by step: pick a maximum
clique, sort the other vertices by how they meet it, colour the pieces
with bounded clique number exactly, and glue the pieces with disjoint
palettes. The class constants those arguments leave abstract (a bound on
chi for graphs of small clique number) are instantiated as the largest
exact chromatic number met during the run, so every :class:`BoundReport`
is self-contained.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from . import config
from .config import require
from .errors import ImproperColoringError, NotMemberError
from .graph import (
    Coloring, Graph, VertexPartition, bits, compose_coloring_by_substitution, induced,
    is_homogeneous, mask_of, popcount,
)
from .patterns import PatternSpec, make_pattern
from .solvers import chromatic_number, clique_number, contains_induced, max_clique

BOUND_NAMES = ("eq31", "pineapple_g", "eq51", "bowtie_f")


@dataclass(frozen=True)
class BoundReport:
    bound_name: str
    inputs: dict = field(compare=True)
    bound_value: int
    achieved: int

    def __post_init__(self):
        if self.bound_name not in BOUND_NAMES:
            raise ValueError(f"unknown bound {self.bound_name!r}")

    @property
    def holds(self) -> bool:
        return self.achieved <= self.bound_value

    def to_dict(self) -> dict:
        return {
            "bound_name": self.bound_name,
            "inputs": dict(self.inputs),
            "bound_value": self.bound_value,
            "achieved": self.achieved,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def ramsey_bound(s: int, t: int) -> int:
    """Erdos-Szekeres upper bound ``binom(s+t-2, t-1)`` on the Ramsey number R(s, t)."""
    if s < 1 or t < 1:
        raise ValueError("ramsey_bound needs s, t >= 1")
    return comb(s + t - 2, t - 1)


# ------------------------------------------------------------------ helpers

def _as_mask(S) -> int:
    return S if isinstance(S, int) else mask_of(S)


def _require_free(G: Graph, H: Graph, name: str) -> None:
    w = contains_induced(G, H)
    if w is not None:
        raise NotMemberError(f"graph contains an induced {name}", witness=w, pattern=name)


def _exact(G: Graph, vs: list[int]) -> tuple[int, list[int]]:
    """Optimal colouring of ``G[vs]``; colours listed in the order of ``vs``."""
    if not vs:
        return 0, []
    k, col = chromatic_number(induced(G, vs))
    return k, list(col.colors)


def _stack(
    G: Graph, parts: list[list[int]], colors: dict[int, int], offset: int = 0
) -> tuple[int, list[int]]:
    """Colour each part exactly on its own palette, after ``offset``.

    Returns the total palette size used and the chromatic number of each part.
    """
    chis = []
    for part in parts:
        vs = sorted(part)
        k, col = _exact(G, vs)
        for v, c in zip(vs, col):
            colors[v] = offset + c
        offset += k
        chis.append(k)
    return offset, chis


def _finish(G: Graph, colors) -> Coloring:
    if isinstance(colors, dict):
        colors = [colors[v] for v in range(G.n)]
    return Coloring(tuple(colors)).check(G)


def color_exact(G: Graph) -> Coloring:
    return chromatic_number(G)[1]


# ------------------------------------------------------------------ mK_t-free

def color_mkt_free(G: Graph, m: int, t: int) -> tuple[Coloring, BoundReport]:
    """Colour an ``mK_t``-free graph by the clique-layer recursion.

    With ``K`` a maximum clique: every ``(t-1)``-subset ``M`` of ``K`` gives
    the class ``M`` plus the outside vertices complete to ``K - M`` (clique
    number at most ``t-1``, coloured exactly); every ``t``-subset ``N`` gives
    the outside vertices anti-complete to ``N``, which induce an
    ``(m-1)K_t``-free graph and are coloured recursively. Vertices go to the
    first class containing them; classes get disjoint palettes.

    The report instantiates ``f(t-1)`` as the largest chi of a small class
    and ``g(omega)`` as the largest bound certified by a recursive call.
    """
    if m < 1 or t < 2:
        raise ValueError("color_mkt_free needs m >= 1 and t >= 2")
    _require_free(G, make_pattern(PatternSpec("mKt", (m, t))), f"{m}K{t}")
    if G.n <= 1:
        col = Coloring((1,) * G.n)
        return col, BoundReport("eq31", {"omega": G.n, "t": t, "m": m, "f": G.n, "g": 0}, G.n, G.n)
    colors: dict[int, int] = {}
    bound = _mkt(G, G.vertex_mask, m, t, colors)
    col = _finish(G, colors)
    return col, BoundReport("eq31", bound["inputs"], bound["value"], col.count)


def _first_fit_classes(candidates: list[int]) -> list[int]:
    """Make candidate masks disjoint by giving each vertex to the first class containing it."""
    seen = 0
    out = []
    for c in candidates:
        out.append(c & ~seen)
        seen |= c
    return out


def _mkt(G: Graph, vs: int, m: int, t: int, colors: dict[int, int]) -> dict:
    omega = clique_number(G, vs)
    if m <= 1 or omega < t:
        # K_t-free, or small clique number: coloured exactly
        k, col = _exact(G, list(bits(vs)))
        for v, c in zip(bits(vs), col):
            colors[v] = c
        return {"inputs": {"omega": omega, "t": t, "m": m, "f": k, "g": 0}, "value": k}
    K = sorted(max_clique(G, vs))
    kmask = mask_of(K)
    outside = list(bits(vs & ~kmask))
    cands = []
    for M in combinations(K, t - 1):
        rest = kmask & ~mask_of(M)
        cands.append(mask_of(M) | mask_of(u for u in outside if G.adj[u] & rest == rest))
    for N in combinations(K, t):
        nmask = mask_of(N)
        cands.append(mask_of(u for u in outside if not G.adj[u] & nmask))
    classes = _first_fit_classes(cands)
    n_small = comb(len(K), t - 1)
    if mask_of(bits(vs)) != _union(classes):  # pragma: no cover - the case analysis covers V
        raise AssertionError("clique layers do not cover the vertex set")
    offset, chis = _stack(G, [list(bits(c)) for c in classes[:n_small]], colors)
    f = max(chis, default=0)
    g = 0
    for members in classes[n_small:]:
        if not members:
            continue
        sub: dict[int, int] = {}
        rep = _mkt(G, members, m - 1, t, sub)
        for v, c in sub.items():
            colors[v] = offset + c
        offset += max(sub.values())
        g = max(g, rep["value"])
    value = comb(omega, t - 1) * f + comb(omega, t) * g
    return {"inputs": {"omega": omega, "t": t, "m": m, "f": f, "g": g}, "value": value}


def _union(masks) -> int:
    out = 0
    for x in masks:
        out |= x
    return out


# ------------------------------------------------------------------ pineapple-free

def pineapple_bound(omega: int, t: int, k: int, C: int) -> int:
    """``g(omega) = (t binom(omega, t) + 1) m(omega) binom(omega+k-3, k-1)``.

    Here ``m(x) = C sum_{i=1}^{t-2} binom(x, i)``.
    """
    m = C * sum(comb(omega, i) for i in range(1, t - 1))
    return (t * comb(omega, t) + 1) * m * comb(omega + k - 3, k - 1) if omega + k >= 3 else 0


def color_pineapple_free(G: Graph, t: int, k: int) -> tuple[Coloring, BoundReport]:
    """Colour a ``(t,k)``-pineapple-free graph, ``t > 2``, by induction on the vertex count.

    If the clique number is at most ``2t-4`` the graph is coloured exactly.
    Otherwise, with ``K`` a maximum clique, ``S`` collects the outside
    vertices with between 1 and ``t-2`` non-neighbours in ``K``. ``K`` and
    ``S`` are split into the classes ``{x} + A_{x}`` and ``A_M`` and coloured
    exactly on disjoint palettes (colouring ``c2``); the rest is coloured
    recursively (``c1``). Finally each vertex ``v`` of ``K + S`` takes the
    lowest colour in the block ``alpha (c2(v)-1) + 1 .. alpha c2(v)`` not used
    by its neighbours outside ``K + S``; it has fewer than ``alpha`` of them.
    """
    if t <= 2:
        raise ValueError("color_pineapple_free needs t > 2")
    if k < 1:
        raise ValueError("color_pineapple_free needs k >= 1")
    _require_free(G, make_pattern(PatternSpec("pineapple", (t, k))), f"({t},{k})-pineapple")
    omega = clique_number(G)
    alpha = (t * comb(omega, t) + 1) * ramsey_bound(max(omega - 1, 1), k)
    if G.n <= 1:
        col = Coloring((1,) * G.n)
        inputs = {"omega": omega, "t": t, "k": k, "C": G.n, "alpha": alpha}
        return col, BoundReport("pineapple_g", inputs, G.n, G.n)
    base: list[int] = []
    colors: dict[int, int] = {}
    _pineapple(G, G.vertex_mask, t, alpha, base, colors)
    col = _finish(G, colors)
    C = max(base)
    # base case of the induction: chi <= C when omega <= 2t-4
    value = max(C, pineapple_bound(omega, t, k, C))
    inputs = {"omega": omega, "t": t, "k": k, "C": C, "alpha": alpha}
    return col, BoundReport("pineapple_g", inputs, value, col.count)


def _pineapple(G: Graph, vs: int, t: int, alpha: int, base: list[int], colors: dict[int, int]) -> None:
    if not vs:
        return
    if clique_number(G, vs) <= 2 * t - 4:
        k, col = _exact(G, list(bits(vs)))
        base.append(k)
        for v, c in zip(bits(vs), col):
            colors[v] = c
        return
    K = sorted(max_clique(G, vs))
    kmask = mask_of(K)
    groups: dict[int, list[int]] = {}
    for u in bits(vs & ~kmask):
        miss = kmask & ~G.adj[u]
        if G.adj[u] & kmask and popcount(miss) <= t - 2:
            groups.setdefault(miss, []).append(u)
    parts = [[x] + groups.get(1 << x, []) for x in K]
    for M in (mask_of(c) for r in range(2, t - 1) for c in combinations(K, r)):
        if M in groups:
            parts.append(groups[M])
    c2: dict[int, int] = {}
    _, chis = _stack(G, parts, c2)
    base.extend(chis)
    ks = kmask | mask_of(v for p in parts for v in p)
    _pineapple(G, vs & ~ks, t, alpha, base, colors)
    for v in bits(ks):
        used = {colors[u] for u in bits(G.adj[v] & vs & ~ks)}
        lo = alpha * (c2[v] - 1) + 1
        for c in range(lo, lo + alpha):
            if c not in used:
                colors[v] = c
                break
        else:
            raise ImproperColoringError(f"vertex {v} has no free colour in its block of {alpha}")


# ------------------------------------------------------------------ lollipop machinery

def _cliques_of_size(G: Graph, size: int, within: int) -> list[int]:
    out = []

    def grow(current: int, k: int, cand: int):
        if k == size:
            out.append(current)
            return
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= ~(1 << v)
            grow(current | 1 << v, k + 1, cand & G.adj[v])

    grow(0, 0, within)
    return out


def is_tidy(H: Graph, t: int) -> bool:
    """Every ordered split ``(M, N)`` of ``V(H)`` into nonempty parts satisfies (U1) or (U2).

    (U1): ``H[M]`` has a ``(t-1)``-clique ``K`` and some vertex of ``N`` is anti-complete to ``K``.
    (U2): ``H[N]`` has a ``(t-1)``-clique ``K`` and there are adjacent ``x`` in ``M``
    and ``y`` in ``N - K``, both anti-complete to ``K``.
    """
    if H.n < 2:
        raise ValueError("tidiness needs at least two vertices")
    require(H.n, config.caps.tidy, "is_tidy")
    full = H.vertex_mask
    M = np.arange(1, full, dtype=np.int64)
    N = full ^ M
    ok = np.zeros(len(M), dtype=bool)
    for K in _cliques_of_size(H, t - 1, full):
        anti = full & ~K
        for v in bits(K):
            anti &= ~H.adj[v]
        if not anti:
            continue
        ok |= ((M & K) == K) & ((N & anti) != 0)
        inN = (N & K) == K
        for x in bits(anti):
            for y in bits(H.adj[x] & anti):
                ok |= inN & ((M >> x) & 1).astype(bool) & ((N >> y) & 1).astype(bool)
    return bool(ok.all())


def is_split(G: Graph, S) -> bool:
    """Every outside vertex complete to ``S`` is adjacent to every outside vertex mixed on ``S``."""
    sm = _as_mask(S)
    complete, mixed = _complete_mixed(G, sm)
    return all(G.adj[v] & mixed == mixed for v in bits(complete))


def is_fair(G: Graph, S, t: int) -> bool:
    """Every neighbour of ``S`` is complete to ``S`` or misses a ``(t-1)``-clique of ``S``."""
    sm = _as_mask(S)
    for v in bits(G.vertex_mask & ~sm):
        hit = G.adj[v] & sm
        if hit and hit != sm and clique_number(G, sm & ~hit) < t - 1:
            return False
    return True


def _complete_mixed(G: Graph, sm: int) -> tuple[int, int]:
    complete = mixed = 0
    for v in bits(G.vertex_mask & ~sm):
        hit = G.adj[v] & sm
        if hit == sm:
            complete |= 1 << v
        elif hit:
            mixed |= 1 << v
    return complete, mixed


def _lollipop(t: int) -> Graph:
    return make_pattern(PatternSpec("lollipop", (t,)))


def find_fair_split(G: Graph, t: int, within=None) -> frozenset[int] | None:
    """Vertices of the least induced ``2K_{2t-3}`` (inside ``within`` if given), checked fair and split."""
    if t < 3:
        raise ValueError("find_fair_split needs t >= 3")
    _require_free(G, _lollipop(t), f"{t}-lollipop")
    w = contains_induced(G, make_pattern(PatternSpec("twoK", (2 * t - 3,))), within=within)
    if w is None:
        return None
    S = frozenset(w.mapping)
    if not (is_fair(G, S, t) and is_split(G, S)):  # pragma: no cover - excluded by lollipop-freeness
        raise AssertionError("induced 2K_{2t-3} in a lollipop-free graph is not a fair split")
    return S


def homogeneous_set_from_split(G: Graph, v: int, S, t: int) -> frozenset[int]:
    """Homogeneous set ``S + Y + Z`` grown from a fair split ``S`` inside ``N(v)``.

    ``X``: outside vertices complete to ``S`` (contains ``v``); ``Y``: outside
    vertices mixed on ``S``; ``Z``: remaining vertices joined to ``S`` by a
    path avoiding ``X``.
    """
    sm = _as_mask(S)
    if not sm or G.adj[v] & sm != sm or sm >> v & 1:
        raise ValueError("S must be a nonempty subset of N(v)")
    if not is_split(G, sm) or not is_fair(G, sm, t):
        raise ValueError("S is not a fair split")
    X, Y = _complete_mixed(G, sm)
    reach = G.components(G.vertex_mask & ~X)
    Z = 0
    for comp in reach:
        if comp & sm:
            Z |= comp & ~(sm | Y)
    result = sm | Y | Z
    if not is_homogeneous(G, bits(result)):
        w = contains_induced(G, _lollipop(t))
        raise NotMemberError("grown set is not homogeneous; the graph is not lollipop-free",
                             witness=w, pattern=f"{t}-lollipop")
    return frozenset(bits(result))


def eq51_bound(omega: int, t: int, m: int) -> int:
    s = 2 * t - 3
    return omega + m * sum(comb(omega, i) for i in range(1, s)) + m * comb(omega, s) * (omega - s) + m


def color_lollipop_star_free(G: Graph, t: int) -> tuple[Coloring, BoundReport]:
    """Colour a graph with no induced ``t``-lollipop and no induced ``2K*_{2t-3}``.

    With ``K`` a maximum clique, ``A = N(K)`` and ``B`` the rest: ``K`` takes
    ``omega`` colours, ``B`` (clique number at most ``3t-6``) is coloured
    exactly, and ``A`` is split into the classes ``A_M`` (``|M| < 2t-3``) and
    ``A'_{N,v}`` (``|N| = 2t-3``), each coloured exactly on its own palette.
    """
    if t < 3:
        raise ValueError("color_lollipop_star_free needs t >= 3")
    _require_free(G, _lollipop(t), f"{t}-lollipop")
    _require_free(G, make_pattern(PatternSpec("twoKstar", (2 * t - 3,))), f"2K*_{2 * t - 3}")
    colors: dict[int, int] = {}
    omega, m = _star_free(G, G.vertex_mask, t, colors)
    col = _finish(G, colors) if G.n else Coloring(())
    return col, BoundReport("eq51", {"omega": omega, "t": t, "m": m}, _eq51_value(omega, t, m), col.count)


def _eq51_value(omega: int, t: int, m: int) -> int:
    # below the threshold the argument only uses chi <= m
    return m if omega <= 3 * t - 6 else eq51_bound(omega, t, m)


def _star_free(G: Graph, vs: int, t: int, colors: dict[int, int]) -> tuple[int, int]:
    """Colour ``G[vs]`` into ``colors``; returns (omega, largest exact base chi)."""
    omega = clique_number(G, vs)
    if omega <= 3 * t - 6:
        k, col = _exact(G, list(bits(vs)))
        for v, c in zip(bits(vs), col):
            colors[v] = c
        return omega, k
    K = sorted(max_clique(G, vs))
    kmask = mask_of(K)
    A = B = 0
    for u in bits(vs & ~kmask):
        if G.adj[u] & kmask:
            A |= 1 << u
        else:
            B |= 1 << u
    if clique_number(G, B) > 3 * t - 6:  # pragma: no cover - excluded by the hypotheses
        raise AssertionError("far layer has clique number above 3t-6")
    s = 2 * t - 3
    cands = []
    for r in range(1, s):
        for M in combinations(K, r):
            mm = mask_of(M)
            rest = kmask & ~mm
            cands.append(mask_of(u for u in bits(A) if not G.adj[u] & mm and G.adj[u] & rest == rest))
    for N in combinations(K, s):
        nm = mask_of(N)
        for x in K:
            if not nm >> x & 1:
                cands.append(mask_of(u for u in bits(A) if not G.adj[u] & nm and G.adj[u] >> x & 1))
    classes = _first_fit_classes(cands)
    if _union(classes) != A:  # pragma: no cover
        raise AssertionError("clique classes do not cover N(K)")
    for i, v in enumerate(K):
        colors[v] = i + 1
    offset, chis = _stack(G, [list(bits(c)) for c in classes] + [list(bits(B))], colors, len(K))
    return omega, max(chis, default=0)


def color_lollipop_free(G: Graph, t: int) -> tuple[Coloring, BoundReport]:
    """Colour a ``t``-lollipop-free graph through homogeneous-set decomposition.

    Components are coloured separately. A piece containing ``2K*_{2t-3}``
    has a fair split inside the apex neighbourhood, hence a homogeneous set
    ``X``: the piece is coloured from its quotient (``X`` shrunk to a vertex)
    and from ``G[X]``. Other pieces go to :func:`color_lollipop_star_free`'s
    procedure. ``P4``-free pieces are perfect and coloured exactly with
    ``omega`` colours. For ``t <= 2`` the whole class is ``P4``-free.

    The report's bound composes the per-piece bounds: maximum over disjoint
    unions, product over substitutions.
    """
    if t < 1:
        raise ValueError("t must be positive")
    _require_free(G, _lollipop(t), f"{t}-lollipop")
    if G.n == 0:
        return Coloring(()), BoundReport("eq51", {"omega": 0, "t": t, "m": 0}, 0, 0)
    stats = {"m": 0, "substitutions": 0}
    col, bound = _lollipop_rec(G, t, stats)
    col = col.check(G)
    inputs = {"omega": clique_number(G), "t": t, "m": stats["m"], "substitutions": stats["substitutions"]}
    return col, BoundReport("eq51", inputs, bound, col.count)


_P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


def _lollipop_rec(G: Graph, t: int, stats: dict) -> tuple[Coloring, int]:
    if G.n <= 1:
        return Coloring((1,) * G.n), G.n
    comps = G.components()
    if len(comps) > 1:
        colors = [0] * G.n
        bound = 0
        for comp in comps:
            vs = list(bits(comp))
            c, b = _lollipop_rec(induced(G, vs), t, stats)
            for v, x in zip(vs, c.colors):
                colors[v] = x
            bound = max(bound, b)
        return Coloring(tuple(colors)), bound
    if t <= 2 or contains_induced(G, _P4) is None:
        k, col = chromatic_number(G)
        stats["m"] = max(stats["m"], k)
        return col, k
    star = contains_induced(G, make_pattern(PatternSpec("twoKstar", (2 * t - 3,))))
    if star is None:
        colors: dict[int, int] = {}
        omega, m = _star_free(G, G.vertex_mask, t, colors)
        stats["m"] = max(stats["m"], m)
        return Coloring(tuple(colors[v] for v in range(G.n))), _eq51_value(omega, t, m)
    apex = star.mapping[-1]
    S = find_fair_split(G, t, within=G.adj[apex])
    X = sorted(homogeneous_set_from_split(G, apex, S, t))
    stats["substitutions"] += 1
    # quotient: X shrinks to its least vertex
    rep = X[0]
    keep = [v for v in range(G.n) if v not in X or v == rep]
    qindex = {v: i for i, v in enumerate(keep)}
    block_of = [qindex[rep] if v in X else qindex[v] for v in range(G.n)]
    Q = induced(G, keep)
    qcol, qbound = _lollipop_rec(Q, t, stats)
    xcol, xbound = _lollipop_rec(induced(G, X), t, stats)
    col = compose_coloring_by_substitution(G, block_of, qcol, {qindex[rep]: xcol})
    return col, qbound * xbound


# ------------------------------------------------------------------ bowtie-free

def bowtie_f(omega: int) -> int:
    """``ceil((omega + 3 binom(omega, 3)) / 2) + 1``."""
    return -(-(omega + 3 * comb(omega, 3)) // 2) + 1


def bowtie_partition(G: Graph) -> VertexPartition:
    """Partition a bowtie-free graph into a ``K4``-free block 0 and triangle-free blocks.

    Edges lying in no triangle are deleted one at a time (least first); this
    changes no triangle, so blocks that are good for the reduced graph stay
    good for ``G``. In the reduced graph each component with ``omega >= 4``
    is within distance 2 of its maximum clique ``K``; its vertices split
    into the far layer ``B`` (triangle-free), the stable sets ``S_x + {x}``
    and the stable sets ``T_{x,y,z}``; stable sets are merged in pairs.
    Components are combined block by block.
    """
    w = contains_induced(G, make_pattern("bowtie"))
    if w is not None:
        raise NotMemberError("graph contains an induced bowtie", witness=w, pattern="bowtie")
    adj = list(G.adj)
    while True:
        for u, v in Graph(G.n, tuple(adj)).edges():
            if not adj[u] & adj[v]:
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
                break
        else:
            break
    R = Graph(G.n, tuple(adj))
    merged: list[int] = []
    for comp in R.components():
        for i, block in enumerate(_bowtie_component(R, comp)):
            if i < len(merged):
                merged[i] |= block
            else:
                merged.append(block)
    blocks = tuple(frozenset(bits(b)) for b in merged if b)
    tags = tuple("K4-free" if i == 0 else "triangle-free" for i in range(len(blocks)))
    part = VertexPartition(blocks, tags)
    for b, tag in zip(part.blocks, part.tags):
        limit = 3 if tag == "K4-free" else 2
        if clique_number(G, mask_of(b)) > limit:  # pragma: no cover - guaranteed by the argument
            raise AssertionError(f"block {sorted(b)} violates its tag {tag}")
    return part


def _bowtie_component(R: Graph, comp: int) -> list[int]:
    if clique_number(R, comp) < 4:
        return [comp]
    K = sorted(max_clique(R, comp))
    kmask = mask_of(K)
    A = 0
    for u in bits(comp & ~kmask):
        if R.adj[u] & kmask:
            A |= 1 << u
    B = comp & ~kmask & ~A
    for u in bits(B):
        if not R.adj[u] & A:  # pragma: no cover - a bowtie-free graph has no such vertex
            raise AssertionError("vertex at distance 3 from a maximum clique")
    if clique_number(R, B) > 2:  # pragma: no cover
        raise AssertionError("far layer contains a triangle")
    cands = []
    for x in K:
        rest = kmask & ~(1 << x)
        cands.append(1 << x | mask_of(u for u in bits(A) if R.adj[u] & rest == rest))
    for x, y, z in combinations(K, 3):
        for a, b, c in ((x, y, z), (x, z, y), (y, z, x)):
            pair = 1 << a | 1 << b
            cands.append(mask_of(u for u in bits(A) if R.adj[u] >> c & 1 and not R.adj[u] & pair))
    stable = [s for s in _first_fit_classes(cands) if s]
    if _union(stable) != comp & ~B:  # pragma: no cover
        raise AssertionError("stable classes do not cover K + A")
    pairs = [stable[i] | (stable[i + 1] if i + 1 < len(stable) else 0) for i in range(0, len(stable), 2)]
    return [B] + pairs


def color_bowtie_free(G: Graph) -> tuple[Coloring, BoundReport]:
    """Colour each block of :func:`bowtie_partition` exactly, on disjoint palettes."""
    part = bowtie_partition(G)
    colors: dict[int, int] = {}
    _, chis = _stack(G, [list(b) for b in part.blocks], colors)
    col = _finish(G, colors) if G.n else Coloring(())
    omega = clique_number(G)
    m = max(chis, default=0)
    inputs = {"omega": omega, "m": m, "blocks": len(part), "f": bowtie_f(omega)}
    return col, BoundReport("bowtie_f", inputs, bowtie_f(omega) * m, col.count)
