"""Named graphs and families: generators, recognizers, freeness scans.

Vertex orderings (clique vertices first, attachments after):

* ``mKt(m, t)``: clique ``i`` is ``i*t .. i*t+t-1``.
* ``pineapple(t, k)``: clique ``0..t-1``; pendants ``t..t+k-1`` hang on vertex 0.
* ``lollipop(t)``: clique ``0..t-1``; ``t`` is adjacent to 0 and ``t+1`` to ``t``.
* ``bowtie``: centre 0; edges 1-2 and 3-4.
* ``bull``: triangle 0,1,2; horns 3 (on 1) and 4 (on 2).
* ``gem``: 0 dominates the path 1-2-3-4.
* ``twoK(s)``: cliques ``0..s-1`` and ``s..2s-1``; ``twoKstar(s)`` adds apex ``2s``.
* ``fan(n)`` / ``wheel(n)``: centre 0 on the path / cycle ``1..n``.
* ``path_complement(n)`` / ``cycle_complement(n)``: complement of the path / cycle ``0..n-1``.
* ``pentagram_spider_base``: K5 on ``0..4``; ``i`` matched to ``i+5``.
* ``tall_strider_base``: triangle 0,1,2; triangles ``{3,4,5}``, ``{6,7,8}``, ``{9,10,11}``
  complete to 0, 1, 2 respectively.
* ``short_strider_base``: K4 on ``0..3``; edges ``{4,5}``, ``{6,7}``, ``{8,9}`` complete to
  0, 1, 2 respectively.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, Witness, bits, complement, induced, mask_of, popcount
from .solvers import contains_induced

_ARITY = {
    "mKt": 2, "pineapple": 2, "lollipop": 1, "bowtie": 0, "bull": 0, "gem": 0,
    "twoK": 1, "twoKstar": 1, "fan": 1, "wheel": 1, "path_complement": 1,
    "cycle_complement": 1, "pentagram_spider_base": 0, "tall_strider_base": 0,
    "short_strider_base": 0,
    # small helpers, handy on the command line
    "path": 1, "cycle": 1, "complete": 1, "empty": 1, "paw": 0, "diamond": 0, "petersen": 0,
}

_ALIASES = {
    "mkt": "mKt", "2k": "twoK", "2kstar": "twoKstar", "twok": "twoK", "twokstar": "twoKstar",
    "comp-path": "path_complement", "comp-cycle": "cycle_complement",
    "pentagram-spider": "pentagram_spider_base", "pentagram_spider": "pentagram_spider_base",
    "tall-strider": "tall_strider_base", "tall_strider": "tall_strider_base",
    "short-strider": "short_strider_base", "short_strider": "short_strider_base",
}

_MIN = {
    "mKt": (1, 1), "pineapple": (1, 0), "lollipop": (1,), "twoK": (1,), "twoKstar": (1,),
    "fan": (3,), "wheel": (3,), "path_complement": (1,), "cycle_complement": (3,),
    "path": (1,), "cycle": (3,), "complete": (0,), "empty": (0,),
}


@dataclass(frozen=True)
class PatternSpec:
    kind: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in _ARITY:
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        if len(self.params) != _ARITY[self.kind]:
            raise ValueError(f"{self.kind} takes {_ARITY[self.kind]} parameter(s), got {len(self.params)}")
        for p, lo in zip(self.params, _MIN.get(self.kind, ())):
            if p < lo:
                raise ValueError(f"{self.kind}: parameter {p} below minimum {lo}")

    def __str__(self) -> str:
        return self.kind + (":" + ",".join(map(str, self.params)) if self.params else "")


def parse_pattern(text: str) -> PatternSpec:
    """Parse ``kind[:a,b]``, e.g. ``pineapple:7,5``, ``fan:7``, ``comp-cycle:9``."""
    name, _, args = text.strip().partition(":")
    kind = _ALIASES.get(name.lower(), _ALIASES.get(name, name))
    try:
        params = tuple(int(a) for a in args.split(",")) if args else ()
    except ValueError:
        raise ValueError(f"bad pattern parameters in {text!r}") from None
    return PatternSpec(kind, params)


def _cycle_edges(vs):
    return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def _clique_edges(vs):
    return list(combinations(vs, 2))


def make_pattern(spec: PatternSpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_pattern(spec)
    k, p = spec.kind, spec.params
    if k == "mKt":
        m, t = p
        return Graph.from_edges(m * t, [e for i in range(m) for e in _clique_edges(range(i * t, i * t + t))])
    if k == "pineapple":
        t, kk = p
        return Graph.from_edges(t + kk, _clique_edges(range(t)) + [(0, t + i) for i in range(kk)])
    if k == "lollipop":
        (t,) = p
        return Graph.from_edges(t + 2, _clique_edges(range(t)) + [(0, t), (t, t + 1)])
    if k == "bowtie":
        return Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)])
    if k == "bull":
        return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])
    if k == "gem":
        return Graph.from_edges(5, [(0, i) for i in range(1, 5)] + [(1, 2), (2, 3), (3, 4)])
    if k in ("twoK", "twoKstar"):
        (s,) = p
        edges = _clique_edges(range(s)) + _clique_edges(range(s, 2 * s))
        if k == "twoK":
            return Graph.from_edges(2 * s, edges)
        return Graph.from_edges(2 * s + 1, edges + [(v, 2 * s) for v in range(2 * s)])
    if k in ("fan", "wheel"):
        (n,) = p
        edges = [(0, i) for i in range(1, n + 1)] + [(i, i + 1) for i in range(1, n)]
        if k == "wheel":
            edges.append((n, 1))
        return Graph.from_edges(n + 1, edges)
    if k in ("path", "path_complement"):
        (n,) = p
        G = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
        return G if k == "path" else complement(G)
    if k in ("cycle", "cycle_complement"):
        (n,) = p
        G = Graph.from_edges(n, _cycle_edges(list(range(n))))
        return G if k == "cycle" else complement(G)
    if k == "complete":
        return Graph.complete(p[0])
    if k == "empty":
        return Graph.empty(p[0])
    if k == "paw":
        return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
    if k == "diamond":
        return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    if k == "petersen":
        outer = _cycle_edges([0, 1, 2, 3, 4])
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return Graph.from_edges(10, outer + inner + [(i, i + 5) for i in range(5)])
    if k == "pentagram_spider_base":
        return Graph.from_edges(10, _clique_edges(range(5)) + [(i, i + 5) for i in range(5)])
    if k == "tall_strider_base":
        edges = _clique_edges(range(3))
        for i in range(3):
            tri = range(3 + 3 * i, 6 + 3 * i)
            edges += _clique_edges(tri) + [(i, v) for v in tri]
        return Graph.from_edges(12, edges)
    if k == "short_strider_base":
        edges = _clique_edges(range(4))
        for i in range(3):
            pair = (4 + 2 * i, 5 + 2 * i)
            edges += [pair] + [(i, v) for v in pair]
        return Graph.from_edges(10, edges)
    raise ValueError(f"unknown pattern kind {k!r}")


# ---------------------------------------------------------------- recognizers

def _perfect_matchings(G: Graph, rest: int):
    if not rest:
        yield []
        return
    v = (rest & -rest).bit_length() - 1
    for u in bits(G.adj[v] & rest):
        for m in _perfect_matchings(G, rest & ~(1 << v) & ~(1 << u)):
            yield [(v, u)] + m


def is_pentagram_spider(G: Graph) -> bool:
    """Some perfect matching ``M`` leaves a component of ``G - M`` isomorphic to K5."""
    if G.n != 10:
        return False
    for M in _perfect_matchings(G, G.vertex_mask):
        adj = list(G.adj)
        for u, v in M:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        H = Graph(10, tuple(adj))
        for comp in H.components():
            if popcount(comp) == 5 and H.is_clique(bits(comp)):
                return True
    return False


def _strider_clique(G: Graph, size: int, arms: int, arm_size: int) -> tuple[int, ...] | None:
    """Clique ``C`` of ``size`` with ``arms`` members whose outside neighbourhoods are
    pairwise disjoint cliques of ``arm_size``; returns C with those members first."""
    for C in combinations(range(G.n), size):
        if not G.is_clique(C):
            continue
        cm = mask_of(C)
        for legs in combinations(C, arms):
            outs = [G.adj[x] & ~cm for x in legs]
            if any(popcount(o) != arm_size or not G.is_clique(bits(o)) for o in outs):
                continue
            if any(a & b for a, b in combinations(outs, 2)):
                continue
            return legs + tuple(x for x in C if x not in legs)
    return None


def is_tall_strider(G: Graph) -> bool:
    return G.n == 12 and _strider_clique(G, 3, 3, 3) is not None


def is_short_strider(G: Graph) -> bool:
    return G.n == 10 and _strider_clique(G, 4, 3, 2) is not None


RECOGNIZERS = {
    "pentagram_spider": (10, is_pentagram_spider),
    "tall_strider": (12, is_tall_strider),
    "short_strider": (10, is_short_strider),
}


def _scan_family(G: Graph, family: str, note: str | None = None) -> Witness | None:
    size, recognize = RECOGNIZERS[family]
    if G.n < size:
        return None
    for S in combinations(range(G.n), size):
        if recognize(induced(G, S)):
            return Witness(S, note=note or family)
    return None


def _scan_pattern(G: Graph, spec: PatternSpec) -> Witness | None:
    w = contains_induced(G, make_pattern(spec))
    return None if w is None else Witness(w.mapping, note=str(spec))


def nonwillow_obstruction_specs(n: int) -> list[PatternSpec]:
    """Fixed-pattern obstructions that fit in ``n`` vertices, in scan order."""
    specs = []
    if n >= 9:
        specs.append(PatternSpec("path_complement", (9,)))
    specs += [PatternSpec("cycle_complement", (m,)) for m in range(7, n + 1)]
    specs += [PatternSpec("fan", (m,)) for m in range(7, n)]
    specs += [PatternSpec("wheel", (m,)) for m in range(7, n)]
    return specs


def contains_family_member(G: Graph, family: str) -> Witness | None:
    """Least witness of a member of ``family`` as an induced subgraph of ``G``.

    ``family`` is ``pentagram_spider``, ``tall_strider``, ``short_strider``,
    ``nonwillow_obstructions``, or any pattern accepted by :func:`parse_pattern`.
    For the structural families the witness lists the member's vertices in
    ascending order; for fixed patterns it is the embedding of the pattern.
    """
    fam = family.replace("-", "_")
    if fam in RECOGNIZERS:
        return _scan_family(G, fam)
    if fam == "nonwillow_obstructions":
        for name in RECOGNIZERS:
            w = _scan_family(G, name)
            if w is not None:
                return w
        for spec in nonwillow_obstruction_specs(G.n):
            w = _scan_pattern(G, spec)
            if w is not None:
                return w
        return None
    return _scan_pattern(G, parse_pattern(family))
