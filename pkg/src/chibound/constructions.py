"""Oriented base graphs, the mod-p shift power, and checks of its claimed structure.

An :class:`OrientedGraph` is a graph with every edge oriented and a colouring
``phi``. The contract a base graph is meant to satisfy for a given ``k``:

* A1: chi = k.
* A2: at most one directed path between any ordered pair.
* A3: some directed path has k vertices.
* A4: the two ends of every directed path of nonzero length get distinct
  ``phi`` colours.

Under A2 every directed path is determined by its ends, so the shift power
``G_p`` (``uv`` an edge iff the directed path between them has length not
divisible by ``p``) is well defined.
"""
from __future__ import annotations

import random
import sys
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from . import config
from .config import require
from .errors import (
    CapExceededError, ConstructionError, CyclicOrientationError, NonUniquePathError,
)
from .graph import Coloring, Graph, bits, induced
from .solvers import chromatic_number, clique_number
from .willow import WeightedOrientedTree, WillowCertificate

NO_CYCLE = sys.maxsize  # min_direction_changes on a forest


@dataclass(frozen=True)
class OrientedGraph:
    graph: Graph
    arcs: tuple[tuple[int, int], ...]
    phi: Coloring

    def __post_init__(self):
        arcs = tuple(sorted((int(u), int(v)) for u, v in self.arcs))
        object.__setattr__(self, "arcs", arcs)
        seen = set()
        for u, v in arcs:
            if not self.graph.has_edge(u, v):
                raise ValueError(f"arc {u}->{v} is not an edge")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"edge {key} oriented twice")
            seen.add(key)
        if len(seen) != self.graph.num_edges:
            raise ValueError("every edge needs exactly one orientation")
        if len(self.phi.colors) != self.graph.n:
            raise ValueError("phi must colour every vertex")
        self.phi.check(self.graph)

    @property
    def n(self) -> int:
        return self.graph.n

    @classmethod
    def from_arcs(cls, n: int, arcs, phi=None) -> "OrientedGraph":
        arcs = [tuple(a) for a in arcs]
        G = Graph.from_edges(n, arcs)
        if phi is None:
            phi = chromatic_number(G)[1]
        elif not isinstance(phi, Coloring):
            phi = Coloring(tuple(phi))
        return cls(G, tuple(arcs), phi)

    def out_neighbors(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return out

    def to_text(self) -> str:
        lines = [f"p arc {self.n} {len(self.arcs)}"]
        lines += [f"a {u + 1} {v + 1}" for u, v in self.arcs]
        lines.append("f " + " ".join(map(str, self.phi.colors)))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "OrientedGraph":
        """Parse the arc-list format: ``p arc n m``, ``a u v`` (1-based), ``f c1 .. cn``."""
        n = None
        arcs = []
        phi = None
        for lineno, line in enumerate(text.splitlines(), 1):
            parts = line.split()
            if not parts or parts[0] == "c":
                continue
            if parts[0] == "p":
                if len(parts) != 4 or parts[1] != "arc":
                    raise ValueError(f"line {lineno}: expected 'p arc n m'")
                n, m = int(parts[2]), int(parts[3])
            elif parts[0] == "a":
                arcs.append((int(parts[1]) - 1, int(parts[2]) - 1))
            elif parts[0] == "f":
                phi = tuple(int(c) for c in parts[1:])
            else:
                raise ValueError(f"line {lineno}: unknown record {parts[0]!r}")
        if n is None:
            raise ValueError("missing 'p arc' line")
        if len(arcs) != m:
            raise ValueError(f"header promises {m} arcs, found {len(arcs)}")
        return cls.from_arcs(n, arcs, phi)


def directed_path(n: int) -> OrientedGraph:
    """``0 -> 1 -> ... -> n-1`` with ``phi`` the identity colouring."""
    return OrientedGraph.from_arcs(n, [(i, i + 1) for i in range(n - 1)], tuple(range(1, n + 1)))


# ------------------------------------------------------------------ path structure

def topological_order(og: OrientedGraph) -> list[int]:
    out = og.out_neighbors()
    indeg = [0] * og.n
    for _, v in og.arcs:
        indeg[v] += 1
    ready = [v for v in range(og.n) if indeg[v] == 0]
    order = []
    while ready:
        v = min(ready)
        ready.remove(v)
        order.append(v)
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    if len(order) != og.n:
        raise CyclicOrientationError("orientation has a directed cycle")
    return order


def path_counts(og: OrientedGraph) -> list[list[int]]:
    """``counts[u][v]``: number of directed paths from ``u`` to ``v``, capped at 2."""
    order = topological_order(og)
    out = og.out_neighbors()
    counts = [[0] * og.n for _ in range(og.n)]
    for u in range(og.n):
        row = counts[u]
        row[u] = 1
        for v in order:
            if row[v]:
                for w in out[v]:
                    row[w] = min(2, row[w] + row[v])
    return counts


def path_lengths(og: OrientedGraph) -> list[list[int]]:
    """``lengths[u][v]``: length of the unique directed path ``u -> v``, -1 if none.

    Raises :class:`NonUniquePathError` if some pair has two paths.
    """
    counts = path_counts(og)
    for u in range(og.n):
        for v in range(og.n):
            if counts[u][v] > 1:
                raise NonUniquePathError(f"two directed paths from {u} to {v}")
    order = topological_order(og)
    out = og.out_neighbors()
    lengths = [[-1] * og.n for _ in range(og.n)]
    for u in range(og.n):
        row = lengths[u]
        row[u] = 0
        for v in order:
            if row[v] >= 0:
                for w in out[v]:
                    row[w] = row[v] + 1
    return lengths


def unique_path(og: OrientedGraph, u: int, v: int) -> list[int] | None:
    """Vertex sequence of the directed path ``u -> v`` (A2 assumed), or None."""
    lengths = path_lengths(og)
    if lengths[u][v] < 0:
        return None
    preds = [[] for _ in range(og.n)]
    for a, b in og.arcs:
        preds[b].append(a)
    path = [v]
    while path[-1] != u:
        x = path[-1]
        path.append(next(a for a in preds[x] if lengths[u][a] == lengths[u][x] - 1))
    return path[::-1]


def longest_path_vertices(og: OrientedGraph) -> int:
    order = topological_order(og)
    out = og.out_neighbors()
    best = [1] * og.n
    for v in reversed(order):
        for w in out[v]:
            best[v] = max(best[v], best[w] + 1)
    return max(best, default=0)


# ------------------------------------------------------------------ contract

@dataclass(frozen=True)
class AcyclicReport:
    k: int
    chi: int
    longest_path: int
    a1: bool
    a2: bool
    a3: bool
    a4: bool
    notes: tuple[str, ...] = field(default=())

    @property
    def all_hold(self) -> bool:
        return self.a1 and self.a2 and self.a3 and self.a4

    def to_dict(self) -> dict:
        return {
            "k": self.k, "chi": self.chi, "longest_path": self.longest_path,
            "A1": self.a1, "A2": self.a2, "A3": self.a3, "A4": self.a4, "notes": list(self.notes),
        }


def verify_acyclic_properties(og: OrientedGraph, k: int) -> AcyclicReport:
    """Check A1-A4 for ``k``.

    A4 is judged on ``og.phi`` by the endpoint condition alone; a ``phi``
    with more than ``k`` colours is noted but does not fail A4.
    """
    counts = path_counts(og)  # raises on a directed cycle
    chi = chromatic_number(og.graph)[0]
    longest = longest_path_vertices(og)
    notes = []
    a2 = all(c <= 1 for row in counts for c in row)
    phi = og.phi.colors
    clash = next(
        ((u, v) for u in range(og.n) for v in range(og.n) if u != v and counts[u][v] and phi[u] == phi[v]),
        None,
    )
    if clash is not None:
        notes.append(f"path {clash[0]}->{clash[1]} has equal phi colours")
    if og.phi.count > k:
        notes.append(f"phi uses {og.phi.count} colours, more than k={k}")
    a4 = clash is None
    return AcyclicReport(k, chi, longest, chi == k, a2, longest >= k, a4, tuple(notes))


def min_direction_changes(og: OrientedGraph) -> int:
    """Fewest direction changes around a cycle of the underlying graph; ``NO_CYCLE`` for forests."""
    require(og.n, config.caps.direction_changes, "min_direction_changes")
    G = og.graph
    forward = {(u, v) for u, v in og.arcs}
    best = NO_CYCLE

    def changes(cycle: list[int]) -> int:
        dirs = [(cycle[i], cycle[(i + 1) % len(cycle)]) in forward for i in range(len(cycle))]
        return sum(dirs[i] != dirs[i - 1] for i in range(len(dirs)))

    def grow(path: list[int], used: int) -> None:
        nonlocal best
        s, last = path[0], path[-1]
        for w in bits(G.adj[last]):
            if w == s and len(path) >= 3 and path[1] < path[-1]:
                best = min(best, changes(path))
            elif w > s and not used >> w & 1:
                grow(path + [w], used | 1 << w)

    for s in range(G.n):
        grow([s], 1 << s)
    return best


# ------------------------------------------------------------------ Descartes / Tutte

def descartes_size(k: int) -> int:
    """Vertex count of the level-``k`` graph of the recursion."""
    size = 1
    for j in range(1, k):
        stable = j * (size - 1) + 1
        size = stable + comb(stable, size) * size
    return size


def build_descartes(k: int) -> OrientedGraph:
    """Triangle-free graph with chi = k from the Descartes/Tutte recursion, oriented.

    Level ``j+1`` takes a stable set ``S`` of ``j(n_j - 1) + 1`` vertices and,
    for every ``n_j``-subset of ``S``, a copy of level ``j`` joined to that
    subset by a perfect matching. Matching arcs point into ``S``; copies keep
    their own orientation; ``phi`` gives ``S`` colour ``j+1``. A1-A4 are
    checked before returning.
    """
    if k < 1:
        raise ValueError("k must be positive")
    size = descartes_size(k)
    if size > config.caps.descartes_vertices:
        raise CapExceededError(
            f"level {k} has {size} vertices, above the cap {config.caps.descartes_vertices}"
        )
    n, arcs, phi = 1, [], [1]
    for j in range(1, k):
        stable = j * (n - 1) + 1
        new_arcs = []
        new_phi = [j + 1] * stable
        total = stable
        for subset in combinations(range(stable), n):
            base = total
            new_arcs += [(base + u, base + v) for u, v in arcs]
            new_arcs += [(base + i, s) for i, s in enumerate(subset)]
            new_phi += phi
            total += n
        n, arcs, phi = total, new_arcs, new_phi
    og = OrientedGraph.from_arcs(n, arcs, tuple(phi))
    report = verify_acyclic_properties(og, k)
    if not report.all_hold:  # pragma: no cover - a builder bug
        raise ConstructionError(f"level {k} fails its contract: {report.to_dict()}")
    return og


# ------------------------------------------------------------------ shift power

def shift_power(og: OrientedGraph, p: int) -> Graph:
    """``uv`` is an edge iff the directed path between ``u`` and ``v`` has length not divisible by ``p``."""
    if p < 1:
        raise ValueError("p must be positive")
    lengths = path_lengths(og)
    edges = [
        (u, v) for u, v in combinations(range(og.n), 2)
        if max(lengths[u][v], lengths[v][u]) > 0 and max(lengths[u][v], lengths[v][u]) % p
    ]
    return Graph.from_edges(og.n, edges)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


@dataclass(frozen=True)
class ShiftReport:
    p: int
    omega: int
    omega_matches: bool
    hypotheses_met: bool
    checked: int
    violations: tuple[tuple[tuple[int, ...], int, int], ...]
    notes: tuple[str, ...] = ()

    @property
    def claim_falsified(self) -> bool:
        return self.hypotheses_met and (not self.omega_matches or bool(self.violations))

    def to_dict(self) -> dict:
        return {
            "p": self.p, "omega": self.omega, "omega_matches": self.omega_matches,
            "hypotheses_met": self.hypotheses_met, "checked": self.checked,
            "violations": [
                {"vertices": list(s), "omega": w, "chi": c} for s, w, c in self.violations
            ],
            "claim_falsified": self.claim_falsified, "notes": list(self.notes),
        }


EXHAUSTIVE_LIMIT = 16  # below this size every vertex subset of size <= 8 is checked


def verify_shift_claims(
    og: OrientedGraph, p: int, sample_budget: int = 0, seed: int = 0, k: int | None = None,
) -> ShiftReport:
    """Measure omega(G_p) against ``p`` and the bound chi <= binom(m+2, 3) for induced subgraphs
    of ``G_p`` with clique number ``m < p``.

    Subgraphs checked: every vertex subset of size at most 8 when ``G_p`` has
    at most ``EXHAUSTIVE_LIMIT`` vertices, plus ``sample_budget`` random
    subsets. The claims assume A1-A4 for some ``k >= p`` with ``p`` prime;
    when they fail the report says so rather than counting a falsification.
    """
    notes = []
    Gp = shift_power(og, p)
    if k is None:
        k = chromatic_number(og.graph)[0]
    contract = verify_acyclic_properties(og, k)
    hypotheses = contract.all_hold and k >= p and _is_prime(p)
    if not _is_prime(p):
        notes.append(f"p={p} is not prime")
    if k < p:
        notes.append(f"k={k} is below p={p}")
    if not contract.all_hold:
        notes.append("A1-A4 do not all hold")
    omega = clique_number(Gp)
    subsets: list[tuple[int, ...]] = []
    if Gp.n <= EXHAUSTIVE_LIMIT:
        for size in range(1, min(8, Gp.n) + 1):
            subsets += combinations(range(Gp.n), size)
    else:
        notes.append(f"{Gp.n} vertices: exhaustive small-subgraph scan skipped")
    rng = random.Random(seed)
    for _ in range(sample_budget):
        size = rng.randint(1, Gp.n) if Gp.n else 0
        subsets.append(tuple(sorted(rng.sample(range(Gp.n), size))))
    violations = []
    seen = set()
    for S in subsets:
        if S in seen:
            continue
        seen.add(S)
        H = induced(Gp, S)
        m = clique_number(H)
        if m < p:
            chi = chromatic_number(H)[0]
            if chi > comb(m + 2, 3):
                violations.append((S, m, chi))
    return ShiftReport(p, omega, omega == p, hypotheses, len(seen), tuple(violations), tuple(notes))


# ------------------------------------------------------------------ willow extraction

def extract_from_shift(og: OrientedGraph, p: int, X) -> WillowCertificate:
    """Certificate for ``G_p[X]``: the union of the directed paths behind its edges, plus a root.

    The union must be a forest (checked); a fresh root then gets a unit arc
    to the least vertex of every component. Vertex ``i`` of ``G_p[X]`` is
    the ``i``-th smallest element of ``X``.
    """
    X = sorted(set(X))
    lengths = path_lengths(og)
    preds = [[] for _ in range(og.n)]
    for a, b in og.arcs:
        preds[b].append(a)
    arcs: set[tuple[int, int]] = set()
    for u, v in combinations(X, 2):
        if lengths[v][u] > 0:
            u, v = v, u
        L = lengths[u][v]
        if L <= 0 or L % p == 0:
            continue
        x = v
        while x != u:
            a = next(a for a in preds[x] if lengths[u][a] == lengths[u][x] - 1)
            arcs.add((a, x))
            x = a
    nodes = sorted(set(X) | {v for arc in arcs for v in arc})
    index = {v: i for i, v in enumerate(nodes)}
    parent = list(range(len(nodes)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in sorted(arcs):
        ra, rb = find(index[a]), find(index[b])
        if ra == rb:
            raise ConstructionError(
                f"paths for G_{p}[X] close a cycle through {a}->{b}; the union is not a forest"
            )
        parent[ra] = rb
    root = len(nodes)
    tree_arcs = [(index[a], index[b], 1) for a, b in sorted(arcs)]
    heads = {}
    for i in range(len(nodes)):
        heads.setdefault(find(i), i)
    tree_arcs += [(root, i, 1) for i in sorted(heads.values())]
    tree = WeightedOrientedTree(root + 1, tuple(tree_arcs))
    return WillowCertificate(tree, tuple(index[v] for v in X), p)
