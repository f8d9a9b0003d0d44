"""Graph representation and structural operations.

Graphs are simple and undirected on the dense vertex set ``0..n-1``.
Adjacency is stored as one integer bitmask per vertex, which keeps the
combinatorial searches in this package cheap.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .errors import ImproperColoringError


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the bitmask of neighbours of ``v``.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def from_matrix(cls, matrix) -> "Graph":
        a = np.asarray(matrix, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        n = a.shape[0]
        return cls(n, tuple(mask_of(int(u) for u in np.flatnonzero(a[v])) for v in range(n)))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges():
            a[u, v] = a[v, u] = True
        return a

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        m = mask_of(vs)
        return all((self.adj[v] | 1 << v) & m == m for v in vs)

    def is_stable(self, vertices: Iterable[int]) -> bool:
        m = mask_of(vertices)
        return all(not self.adj[v] & m for v in bits(m))

    def components(self, within: int | None = None) -> list[int]:
        """Connected components (as masks) of the subgraph induced on ``within``."""
        rest = self.vertex_mask if within is None else within
        comps = []
        while rest:
            frontier = rest & -rest
            comp = 0
            while frontier:
                comp |= frontier
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & rest & ~comp
            comps.append(comp)
            rest &= ~comp
        return comps

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class Coloring:
    """Vertex colouring; ``colors[v]`` is a positive integer."""

    colors: tuple[int, ...]

    def __post_init__(self):
        if any(c < 1 for c in self.colors):
            raise ValueError("colours must be positive integers")

    @property
    def count(self) -> int:
        return len(set(self.colors))

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __len__(self) -> int:
        return len(self.colors)

    def is_proper(self, G: Graph) -> bool:
        if len(self.colors) != G.n:
            return False
        return all(self.colors[u] != self.colors[v] for u, v in G.edges())

    def check(self, G: Graph) -> "Coloring":
        """Return self, raising :class:`ImproperColoringError` unless proper on ``G``."""
        if len(self.colors) != G.n:
            raise ImproperColoringError(f"colouring has {len(self.colors)} entries, graph has {G.n} vertices")
        for u, v in G.edges():
            if self.colors[u] == self.colors[v]:
                raise ImproperColoringError(f"edge ({u}, {v}) is monochromatic")
        return self

    def normalized(self) -> "Coloring":
        """Relabel colours to ``1..count`` in order of first appearance."""
        relabel: dict[int, int] = {}
        return Coloring(tuple(relabel.setdefault(c, len(relabel) + 1) for c in self.colors))

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, []).append(v)
        return out


PARTITION_TAGS = ("K4-free", "triangle-free", "stable", "perfect", "unconstrained")


@dataclass(frozen=True)
class VertexPartition:
    blocks: tuple[frozenset[int], ...]
    tags: tuple[str, ...]

    def __post_init__(self):
        if len(self.blocks) != len(self.tags):
            raise ValueError("one tag per block required")
        for tag in self.tags:
            if tag not in PARTITION_TAGS:
                raise ValueError(f"unknown block tag {tag!r}")
        seen: set[int] = set()
        for b in self.blocks:
            if seen & b:
                raise ValueError("blocks are not disjoint")
            seen |= b

    def __len__(self) -> int:
        return len(self.blocks)

    def covers(self, G: Graph) -> bool:
        return set().union(*self.blocks) == set(range(G.n)) if self.blocks else G.n == 0


@dataclass(frozen=True)
class Witness:
    """Vertex map certifying a containment (pattern -> host) or a violation."""

    mapping: tuple[int, ...]
    kind: str = "containment"
    note: str = field(default="", compare=False)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.mapping))

    def is_induced_embedding(self, H: Graph, G: Graph) -> bool:
        m = self.mapping
        if len(m) != H.n or len(set(m)) != len(m) or any(not 0 <= x < G.n for x in m):
            return False
        return all(H.has_edge(i, j) == G.has_edge(m[i], m[j]) for i, j in combinations(range(H.n), 2))


def complement(G: Graph) -> Graph:
    full = G.vertex_mask
    return Graph(G.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(G.adj)))


def induced(G: Graph, S: Iterable[int]) -> Graph:
    """Subgraph induced on ``S``, relabelled by ascending original index."""
    verts = sorted(set(S))
    if any(not 0 <= v < G.n for v in verts):
        raise ValueError("vertex set is not a subset of V(G)")
    index = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        adj.append(mask_of(index[u] for u in bits(G.adj[v]) if u in index))
    return Graph(len(verts), tuple(adj))


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for H in graphs:
        edges += [(u + offset, v + offset) for u, v in H.edges()]
        offset += H.n
    return Graph.from_edges(offset, edges)


def substitute(G: Graph, v: int, H: Graph) -> Graph:
    """Replace vertex ``v`` of ``G`` by ``H``.

    Vertices of ``G - v`` keep their relative order and come first; the
    vertices of ``H`` follow, in their own order.
    """
    if not 0 <= v < G.n:
        raise ValueError(f"vertex {v} out of range")
    rest = [u for u in range(G.n) if u != v]
    index = {u: i for i, u in enumerate(rest)}
    base = len(rest)
    edges = [(index[a], index[b]) for a, b in G.edges() if v not in (a, b)]
    edges += [(base + a, base + b) for a, b in H.edges()]
    for u in bits(G.adj[v]):
        edges += [(index[u], base + h) for h in range(H.n)]
    return Graph.from_edges(base + H.n, edges)


def is_homogeneous(G: Graph, X: Iterable[int]) -> bool:
    xm = mask_of(X)
    size = popcount(xm)
    if not 1 < size < G.n:
        return False
    for w in bits(G.vertex_mask & ~xm):
        hit = G.adj[w] & xm
        if hit and hit != xm:
            return False
    return True


def _module_closure(G: Graph, start: int) -> int:
    """Smallest module containing ``start`` (may be all of V)."""
    X = start
    outside = G.vertex_mask & ~X
    changed = True
    while changed:
        changed = False
        for w in bits(outside):
            hit = G.adj[w] & X
            if hit and hit != X:
                X |= 1 << w
                outside &= ~(1 << w)
                changed = True
    return X


def _set_key(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def maximal_homogeneous_sets(G: Graph) -> list[frozenset[int]]:
    """All inclusion-maximal homogeneous sets of ``G``, sorted lexicographically."""
    n = G.n
    if n < 3:
        return []
    full = G.vertex_mask
    cands: list[int] = []
    for H in (G, complement(G)):
        comps = H.components()
        if len(comps) >= 3:
            cands = [full & ~c for c in comps]
            break
        if len(comps) == 2:
            cands = [c for c in comps if popcount(c) >= 2]
            break
    else:
        # G and its complement are connected: the maximal strong modules
        # partition V, and u, v share one iff their closure is proper.
        cls = list(range(n))

        def find(x: int) -> int:
            while cls[x] != x:
                cls[x] = cls[cls[x]]
                x = cls[x]
            return x

        for u, v in combinations(range(n), 2):
            if find(u) == find(v):
                continue
            if _module_closure(G, 1 << u | 1 << v) != full:
                cls[find(v)] = find(u)
        groups: dict[int, int] = {}
        for v in range(n):
            groups[find(v)] = groups.get(find(v), 0) | 1 << v
        cands = [m for m in groups.values() if popcount(m) >= 2]
    return [frozenset(bits(m)) for m in sorted(cands, key=_set_key)]


def maximal_strong_modules(G: Graph) -> list[frozenset[int]]:
    """Children of the root of the modular decomposition, sorted lexicographically.

    These are the components of ``G`` or of its complement when either is
    disconnected, and otherwise the maximal proper modules, which then
    partition ``V``.
    """
    n = G.n
    if n < 2:
        return [frozenset(range(n))] if n else []
    full = G.vertex_mask
    for H in (G, complement(G)):
        comps = H.components()
        if len(comps) > 1:
            return [frozenset(bits(c)) for c in sorted(comps, key=_set_key)]
    cls = list(range(n))

    def find(x: int) -> int:
        while cls[x] != x:
            cls[x] = cls[cls[x]]
            x = cls[x]
        return x

    for u, v in combinations(range(n), 2):
        if find(u) != find(v) and _module_closure(G, 1 << u | 1 << v) != full:
            cls[find(v)] = find(u)
    groups: dict[int, int] = {}
    for v in range(n):
        groups[find(v)] = groups.get(find(v), 0) | 1 << v
    return [frozenset(bits(m)) for m in sorted(groups.values(), key=_set_key)]


def find_homogeneous_set(G: Graph) -> frozenset[int] | None:
    """A homogeneous set of ``G``, or None if ``G`` is prime.

    Returns the lexicographically least maximal strong module with at least
    two vertices. When every strong module below the root is a single vertex
    and the root is a disjoint union or a join, any two vertices form a
    homogeneous set and the two least are returned.
    """
    if G.n < 3:
        return None
    for X in maximal_strong_modules(G):
        if len(X) >= 2:
            return X
    if len(G.components()) > 1 or len(complement(G).components()) > 1:
        return frozenset({0, 1})
    return None


def is_complete_multipartite(G: Graph) -> bool:
    """True iff non-adjacency is an equivalence relation (no induced K2 + K1)."""
    full = G.vertex_mask
    for v in range(G.n):
        part = full & ~G.adj[v]
        for u in bits(part):
            if full & ~G.adj[u] != part:
                return False
    return True


def quotient_graph(G: Graph, block_of: Sequence[int]) -> Graph:
    """Graph on the blocks of a module partition; blocks adjacent iff any edge joins them."""
    k = max(block_of, default=-1) + 1
    edges = {(min(block_of[u], block_of[v]), max(block_of[u], block_of[v]))
             for u, v in G.edges() if block_of[u] != block_of[v]}
    return Graph.from_edges(k, edges)


def compose_coloring_by_substitution(
    G: Graph,
    block_of: Sequence[int],
    quotient_coloring: Coloring,
    block_colorings: Mapping[int, Coloring],
) -> Coloring:
    """Colour ``G`` from a colouring of its quotient and colourings of the blocks.

    ``block_of[v]`` names the quotient vertex whose block contains ``v``; every
    block must be a module of ``G``. ``block_colorings[q]`` colours the block
    of ``q`` with vertices in ascending order; singleton blocks may be omitted.
    Each vertex receives the pair (quotient colour, block colour).
    """
    if len(block_of) != G.n:
        raise ValueError("block_of must name a block for every vertex")
    members: dict[int, list[int]] = {}
    for v, q in enumerate(block_of):
        members.setdefault(q, []).append(v)
    for q, vs in members.items():
        if 1 < len(vs) < G.n and not is_homogeneous(G, vs):
            raise ValueError(f"block {q} is not a homogeneous set")
    Q = quotient_graph(G, block_of)
    if not quotient_coloring.is_proper(Q):
        raise ImproperColoringError("quotient colouring is not proper")
    inner = [1] * G.n
    for q, vs in members.items():
        c = block_colorings.get(q)
        if c is None:
            if len(vs) > 1:
                raise ValueError(f"block {q} has {len(vs)} vertices but no colouring")
            continue
        if not c.is_proper(induced(G, vs)):
            raise ImproperColoringError(f"colouring of block {q} is not proper")
        for v, col in zip(vs, c.colors):
            inner[v] = col
    pairs = [(quotient_coloring[block_of[v]], inner[v]) for v in range(G.n)]
    index: dict[tuple[int, int], int] = {}
    out = Coloring(tuple(index.setdefault(p, len(index) + 1) for p in pairs))
    return out.check(G)
