"""Willow certificates.

A graph ``G`` is an ``n``-willow if there is an oriented tree ``T`` with
``V(G)`` among its nodes such that ``u`` and ``v`` are adjacent exactly when
``T`` has a directed path between them whose length is not a multiple of
``n``. Certificates store ``T`` with weighted arcs: an arc of weight ``w``
stands for a directed path of ``w`` unit arcs.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from . import config
from .config import Deadline, require
from .errors import CertificateError
from .graph import Graph, Witness, bits, induced, is_complete_multipartite


@dataclass(frozen=True)
class WeightedOrientedTree:
    """Oriented tree on nodes ``0..nodes-1``; ``arcs`` holds ``(tail, head, weight)``."""

    nodes: int
    arcs: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.nodes < 1:
            raise CertificateError("a tree needs at least one node")
        if len(self.arcs) != self.nodes - 1:
            raise CertificateError(f"{self.nodes} nodes need {self.nodes - 1} arcs, got {len(self.arcs)}")
        parent = list(range(self.nodes))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for t, h, w in self.arcs:
            if not (0 <= t < self.nodes and 0 <= h < self.nodes):
                raise CertificateError(f"arc ({t}, {h}) out of range")
            if w < 1:
                raise CertificateError(f"arc ({t}, {h}) has weight {w} < 1")
            a, b = find(t), find(h)
            if a == b:
                raise CertificateError("arcs contain a cycle")
            parent[a] = b

    def out_arcs(self) -> list[list[tuple[int, int]]]:
        out: list[list[tuple[int, int]]] = [[] for _ in range(self.nodes)]
        for t, h, w in self.arcs:
            out[t].append((h, w))
        return out

    def directed_lengths(self) -> list[dict[int, int]]:
        """``lengths[a][b]``: length of the directed path from ``a`` to ``b`` (absent if none)."""
        out = self.out_arcs()
        lengths = []
        for a in range(self.nodes):
            seen = {a: 0}
            stack = [a]
            while stack:
                u = stack.pop()
                for h, w in out[u]:
                    seen[h] = seen[u] + w
                    stack.append(h)
            lengths.append(seen)
        return lengths

    def maximal_directed_paths(self) -> list[list[int]]:
        """Every directed path from a node with no in-arc to a node with no out-arc."""
        out = self.out_arcs()
        has_in = {h for _, h, _ in self.arcs}
        paths = []

        def walk(path):
            nxt = out[path[-1]]
            if not nxt:
                paths.append(path)
            for h, _ in nxt:
                walk(path + [h])

        for s in range(self.nodes):
            if s not in has_in:
                walk([s])
        return paths


@dataclass(frozen=True)
class WillowCertificate:
    tree: WeightedOrientedTree
    embedding: tuple[int, ...]  # graph vertex -> tree node
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise CertificateError("modulus must be at least 1")
        if len(set(self.embedding)) != len(self.embedding):
            raise CertificateError("embedding is not injective")
        if any(not 0 <= x < self.tree.nodes for x in self.embedding):
            raise CertificateError("embedding maps outside the tree")

    def to_json(self) -> str:
        doc = {
            "modulus": self.modulus,
            "nodes": self.tree.nodes,
            "arcs": [list(a) for a in self.tree.arcs],
            "embedding": {str(v): x for v, x in enumerate(self.embedding)},
        }
        return json.dumps(doc)

    @classmethod
    def from_json(cls, text: str | dict) -> "WillowCertificate":
        doc = json.loads(text) if isinstance(text, str) else text
        try:
            arcs = tuple((int(t), int(h), int(w)) for t, h, w in doc["arcs"])
            emb = {int(k): int(v) for k, v in doc["embedding"].items()}
            if sorted(emb) != list(range(len(emb))):
                raise CertificateError("embedding keys must be 0..n-1")
            tree = WeightedOrientedTree(int(doc["nodes"]), arcs)
            return cls(tree, tuple(emb[v] for v in range(len(emb))), int(doc["modulus"]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, CertificateError):
                raise
            raise CertificateError(f"malformed certificate: {exc}") from None

    def with_modulus(self, n: int) -> "WillowCertificate":
        return WillowCertificate(self.tree, self.embedding, n)


def certificate_graph(cert: WillowCertificate) -> Graph:
    """The graph a certificate defines on its embedded vertices."""
    lengths = cert.tree.directed_lengths()
    emb = cert.embedding
    edges = []
    for u, v in combinations(range(len(emb)), 2):
        d = lengths[emb[u]].get(emb[v], lengths[emb[v]].get(emb[u]))
        if d is not None and d % cert.modulus:
            edges.append((u, v))
    return Graph.from_edges(len(emb), edges)


def verify_certificate(G: Graph, cert: WillowCertificate) -> tuple[bool, Witness | None]:
    """Check ``cert`` against ``G``; on failure the witness is the least violating pair."""
    if len(cert.embedding) != G.n:
        raise CertificateError(f"embedding covers {len(cert.embedding)} vertices, graph has {G.n}")
    lengths = cert.tree.directed_lengths()
    emb = cert.embedding
    for u, v in combinations(range(G.n), 2):
        d = lengths[emb[u]].get(emb[v], lengths[emb[v]].get(emb[u]))
        declared = d is not None and d % cert.modulus != 0
        if declared != G.has_edge(u, v):
            what = "no directed path" if d is None else f"path length {d}"
            note = f"{what} mod {cert.modulus}; graph says {'edge' if G.has_edge(u, v) else 'non-edge'}"
            return False, Witness((u, v), kind="violation", note=note)
    return True, None


def directed_path_multipartite(G: Graph, cert: WillowCertificate) -> bool:
    """Embedded vertices on each maximal directed path induce a complete multipartite graph."""
    where = {x: v for v, x in enumerate(cert.embedding)}
    for path in cert.tree.maximal_directed_paths():
        vs = [where[x] for x in path if x in where]
        if not is_complete_multipartite(induced(G, vs)):
            return False
    return True


def lift_modulus(cert: WillowCertificate) -> WillowCertificate:
    """Certificate for modulus ``n+1`` from one for modulus ``n``.

    Fix a root and give every node a height: the signed length of the tree
    path from the root, reduced mod ``n``. Each arc ``(a, b)`` gets the new
    weight ``(h(b) - h(a)) mod (n+1)``, with ``n+1`` standing for zero. A
    directed path then telescopes to ``h(end) - h(start) + (n+1) q`` for some
    ``q >= 0``, which is zero mod ``n+1`` iff the end heights agree, that is
    iff the old length is zero mod ``n``. This re-weights the arcs rather
    than subdividing them; the tests still check every lifted certificate
    with :func:`verify_certificate`.
    """
    n = cert.modulus
    tree = cert.tree
    nb: list[list[tuple[int, int]]] = [[] for _ in range(tree.nodes)]
    for t, h, w in tree.arcs:
        nb[t].append((h, w))
        nb[h].append((t, -w))
    height = [None] * tree.nodes
    height[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for v, w in nb[u]:
            if height[v] is None:
                height[v] = (height[u] + w) % n
                stack.append(v)
    arcs = []
    for t, h, w in tree.arcs:
        nw = (height[h] - height[t]) % (n + 1)
        arcs.append((t, h, nw or n + 1))
    return WillowCertificate(WeightedOrientedTree(tree.nodes, tuple(arcs)), cert.embedding, n + 1)


# ------------------------------------------------------------ built-ins

def _cert(nodes: int, arcs, embedding, n: int) -> WillowCertificate:
    return WillowCertificate(WeightedOrientedTree(nodes, tuple(arcs)), tuple(embedding), n)


def _p8bar(n: int) -> WillowCertificate:
    # vertex v_i of the path v_1..v_8 is node i-1
    arcs = [(1, 3, n - 1), (3, 0, 1), (0, 7, n - 2), (7, 4, 1), (4, 6, n - 1), (2, 0, 3), (7, 5, 3)]
    return _cert(8, arcs, range(8), n)


def _c5bar(n: int) -> WillowCertificate:
    # v_i is node i-1, the middle node s is node 5
    s = 5
    arcs = [(0, s, 2), (s, 1, n - 2), (1, 3, 1), (4, s, 1), (s, 2, 1)]
    return _cert(6, arcs, range(5), n)


def _c6bar(n: int) -> WillowCertificate:
    s = 6
    arcs = [(2, 4, 1), (4, s, 1), (s, 1, n - 2), (1, 5, 1), (3, s, 3), (s, 0, 1)]
    return _cert(7, arcs, range(6), n)


def _f6(n: int) -> WillowCertificate:
    # centre c is vertex/node 0, path vertex v_i is node i
    arcs = [(1, 0, 2), (3, 0, 2), (6, 0, 3), (4, 3, 1), (0, 2, 2), (0, 5, 3)]
    return _cert(7, arcs, range(7), n)


def _w6(n: int) -> WillowCertificate:
    arcs = [(1, 2, 1), (2, 0, 2), (0, 3, 2), (0, 6, 3), (5, 4, 1), (4, 0, 2)]
    return _cert(7, arcs, range(7), n)


def _complete(k: int, n: int) -> WillowCertificate:
    return _cert(k, [(i, i + 1, 1) for i in range(k - 1)], range(k), n)


def _cycle(length: int, n: int) -> WillowCertificate:
    """Cycle ``v_1 .. v_L`` (vertex ``i-1`` is ``v_i``) via a chain of alternating hubs.

    The hubs form a chain ``y_0, x_0, y_1, x_1, ...`` with every ``x`` sending an
    arc of weight ``n-3`` to both neighbouring ``y``. Going out along the chain,
    one strand of the cycle hangs off the hubs at distance 1 and the returning
    strand at distance 2; ``v_1`` feeds ``y_0`` and a cap of one or two
    vertices closes the far end.
    """
    if length == 3:
        return _complete(3, n)
    odd = length % 2
    j = (length - 3) // 2 if odd else (length - 2) // 2
    hubs = list(range(length, length + j))  # chain node ids after the cycle vertices
    arcs = []
    for i in range(1, j):
        # hubs at odd chain positions are x nodes
        x, y = (hubs[i], hubs[i - 1]) if i % 2 else (hubs[i - 1], hubs[i])
        arcs.append((x, y, n - 3))
    arcs.append((0, hubs[0], 1))
    # strand out: v_2 .. v_{j+1} on hubs 0..j-1; strand back ends at v_L on hub 0
    for i in range(j):
        a = 1 + i
        b = length - 1 - i
        if i % 2 == 0:  # y hub: out-leaves
            arcs += [(hubs[i], a, 1), (hubs[i], b, 2)]
        else:  # x hub: in-leaves
            arcs += [(a, hubs[i], 1), (b, hubs[i], 2)]
    last = hubs[-1]
    cap = list(range(j + 1, length - j))
    if (j - 1) % 2:  # ends at an x hub
        if odd:
            arcs += [(last, cap[0], n - 2), (cap[0], cap[1], 1)]
        else:
            arcs.append((last, cap[0], 1))
    else:
        if odd:
            arcs += [(cap[0], last, n - 2), (cap[1], cap[0], 1)]
        else:
            arcs.append((cap[0], last, 1))
    return _cert(length + j, arcs, range(length), n)


BUILTINS = ("p8bar", "c5bar", "c6bar", "cycle", "f6", "w6", "complete")


def builtin_certificate(name: str, n: int, length: int | None = None) -> WillowCertificate:
    """Certificates from the worked examples.

    ``p8bar``, ``c5bar``, ``c6bar`` need ``n >= 5``; ``f6`` and ``w6`` are for
    ``n = 5``; ``cycle`` needs ``length >= 3`` and ``n >= 4``; ``complete``
    takes ``length`` as the clique size ``k`` and requires ``n = k``.
    """
    if name in ("p8bar", "c5bar", "c6bar"):
        if n < 5:
            raise ValueError(f"{name} needs n >= 5")
        return {"p8bar": _p8bar, "c5bar": _c5bar, "c6bar": _c6bar}[name](n)
    if name in ("f6", "w6"):
        if n != 5:
            raise ValueError(f"{name} is given for n = 5 only")
        return (_f6 if name == "f6" else _w6)(n)
    if name == "cycle":
        if length is None or length < 3 or n < 4:
            raise ValueError("cycle needs length >= 3 and n >= 4")
        return _cycle(length, n)
    if name == "complete":
        if length is None or length < 1 or n != length:
            raise ValueError("complete(k) is given for n = k")
        return _complete(length, n)
    raise ValueError(f"unknown builtin certificate {name!r}")


# ------------------------------------------------------------ bounded search

def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _terminal_order(G: Graph) -> list[int]:
    order: list[int] = []
    left = set(range(G.n))
    deg = [G.degree(v) for v in range(G.n)]
    placed = 0
    while left:
        v = min(left, key=lambda u: (-bin(G.adj[u] & placed).count("1"), -deg[u], u))
        order.append(v)
        left.discard(v)
        placed |= 1 << v
    return order


def search_certificate(
    G: Graph, n: int, max_steiner: int, timeout: float | None = None
) -> WillowCertificate | None:
    """Bounded exhaustive search for an ``n``-willow certificate of ``G``.

    The space is every weighted oriented tree on the vertices of ``G`` plus at
    most ``max_steiner`` extra nodes, with arc weights in ``1..n``. Weights
    only matter mod ``n`` (a path length is a sum of weights), so replacing a
    weight by its residue, written ``n`` for zero, changes nothing. Extra
    nodes of degree two that do not change direction fold into a weighted
    arc, and extra leaves can be dropped, so extra nodes are branch points or
    direction changes.

    Trees are grown one graph vertex at a time: the next vertex is placed
    inside an existing arc, or hung off the tree by a path whose segments
    alternate in direction. Nodes created on the way are extra nodes or
    later graph vertices. Each state is the subtree spanned by the vertices
    placed so far, so any rule for picking the next vertex keeps the search
    exhaustive; the vertex with the fewest admissible positions goes first.
    Admissible weights come straight from the path residues: every placed
    vertex allows or forbids exactly one residue. All pairs among placed
    vertices are settled as soon as they exist, since later growth never
    changes an existing path. The first segment points away from the first
    vertex and has a divisor of ``n`` as weight, which removes reversal and
    unit-scaling symmetry.

    Returns a verified certificate or ``None``; ``None`` only means the
    bounded space holds no certificate.
    """
    require(G.n, config.caps.willow_search_vertices, "search_certificate vertices")
    require(max_steiner, config.caps.willow_search_steiner, "search_certificate max_steiner")
    if n < 1:
        raise ValueError("modulus must be at least 1")
    if G.n == 0:
        return None
    deadline = Deadline(timeout)
    order = _terminal_order(G)
    rank = {v: i for i, v in enumerate(order)}
    adj = G.adj

    ident: list[int] = []  # node -> graph vertex or -1
    R: list[list[int]] = []  # R[a][b]: residue of directed path a->b, -1 if none
    arcs: list[list[int]] = []
    node_of = [-1] * G.n
    placed_mask = 0
    steiner = 0
    W = range(1, n + 1)

    def new_node(v: int) -> int:
        nonlocal steiner, placed_mask
        m = len(ident)
        ident.append(v)
        for row in R:
            row.append(-1)
        R.append([-1] * (m + 1))
        R[m][m] = 0
        if v < 0:
            steiner += 1
        else:
            node_of[v] = m
            placed_mask |= 1 << v
        return m

    def drop_node() -> None:
        nonlocal steiner, placed_mask
        v = ident.pop()
        R.pop()
        for row in R:
            row.pop()
        if v < 0:
            steiner -= 1
        else:
            node_of[v] = -1
            placed_mask &= ~(1 << v)

    def leaf(p: int, outward: bool, w: int, v: int) -> int:
        x = new_node(v)
        rx = R[x]
        if outward:
            for a in range(x):
                r = R[a][p]
                if r >= 0:
                    R[a][x] = (r + w) % n
            arcs.append([p, x, w])
        else:
            rp = R[p]
            for b in range(x):
                r = rp[b]
                if r >= 0:
                    rx[b] = (r + w) % n
            arcs.append([x, p, w])
        return x

    def split(i: int, w1: int, v: int) -> int:
        a, b, w = arcs[i]
        w2 = (w - w1) % n or n
        m = new_node(v)
        rm = R[m]
        rb = R[b]
        for c in range(m):
            r = R[c][a]
            if r >= 0:
                R[c][m] = (r + w1) % n
            r = rb[c]
            if r >= 0:
                rm[c] = (r + w2) % n
        arcs[i] = [a, m, w1]
        arcs.append([m, b, w2])
        return m

    def unsplit(i: int) -> None:
        a, m, w1 = arcs[i]
        _, b, w2 = arcs.pop()
        arcs[i] = [a, b, (w1 + w2) % n or n]
        drop_node()

    full = (1 << n) - 1

    def _pin(allowed: int, zero: int, adjacent: bool) -> int:
        # ``zero`` is the one weight in 1..n that makes the path length 0 mod n
        bit = 1 << ((zero - 1) % n)
        return allowed & ~bit if adjacent else allowed & bit

    def split_weights(i: int, v: int) -> int:
        """Bitmask of ``w1`` (bit ``w1-1``) for which ``v`` can sit inside arc ``i``."""
        if v < 0:
            return full
        a, b, w = arcs[i]
        allowed = full
        others = placed_mask
        av = adj[v]
        while others and allowed:
            low = others & -others
            others ^= low
            y = node_of[low.bit_length() - 1]
            r = R[y][a]
            if r >= 0:
                allowed = _pin(allowed, -r % n, bool(av & low))
                continue
            r = R[b][y]
            if r >= 0:
                allowed = _pin(allowed, (r + w) % n, bool(av & low))
            elif av & low:
                return 0
        return allowed

    def leaf_weights(p: int, outward: bool, v: int) -> int:
        """Bitmask of weights for a new leaf ``v`` hung off node ``p``."""
        if v < 0:
            return full
        allowed = full
        others = placed_mask
        av = adj[v]
        rp = R[p]
        while others and allowed:
            low = others & -others
            others ^= low
            y = node_of[low.bit_length() - 1]
            r = R[y][p] if outward else rp[y]
            if r >= 0:
                allowed = _pin(allowed, -r % n, bool(av & low))
            elif av & low:
                return 0
        return allowed

    def weights_of(mask: int, pool=None):
        return [w for w in (W if pool is None else pool) if mask >> (w - 1) & 1]

    def idents(skip: int):
        """Identities for a created intermediate node."""
        for u in order:
            if node_of[u] < 0 and u != skip:
                yield u
        if steiner < max_steiner:
            yield -1

    def options(u: int) -> int:
        # Wherever u ends up, its attachment point seen from the current
        # tree is a node or a point inside an arc. If u has a placed
        # neighbour the path to that point is directed, so u relates to the
        # placed vertices like a split point or a leaf of the current tree
        # (a branch point inside arc (a, b) acts as a leaf at a or at b).
        # Zero options therefore means a dead branch.
        count = 0
        for i in range(len(arcs)):
            count += split_weights(i, u).bit_count()
        for p in range(len(ident)):
            count += leaf_weights(p, True, u).bit_count() + leaf_weights(p, False, u).bit_count()
        return count

    def run() -> bool:
        deadline.check()
        if placed_mask == G.vertex_mask:
            return True
        # fail first: the attached vertex with the fewest positions goes next
        x, best = -1, -1
        for u in order:
            if node_of[u] >= 0 or not adj[u] & placed_mask:
                continue
            c = options(u)
            if c == 0:
                return False
            if best < 0 or c < best:
                x, best = u, c
        if x < 0:
            x = next(u for u in order if node_of[u] < 0)
        # inside an existing arc
        for i in range(len(arcs)):
            for w1 in weights_of(split_weights(i, x)):
                split(i, w1, x)
                if run():
                    return True
                unsplit(i)
        # hung off an existing node
        for p in range(len(ident)):
            for outward in (True, False):
                if hang(p, outward, x, False):
                    return True
        # hung off a new branch point inside an arc
        for i in range(len(arcs)):
            for v in idents(x):
                for w1 in weights_of(split_weights(i, v)):
                    m = split(i, w1, v)
                    for outward in (True, False):
                        if hang(m, outward, x, False):
                            return True
                    unsplit(i)
        return False

    def hang(p: int, outward: bool, x: int, first: bool) -> bool:
        """Path from ``p`` ending at ``x``; first segment direction ``outward``."""
        pool = _divisors(n) if first else None
        for w in weights_of(leaf_weights(p, outward, x), pool):
            leaf(p, outward, w, x)
            if run():
                return True
            arcs.pop()
            drop_node()
        if adj[x] & placed_mask:
            # a direction change would cut every directed path from x back
            # into the tree, so x could not reach its placed neighbours
            return False
        for v in idents(x):
            for w in weights_of(leaf_weights(p, outward, v), pool):
                z = leaf(p, outward, w, v)
                if hang(z, not outward, x, False):
                    return True
                arcs.pop()
                drop_node()
        return False

    first = order[0]
    new_node(first)
    if G.n == 1:
        found = True
    else:
        found = hang(0, True, order[1], True)
    if not found:
        return None
    cert = WillowCertificate(
        WeightedOrientedTree(len(ident), tuple(tuple(a) for a in arcs)),
        tuple(node_of),
        n,
    )
    ok, _ = verify_certificate(G, cert)
    if not ok:  # pragma: no cover - internal invariant
        raise AssertionError("search produced a certificate that does not verify")
    return cert
