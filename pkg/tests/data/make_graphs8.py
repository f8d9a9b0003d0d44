"""Regenerate graphs8.g6: one graph per isomorphism class on 8 vertices.

Every 8-vertex graph minus its last vertex is a 7-vertex graph, so extending
each 7-vertex atlas graph by a vertex with every possible neighbourhood
reaches every class. Duplicates are removed with networkx isomorphism tests
inside Weisfeiler-Lehman hash buckets. Run from the repository root:

    python3 tests/data/make_graphs8.py
"""
from __future__ import annotations

from pathlib import Path

import networkx as nx

from chibound.graph import Graph
from chibound.io import to_graph6


def main() -> None:
    buckets: dict[str, list[nx.Graph]] = {}
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() != 7:
            continue
        for nbrs in range(1 << 7):
            h = g.copy()
            h.add_node(7)
            h.add_edges_from((7, u) for u in range(7) if nbrs >> u & 1)
            key = nx.weisfeiler_lehman_graph_hash(h, iterations=3) + f"/{h.number_of_edges()}"
            bucket = buckets.setdefault(key, [])
            if not any(nx.is_isomorphic(h, other) for other in bucket):
                bucket.append(h)
    lines = []
    for bucket in buckets.values():
        for h in bucket:
            lines.append(to_graph6(Graph.from_edges(8, list(h.edges()))))
    lines.sort()
    Path(__file__).with_name("graphs8.g6").write_text("\n".join(lines) + "\n")
    print(len(lines), "graphs")


if __name__ == "__main__":
    main()
