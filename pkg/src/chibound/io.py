"""Graph file formats: graph6 and DIMACS ``.col``.

graph6 follows the format description distributed with nauty: an
optional ``>>graph6<<`` header, the vertex count N(n) in one, four or
eight bytes, then the upper triangle of the adjacency matrix in column
order, six bits per byte offset by 63.
"""
from __future__ import annotations

from pathlib import Path

from .graph import Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 0 or n >= 1 << 36:
        raise ValueError(f"graph6 cannot encode n={n}")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return (n, number of bytes consumed)."""
    if not data:
        raise ValueError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) > 1 and data[1] == 126:
        chunk, used = data[2:8], 8
    else:
        chunk, used = data[1:4], 4
    if len(chunk) < (used - 2 if used == 8 else 3):
        raise ValueError("truncated graph6 size field")
    n = 0
    for b in chunk:
        if not 63 <= b <= 126:
            raise ValueError(f"invalid graph6 byte {b!r}")
        n = n << 6 | (b - 63)
    return n, used


def to_graph6(G: Graph, header: bool = False) -> str:
    bits_out = []
    for j in range(1, G.n):
        for i in range(j):
            bits_out.append(G.adj[i] >> j & 1)
    bits_out += [0] * (-len(bits_out) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits_out[k:k + 6])), 2)) for k in range(0, len(bits_out), 6)
    )
    return (HEADER if header else "") + _encode_n(G.n) + body


def from_graph6(text: str | bytes) -> Graph:
    if isinstance(text, str):
        text = text.encode("ascii")
    data = text.strip()
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    if data[:1] == b":" or data[:1] == b";":
        raise ValueError("sparse6/incremental formats are not graph6")
    n, used = _decode_n(data)
    body = data[used:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            b = body[k // 6]
            if not 63 <= b <= 126:
                raise ValueError(f"invalid graph6 byte {b!r}")
            if (b - 63) >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    # padding bits must be zero for a canonical encoding
    if k % 6 and (body[-1] - 63) & ((1 << (6 - k % 6)) - 1):
        raise ValueError("nonzero graph6 padding bits")
    return Graph(n, tuple(adj))


def read_graph6_file(path) -> list[Graph]:
    lines = Path(path).read_text().splitlines()
    return [from_graph6(line) for line in lines if line.strip()]


def to_dimacs(G: Graph, comment: str | None = None) -> str:
    lines = [f"c {comment}"] if comment else []
    lines.append(f"p edge {G.n} {G.num_edges}")
    lines += [f"e {u + 1} {v + 1}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> Graph:
    """Parse DIMACS ``.col``; vertices are 1-based in the file, duplicate edges are merged."""
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) < 4 or n is not None:
                raise ValueError(f"line {lineno}: bad problem line")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise ValueError(f"line {lineno}: edge before problem line")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            if u == v:
                raise ValueError(f"line {lineno}: self-loop")
            edges.append((u, v))
        elif parts[0] == "n":
            continue
        else:
            raise ValueError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise ValueError("missing problem line")
    return Graph.from_edges(n, edges)


def read_graph(path, fmt: str = "graph6") -> Graph:
    text = Path(path).read_text() if str(path) != "-" else __import__("sys").stdin.read()
    if fmt == "graph6":
        lines = [l for l in text.splitlines() if l.strip()]
        if len(lines) != 1:
            raise ValueError(f"expected exactly one graph6 line, found {len(lines)}")
        return from_graph6(lines[0])
    if fmt == "dimacs":
        return from_dimacs(text)
    raise ValueError(f"unknown graph format {fmt!r}")
