"""graph6 and edge-list interchange."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, TextIO

from .graph import Graph, GraphError, from_edge_list

HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    """Malformed graph6 text."""


def _size_prefix(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise Graph6Error(f"graph6 does not support n={n}")


def encode_graph6(g: Graph) -> str:
    """Encode ``g``; upper-triangle bits in column order, six per character."""
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        bits.extend(row >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    chunks = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        chunks.append(chr(val + 63))
    return _size_prefix(g.n) + "".join(chunks)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise Graph6Error(f"character outside graph6 range in {text!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise Graph6Error(f"unsupported or truncated size header in {text!r}")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    pad = -nbits % 6
    if body and body[-1] & ((1 << pad) - 1):
        raise Graph6Error(f"nonzero padding bits in {text!r}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return from_edge_list(edges, n)


def read_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    return [decode_graph6(line) for line in lines if line.strip()]


def write_edge_list(g: Graph, fh: TextIO) -> None:
    fh.write(f"{g.n} {g.m}\n")
    for u, v in g.edges():
        fh.write(f"{u} {v}\n")


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header followed by one ``u v`` pair per line."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphError("edge list is empty")
    try:
        n, m = (int(t) for t in rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from None
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges but {len(edges)} listed")
    return from_edge_list(edges, n)


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())
