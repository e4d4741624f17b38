"""Immutable simple undirected graphs backed by integer bitsets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices ``0..n-1``.

    ``adj[v]`` is a bitmask of the neighbours of ``v``. Instances are
    immutable and hashable; equality is labelled equality, use
    :func:`planarspex.canon.canonical_form` for isomorphism.
    """

    n: int
    adj: tuple[int, ...]
    m: int

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows, expected {self.n}")

    # -- queries ---------------------------------------------------------
    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def vertices(self) -> range:
        return range(self.n)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, edges={self.edges()})"

    # -- derived graphs --------------------------------------------------
    def add_edge(self, u: int, v: int) -> Graph:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        n = max(self.n, u + 1, v + 1)
        adj = list(self.adj) + [0] * (n - self.n)
        if adj[u] >> v & 1:
            return self
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(n, tuple(adj), self.m + 1)

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"no edge {u}-{v}")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj), self.m - 1)

    def relabel(self, order: Sequence[int]) -> Graph:
        """Graph whose vertex ``i`` is the old vertex ``order[i]``."""
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        adj = [0] * self.n
        for i, v in enumerate(order):
            row = 0
            for w in _bits(self.adj[v]):
                row |= 1 << pos[w]
            adj[i] = row
        return Graph(self.n, tuple(adj), self.m)

    def induced(self, vertices: Iterable[int]) -> Graph:
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        edges = [(pos[u], pos[v]) for u, v in self.edges() if u in pos and v in pos]
        return from_edge_list(edges, len(keep))


@dataclass(frozen=True)
class VertexSetPair:
    """Two disjoint vertex subsets ``S`` and ``T`` of one graph."""

    S: frozenset[int]
    T: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "S", frozenset(self.S))
        object.__setattr__(self, "T", frozenset(self.T))
        if self.S & self.T:
            raise GraphError(f"S and T overlap on {sorted(self.S & self.T)}")


def from_edge_list(edges: Iterable[tuple[int, int]], n: int) -> Graph:
    """Build a graph; duplicate edges collapse, loops and bad endpoints raise."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    m = sum(a.bit_count() for a in adj) // 2
    return Graph(n, tuple(adj), m)


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n, 0)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)), n * (n - 1) // 2)


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices (``n - 1`` edges)."""
    return from_edge_list([(i, i + 1) for i in range(n - 1)], n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return from_edge_list([(i, (i + 1) % n) for i in range(n)], n)


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list([(i, a + j) for i in range(a) for j in range(b)], a + b)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(outer + spokes + inner, 10)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    adj = g.adj + tuple(a << shift for a in h.adj)
    return Graph(g.n + h.n, adj, g.m + h.m)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts."""
    shift = g.n
    h_mask = ((1 << h.n) - 1) << shift
    g_mask = (1 << g.n) - 1
    adj = tuple(a | h_mask for a in g.adj) + tuple((a << shift) | g_mask for a in h.adj)
    return Graph(g.n + h.n, adj, g.m + h.m + g.n * h.n)


def edge_counts(g: Graph, pair: VertexSetPair) -> tuple[int, int]:
    """Return ``(e(S), e(S, T))``."""
    for v in pair.S | pair.T:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph on {g.n} vertices")
    s_mask = sum(1 << v for v in pair.S)
    t_mask = sum(1 << v for v in pair.T)
    inside = sum((g.adj[v] & s_mask).bit_count() for v in pair.S) // 2
    across = sum((g.adj[v] & t_mask).bit_count() for v in pair.S)
    return inside, across


def components(g: Graph) -> list[list[int]]:
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        out.append(list(_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    """Reachability over all vertices; the null graph counts as connected."""
    return len(components(g)) <= 1


def remove_isolated(g: Graph) -> Graph:
    keep = [v for v in range(g.n) if g.adj[v]]
    if len(keep) == g.n:
        return g
    return g.induced(keep)
