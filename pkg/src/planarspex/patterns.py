"""Forbidden-subgraph tests (subgraph, not induced-subgraph, semantics)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import Graph, GraphError, complete_graph, cycle_graph, from_edge_list, path_graph

PATTERN_KINDS = ("path", "cycle", "matching", "clique", "g6")


@dataclass(frozen=True)
class PatternSpec:
    """``kind`` is one of path/cycle/matching/clique/g6; ``k`` counts vertices
    for paths, cycles and cliques, and edges for matchings."""

    kind: str
    k: int = 0
    graph: Graph | None = field(default=None, compare=False)
    text: str = ""

    def __post_init__(self) -> None:
        if self.kind not in PATTERN_KINDS:
            raise GraphError(f"unknown pattern {self.kind!r}; choose from {', '.join(PATTERN_KINDS)}")
        minimum = {"path": 1, "cycle": 3, "matching": 1, "clique": 1}.get(self.kind)
        if minimum is not None and self.k < minimum:
            raise GraphError(f"{self.kind} pattern needs parameter >= {minimum}, got {self.k}")
        if self.kind == "g6" and self.graph is None:
            raise GraphError("g6 pattern needs a graph")

    @classmethod
    def parse(cls, token: str) -> PatternSpec:
        kind, sep, arg = token.partition(":")
        kind = kind.strip().lower()
        if not sep:
            raise GraphError(f"pattern token {token!r} must look like kind:value")
        if kind == "g6":
            from .io import decode_graph6

            return cls.explicit(decode_graph6(arg), arg)
        try:
            return cls(kind, int(arg))
        except ValueError:
            raise GraphError(f"pattern parameter {arg!r} is not an integer") from None

    @classmethod
    def explicit(cls, g: Graph, text: str = "") -> PatternSpec:
        if not text:
            from .io import encode_graph6

            text = encode_graph6(g)
        return cls("g6", 0, g, text)

    def __str__(self) -> str:
        return f"g6:{self.text}" if self.kind == "g6" else f"{self.kind}:{self.k}"

    def as_graph(self) -> Graph:
        if self.kind == "path":
            return path_graph(self.k)
        if self.kind == "cycle":
            return cycle_graph(self.k)
        if self.kind == "clique":
            return complete_graph(self.k)
        if self.kind == "matching":
            return from_edge_list([(2 * i, 2 * i + 1) for i in range(self.k)], 2 * self.k)
        return self.graph

    @property
    def edges(self) -> int:
        return self.as_graph().m


def has_path(g: Graph, k: int) -> bool:
    """Whether ``g`` contains a path on ``k`` vertices."""
    if k <= 1:
        return g.n >= k
    if k - 1 > g.m:
        return False

    def extend(v: int, used: int, length: int) -> bool:
        if length == k:
            return True
        cand = g.adj[v] & ~used
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            if extend(w, used | low, length + 1):
                return True
            cand ^= low
        return False

    return any(extend(s, 1 << s, 1) for s in range(g.n) if g.adj[s])


def has_cycle(g: Graph, k: int) -> bool:
    """Whether ``g`` contains a cycle of length exactly ``k``."""
    if k > g.n or k > g.m:
        return False
    for s in range(g.n):
        # s is the smallest vertex on the cycle
        higher = ~((1 << (s + 1)) - 1)
        allowed_start = g.adj[s] & higher

        def extend(v: int, used: int, length: int) -> bool:
            if length == k:
                return bool(g.adj[v] >> s & 1)
            cand = g.adj[v] & higher & ~used
            while cand:
                low = cand & -cand
                if extend(low.bit_length() - 1, used | low, length + 1):
                    return True
                cand ^= low
            return False

        cand = allowed_start
        while cand:
            low = cand & -cand
            if extend(low.bit_length() - 1, (1 << s) | low, 2):
                return True
            cand ^= low
    return False


def matching_number(g: Graph) -> int:
    """Maximum matching size by Edmonds' blossom algorithm."""
    n = g.n
    nbrs = [g.neighbors(v) for v in range(n)]
    match = [-1] * n

    def find_path(root: int) -> tuple[int, list[int]]:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    # greedy start, then augment
    for v in range(n):
        if match[v] == -1:
            for w in nbrs[v]:
                if match[w] == -1:
                    match[v], match[w] = w, v
                    break
    for v in range(n):
        if match[v] == -1:
            end, parent = find_path(v)
            while end != -1:
                prev = parent[end]
                nxt = match[prev]
                match[end], match[prev] = prev, end
                end = nxt
    return sum(1 for v in range(n) if match[v] != -1) // 2


def _subgraph_embeds(g: Graph, p: Graph) -> bool:
    """Backtracking search for an injective edge-preserving map ``p -> g``."""
    if p.n > g.n or p.m > g.m:
        return False
    if p.n == 0:
        return True
    # place pattern vertices in BFS order from high degree so constraints bite early
    order: list[int] = []
    placed = 0
    while len(order) < p.n:
        rest = [v for v in range(p.n) if not placed >> v & 1]
        frontier = [v for v in rest if p.adj[v] & placed]
        pool = frontier or rest
        v = max(pool, key=lambda u: ((p.adj[u] & placed).bit_count(), p.degree(u), -u))
        order.append(v)
        placed |= 1 << v
    gdeg = g.degrees()
    pdeg = p.degrees()
    image = [-1] * p.n

    def place(i: int, used: int) -> bool:
        if i == p.n:
            return True
        v = order[i]
        cand = ((1 << g.n) - 1) & ~used
        for u in order[:i]:
            if p.adj[v] >> u & 1:
                cand &= g.adj[image[u]]
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            if gdeg[w] >= pdeg[v]:
                image[v] = w
                if place(i + 1, used | low):
                    return True
            cand ^= low
        image[v] = -1
        return False

    return place(0, 0)


def contains(g: Graph, p: PatternSpec) -> bool:
    """Whether ``g`` has a subgraph isomorphic to the pattern."""
    if p.kind == "path":
        return has_path(g, p.k)
    if p.kind == "cycle":
        return has_cycle(g, p.k)
    if p.kind == "matching":
        return p.k <= g.m and matching_number(g) >= p.k
    return _subgraph_embeds(g, p.as_graph())


def is_f_free(g: Graph, p: PatternSpec) -> bool:
    return not contains(g, p)
