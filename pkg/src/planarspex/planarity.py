"""Planarity and outerplanarity tests.

Planarity is decided per biconnected block by incremental path addition:
start from a cycle, then repeatedly take a fragment (an unembedded edge
between embedded vertices, or a component of the unembedded vertices with
its attachment edges) and route a path through it into a face containing
all of its attachments. A fragment with no admissible face proves the
block non-planar. Outerplanarity reduces to planarity of ``K1 v G``.
"""

from __future__ import annotations

from enum import Enum
from math import comb

from .graph import Graph, VertexSetPair, edge_counts, empty_graph, join


class GraphClass(str, Enum):
    PLANAR = "planar"
    OUTERPLANAR = "outerplanar"

    def admits(self, g: Graph) -> bool:
        return is_planar(g) if self is GraphClass.PLANAR else is_outerplanar(g)

    def max_edges(self, n: int) -> int:
        if self is GraphClass.PLANAR:
            return comb(n, 2) if n < 3 else 3 * n - 6
        return comb(n, 2) if n < 2 else 2 * n - 3


def biconnected_blocks(g: Graph) -> list[list[tuple[int, int]]]:
    """Edge sets of the biconnected components (iterative Tarjan)."""
    disc = [-1] * g.n
    low = [0] * g.n
    blocks: list[list[tuple[int, int]]] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1 or not g.adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if disc[v] == -1:
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, u, iter(g.neighbors(v))))
                    advanced = True
                    break
                if v != parent and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    low[u] = min(low[u], disc[v])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    block = []
                    while True:
                        e = edge_stack.pop()
                        block.append(e)
                        if e == (parent, u):
                            break
                    blocks.append(block)
    return blocks


def _find_cycle(adj: dict[int, set[int]]) -> list[int]:
    start = next(iter(adj))
    parent = {start: None}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v == parent[u]:
                continue
            if v in parent:
                # u-v closes a cycle; walk both tree paths to their meeting point
                pu, pv = [u], [v]
                anc = set()
                x = u
                while x is not None:
                    anc.add(x)
                    x = parent[x]
                x = v
                while x not in anc:
                    x = parent[x]
                    pv.append(x)
                meet = pv[-1]
                x = u
                while x != meet:
                    x = parent[x]
                    pu.append(x)
                return pu[:-1] + pv[::-1]
            parent[v] = u
            stack.append(v)
    raise ValueError("block has no cycle")


def _block_is_planar(block: list[tuple[int, int]]) -> bool:
    adj: dict[int, set[int]] = {}
    for u, v in block:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    nv = len(adj)
    if nv <= 4:
        return True
    if len(block) > 3 * nv - 6:
        return False
    cycle = _find_cycle(adj)
    placed = set(cycle)
    done = {frozenset(e) for e in zip(cycle, cycle[1:] + cycle[:1])}
    faces = [list(cycle), list(cycle)]
    total = len(block)
    while len(done) < total:
        fragments = []
        for u, v in block:
            if u in placed and v in placed and frozenset((u, v)) not in done:
                fragments.append(({u, v}, [u, v]))
        seen: set[int] = set()
        for s in adj:
            if s in placed or s in seen:
                continue
            comp = {s}
            frontier = [s]
            while frontier:
                x = frontier.pop()
                for y in adj[x]:
                    if y not in placed and y not in comp:
                        comp.add(y)
                        frontier.append(y)
            seen |= comp
            attach = {y for x in comp for y in adj[x] if y in placed}
            fragments.append((attach, comp))
        chosen = None
        for attach, body in fragments:
            ok = [i for i, f in enumerate(faces) if attach <= set(f)]
            if not ok:
                return False
            if chosen is None or len(ok) == 1:
                chosen = (attach, body, ok[0])
                if len(ok) == 1:
                    break
        attach, body, fi = chosen
        if isinstance(body, list):
            path = body
        else:
            path = _route(adj, attach, body)
        face = faces[fi]
        a, b = path[0], path[-1]
        i, j = face.index(a), face.index(b)
        k = len(face)
        a_to_b = [face[(i + t) % k] for t in range((j - i) % k + 1)]
        b_to_a = [face[(j + t) % k] for t in range((i - j) % k + 1)]
        inner = path[1:-1]
        faces[fi] = a_to_b + inner[::-1]
        faces.append(b_to_a + inner)
        placed.update(inner)
        done.update(frozenset(e) for e in zip(path, path[1:]))
    return True


def _route(adj: dict[int, set[int]], attach: set[int], body: set[int]) -> list[int]:
    """Path from one attachment through ``body`` to a different attachment."""
    a = min(attach)
    prev: dict[int, int] = {}
    frontier = []
    for y in sorted(adj[a] & body):
        prev[y] = a
        frontier.append(y)
    while frontier:
        x = frontier.pop(0)
        for y in sorted(adj[x]):
            if y in attach and y != a:
                path = [y, x]
                while path[-1] != a:
                    path.append(prev[path[-1]])
                return path[::-1]
            if y in body and y not in prev:
                prev[y] = x
                frontier.append(y)
    raise ValueError("fragment has a single attachment; block is not 2-connected")


def is_planar(g: Graph) -> bool:
    if g.n <= 4:
        return True
    if g.m > 3 * g.n - 6:
        return False
    return all(_block_is_planar(b) for b in biconnected_blocks(g) if len(b) > 1)


def is_outerplanar(g: Graph) -> bool:
    if g.n <= 2:
        return True
    if g.m > 2 * g.n - 3:
        return False
    return is_planar(join(empty_graph(1), g))


def check_planar_edge_bounds(g: Graph, pair: VertexSetPair) -> bool:
    """Whether ``e(S) <= 3|S| - 6`` and ``e(S, T) <= 2(|S| + |T|) - 4`` hold,
    falling back to the trivial counts on sets too small for those forms."""
    inside, across = edge_counts(g, pair)
    s, t = len(pair.S), len(pair.T)
    inside_cap = 3 * s - 6 if s >= 3 else comb(s, 2)
    across_cap = 2 * (s + t) - 4 if s + t >= 3 else s * t
    return inside <= inside_cap and across <= across_cap
