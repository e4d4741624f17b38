"""Canonical labelling by colour refinement and individualisation.

The canonical form of a graph is the lexicographically largest relabelled
adjacency among the leaves of the individualisation-refinement tree.
Branches are pruned with automorphisms discovered along the way; true and
false twins are recognised up front since they are the bulk of the
symmetry in stars, books and joins.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph
from .io import encode_graph6

Partition = list[list[int]]


def _refine(adj: Sequence[int], cells: Partition) -> Partition:
    """Coarsest equitable refinement of ``cells``, keeping cell order."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: Partition = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                a = adj[v]
                groups.setdefault(tuple((a & mk).bit_count() for mk in masks), []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            split = True
            for key in sorted(groups):
                out.append(groups[key])
        if not split:
            return out
        cells = out


def _twin_generators(adj: Sequence[int], color: Sequence[int]) -> list[tuple[int, ...]]:
    n = len(adj)
    by_open: dict[tuple[int, int], list[int]] = {}
    by_closed: dict[tuple[int, int], list[int]] = {}
    for v in range(n):
        by_open.setdefault((color[v], adj[v]), []).append(v)
        by_closed.setdefault((color[v], adj[v] | 1 << v), []).append(v)
    gens = []
    for group in list(by_open.values()) + list(by_closed.values()):
        for a, b in zip(group, group[1:]):
            perm = list(range(n))
            perm[a], perm[b] = b, a
            gens.append(tuple(perm))
    return gens


def _orbit_roots(n: int, gens: list[tuple[int, ...]]) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


class _Search:
    def __init__(self, g: Graph, color: Sequence[int]):
        self.g = g
        self.adj = g.adj
        self.gens = _twin_generators(g.adj, color)
        open_ids: dict[tuple[int, int], int] = {}
        closed_ids: dict[tuple[int, int], int] = {}
        self.open_id = [open_ids.setdefault((color[v], g.adj[v]), len(open_ids)) for v in range(g.n)]
        self.closed_id = [
            closed_ids.setdefault((color[v], g.adj[v] | 1 << v), len(closed_ids)) for v in range(g.n)
        ]
        self.best: tuple[int, ...] | None = None
        self.best_order: list[int] | None = None

    def settle(self, cells: Partition) -> Partition:
        """Refine, then split any cell made of mutual twins into singletons.

        Every ordering of such a cell is reached by an automorphism, so one
        representative ordering suffices.
        """
        cells = _refine(self.adj, cells)
        while True:
            out: Partition = []
            split = False
            for c in cells:
                if len(c) > 1 and (
                    len({self.open_id[v] for v in c}) == 1 or len({self.closed_id[v] for v in c}) == 1
                ):
                    out.extend([v] for v in sorted(c))
                    split = True
                else:
                    out.append(c)
            if not split:
                return out
            cells = _refine(self.adj, out)

    def leaf_key(self, order: list[int]) -> tuple[int, ...]:
        pos = [0] * self.g.n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            row = 0
            a = self.adj[v]
            while a:
                low = a & -a
                row |= 1 << pos[low.bit_length() - 1]
                a ^= low
            rows.append(row)
        return tuple(rows)

    def visit(self, cells: Partition, prefix: list[int]) -> None:
        target = None
        for c in cells:
            if len(c) > 1 and (target is None or len(c) < len(target)):
                target = c
        if target is None:
            order = [c[0] for c in cells]
            key = self.leaf_key(order)
            if self.best is None or key > self.best:
                self.best, self.best_order = key, order
            elif key == self.best:
                perm = [0] * self.g.n
                for a, b in zip(self.best_order, order):
                    perm[a] = b
                self.gens.append(tuple(perm))
            return
        idx = cells.index(target)
        tried: list[int] = []
        roots: list[int] | None = None
        seen_gens = -1
        for v in sorted(target):
            if tried:
                if seen_gens != len(self.gens):
                    seen_gens = len(self.gens)
                    fixing = [p for p in self.gens if all(p[u] == u for u in prefix)]
                    roots = _orbit_roots(self.g.n, fixing)
                if any(roots[v] == roots[t] for t in tried):
                    continue
            tried.append(v)
            rest = [u for u in target if u != v]
            child = cells[:idx] + [[v], rest] + cells[idx + 1 :]
            self.visit(self.settle(child), prefix + [v])


def canonical_labeling(g: Graph, colors: Sequence[int] | None = None) -> tuple[tuple, list[int]]:
    """Return ``(key, order)``: a hashable isomorphism-class key and the
    vertex order realising it (``order[i]`` is the vertex given label ``i``).

    With ``colors`` the labelling is canonical for vertex-coloured graphs.
    """
    color = list(colors) if colors is not None else [0] * g.n
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(color[v], []).append(v)
    cells = [groups[c] for c in sorted(groups)]
    if g.n == 0:
        return (g.n, (), ()), []
    search = _Search(g, color)
    search.visit(search.settle(cells), [])
    color_seq = tuple(sorted(color))
    return (g.n, color_seq, search.best), search.best_order


def canonical_graph(g: Graph) -> Graph:
    _, order = canonical_labeling(g)
    return g.relabel(order)


def canonical_form(g: Graph) -> bytes:
    """Byte string equal for two graphs exactly when they are isomorphic."""
    return encode_graph6(canonical_graph(g)).encode("ascii")


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_labeling(g)[0] == canonical_labeling(h)[0]
