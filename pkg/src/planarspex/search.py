"""Isomorph-free enumeration by edge count and spectral-extremal search.

Graphs with no isolated vertices are grown one edge at a time by canonical
augmentation: a child ``G + e`` is kept only when ``e`` lies in the
automorphism orbit of the child's canonical deletion edge, and children of
one parent are deduplicated locally. Every isomorphism class is therefore
produced exactly once without a global seen-set, and disjoint subtrees can
be handed to separate workers.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .canon import canonical_labeling
from .families import g_m, h_m, star
from .graph import Graph, complete_graph, empty_graph, is_connected, join, path_graph
from .io import encode_graph6
from .patterns import PatternSpec, contains
from .planarity import GraphClass
from .spectral import COMPARE_TOL, spectral_radius

DEFAULT_BUDGET = {GraphClass.PLANAR: 12, GraphClass.OUTERPLANAR: 13, None: 10}

# connected graphs with m edges, m = 1..16; used only to word budget refusals
CONNECTED_BY_EDGES = [1, 1, 3, 5, 12, 30, 79, 227, 710, 2322, 8071, 29503, 112822, 450141, 1867871, 8037472]


class BudgetExceeded(RuntimeError):
    def __init__(self, m: int, budget: int, estimate: str):
        super().__init__(f"m={m} exceeds the enumeration budget m<={budget} ({estimate})")
        self.m = m
        self.budget = budget
        self.estimate = estimate


@dataclass(frozen=True)
class SearchInstance:
    m: int
    graph_class: GraphClass | None = None
    pattern: PatternSpec | None = None
    connected_only: bool = True
    rho_tolerance: float = COMPARE_TOL
    max_n: int | None = None

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"m must be at least 1, got {self.m}")
        if self.graph_class is not None and not isinstance(self.graph_class, GraphClass):
            object.__setattr__(self, "graph_class", GraphClass(self.graph_class))

    def n_range(self) -> tuple[int, int]:
        """Vertex counts a graph in this instance can have."""
        m = self.m
        lo = math.ceil((1 + math.sqrt(1 + 8 * m)) / 2)
        if self.graph_class is GraphClass.PLANAR and m > 3:
            lo = max(lo, 3, math.ceil((m + 6) / 3))
        elif self.graph_class is GraphClass.OUTERPLANAR and m > 1:
            lo = max(lo, math.ceil((m + 3) / 2))
        hi = m + 1 if self.connected_only else 2 * m
        if self.max_n is not None:
            hi = min(hi, self.max_n)
        return lo, hi

    def describe(self) -> dict:
        return {
            "m": self.m,
            "class": self.graph_class.value if self.graph_class else None,
            "pattern": str(self.pattern) if self.pattern else None,
            "connected_only": self.connected_only,
            "rho_tolerance": self.rho_tolerance,
            "max_n": self.max_n,
        }


@dataclass(frozen=True)
class _Filter:
    """Subgraph-closed constraints, safe to apply to every partial graph."""

    graph_class: GraphClass | None
    pattern: PatternSpec | None
    max_n: int | None

    def __call__(self, g: Graph) -> bool:
        if self.max_n is not None and g.n > self.max_n:
            return False
        if self.graph_class is not None:
            if g.m > self.graph_class.max_edges(g.n) or not self.graph_class.admits(g):
                return False
        if self.pattern is not None and contains(g, self.pattern):
            return False
        return True


def _edge_key(g: Graph, degs: list[int], u: int, v: int) -> tuple[int, int, int]:
    du, dv = degs[u], degs[v]
    return (min(du, dv), max(du, dv), (g.adj[u] & g.adj[v]).bit_count())


def _children(g: Graph, keep: Callable[[Graph], bool]) -> Iterator[Graph]:
    """Canonical-augmentation children of ``g`` with one more edge."""
    n = g.n
    additions = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.adj[u] >> v & 1]
    additions += [(u, n) for u in range(n)]
    additions.append((n, n + 1))
    seen: set = set()
    for a, b in additions:
        c = g.add_edge(a, b)
        degs = c.degrees()
        edges = c.edges()
        keys = [_edge_key(c, degs, u, v) for u, v in edges]
        best = max(keys)
        if _edge_key(c, degs, a, b) != best:
            continue
        if not keep(c):
            continue
        cands = [e for e, k in zip(edges, keys) if k == best]
        form, order = canonical_labeling(c)
        if len(cands) > 1:
            pos = [0] * c.n
            for i, v in enumerate(order):
                pos[v] = i
            star_edge = max(cands, key=lambda e: (max(pos[e[0]], pos[e[1]]), min(pos[e[0]], pos[e[1]])))
            if star_edge != (a, b) and _marked_key(c, (a, b)) != _marked_key(c, star_edge):
                continue
        if form in seen:
            continue
        seen.add(form)
        yield c


def _marked_key(g: Graph, e: tuple[int, int]) -> tuple:
    colors = [1 if v in e else 0 for v in range(g.n)]
    return canonical_labeling(g, colors)[0]


ROOT = complete_graph(2)


def _grow(g: Graph, max_m: int, keep: _Filter) -> Iterator[Graph]:
    yield g
    if g.m < max_m:
        for c in _children(g, keep):
            yield from _grow(c, max_m, keep)


def _subtree(args: tuple[Graph, int, _Filter]) -> list[Graph]:
    g, max_m, keep = args
    return list(_grow(g, max_m, keep))


def generate(
    max_m: int,
    graph_class: GraphClass | None = None,
    pattern: PatternSpec | None = None,
    max_n: int | None = None,
    workers: int = 1,
    split_depth: int = 2,
) -> Iterator[Graph]:
    """Yield one representative of every isolated-vertex-free graph with
    ``1..max_m`` edges meeting the (subgraph-closed) constraints."""
    keep = _Filter(graph_class, pattern, max_n)
    if max_m < 1 or not keep(ROOT):
        return
    if workers <= 1:
        yield from _grow(ROOT, max_m, keep)
        return
    # shallow part sequentially, then one task per subtree; the split goes
    # below split_depth until there are enough subtrees to balance the workers
    frontier = [ROOT]
    depth = 1
    while depth < max_m and (depth < split_depth or len(frontier) < 8 * workers):
        nxt = []
        for g in frontier:
            yield g
            nxt.extend(_children(g, keep))
        frontier = nxt
        depth += 1
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for chunk in pool.map(_subtree, [(g, max_m, keep) for g in frontier]):
            yield from chunk


def check_budget(instance: SearchInstance, budget: int | None = None) -> None:
    limit = budget if budget is not None else DEFAULT_BUDGET[instance.graph_class]
    if instance.m > limit:
        idx = instance.m - 1
        if idx < len(CONNECTED_BY_EDGES):
            estimate = f"about {CONNECTED_BY_EDGES[idx]} connected graphs before class filtering"
        else:
            estimate = "more than 8 million connected graphs before class filtering"
        raise BudgetExceeded(instance.m, limit, estimate)


def enumerate_graphs(
    instance: SearchInstance,
    visitor: Callable[[Graph], None] | None = None,
    *,
    workers: int = 1,
    budget: int | None = None,
) -> int:
    """Visit one graph per isomorphism class meeting ``instance``; return the count."""
    check_budget(instance, budget)
    count = 0
    for g in generate(instance.m, instance.graph_class, instance.pattern, instance.max_n, workers):
        if g.m != instance.m:
            continue
        if instance.connected_only and not is_connected(g):
            continue
        count += 1
        if visitor is not None:
            visitor(g)
    return count


@dataclass
class Maximizer:
    graph6: str
    rho: float
    n: int


@dataclass
class ExtremalReport:
    instance: SearchInstance
    maximizers: list[Maximizer]
    rho_max: float
    graphs_enumerated: int
    wall_time: float = field(default=0.0, compare=False)

    def to_dict(self) -> dict:
        return {
            "instance": self.instance.describe(),
            "rho_max": self.rho_max,
            "graphs_enumerated": self.graphs_enumerated,
            "maximizers": [{"graph6": x.graph6, "rho": x.rho, "n": x.n} for x in self.maximizers],
            "wall_time": self.wall_time,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "class", "pattern", "graph6", "n", "rho"])
        inst = self.instance.describe()
        for x in self.maximizers:
            w.writerow([inst["m"], inst["class"] or "", inst["pattern"] or "", x.graph6, x.n, repr(x.rho)])
        return buf.getvalue()


def canonical_graph6(g: Graph) -> str:
    _, order = canonical_labeling(g)
    return encode_graph6(g.relabel(order))


def extremal(instance: SearchInstance, *, workers: int = 1, budget: int | None = None) -> ExtremalReport:
    """All graphs in the instance within ``rho_tolerance`` of the largest spectral radius."""
    start = time.perf_counter()
    scored: list[tuple[float, Graph]] = []
    count = enumerate_graphs(instance, lambda g: scored.append((spectral_radius(g).rho, g)), workers=workers, budget=budget)
    if not scored:
        return ExtremalReport(instance, [], float("nan"), 0, time.perf_counter() - start)
    rho_max = max(r for r, _ in scored)
    best = [Maximizer(canonical_graph6(g), r, g.n) for r, g in scored if r >= rho_max - instance.rho_tolerance]
    best.sort(key=lambda x: (x.graph6, x.rho))
    return ExtremalReport(instance, best, rho_max, count, time.perf_counter() - start)


@dataclass
class ConjectureRow:
    m: int
    rho_g: float
    rho_h: float
    winner: str

    @property
    def margin(self) -> float:
        return abs(self.rho_g - self.rho_h)


def conjecture_scan(m_values, tol: float = COMPARE_TOL) -> list[ConjectureRow]:
    """Compare ``rho(G_m)`` with ``rho(H_m)``; ``winner`` is ``G``, ``H`` or ``tie``."""
    rows = []
    for m in m_values:
        if m < 5:
            raise ValueError(f"conjecture scan needs m >= 5, got {m}")
        rg = spectral_radius(g_m(m)).rho
        rh = spectral_radius(h_m(m)).rho
        if abs(rg - rh) <= tol:
            winner = "tie"
        else:
            winner = "G" if rg > rh else "H"
        rows.append(ConjectureRow(m, rg, rh, winner))
    return rows


@dataclass
class CrossoverRow:
    m: int
    sqrt_m: float
    rho_fan: float

    @property
    def gap(self) -> float:
        return self.sqrt_m - self.rho_fan


def fan_with_edges(m: int) -> Graph:
    """``K1 v P_{(m+1)/2}``: the fan with ``m`` edges (``m`` odd)."""
    if m < 3 or m % 2 == 0:
        raise ValueError(f"fan by edge count needs odd m >= 3, got {m}")
    return join(empty_graph(1), path_graph((m + 1) // 2))


def star_crossover_scan(m_max: int) -> tuple[int | None, list[CrossoverRow]]:
    """Smallest odd ``m*`` with ``sqrt(m) >= rho(fan with m edges)`` for every
    odd ``m`` in ``[m*, m_max]``, plus the full comparison table."""
    if m_max < 15:
        raise ValueError(f"m_max must be at least 15, got {m_max}")
    rows = [
        CrossoverRow(m, math.sqrt(m), spectral_radius(fan_with_edges(m)).rho) for m in range(3, m_max + 1, 2)
    ]
    m_star = None
    for row in reversed(rows):
        if row.gap < 0:
            break
        m_star = row.m
    return m_star, rows


def star_rho(m: int) -> float:
    return spectral_radius(star(m)).rho
