"""Property checks of the structural and spectral lemmas over graph populations.

Each check runs one statement over a seeded population and records every
counterexample. Statements that only hold for "m sufficiently large" live
in :func:`diagnostics_large_m` and are reported, never asserted.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from . import __version__
from .families import g_m, star
from .graph import Graph, VertexSetPair, from_edge_list, is_connected
from .io import encode_graph6
from .planarity import GraphClass, check_planar_edge_bounds, is_planar
from .search import generate
from .spectral import eigen_residuals, hot_set, quadratic_form_identity, rayleigh_bounds, spectral_radius

RESIDUAL_TOL = 1e-8
BOUND_TOL = 1e-9
STRICT_GAP = 1e-10
EPSILONS = (1.0, 0.5, 0.25, 0.1, 0.05, 0.01, 0.001)

CHECK_IDS = ("eq1", "eq2", "eq3", "eq4", "lem_sxl", "lem_yb", "lem_subgraph", "lem_rhox", "lem_lr")


class UnknownCheck(KeyError):
    pass


@dataclass
class CheckResult:
    check_id: str
    population: str
    cases_run: int
    failures: list[tuple[str, str]] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "pass" if not self.failures else "fail"

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "population": self.population,
            "cases_run": self.cases_run,
            "status": self.status,
            "failures": [list(f) for f in self.failures],
        }


def random_connected_graph(rng: random.Random, n: int, extra: int | None = None) -> Graph:
    """Uniform labelled spanning tree (Pruefer code) plus uniformly chosen extra edges."""
    if n == 1:
        return from_edge_list([], 1)
    if n == 2:
        edges = [(0, 1)]
    else:
        code = [rng.randrange(n) for _ in range(n - 2)]
        degree = [1] * n
        for v in code:
            degree[v] += 1
        edges = []
        for v in code:
            leaf = min(u for u in range(n) if degree[u] == 1)
            edges.append((leaf, v))
            degree[leaf] -= 1
            degree[v] -= 1
        u, w = [x for x in range(n) if degree[x] == 1]
        edges.append((u, w))
    present = {tuple(sorted(e)) for e in edges}
    absent = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in present]
    if extra is None:
        extra = rng.randint(0, len(absent))
    edges += rng.sample(absent, min(extra, len(absent)))
    g = from_edge_list(edges, n)
    if not is_connected(g):
        raise AssertionError("spanning tree construction produced a disconnected graph")
    return g


def random_population(seed: int, count: int, n_min: int = 2, n_max: int = 12) -> list[Graph]:
    rng = random.Random(seed)
    return [random_connected_graph(rng, rng.randint(n_min, n_max)) for _ in range(count)]


@lru_cache(maxsize=4)
def enumerated(max_m: int, cls: GraphClass | None = None) -> tuple[Graph, ...]:
    return tuple(generate(max_m, cls))


def _g6(g: Graph) -> str:
    return encode_graph6(g)


# -- individual checks ----------------------------------------------------


def check_eq1(graphs: list[Graph], seed: int, pairs_per_graph: int = 50) -> CheckResult:
    rng = random.Random(seed)
    res = CheckResult("eq1", "", 0)
    for g in graphs:
        if not is_planar(g):
            continue
        for _ in range(pairs_per_graph):
            side = [rng.randrange(3) for _ in range(g.n)]
            pair = VertexSetPair(frozenset(v for v in range(g.n) if side[v] == 0), frozenset(v for v in range(g.n) if side[v] == 1))
            res.cases_run += 1
            if not check_planar_edge_bounds(g, pair):
                res.failures.append((_g6(g), f"S={sorted(pair.S)} T={sorted(pair.T)}"))
    return res


def _residual_check(check_id: str, graphs: list[Graph], which: int) -> CheckResult:
    res = CheckResult(check_id, "", 0)
    for g in graphs:
        r = spectral_radius(g)
        value = eigen_residuals(g, r)[which]
        res.cases_run += 1
        if value > RESIDUAL_TOL:
            res.failures.append((_g6(g), f"residual {value:.3e}"))
    return res


def check_eq4(graphs: list[Graph]) -> CheckResult:
    res = CheckResult("eq4", "", 0)
    for g in graphs:
        lo, hi = rayleigh_bounds(g)
        rho = spectral_radius(g).rho
        res.cases_run += 1
        if not lo - BOUND_TOL <= rho <= hi + BOUND_TOL:
            res.failures.append((_g6(g), f"rho={rho!r} outside [{lo!r}, {hi!r}]"))
    return res


def check_lem_sxl(seed: int, count: int = 500) -> CheckResult:
    rng = random.Random(seed)
    res = CheckResult("lem_sxl", "", 0)
    for _ in range(count):
        n = rng.randint(2, 12)
        g = random_connected_graph(rng, n)
        h = random_connected_graph(rng, n)
        rg, rh = spectral_radius(g), spectral_radius(h)
        (a1, b1), (a2, b2) = quadratic_form_identity(g, h, rg.x, rh.x, rg.rho, rh.rho)
        scale = max(1.0, abs(a1), abs(b1))
        res.cases_run += 1
        if abs(a1 - b1) > RESIDUAL_TOL * scale or abs(a2 - b2) > RESIDUAL_TOL * scale:
            res.failures.append((f"{_g6(g)} {_g6(h)}", f"first {a1 - b1:.3e}, second {a2 - b2:.3e}"))
    return res


def shift_neighbors(g: Graph, i: int, j: int, moved: list[int]) -> Graph:
    """Move the edges ``v_j v`` (``v`` in ``moved``) over to ``v_i``."""
    out = g
    for v in moved:
        out = out.remove_edge(j, v).add_edge(i, v)
    return out


def check_lem_yb(seed: int, count: int = 500, n_max: int = 12) -> CheckResult:
    rng = random.Random(seed)
    res = CheckResult("lem_yb", "", 0)
    while res.cases_run < count:
        g = random_connected_graph(rng, rng.randint(3, n_max))
        x = spectral_radius(g).x
        options = []
        for i in range(g.n):
            for j in range(g.n):
                if i != j and x[i] >= x[j]:
                    free = [v for v in g.neighbors(j) if v != i and not g.has_edge(i, v)]
                    if free:
                        options.append((i, j, free))
        if not options:
            continue
        i, j, free = rng.choice(options)
        moved = rng.sample(free, rng.randint(1, len(free)))
        shifted = shift_neighbors(g, i, j, sorted(moved))
        before, after = spectral_radius(g).rho, spectral_radius(shifted).rho
        res.cases_run += 1
        if not after > before + STRICT_GAP:
            res.failures.append((_g6(g), f"i={i} j={j} S={sorted(moved)} rho {before!r} -> {after!r}"))
    return res


def check_lem_subgraph(graphs: list[Graph]) -> CheckResult:
    res = CheckResult("lem_subgraph", "", 0)
    for g in graphs:
        if g.m < 2:
            continue
        rho = spectral_radius(g).rho
        res.cases_run += 1
        for u, v in g.edges():
            sub = spectral_radius(g.remove_edge(u, v)).rho
            if not sub < rho - STRICT_GAP:
                res.failures.append((_g6(g), f"removing {u}-{v}: {rho!r} -> {sub!r}"))
    return res


def check_lem_rhox(m_lo: int = 5, m_hi: int = 200) -> CheckResult:
    res = CheckResult("lem_rhox", f"G_m for m in {m_lo}..{m_hi}", 0)
    for m in range(m_lo, m_hi + 1):
        rho = spectral_radius(g_m(m)).rho
        res.cases_run += 1
        if not rho > math.sqrt(m) + BOUND_TOL:
            res.failures.append((_g6(g_m(m)), f"m={m}: rho={rho!r} <= sqrt(m)"))
    return res


def check_lem_lr(graphs: list[Graph]) -> CheckResult:
    res = CheckResult("lem_lr", "", 0)
    for g in graphs:
        r = spectral_radius(g)
        if not r.rho > math.sqrt(g.m):
            continue
        res.cases_run += 1
        for eps in EPSILONS:
            size = len(hot_set(r, eps))
            if not size < 2 * math.sqrt(g.m) / eps:
                res.failures.append((_g6(g), f"eps={eps}: |L|={size}"))
    return res


# -- dispatch ---------------------------------------------------------------


def _populations(seed: int) -> dict[str, tuple[str, Callable[[], list[Graph]]]]:
    return {
        "enum8": ("all isolated-vertex-free graphs with m <= 8", lambda: list(enumerated(8))),
        "planar8": ("all planar isolated-vertex-free graphs with m <= 8", lambda: list(enumerated(8, GraphClass.PLANAR))),
        "random": (f"500 random connected graphs, n in 2..12, seed {seed}", lambda: random_population(seed, 500)),
        "random3": (f"500 random connected graphs, n in 3..12, seed {seed}", lambda: random_population(seed, 500, n_min=3)),
        "families": ("G_m for m in 5..200 and S_m for m in 1..200", lambda: [g_m(m) for m in range(5, 201)] + [star(m) for m in range(1, 201)]),
    }


def run_check(check_id: str, seed: int = 0, graphs: list[Graph] | None = None) -> CheckResult:
    """Run one check on its default population, or on ``graphs`` when given."""
    if check_id not in CHECK_IDS:
        raise UnknownCheck(f"unknown check {check_id!r}; known: {', '.join(CHECK_IDS)}")
    pops = _populations(seed)

    def pick(*names: str) -> tuple[str, list[Graph]]:
        if graphs is not None:
            return f"custom population of {len(graphs)} graphs", list(graphs)
        labels, members = [], []
        for name in names:
            label, build = pops[name]
            labels.append(label)
            members.extend(build())
        return "; ".join(labels), members

    if check_id == "eq1":
        label, pop = pick("planar8")
        res = check_eq1(pop, seed)
        label += "; 50 random (S, T) pairs each"
    elif check_id in ("eq2", "eq3"):
        label, pop = pick("random", "families")
        res = _residual_check(check_id, pop, 0 if check_id == "eq2" else 1)
    elif check_id == "eq4":
        label, pop = pick("enum8")
        res = check_eq4(pop)
    elif check_id == "lem_sxl":
        res = check_lem_sxl(seed)
        label = f"500 random connected pairs on a shared vertex set, seed {seed}"
    elif check_id == "lem_yb":
        res = check_lem_yb(seed)
        label = f"500 random connected graphs, n in 3..12, seed {seed}"
    elif check_id == "lem_subgraph":
        label, pop = pick("random3")
        res = check_lem_subgraph(pop)
        label += "; every edge deleted"
    elif check_id == "lem_rhox":
        res = check_lem_rhox()
        label = res.population
    else:
        label, pop = pick("enum8", "random", "families")
        res = check_lem_lr(pop)
        label += "; only graphs with rho > sqrt(m)"
    res.population = label
    return res


def diagnostics_large_m(g: Graph) -> dict:
    """Quantities from the asymptotic structure lemmas, for information only."""
    r = spectral_radius(g)
    m = g.m
    x = r.x
    hot = sorted(hot_set(r, 1 / 1000).members)
    top = int(np.argmax(x))
    near = set(g.neighbors(top))
    for v in list(near):
        near |= set(g.neighbors(v))
    near.discard(top)
    near_hot = [v for v in near if x[v] >= 1 / 1000]
    second = max((float(x[v]) for v in near_hot), default=0.0)
    slack = [g.degree(u) - (x[u] / 2 - 0.002) * m for u in hot]
    return {
        "informational": True,
        "note": "hypothesis is m sufficiently large; values are reported, not asserted",
        "m": m,
        "rho": r.rho,
        "hot_set_size_eps_1e-3": len(hot),
        "hot_set_threshold": 20000,
        "min_degree_slack_over_hot_set": float(min(slack)) if slack else None,
        "top_vertex": top,
        "top_vertex_degree": g.degree(top),
        "top_vertex_degree_threshold": 0.505 * m,
        "second_hot_entry_within_distance_2": second,
        "second_hot_entry_threshold": 0.98,
    }


def run_suite(suite: str = "default", seed: int = 1, graphs: list[Graph] | None = None) -> dict:
    """Run every check; ``suite='all'`` also attaches the informational diagnostics."""
    if suite not in ("default", "all"):
        raise ValueError(f"suite must be 'default' or 'all', got {suite!r}")
    results = [run_check(cid, seed, graphs if cid not in ("lem_sxl", "lem_yb", "lem_rhox") else None) for cid in CHECK_IDS]
    report = {
        "version": __version__,
        "seed": seed,
        "suite": suite,
        "status": "pass" if all(r.status == "pass" for r in results) else "fail",
        "checks": [r.to_dict() for r in results],
    }
    if suite == "all":
        samples = {"gm:1001": g_m(1001), "star:100": star(100), "gm:7": g_m(7)}
        report["diagnostics"] = {name: diagnostics_large_m(g) for name, g in samples.items()}
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)
