"""Named extremal constructions and their closed-form spectral radii."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import Graph, GraphError, complete_graph, cycle_graph, disjoint_union, empty_graph, join, path_graph
from .spectral import spectral_radius

KINDS = ("star", "gm", "hm", "fan", "wheel", "book", "k1_star_k1", "k2_path_k1", "k1_fan_k1")

# which parameter each kind takes: edge count m, vertex count n, or a size t
PARAMETER = {
    "star": "m",
    "gm": "m",
    "hm": "m",
    "fan": "n",
    "wheel": "n",
    "book": "t",
    "k1_star_k1": "k",
    "k2_path_k1": "t",
    "k1_fan_k1": "t",
}

DESCRIPTION = {
    "star": "star K_{1,m} with m edges",
    "gm": "K2 v ((m-1)/2)K1 for odd m, K1 v (S_{(m-2)/2} u K1) for even m",
    "hm": "K2 v P_{m/3}, K1 v ((K1 v P_{(m-1)/3}) u K1), K2 v (P_{(m-2)/3} u K1) by m mod 3",
    "fan": "K1 v P_{n-1}",
    "wheel": "K1 v C_{n-1}",
    "book": "K2 v tK1",
    "k1_star_k1": "K1 v (S_k u K1)",
    "k2_path_k1": "K2 v (P_t u K1)",
    "k1_fan_k1": "K1 v ((K1 v P_t) u K1)",
}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    size: int

    def __post_init__(self) -> None:
        if self.kind not in PARAMETER:
            raise GraphError(f"unknown family {self.kind!r}; choose from {', '.join(KINDS)}")

    @classmethod
    def parse(cls, token: str) -> FamilySpec:
        """Parse ``kind:size`` tokens such as ``gm:7`` or ``wheel:6``."""
        kind, sep, size = token.partition(":")
        if not sep:
            raise GraphError(f"family token {token!r} must look like kind:size")
        try:
            value = int(size)
        except ValueError:
            raise GraphError(f"family size {size!r} is not an integer") from None
        return cls(kind.strip().lower(), value)

    def __str__(self) -> str:
        return f"{self.kind}:{self.size}"


def _require(cond: bool, spec: FamilySpec, rule: str) -> None:
    if not cond:
        raise GraphError(f"{spec}: {PARAMETER[spec.kind]} must satisfy {rule}")


K1 = empty_graph(1)
K2 = complete_graph(2)


def star(m: int) -> Graph:
    return join(K1, empty_graph(m))


def g_m(m: int) -> Graph:
    if m % 2:
        return join(K2, empty_graph((m - 1) // 2))
    return join(K1, disjoint_union(star((m - 2) // 2), K1))


def h_m(m: int) -> Graph:
    r = m % 3
    if r == 0:
        return join(K2, path_graph(m // 3))
    if r == 1:
        return join(K1, disjoint_union(join(K1, path_graph((m - 1) // 3)), K1))
    return join(K2, disjoint_union(path_graph((m - 2) // 3), K1))


def build(spec: FamilySpec) -> Graph:
    k, s = spec.kind, spec.size
    if k == "star":
        _require(s >= 1, spec, ">= 1")
        g = star(s)
    elif k == "gm":
        _require(s >= 3, spec, ">= 3")
        g = g_m(s)
    elif k == "hm":
        _require(s >= 3, spec, ">= 3")
        g = h_m(s)
    elif k == "fan":
        _require(s >= 3, spec, ">= 3")
        g = join(K1, path_graph(s - 1))
    elif k == "wheel":
        _require(s >= 4, spec, ">= 4")
        g = join(K1, cycle_graph(s - 1))
    elif k == "book":
        _require(s >= 1, spec, ">= 1")
        g = join(K2, empty_graph(s))
    elif k == "k1_star_k1":
        _require(s >= 1, spec, ">= 1")
        g = join(K1, disjoint_union(star(s), K1))
    elif k == "k2_path_k1":
        _require(s >= 1, spec, ">= 1")
        g = join(K2, disjoint_union(path_graph(s), K1))
    else:
        _require(s >= 1, spec, ">= 1")
        g = join(K1, disjoint_union(join(K1, path_graph(s)), K1))
    expected = expected_edges(spec)
    if g.m != expected:
        raise AssertionError(f"{spec} built with {g.m} edges, expected {expected}")
    return g


def expected_edges(spec: FamilySpec) -> int:
    k, s = spec.kind, spec.size
    return {
        "star": s,
        "gm": s,
        "hm": s,
        "fan": 2 * s - 3,
        "wheel": 2 * s - 2,
        "book": 2 * s + 1,
        "k1_star_k1": 2 * s + 2,
        "k2_path_k1": 3 * s + 2,
        "k1_fan_k1": 3 * s + 1,
    }[k]


def closed_form_rho(spec: FamilySpec) -> float | None:
    """Exact spectral radius where a closed form exists, else ``None``."""
    k, s = spec.kind, spec.size
    if k == "star":
        return math.sqrt(s)
    if k == "book":
        return (1 + math.sqrt(1 + 8 * s)) / 2
    if k == "gm" and s % 2 == 1:
        return (1 + math.sqrt(4 * s - 3)) / 2
    if k == "wheel":
        # hub vs rim quotient [[0, n-1], [1, 2]]
        return 1 + math.sqrt(s)
    return None


def rho_gm_exceeds_sqrt_m(m: int) -> tuple[float, float]:
    """``(rho(G_m), sqrt(m))`` evaluated numerically."""
    if m < 5:
        raise ValueError(f"m must be at least 5, got {m}")
    return spectral_radius(g_m(m)).rho, math.sqrt(m)
