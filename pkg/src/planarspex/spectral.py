"""Spectral radius, Perron vectors and eigen-equation checks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import sparse

from .graph import Graph, components

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 1_000_000
COMPARE_TOL = 1e-9


class ConvergenceError(RuntimeError):
    """Power iteration hit its iteration cap; ``best`` holds the last estimate."""

    def __init__(self, message: str, best: SpectralResult):
        super().__init__(message)
        self.best = best


@dataclass(frozen=True)
class SpectralResult:
    rho: float
    x: np.ndarray = field(repr=False)
    residual: float
    iterations: int
    edgeless: bool = False

    def top_entries(self, k: int = 5) -> list[tuple[int, float]]:
        idx = np.argsort(-self.x, kind="stable")[:k]
        return [(int(i), float(self.x[i])) for i in idx]


@dataclass(frozen=True)
class HotSet:
    epsilon: float
    members: frozenset[int]

    def __len__(self) -> int:
        return len(self.members)


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return a


def _sparse_adjacency(g: Graph, dtype=np.float64) -> sparse.csr_matrix:
    edges = g.edges()
    rows = [u for u, v in edges] + [v for u, v in edges]
    cols = [v for u, v in edges] + [u for u, v in edges]
    return sparse.csr_matrix((np.ones(len(rows), dtype=dtype), (rows, cols)), shape=(g.n, g.n))


def _power_iteration(a: sparse.csr_matrix, tol: float, max_iter: int) -> tuple[float, np.ndarray, float, int]:
    # A + sI with s > 0 is primitive for a connected graph, so the all-ones
    # start converges even when A itself is bipartite. Any s > 0 keeps rho + s
    # strictly dominant; s near rho/2 (sqrt(max degree) <= rho) speeds up
    # stars and other bipartite graphs. Extended precision keeps the rounding
    # floor of the residual well under 1e-12 for a few hundred vertices.
    degs = np.diff(a.indptr)
    shift = np.longdouble(max(1.0, math.sqrt(degs.max()) / 2))
    x = np.ones(a.shape[0], dtype=np.longdouble)
    rho = np.longdouble(0)
    residual = math.inf
    it = 0
    for it in range(1, max_iter + 1):
        ax = a @ x
        # far from convergence the residual is only sampled every fourth step
        if residual < 1e-6 or it % 4 == 1:
            rho = (x @ ax) / (x @ x)
            residual = float(np.max(np.abs(rho * x - ax)))
            # headroom for rounding the vector back to float64
            if residual <= 0.1 * tol:
                break
        ax += shift * x
        x = ax / ax.max()
    x64 = (x / x.max()).astype(np.float64)
    xl = x64.astype(np.longdouble)
    rho64 = float(rho)
    residual = float(np.max(np.abs(np.longdouble(rho64) * xl - a @ xl)))
    return rho64, x64, residual, it


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> SpectralResult:
    """Largest adjacency eigenvalue with its max-entry-normalised Perron vector.

    Disconnected graphs are solved per component; the returned vector lives
    on a maximising component and is zero elsewhere.
    """
    if g.m == 0:
        return SpectralResult(0.0, np.ones(g.n), 0.0, 0, edgeless=True)
    a = _sparse_adjacency(g, np.longdouble)
    best: tuple[float, np.ndarray, float, int, list[int]] | None = None
    total_iter = 0
    failed = False
    for comp in components(g):
        if len(comp) < 2:
            continue
        sub = a[comp][:, comp]
        rho, x, res, it = _power_iteration(sub, tol, max_iter)
        total_iter += it
        failed |= res > tol
        if best is None or rho > best[0]:
            best = (rho, x, res, it, comp)
    rho, xc, res, _, comp = best
    x = np.zeros(g.n)
    x[comp] = xc / xc.max()
    result = SpectralResult(rho, x, res, total_iter)
    if failed:
        raise ConvergenceError(f"power iteration did not reach tol={tol} in {max_iter} steps", result)
    return result


def eigen_residuals(g: Graph, r: SpectralResult) -> tuple[float, float]:
    """Max violation of the first- and second-order eigen-equations."""
    if len(r.x) != g.n:
        raise ValueError(f"vector has {len(r.x)} entries for a graph on {g.n} vertices")
    x = r.x
    rho = r.rho
    nbrs = [g.neighbors(u) for u in range(g.n)]
    first = 0.0
    second = 0.0
    for u in range(g.n):
        s1 = sum(x[v] for v in nbrs[u])
        first = max(first, abs(rho * x[u] - s1))
        s2 = sum(x[w] for v in nbrs[u] for w in nbrs[v] if w != u)
        second = max(second, abs(rho * rho * x[u] - len(nbrs[u]) * x[u] - s2))
    return first, second


def rayleigh_bounds(g: Graph) -> tuple[float, float]:
    """``(2m/n, sqrt(2m))``, the classical bracket around the spectral radius."""
    if g.n < 1:
        raise ValueError("graph has no vertices")
    return 2 * g.m / g.n, math.sqrt(2 * g.m)


def hot_set(r: SpectralResult, epsilon: float) -> HotSet:
    """Vertices whose Perron entry is at least ``epsilon``."""
    if not 0 < epsilon <= 1:
        raise ValueError(f"epsilon must lie in (0, 1], got {epsilon}")
    return HotSet(epsilon, frozenset(int(i) for i in np.flatnonzero(r.x >= epsilon)))


def quadratic_form_identity(
    g: Graph,
    h: Graph,
    x: np.ndarray,
    y: np.ndarray,
    rho_g: float | None = None,
    rho_h: float | None = None,
) -> tuple[tuple[float, float], tuple[float, float]]:
    """Both sides of the two bilinear identities linking ``A(G)``, ``A(H)``.

    First pair: ``x^T A(G) y`` and the edge sum ``sum_{ij in E(G)} x_i y_j + x_j y_i``.
    Second pair: ``x^T y (rho(H) - rho(G))`` and ``x^T (A(H) - A(G)) y``; it is an
    identity when ``x``, ``y`` are Perron vectors of ``G``, ``H``.
    """
    if g.n != h.n:
        raise ValueError(f"vertex sets differ: {g.n} vs {h.n}")
    if len(x) != g.n or len(y) != g.n:
        raise ValueError("vector length does not match vertex count")
    ag, ah = adjacency_matrix(g), adjacency_matrix(h)
    lhs1 = float(x @ ag @ y)
    rhs1 = float(sum(x[i] * y[j] + x[j] * y[i] for i, j in g.edges()))
    if rho_g is None:
        rho_g = spectral_radius(g).rho
    if rho_h is None:
        rho_h = spectral_radius(h).rho
    lhs2 = float(x @ y) * (rho_h - rho_g)
    rhs2 = float(x @ (ah - ag) @ y)
    return (lhs1, rhs1), (lhs2, rhs2)
