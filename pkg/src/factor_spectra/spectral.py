"""Adjacency spectral radius, Perron vectors, and degree-edge upper bounds.

Dependency-free by design: power iteration on the shifted matrix A + I.
The shift makes the dominant eigenvalue of a connected graph strictly
largest in absolute value (defeating the +/-lambda oscillation of
bipartite graphs), so the iteration always converges; the radius of A is
recovered by subtracting 1.  Convergence requires both a stable Rayleigh
quotient and a small true residual, and every successful report carries
the residual so callers can recheck the guarantee.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import Graph


class ConvergenceError(RuntimeError):
    """Power iteration failed to converge within the iteration budget."""


@dataclass(frozen=True)
class SpectralReport:
    """Result of a spectral radius computation.

    lam: the adjacency spectral radius.
    perron: eigenvector approximation, normalized to unit max entry.
    iterations: power iteration steps used.
    residual: max-norm of A*x - lam*x at termination.
    connected: whether the graph was connected (if not, the Perron
        positivity guarantee is waived but the radius is still correct).
    """

    lam: float
    perron: tuple[float, ...]
    iterations: int
    residual: float
    connected: bool

    def to_json(self) -> dict:
        return {
            "lambda": self.lam,
            "perron": list(self.perron),
            "iterations": self.iterations,
            "residual": self.residual,
            "connected": self.connected,
        }


def spectral_radius(g: Graph, tol: float = 1e-10, max_iter: int = 100000) -> SpectralReport:
    """Spectral radius and Perron vector of the adjacency matrix.

    Requires n >= 1.  Raises ConvergenceError if the tolerance is not met
    within max_iter iterations.
    """
    n = g.n
    if n < 1:
        raise ValueError("spectral radius needs at least one vertex")
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    epairs = g.edges()
    connected = g.is_connected()

    # x always has max entry exactly 1; on success the report carries the
    # very (rho, x) pair whose residual was measured, so the residual
    # contract holds for the returned vector, not a later iterate.
    x = [1.0] * n
    rho_prev = float("inf")
    for it in range(1, max_iter + 1):
        y = list(x)  # the +I part
        for u, v in epairs:
            y[u] += x[v]
            y[v] += x[u]
        dot_xy = 0.0
        dot_xx = 0.0
        for u in range(n):
            dot_xy += x[u] * y[u]
            dot_xx += x[u] * x[u]
        rho = dot_xy / dot_xx
        residual = max(abs(y[u] - rho * x[u]) for u in range(n))
        if abs(rho - rho_prev) < tol and residual < tol:
            return SpectralReport(
                lam=rho - 1.0,
                perron=tuple(x),
                iterations=it,
                residual=residual,
                connected=connected,
            )
        scale = max(y)  # >= 1 since y >= x elementwise and max(x) = 1
        x = [v / scale for v in y]
        rho_prev = rho
    raise ConvergenceError(
        f"power iteration did not reach tol={tol} within {max_iter} iterations"
    )


# -- degree-edge upper bound --------------------------------------------------


def hong_bound_formula(x: float, p: int, q: int) -> float:
    """The bound curve f(x) = (x-1)/2 + sqrt(2q - px + (1+x)^2/4) for a
    graph with p vertices and q edges, as a function of the minimum degree
    x.  Decreasing in x on 0 <= x <= p-1 while 2q <= p(p-1).
    """
    if p < 1:
        raise ValueError(f"need p >= 1, got {p}")
    if 2 * q > p * (p - 1):
        raise ValueError(f"q={q} exceeds the simple-graph maximum for p={p}")
    if not 0 <= x <= p - 1:
        raise ValueError(f"x={x} outside [0, {p - 1}]")
    inner = 2 * q - p * x + (1 + x) ** 2 / 4.0
    if inner < 0:
        # the curve leaves the reals for x > 2q/p-ish; graphs never land
        # here (a min degree x forces 2q >= px)
        raise ValueError(f"curve undefined at x={x} for (p={p}, q={q})")
    return (x - 1) / 2.0 + math.sqrt(inner)


def hong_bound(g: Graph) -> float:
    """Degree-edge spectral bound: lam(G) <= (d-1)/2 + sqrt(2m - nd + (d+1)^2/4)
    with d the minimum degree.  Requires min degree >= 1; equality holds
    exactly for the d-regular graphs and the graphs whose degrees all lie
    in {d, n-1}.
    """
    if g.n == 0 or g.min_degree() < 1:
        raise ValueError("bound requires minimum degree at least 1")
    return hong_bound_formula(g.min_degree(), g.n, g.edge_count)


# -- equitable partitions and quotient matrices -------------------------------


@dataclass(frozen=True)
class QuotientMatrix:
    """Quotient of an equitable vertex partition: entry (i, j) is the
    number of neighbours in part j of any vertex of part i."""

    parts: tuple[tuple[int, ...], ...]
    entries: tuple[tuple[int, ...], ...]


def quotient_matrix(g: Graph, parts: list[list[int]]) -> QuotientMatrix:
    """Build the quotient matrix, verifying equitability exactly.

    Every vertex must occur in exactly one part and no part may be empty;
    the partition is equitable iff for all parts i, j every vertex of part
    i has the same number of neighbours in part j.
    """
    seen = 0
    masks = []
    for i, part in enumerate(parts):
        if not part:
            raise ValueError(f"part {i} is empty; drop empty parts before the call")
        pm = 0
        for v in part:
            if not 0 <= v < g.n:
                raise ValueError(f"vertex {v} out of range")
            if seen >> v & 1:
                raise ValueError(f"vertex {v} occurs in two parts")
            seen |= 1 << v
            pm |= 1 << v
        masks.append(pm)
    if seen != (1 << g.n) - 1:
        raise ValueError("parts do not cover the vertex set")

    entries = []
    for i, part in enumerate(parts):
        counts = [(g.adj[part[0]] & pm).bit_count() for pm in masks]
        for v in part[1:]:
            for j, pm in enumerate(masks):
                if (g.adj[v] & pm).bit_count() != counts[j]:
                    raise ValueError(
                        f"partition not equitable: vertices {part[0]} and {v} of "
                        f"part {i} differ in neighbours into part {j}"
                    )
        entries.append(tuple(counts))
    return QuotientMatrix(
        parts=tuple(tuple(p) for p in parts), entries=tuple(entries)
    )


def quotient_spectral_radius(
    g: Graph, parts: list[list[int]], tol: float = 1e-12, max_iter: int = 100000
) -> float:
    """Dominant eigenvalue of the equitable-partition quotient matrix.

    For an equitable partition of a connected graph this equals the
    adjacency spectral radius, which gives an independent cross-check of
    the power iteration on A.
    """
    quo = quotient_matrix(g, parts)
    m = len(quo.entries)
    # power iteration on (B + I); B is tiny (one row per part) but not
    # symmetric, so convergence is judged on the estimate and the residual
    x = [1.0] * m
    rho_prev = float("inf")
    for _ in range(max_iter):
        y = [x[i] + sum(quo.entries[i][j] * x[j] for j in range(m)) for i in range(m)]
        dot_xy = sum(a * b for a, b in zip(x, y))
        dot_xx = sum(a * a for a in x)
        rho = dot_xy / dot_xx
        residual = max(abs(y[i] - rho * x[i]) for i in range(m))
        scale = max(abs(v) for v in y) or 1.0
        x = [v / scale for v in y]
        if abs(rho - rho_prev) < tol and residual < tol * max(1.0, rho):
            return rho - 1.0
        rho_prev = rho
    raise ConvergenceError("quotient power iteration did not converge")
