"""Spectral radius and primitivity of nonnegative matrices.

This is the only module that computes in floating point.  Inputs are
still validated exactly (square, real, entrywise nonnegative) before
being converted to float64 and handed to the selected kernel backend.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .exact import Matrix, classify_entries
from .structure import pattern_digraph, scc_condensation


class NonConvergenceError(RuntimeError):
    """Raised when power iteration cannot meet the residual tolerance."""


@dataclass(frozen=True)
class SpectralResult:
    """Approximate Perron data with a verified residual contract.

    rho approximates the spectral radius; right_vector and left_vector
    are nonnegative with infinity norm 1, and both infinity-norm
    residuals ||A v - rho v|| and ||A^T u - rho u|| are at most the
    tolerance that was requested.
    """

    rho: float
    right_vector: tuple[float, ...]
    left_vector: tuple[float, ...]
    residual: float
    iterations: int


def _validated_float_array(m: Matrix) -> np.ndarray:
    if not m.is_square:
        raise ValueError("spectral analysis requires a square matrix")
    cls = classify_entries(m)
    if not cls.is_real:
        raise ValueError("spectral analysis requires a real matrix")
    if not cls.is_nonnegative:
        raise ValueError("spectral analysis requires a nonnegative matrix")
    n = m.rows
    a = np.empty((n, n), dtype=np.float64)
    for i in range(n):
        for j in range(n):
            a[i, j] = float(m.entry(i, j).re)
    return a


def perron(m: Matrix, tol: float = 1e-9,
           max_iters: int = 100000) -> SpectralResult:
    """Spectral radius with right and left Perron vectors.

    Runs shifted power iteration on A and on A^T.  Both residuals are
    checked against the single reported rho; when the left run's own
    eigenvalue estimate differs from it by enough to break that shared
    contract, both runs are retried at tighter internal tolerances.
    Raises NonConvergenceError if the contract cannot be met within
    max_iters per run.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    a = _validated_float_array(m)
    at = np.ascontiguousarray(a.T)
    total = 0
    inner = tol
    residual = float("inf")
    for _ in range(5):
        rho, v, res_r, it_r = _kernels.power_iteration(a, inner, max_iters)
        _, u, _, it_l = _kernels.power_iteration(at, inner, max_iters)
        total += int(it_r) + int(it_l)
        res_l = float(np.abs(at @ u - rho * u).max())
        residual = max(float(res_r), res_l)
        if residual <= tol:
            return SpectralResult(
                rho=float(rho),
                right_vector=tuple(float(x) for x in v),
                left_vector=tuple(float(x) for x in u),
                residual=residual,
                iterations=total,
            )
        if res_r > inner:
            break  # the forward run itself is stuck; tightening won't help
        inner /= 16.0
    raise NonConvergenceError(
        f"residual {residual:.3e} above tolerance {tol:.3e} "
        f"after {total} total iterations")


def is_primitive(m: Matrix) -> bool:
    """Strongly connected pattern with cycle-length gcd 1.

    Uses the standard distance criterion: with d the BFS levels from
    any root, the gcd of d[u] + 1 - d[v] over all edges (u, v) equals
    the period of a strongly connected digraph.
    """
    a = _validated_float_array(m)  # same validation contract as perron
    del a
    g = pattern_digraph(m)
    if scc_condensation(g).scc_count != 1:
        return False
    adj = g.adjacency()
    n = g.n
    dist = [-1] * n
    dist[0] = 0
    queue = [0]
    qi = 0
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    period = 0
    for u, w in g.edges:
        period = math.gcd(period, dist[u] + 1 - dist[w])
    return period == 1
