"""The partial-summation operator and the iterated-summation engine.

One summation maps ``u`` to ``w`` with ``w_x = sum_{j >= x} g(j) u_j``.
In matrix form this is ``w = A u`` where ``A`` is upper triangular and
column ``j`` holds ``g(j)`` on and above the diagonal. Normalization
constants are left out; iterates are rescaled only for numerical
stability and turned into distributions at the end.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import STATUS_CONVERGED, STATUS_ZERO, power_steps
from .distribution import (
    FiniteDistribution,
    SignedVector,
    _values,
    normalize_l1,
)
from .errors import DimensionMismatch, InvalidGTable, NoConvergence, ZeroVector

DEFAULT_TOL = 1e-13
DEFAULT_MAX_ITER = 100_000


@dataclass(frozen=True, eq=False)
class GTable:
    """Tabulated weights ``g(0), ..., g(S-1)``."""

    values: np.ndarray

    def __post_init__(self):
        g = np.array(self.values, dtype=np.float64, copy=True)
        if g.ndim != 1 or g.size == 0:
            raise InvalidGTable("g must be a non-empty 1-D table")
        if not np.all(np.isfinite(g)):
            raise InvalidGTable("g contains NaN or infinite values")
        if not np.any(g != 0.0):
            raise InvalidGTable("g is identically zero; A = 0 has no limit")
        g.setflags(write=False)
        object.__setattr__(self, "values", g)

    @property
    def S(self) -> int:
        return self.values.size

    def __len__(self):
        return self.values.size

    def __getitem__(self, j):
        return self.values[j]

    def scaled(self, c: float) -> "GTable":
        return GTable(c * self.values)

    def __repr__(self):
        return f"GTable({np.array2string(self.values, precision=6)})"


def _table(g) -> GTable:
    return g if isinstance(g, GTable) else GTable(g)


def build_matrix(g) -> np.ndarray:
    """Dense summation matrix, entry ``(i, j) = g(j)`` for ``j >= i``, else 0."""
    g = _table(g)
    A = np.triu(np.broadcast_to(g.values, (g.S, g.S)))
    A.setflags(write=False)
    return A


def apply(g, u) -> SignedVector:
    """One partial summation in O(S), by the backward recurrence."""
    g = _table(g)
    x = _values(u)
    if x.shape != (g.S,):
        raise DimensionMismatch(f"g has S = {g.S} but vector has length {x.size}")
    # cumsum is a sequential left fold, i.e. w[x] = w[x+1] + g[x]*u[x]
    w = np.cumsum((g.values * x)[::-1])[::-1]
    return SignedVector(w)


def apply_dense(A, u) -> SignedVector:
    """Plain matrix-vector product; test oracle for :func:`apply`."""
    A = np.asarray(A, dtype=np.float64)
    x = _values(u)
    if A.ndim != 2 or A.shape[1] != x.size:
        raise DimensionMismatch(f"matrix of shape {A.shape} cannot act on length {x.size}")
    return SignedVector(A @ x)


@dataclass(frozen=True)
class TraceStep:
    index: int
    iterate: SignedVector
    step_distance: float
    rayleigh: float


@dataclass(frozen=True, eq=False)
class IterationTrace:
    """History of a power-iteration run.

    ``step_distance[n]`` and ``rayleigh[n]`` are recorded for every step
    (step ``n + 1`` of the run). Only the last ``iterates.shape[0]``
    normalized iterates are retained; they belong to the final steps.
    """

    step_distance: np.ndarray
    rayleigh: np.ndarray
    iterates: np.ndarray
    converged: bool

    @property
    def iterations_used(self) -> int:
        return int(self.step_distance.size)

    @property
    def steps(self) -> list[TraceStep]:
        """Records for the steps whose iterate was retained."""
        m = self.iterates.shape[0]
        n = self.iterations_used
        return [
            TraceStep(
                index=n - m + i + 1,
                iterate=SignedVector(self.iterates[i]),
                step_distance=float(self.step_distance[n - m + i]),
                rayleigh=float(self.rayleigh[n - m + i]),
            )
            for i in range(m)
        ]

    @property
    def eigenvalue_estimate(self) -> float:
        return float(self.rayleigh[-1]) if self.rayleigh.size else float("nan")


def _canonical_unit(x: np.ndarray) -> np.ndarray:
    nrm = np.linalg.norm(x)
    if nrm < 1e-300:
        raise ZeroVector("starting vector is zero")
    u = x / nrm
    if u[np.argmax(np.abs(u))] < 0:
        u = -u
    return u


def power_iterate(g, start, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER, keep=10):
    """Run the normalized power iteration and return ``(last_iterate, trace)``.

    ``last_iterate`` is the final unit-norm, sign-canonicalized iterate as a
    plain array. Unlike :func:`iterate` this never raises ``NoConvergence``;
    check ``trace.converged``.
    """
    g = _table(g)
    x = _values(start)
    if x.shape != (g.S,):
        raise DimensionMismatch(f"g has S = {g.S} but start vector has length {x.size}")
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    if max_iter < 1:
        raise ValueError(f"max_iter must be at least 1, got {max_iter}")
    keep = max_iter if keep is None else max(int(keep), 0)

    S = g.S
    gv = np.ascontiguousarray(g.values)
    u = np.ascontiguousarray(_canonical_unit(x))
    w = np.empty(S)
    chunk = int(max(1, min(4096, 2**20 // S, max_iter)))
    dist_buf = np.empty(chunk)
    ray_buf = np.empty(chunk)
    iter_buf = np.empty((chunk, S))

    dists, rays, tail = [], [], []
    tail_len = 0
    done = 0
    status = 0
    while done < max_iter:
        n, status = power_steps(gv, u, w, tol, min(chunk, max_iter - done), dist_buf, ray_buf, iter_buf)
        done += n
        dists.append(dist_buf[:n].copy())
        rays.append(ray_buf[:n].copy())
        if keep and n:
            tail.append(iter_buf[max(0, n - keep):n].copy())
            tail_len += tail[-1].shape[0]
            while tail and tail_len - tail[0].shape[0] >= keep:
                tail_len -= tail.pop(0).shape[0]
        if status == STATUS_ZERO:
            raise ZeroVector(f"iterate collapsed to zero after {done} steps (start lies in the null space of A)")
        if status == STATUS_CONVERGED:
            break

    iterates = np.concatenate(tail)[-keep:] if tail else np.empty((0, S))
    trace = IterationTrace(
        step_distance=np.concatenate(dists),
        rayleigh=np.concatenate(rays),
        iterates=iterates,
        converged=status == STATUS_CONVERGED,
    )
    return u, trace


def iterate(g, parent, tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER, keep=10):
    """Iterate the summation from ``parent`` until successive iterates agree.

    Each step applies the operator, rescales to unit Euclidean norm and
    flips the sign so the largest-magnitude entry is positive. The run
    stops when the Euclidean distance between successive iterates drops
    below ``tol``.

    Parameters
    ----------
    g : GTable or array_like
    parent : FiniteDistribution or array_like
        Original parent; any nonzero start vector is accepted.
    tol : float
    max_iter : int
    keep : int or None
        Number of trailing iterates stored in the trace (None keeps all).

    Returns
    -------
    limit : FiniteDistribution
        Final iterate scaled to unit L1 norm.
    trace : IterationTrace

    Raises
    ------
    NoConvergence
        ``max_iter`` steps were taken without meeting ``tol``; the trace and
        last iterate are attached to the exception.
    MixedSignVector
        The converged direction is not a scaled probability vector.
    """
    u, trace = power_iterate(g, parent, tol=tol, max_iter=max_iter, keep=keep)
    if not trace.converged:
        last = float(trace.step_distance[-1])
        raise NoConvergence(
            f"no convergence after {max_iter} steps (last step distance {last:.3e} >= tol {tol:.1e})",
            trace=trace,
            last=SignedVector(u),
        )
    return normalize_l1(u), trace
