"""Dominant eigenpair of the summation matrix.

The summation matrix is upper triangular, so its eigenvalues are the
table entries ``g(j)`` and the dominant one sits at ``argmax |g(j)|``.
Its eigenvector has a closed form supported on ``0..k``; the power
iteration must reproduce it whenever the method's conditions hold.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .distribution import FiniteDistribution, SignedVector, _values, normalize_l1
from .errors import (
    DegenerateFactorWarning,
    DimensionMismatch,
    IndexOutOfRange,
    PreconditionViolated,
    ZeroDominantValue,
)
from .summation import DEFAULT_MAX_ITER, DEFAULT_TOL, _table, apply, iterate

DEFAULT_TIE_TOL = 1e-9


@dataclass(frozen=True)
class DominantInfo:
    k: int
    lam: float
    unique: bool
    gap_ratio: float


def dominant_index(g, tie_tol: float = DEFAULT_TIE_TOL) -> DominantInfo:
    """Locate the eigenvalue of largest modulus.

    Ties go to the smallest index. ``unique`` is False when some other
    index has modulus within ``tie_tol * |g(k)|`` of the maximum.
    ``gap_ratio`` is the second-largest modulus over the largest.
    """
    g = _table(g)
    mag = np.abs(g.values)
    k = int(np.argmax(mag))
    top = mag[k]
    others = np.delete(mag, k)
    if others.size == 0:
        return DominantInfo(k=k, lam=float(g.values[k]), unique=True, gap_ratio=0.0)
    unique = not bool(np.any(np.abs(others - top) <= tie_tol * top))
    return DominantInfo(k=k, lam=float(g.values[k]), unique=unique, gap_ratio=float(others.max() / top))


def closed_form_eigenvector(g, k: int) -> SignedVector:
    """Eigenvector of ``A`` for eigenvalue ``g(k)``, scaled so ``v_0 = 1``.

    ``v_i = prod_{j < i} (1 - g(j)/g(k))`` for ``i <= k`` and 0 beyond.
    If some ``g(j) == g(k)`` with ``j < k`` the product vanishes from
    ``j + 1`` on; a ``DegenerateFactorWarning`` is issued in that case.
    """
    g = _table(g)
    if not 0 <= k < g.S:
        raise IndexOutOfRange(f"k = {k} outside 0..{g.S - 1}")
    gk = g.values[k]
    if gk == 0.0:
        raise ZeroDominantValue(f"g({k}) = 0")
    v = np.zeros(g.S)
    v[0] = 1.0
    ratios = g.values[:k] / gk
    if np.any(ratios == 1.0):
        warnings.warn(
            f"g(j) == g({k}) for some j < {k}; eigenvector entries after it vanish",
            DegenerateFactorWarning,
            stacklevel=2,
        )
    acc = 1.0
    for i in range(1, k + 1):
        acc *= 1.0 - ratios[i - 1]
        v[i] = acc
    return SignedVector(v)


def eigen_residual(g, v, lam: float) -> float:
    """Relative residual ``||A v - lam v||_2 / ||v||_2``."""
    g = _table(g)
    x = _values(v)
    if x.shape != (g.S,):
        raise DimensionMismatch(f"g has S = {g.S} but vector has length {x.size}")
    r = apply(g, x).entries - lam * x
    return float(np.linalg.norm(r) / np.linalg.norm(x))


def check_power_method(g, parent, tie_tol: float = DEFAULT_TIE_TOL) -> DominantInfo:
    """Verify the power-method conditions, raising ``PreconditionViolated``."""
    g = _table(g)
    p = _values(parent)
    if p.shape != (g.S,):
        raise DimensionMismatch(f"g has S = {g.S} but parent has length {p.size}")
    info = dominant_index(g, tie_tol)
    if not info.unique:
        raise PreconditionViolated(
            "unique-dominant",
            f"|g| attains its maximum {abs(info.lam):.6g} at more than one index",
        )
    if np.unique(g.values).size != g.S:
        raise PreconditionViolated(
            "distinct-eigenvalues",
            "g has repeated values, so diagonalizability is not certified",
        )
    if not np.all(p > 0):
        raise PreconditionViolated("positive-parent", "every parent probability must be nonzero")
    return info


def limit_via_power_method(
    g,
    parent,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    tie_tol: float = DEFAULT_TIE_TOL,
) -> FiniteDistribution:
    """Limit distribution from power iteration, after checking its conditions."""
    check_power_method(g, parent, tie_tol)
    limit, _ = iterate(g, parent, tol=tol, max_iter=max_iter, keep=0)
    return limit


def limit_via_closed_form(g, tie_tol: float = DEFAULT_TIE_TOL) -> FiniteDistribution:
    """Normalized closed-form dominant eigenvector (requires a unique dominant)."""
    info = dominant_index(g, tie_tol)
    if not info.unique:
        raise PreconditionViolated("unique-dominant", "no unique dominant eigenvalue")
    return normalize_l1(closed_form_eigenvector(g, info.k))
