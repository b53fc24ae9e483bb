"""Finite discrete distributions and unnormalized iterate vectors.

Both value types wrap a read-only float64 array. A ``FiniteDistribution``
is a parent or descendant distribution on ``{0, ..., S-1}``; a
``SignedVector`` is an iterate before normalization (it may be scaled
arbitrarily and may carry a global sign).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    InvalidDistribution,
    InvalidProbability,
    MixedSignVector,
    ZeroVector,
)

#: Absolute tolerance for the sum-to-one check.
PROB_TOL = 1e-12
#: Relative tolerance under which opposite-sign entries are treated as noise.
SIGN_TOL = 1e-10
#: Norms below this are treated as the zero vector.
TINY = 1e-300
#: Lower bound on every entry produced by :func:`random_parent`.
PARENT_FLOOR = 1e-6


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=np.float64, copy=True)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got shape {arr.shape}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class FiniteDistribution:
    """Probability vector on a support of size ``S``."""

    probs: np.ndarray

    def __post_init__(self):
        p = _frozen(self.probs)
        if p.size == 0:
            raise InvalidDistribution("support size S must be at least 1")
        if not np.all(np.isfinite(p)):
            raise InvalidDistribution("probabilities must be finite")
        if np.any(p < 0):
            raise InvalidDistribution(f"negative probability {p.min()!r}")
        total = float(p.sum())
        if abs(total - 1.0) > PROB_TOL:
            raise InvalidDistribution(f"probabilities sum to {total!r}, not 1")
        object.__setattr__(self, "probs", p)

    @property
    def S(self) -> int:
        return self.probs.size

    def __len__(self):
        return self.probs.size

    def __array__(self, dtype=None, copy=None):
        return self.probs if dtype is None else self.probs.astype(dtype)

    def __repr__(self):
        return f"FiniteDistribution({np.array2string(self.probs, precision=6)})"


@dataclass(frozen=True, eq=False)
class SignedVector:
    """Unnormalized real vector, such as an iterate or an eigenvector."""

    entries: np.ndarray

    def __post_init__(self):
        v = _frozen(self.entries)
        if v.size == 0:
            raise ValueError("vector length S must be at least 1")
        object.__setattr__(self, "entries", v)

    @property
    def S(self) -> int:
        return self.entries.size

    def __len__(self):
        return self.entries.size

    def __array__(self, dtype=None, copy=None):
        return self.entries if dtype is None else self.entries.astype(dtype)

    def __repr__(self):
        return f"SignedVector({np.array2string(self.entries, precision=6)})"


def _values(x) -> np.ndarray:
    if isinstance(x, FiniteDistribution):
        return x.probs
    if isinstance(x, SignedVector):
        return x.entries
    return np.asarray(x, dtype=np.float64)


def normalize_l1(v) -> FiniteDistribution:
    """Scale ``v`` to unit L1 norm, flipping the sign of an all-nonpositive vector.

    Entries whose sign disagrees with the bulk but whose magnitude is below
    ``SIGN_TOL * ||v||_1`` are rounding noise and are zeroed.

    Raises
    ------
    ZeroVector
        If ``||v||_1`` is below ``TINY``.
    MixedSignVector
        If significant entries of both signs are present.
    """
    x = _values(v)
    norm = float(np.abs(x).sum())
    if not np.isfinite(norm):
        raise ValueError("vector has non-finite entries")
    if norm < TINY:
        raise ZeroVector("cannot normalize the zero vector")
    cutoff = SIGN_TOL * norm
    has_pos = bool(np.any(x > cutoff))
    has_neg = bool(np.any(x < -cutoff))
    if has_pos and has_neg:
        raise MixedSignVector(
            f"entries of both signs (min {x.min():.3g}, max {x.max():.3g}); "
            "the vector is not a scaled probability distribution"
        )
    if has_neg:
        x = -x
    x = np.where(x > 0, x, 0.0)
    return FiniteDistribution(x / x.sum())


def tv_distance(p, q) -> float:
    """Total variation distance ``0.5 * sum |p_i - q_i|``."""
    a, b = _values(p), _values(q)
    if a.shape != b.shape:
        raise DimensionMismatch(f"support sizes differ: {a.size} vs {b.size}")
    return 0.5 * float(np.abs(a - b).sum())


def binomial_distribution(n: int, p: float, S: int) -> FiniteDistribution:
    """Bin(n, p) pmf padded with zeros to length ``S``."""
    if not 0.0 <= p <= 1.0:
        raise InvalidProbability(f"p = {p!r} is outside [0, 1]")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if S < n + 1:
        raise DimensionMismatch(f"S = {S} cannot hold Bin({n}, p) (needs S >= {n + 1})")
    q = 1.0 - p
    out = np.zeros(S)
    coef = 1.0
    for i in range(n + 1):
        out[i] = coef * p**i * q ** (n - i)
        coef = coef * (n - i) / (i + 1)
    # rounding in p**i * q**(n-i) can leave the total a few ulps off
    return FiniteDistribution(out / out.sum())


def point_mass(at: int, S: int) -> FiniteDistribution:
    if not 0 <= at < S:
        raise IndexOutOfRange(f"index {at} outside support of size {S}")
    out = np.zeros(S)
    out[at] = 1.0
    return FiniteDistribution(out)


def uniform(S: int) -> FiniteDistribution:
    return FiniteDistribution(np.full(S, 1.0 / S))


def random_parent(S: int, seed: int) -> FiniteDistribution:
    """Strictly positive random distribution, reproducible from ``seed``.

    Independent U(0, 1) draws are normalized and then mixed with a floor so
    that every entry is at least ``PARENT_FLOOR`` (or ``0.5 / S`` when the
    support is too large for that floor).
    """
    if S < 1:
        raise ValueError(f"S must be at least 1, got {S}")
    rng = np.random.default_rng(seed)
    u = rng.uniform(size=S)
    u = u / u.sum()
    floor = min(PARENT_FLOOR, 0.5 / S)
    p = floor + (1.0 - S * floor) * u
    return FiniteDistribution(p)
