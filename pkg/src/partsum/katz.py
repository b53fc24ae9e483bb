"""Iterated Katz partial summations.

A Katz distribution with parameters ``alpha >= 0``, ``beta < 1`` has pmf
ratio ``R(x+1)/R(x) = (alpha + beta x)/(x + 1)``, which gives the weights

    g(j) = ((1 - alpha) + (1 - beta) j) / (j + 1).

``g`` is strictly monotone unless ``alpha == beta``, so the dominant
eigenvalue of the summation matrix is at ``k = 0`` (the limit is a point
mass at 0) or at ``k = S - 1`` (the limit is
``Bin(S - 1, (alpha - beta) / ((1 - beta) S))``). Which end wins depends
on ``|g(0)|`` versus ``|g(S-1)|``.

``classify`` walks the decision tree over (alpha, beta, S);
``classify_by_inequality`` compares the two moduli directly and serves as
an independent check. When both parameters are ``Fraction`` (as produced
by :meth:`KatzParams.parse`) all comparisons are exact; otherwise ties
are detected with a relative tolerance of ``1e-12``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real

import numpy as np

from .distribution import FiniteDistribution, binomial_distribution, point_mass
from .errors import BoundaryCase, InvalidParams, NotApplicable
from .summation import GTable

REL_TOL = 1e-12
SEC5_NOTE = "sec5-special-case"


@dataclass(frozen=True)
class KatzParams:
    alpha: Real
    beta: Real

    def __post_init__(self):
        a, b = self.alpha, self.beta
        if not (math.isfinite(a) and math.isfinite(b)):
            raise InvalidParams(f"non-finite parameters alpha={a!r}, beta={b!r}")
        if a < 0:
            raise InvalidParams(f"alpha must be >= 0, got {a}")
        if b >= 1:
            raise InvalidParams(f"beta must be < 1, got {b}")

    @classmethod
    def parse(cls, text: str) -> "KatzParams":
        """Parse ``"A,B"`` into exact rationals, e.g. ``"1.2,0.4"``."""
        parts = [s.strip() for s in text.split(",")]
        if len(parts) != 2:
            raise ValueError(f"expected 'ALPHA,BETA', got {text!r}")
        try:
            a, b = Fraction(parts[0]), Fraction(parts[1])
        except ValueError:
            raise ValueError(f"expected two decimal numbers 'ALPHA,BETA', got {text!r}") from None
        return cls(a, b)

    @property
    def exact(self) -> bool:
        return isinstance(self.alpha, (Fraction, int)) and isinstance(self.beta, (Fraction, int))

    def __str__(self):
        return f"alpha={float(self.alpha):.15g}, beta={float(self.beta):.15g}"


class Kind(str, enum.Enum):
    DETERMINISTIC = "deterministic"
    BINOMIAL = "binomial"
    BOUNDARY = "boundary"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Classification:
    """Predicted limit type for one (alpha, beta, S) triple.

    A Deterministic limit is always the point mass at 0, so ``k`` and ``p``
    are only set for Binomial outcomes.
    """

    kind: Kind
    S: int
    k: int | None = None
    p: float | None = None
    path: tuple[str, ...] = ()
    provenance: str = ""
    note: str = ""

    def __str__(self):
        if self.kind is Kind.BINOMIAL:
            return f"binomial k={self.k} p={self.p:.15g}"
        return str(self.kind)


def _params(params) -> KatzParams:
    if isinstance(params, KatzParams):
        return params
    a, b = params
    return KatzParams(a, b)


def katz_g(params, S: int) -> GTable:
    params = _params(params)
    if S < 1:
        raise ValueError(f"S must be at least 1, got {S}")
    a, b = float(params.alpha), float(params.beta)
    if a == b:
        return GTable(np.full(S, 1.0 - a))
    j = np.arange(S, dtype=np.float64)
    return GTable(((1.0 - a) + (1.0 - b) * j) / (j + 1.0))


def binomial_p(params, S: int) -> float:
    """Success probability ``(alpha - beta) / ((1 - beta) S)`` of the Binomial limit."""
    params = _params(params)
    a, b = params.alpha, params.beta
    return float((a - b) / ((1 - b) * S))


def critical_support(params) -> float | Fraction:
    """``S* = (alpha - beta) / (2 - alpha - beta)``; only meaningful for alpha + beta < 2."""
    params = _params(params)
    a, b = params.alpha, params.beta
    return (a - b) / (2 - a - b)


def _cmp(x, y, exact: bool) -> int:
    """Three-way compare; float ties use ``REL_TOL`` relative to the larger magnitude."""
    if exact:
        return (x > y) - (x < y)
    x, y = float(x), float(y)
    if abs(x - y) <= REL_TOL * max(abs(x), abs(y)):
        return 0
    return 1 if x > y else -1


def _binomial(params, S, path, provenance="") -> Classification:
    return Classification(Kind.BINOMIAL, S, k=S - 1, p=binomial_p(params, S), path=path, provenance=provenance)


def classify(params, S: int) -> Classification:
    """Classify the limit of iterated Katz summations by the decision tree."""
    params = _params(params)
    if S < 1:
        raise ValueError(f"S must be at least 1, got {S}")
    if S == 1:
        return Classification(Kind.DETERMINISTIC, 1, path=("S=1",), provenance="one-point support is its own limit")

    a, b = params.alpha, params.beta
    exact = params.exact
    if a == b:
        return Classification(
            Kind.DETERMINISTIC,
            S,
            path=("alpha=beta",),
            provenance="g is constant so the power method does not apply; finite-support "
            "iterates still tend to the point mass at 0 (slowly, at rate O(S/n))",
            note=SEC5_NOTE,
        )
    if a < b:
        return Classification(Kind.DETERMINISTIC, S, path=("alpha<beta",), provenance="g decreasing, k=0")
    if a <= 1:
        return _binomial(params, S, ("alpha>beta", "alpha<=1"), "g(0) >= 0 and g increasing, k=S-1")

    if a + b - 2 >= 0:
        return Classification(
            Kind.DETERMINISTIC,
            S,
            path=("alpha>beta", "alpha>1", "alpha+beta-2>=0"),
            provenance="|g(0)| exceeds g(S-1) for every S",
        )
    base = ("alpha>beta", "alpha>1", "alpha+beta-2<0")
    s_star = critical_support(params)
    c = _cmp(S, s_star, exact)
    if c == 0:
        return Classification(
            Kind.BOUNDARY,
            S,
            path=base + ("S=S*",),
            provenance=f"S equals S*={float(s_star):.15g}: |g(0)| = |g(S-1)|, limit not determined",
        )
    if c < 0:
        return Classification(
            Kind.DETERMINISTIC, S, path=base + ("S<S*",), provenance=f"S < S*={float(s_star):.15g}"
        )
    return _binomial(params, S, base + ("S>S*",), f"S > S*={float(s_star):.15g}")


def classify_by_inequality(params, S: int) -> Classification:
    """Classify by comparing ``|g(0)|`` with ``|g(S-1)|`` directly."""
    params = _params(params)
    if S < 2:
        raise ValueError(f"S must be at least 2, got {S}")
    a, b = params.alpha, params.beta
    if a == b:
        raise NotApplicable("alpha == beta: both sides coincide for every S")
    left = abs(1 - a)
    right = abs(((1 - a) + (1 - b) * (S - 1)) / S)
    c = _cmp(left, right, params.exact)
    if c > 0:
        return Classification(Kind.DETERMINISTIC, S, path=("|g(0)|>|g(S-1)|",), provenance="dominant at k=0")
    if c < 0:
        return _binomial(params, S, ("|g(0)|<|g(S-1)|",), "dominant at k=S-1")
    return Classification(Kind.BOUNDARY, S, path=("|g(0)|=|g(S-1)|",), provenance="no unique dominant eigenvalue")


def predict_limit(params, S: int) -> FiniteDistribution:
    """Limit distribution predicted by :func:`classify`.

    Raises
    ------
    BoundaryCase
        When ``|g(0)| == |g(S-1)|`` and the limit is left undetermined.
    """
    cls = classify(params, S)
    if cls.kind is Kind.BOUNDARY:
        raise BoundaryCase(f"{_params(params)}, S={S}: {cls.provenance}")
    if cls.kind is Kind.DETERMINISTIC:
        return point_mass(0, S)
    return binomial_distribution(S - 1, cls.p, S)


def scaled_eigenvector(params, S: int) -> np.ndarray:
    """Dominant eigenvector for k = S - 1 in its Katz-specific form, scaled to sum 1.

    Entry ``i`` is ``t * r**i * C(k, i)`` with
    ``r = (alpha - beta)/((1 - alpha) + (1 - beta) k)`` and
    ``t = (((1 - alpha) + (1 - beta) k)/((1 - beta)(k + 1)))**k``.
    Only valid when ``(1 - alpha) + (1 - beta) k != 0``.
    """
    params = _params(params)
    a, b = float(params.alpha), float(params.beta)
    k = S - 1
    den = (1 - a) + (1 - b) * k
    r = (a - b) / den
    t = (den / ((1 - b) * (k + 1))) ** k
    v = np.empty(S)
    coef = 1.0
    for i in range(S):
        v[i] = t * r**i * coef
        coef = coef * (k - i) / (i + 1)
    return v
