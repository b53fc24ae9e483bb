"""Iterated partial summations of finite-support discrete distributions."""

from .distribution import (
    FiniteDistribution,
    SignedVector,
    binomial_distribution,
    normalize_l1,
    point_mass,
    random_parent,
    tv_distance,
    uniform,
)
from .errors import (
    BoundaryCase,
    DimensionMismatch,
    InvalidParams,
    MixedSignVector,
    NoConvergence,
    PreconditionViolated,
)
from .katz import (
    Classification,
    KatzParams,
    Kind,
    classify,
    classify_by_inequality,
    katz_g,
    predict_limit,
)
from .spectral import (
    DominantInfo,
    closed_form_eigenvector,
    dominant_index,
    eigen_residual,
    limit_via_power_method,
)
from .summation import GTable, IterationTrace, apply, apply_dense, build_matrix, iterate

__version__ = "0.1.0"
