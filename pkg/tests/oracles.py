"""Independent reference computations used by the tests.

Everything here is exact (rational) or brute force, and shares no code
with the package under test.
"""

from fractions import Fraction
from math import comb

import numpy as np


def exact_power(g, parent, n):
    """``A^n P*`` in exact rational arithmetic, with A built densely from ``g``."""
    g = [Fraction(x) for x in g]
    q = [Fraction(x) for x in parent]
    S = len(g)
    A = [[g[j] if j >= i else Fraction(0) for j in range(S)] for i in range(S)]
    for _ in range(n):
        q = [sum(A[i][j] * q[j] for j in range(S)) for i in range(S)]
        # rescaling leaves the direction unchanged
        top = max(abs(x) for x in q)
        if top:
            q = [x / top for x in q]
    return q


def exact_limit_iterate(g, parent, n):
    """Float L1-normalized ``A^n P*`` computed exactly."""
    q = exact_power(g, parent, n)
    s = sum(abs(x) for x in q)
    return np.array([float(abs(x) / s) for x in q])


def binomial_pmf(n, p, S):
    p = Fraction(p)
    out = [comb(n, i) * p**i * (1 - p) ** (n - i) for i in range(n + 1)]
    return np.array([float(x) for x in out] + [0.0] * (S - n - 1))


def charpoly(A):
    """Characteristic polynomial coefficients (highest degree first), Faddeev-LeVerrier, exact."""
    n = len(A)
    A = [[Fraction(x) for x in row] for row in A]
    M = [[Fraction(0)] * n for _ in range(n)]
    coeffs = [Fraction(1)]
    c = Fraction(1)
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I
        M = [[sum(A[i][t] * M[t][j] for t in range(n)) + (c if i == j else 0) for j in range(n)] for i in range(n)]
        AM = [[sum(A[i][t] * M[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        c = -sum(AM[i][i] for i in range(n)) / k
        coeffs.append(c)
    return coeffs


def polish_roots(coeffs, roots, steps=20):
    """Newton-refine float roots of a polynomial given exact coefficients."""
    c = [float(x) for x in coeffs]
    dc = np.polyder(np.array(c))
    out = []
    for r in roots:
        r = complex(r).real
        for _ in range(steps):
            d = np.polyval(dc, r)
            if d == 0:
                break
            r -= np.polyval(c, r) / d
        out.append(r)
    return np.array(out)
