"""Compiled inner loop of the power iteration.

The slowest cases in the Binomial region need a few hundred thousand
steps at S ~ 50, which is too slow as a Python-level loop.
"""

import numpy as np
from numba import njit

STATUS_RUNNING = 0
STATUS_CONVERGED = 1
STATUS_ZERO = 2


@njit(cache=True)
def power_steps(g, u, w, tol, nsteps, dist_out, ray_out, iter_out):
    """Advance the unit-norm iterate ``u`` by at most ``nsteps`` steps, in place.

    ``w`` is scratch of length S. Per step, the successive-iterate distance,
    the Rayleigh quotient and the new iterate go to row ``i`` of the output
    buffers. Returns ``(steps_done, status)``.
    """
    S = g.shape[0]
    for i in range(nsteps):
        acc = 0.0
        for x in range(S - 1, -1, -1):
            acc += g[x] * u[x]
            w[x] = acc
        ray = 0.0
        sq = 0.0
        big = 0.0
        ibig = 0
        for x in range(S):
            ray += w[x] * u[x]
            sq += w[x] * w[x]
            if abs(w[x]) > big:
                big = abs(w[x])
                ibig = x
        if big == 0.0:
            return i, STATUS_ZERO
        scale = 1.0 / np.sqrt(sq)
        if w[ibig] < 0.0:
            scale = -scale
        d = 0.0
        for x in range(S):
            y = w[x] * scale
            d += (y - u[x]) * (y - u[x])
            u[x] = y
            iter_out[i, x] = y
        d = np.sqrt(d)
        dist_out[i] = d
        ray_out[i] = ray
        if d < tol:
            return i + 1, STATUS_CONVERGED
    return nsteps, STATUS_RUNNING
