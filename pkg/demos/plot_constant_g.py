"""
Constant g: a deterministic limit, reached slowly
=================================================

With alpha = beta every g value is the same, so the summation matrix is
a single Jordan block and the power method gives no guarantee. The
descendants still drift to the point mass at 0, but only like S/n.
"""

from partsum import katz_g, point_mass, random_parent, tv_distance
from partsum.summation import power_iterate

S = 5
g = katz_g((0.3, 0.3), S)
parent = random_parent(S, seed=0)
for n in (10, 100, 1_000, 10_000, 100_000):
    u, trace = power_iterate(g, parent, max_iter=n)
    p = abs(u) / abs(u).sum()
    print(f"n={n:<7} tv to point mass={tv_distance(p, point_mass(0, S)):.3e}  n*tv={n * tv_distance(p, point_mass(0, S)):.3f}")
