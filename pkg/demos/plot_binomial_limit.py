"""
Iterated Katz summations converge to a binomial
===============================================

Start from an arbitrary parent on {0, 1, 2} and apply the Katz partial
summation with alpha = 0.5, beta = 0 over and over. The descendants
settle on Bin(2, 1/6), whatever the parent was.
"""

import numpy as np

from partsum import FiniteDistribution, apply, iterate, katz_g, normalize_l1, predict_limit

g = katz_g((0.5, 0.0), 3)
print("g =", g.values)

# a few explicit summations, normalized after each step
p = FiniteDistribution([0.1, 0.1, 0.8])
for n in range(1, 6):
    p = normalize_l1(apply(g, p))
    print(f"P({n}) =", np.round(p.probs, 6))

# the engine iterates until successive iterates agree to 1e-13
limit, trace = iterate(g, FiniteDistribution([0.1, 0.1, 0.8]))
print(f"limit after {trace.iterations_used} steps:", np.round(limit.probs, 12))
print("eigenvalue estimate:", trace.eigenvalue_estimate, "(g(2) = 5/6)")

# and the prediction from the classifier
print("predicted:", predict_limit((0.5, 0.0), 3).probs)
print("25/36, 10/36, 1/36 =", np.array([25, 10, 1]) / 36)
