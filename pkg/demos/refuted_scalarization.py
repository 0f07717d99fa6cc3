"""
A scalarization that does not bound the numerical radius
========================================================

Replacing each block of an operator matrix by its norm gives a nonnegative
matrix whose numerical radius bounds w(T).  Replacing each block by its
numerical radius does not: one 4 x 4 example breaks it.
"""

import math

import numpy as np

from numrad import flatten, numerical_radius, w_nonneg
from numrad.bounds import E12, check_alomari_counterexample, counterexample_blocks, radius_scalarization
from numrad.blocks import norm_matrix

# T = [[I, E12], [E21, I]] flattens to I + E14 + E41, with eigenvalues 2, 1, 1, 0
T = counterexample_blocks()
print(flatten(T).real)
print("w(T) =", numerical_radius(flatten(T)))

# norms of the blocks: [[1, 1], [1, 1]] with numerical radius 2, a valid bound
print("norm scalarization:", w_nonneg(norm_matrix(T)))

# numerical radii of the blocks: [[1, 1/2], [1/2, 1]] with numerical radius 3/2
print("radius scalarization:\n", radius_scalarization(T))
print("its numerical radius:", w_nonneg(radius_scalarization(T)))

# the step that fails: |<E12 x_j, x_i>| is not bounded by w(E12) ||x_i|| ||x_j||
xj = np.array([0, 1]) / math.sqrt(2)
xi = np.array([1, 0]) / math.sqrt(2)
print("|<E12 x_j, x_i>| =", abs(np.vdot(xi, E12 @ xj)),
      " w(E12)||x_i||||x_j|| =", numerical_radius(E12) * np.linalg.norm(xi) * np.linalg.norm(xj))

# the packaged check reports the refutation (relation "gt", holds when lhs > rhs)
print(check_alomari_counterexample())
