"""
Numerical range, numerical radius and Crawford number
=====================================================

The numerical radius sits between half the operator norm and the norm, and
above the spectral radius.  A nilpotent shift shows the gap clearly.
"""

import numpy as np

from numrad import crawford, numerical_radius, op_norm, range_boundary, spectral_radius

# the 2 x 2 shift E12: nilpotent, norm 1, numerical range the disk of radius 1/2
E12 = np.array([[0, 1], [0, 0]], dtype=complex)
print("E12: r =", spectral_radius(E12), " w =", numerical_radius(E12), " ||.|| =", op_norm(E12))

# support points of W(E12) all sit on the circle of radius 1/2
pts = range_boundary(E12, 12).points
print("boundary radii:", np.round(np.abs(pts), 12))

# a normal matrix has W(T) = convex hull of the eigenvalues
T = np.diag([1 + 1j, 2, 1.5 - 0.5j])
print("normal: w =", numerical_radius(T), " max |eig| =", np.max(np.abs(np.diag(T))))

# the Crawford number is the distance from 0 to W(T); zero once 0 is inside
print("m(diag(1, 2)) =", crawford(np.diag([1.0, 2.0])), " m(diag(1, -1)) =", crawford(np.diag([1.0, -1.0])))

# random matrices respect ||T||/2 <= w(T) <= ||T||
rng = np.random.default_rng(0)
for n in (3, 6, 12):
    G = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    w = numerical_radius(G)
    print(f"n={n:2d}  ||G||/2={op_norm(G) / 2:.4f}  w={w:.4f}  ||G||={op_norm(G):.4f}  m={crawford(G):.4f}")
