"""
Numerical radius in a semi-inner-product space
==============================================

A positive weight A defines <x, y>_A = <A x, y>.  Every A-weighted quantity
reduces to its classical counterpart on the congruence A^{1/2} T A^{-1/2}.
"""

import numpy as np

from numrad import a_adjoint, a_crawford, a_norm, a_numerical_radius, make_weight, numerical_radius
from numrad.blocks import b_numerical_radius, offdiag2
from numrad.weighted import a_radius_by_real_parts, congruence

E12 = np.array([[0, 1], [0, 0]], dtype=complex)
W = make_weight(np.diag([1.0, 4.0]))

# the A-adjoint solves A T# = T* A; for E12 it is E21 / 4
print("E12# =\n", a_adjoint(W, E12).real)

# congruence diag(1, 2) E12 diag(1, 1/2) = E12 / 2 halves norm and radius
print("||E12||_A =", a_norm(W, E12), " w_A(E12) =", a_numerical_radius(W, E12))

# an independent route through Re_A(e^{i theta} T) agrees
rng = np.random.default_rng(1)
G = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
A = G.conj().T @ G + 0.1 * np.eye(4)
V = make_weight(A)
T = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
print("w_A(T):", a_numerical_radius(V, T), "via real parts:", a_radius_by_real_parts(V, T))
print("m_A(T):", a_crawford(V, T))

# a singular weight only sees its range: the compression is 1 x 1 here
S = make_weight(np.diag([1.0, 0.0]))
print("rank", S.rank, " congruence of diag(2, 100):", congruence(S, np.diag([2.0, 100.0])).real)

# off-diagonal operator matrices under B = diag(A, A): equal blocks collapse to w_A
print("w_B([[O, T], [T, O]]) =", b_numerical_radius(offdiag2(T, T), V), " w_A(T) =", a_numerical_radius(V, T))

# swapping the blocks or rotating one by a phase leaves w_B unchanged
T21 = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
print([round(b_numerical_radius(offdiag2(X, Y), V), 12)
       for X, Y in ((T, T21), (T21, T), (T, np.exp(0.9j) * T21))])
print("classical w(T) for comparison:", numerical_radius(T))
