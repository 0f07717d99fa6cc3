"""Semi-inner-product (A-weighted) quantities.

A positive semidefinite weight ``A`` defines ``<x, y>_A = <A x, y>``.  Every
A-quantity of an operator ``T`` is reduced to a classical quantity of the
congruence ``C = A^{1/2} T A^{-1/2}``: with ``y = A^{1/2} x`` one has
``<T x, x>_A = <C y, y>`` and ``||T x||_A = ||C y||``.  For a singular weight
the congruence is taken on the retained eigenspace of ``A`` (the closure of
its range), which gives an ``r x r`` matrix, ``r = rank A``.

The A-adjoint ``T# = A^{-1} T* A`` is only provided for strictly positive
weights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NegativeWeight, SingularWeight
from .kernel import adjoint, as_cmatrix, herm_eig, min_singular_value, op_norm
from .numrange import DEFAULT_SWEEP, ThetaSweepConfig, crawford, maximize_over_angle, numerical_radius

RANK_RTOL = 1e-10


@dataclass(frozen=True, eq=False)
class Weight:
    """Validated positive semidefinite weight with cached factors.

    Attributes
    ----------
    A : ndarray
        The (symmetrized) weight.
    sqrtA, inv_sqrtA : ndarray
        ``A^{1/2}`` and ``A^{-1/2}``; the inverse root acts on the retained
        eigenspace only (a pseudo-inverse root) when ``A`` is singular.
    rank_cut : float
        Eigenvalues at or below this value are treated as zero.
    compressor : ndarray
        ``n x r`` orthonormal basis of the retained eigenspace.
    retained : ndarray
        The ``r`` retained eigenvalues.
    strict : bool
        True when every eigenvalue exceeds `rank_cut`.
    """

    A: np.ndarray
    sqrtA: np.ndarray
    inv_sqrtA: np.ndarray
    rank_cut: float
    compressor: np.ndarray
    retained: np.ndarray
    strict: bool

    @property
    def dim(self) -> int:
        return self.A.shape[0]

    @property
    def rank(self) -> int:
        return self.retained.size


def make_weight(A) -> Weight:
    """Validate a weight matrix and cache its square-root factors.

    Raises
    ------
    NotHermitian
    NegativeWeight
        If an eigenvalue is below ``-1e-10 * lambda_max(A)``.
    SingularWeight
        If ``A`` has no positive eigenvalue at all.
    """
    lam, V = herm_eig(A)
    lmax = float(lam[-1])
    rank_cut = RANK_RTOL * max(lmax, 0.0)
    if lmax <= 0:
        if lam[0] < 0:
            raise NegativeWeight("weight is negative semidefinite")
        raise SingularWeight("weight is zero")
    if lam[0] < -rank_cut:
        raise NegativeWeight(f"weight has eigenvalue {lam[0]:.3e} < -{rank_cut:.3e}")
    keep = lam > rank_cut
    Q, lk = V[:, keep], lam[keep]
    root = np.sqrt(np.clip(lam, 0.0, None))
    sqrtA = (V * root) @ adjoint(V)
    inv_sqrtA = (Q / np.sqrt(lk)) @ adjoint(Q)
    Asym = (V * lam) @ adjoint(V)
    return Weight(Asym, sqrtA, inv_sqrtA, rank_cut, Q, lk, bool(keep.all()))


def identity_weight(n: int) -> Weight:
    return make_weight(np.eye(n))


@dataclass(frozen=True)
class BlockWeight:
    """``B = diag(A, ..., A)`` with `copies` diagonal blocks."""

    base: Weight
    copies: int

    def weight(self) -> Weight:
        """Materialize B as a dense block-diagonal :class:`Weight`."""
        n = self.copies
        if n < 1:
            raise ValueError("copies must be positive")
        eye = np.eye(n)
        b = self.base
        return Weight(
            np.kron(eye, b.A),
            np.kron(eye, b.sqrtA),
            np.kron(eye, b.inv_sqrtA),
            b.rank_cut,
            np.kron(eye, b.compressor),
            np.tile(b.retained, n),
            b.strict,
        )


def block_weight(W: Weight, copies: int) -> Weight:
    return BlockWeight(W, copies).weight()


def _check(W: Weight, T) -> np.ndarray:
    T = as_cmatrix(T, square=True)
    if T.shape[0] != W.dim:
        raise DimensionMismatch(f"operator of order {T.shape[0]} vs weight of order {W.dim}")
    return T


def congruence(W: Weight, T) -> np.ndarray:
    """Classical representative of `T` in the A-geometry.

    ``A^{1/2} T A^{-1/2}`` for strict weights; for singular weights the
    ``r x r`` compression ``L^{1/2} Q* T Q L^{-1/2}`` onto the retained
    eigenspace ``A = Q L Q*``.
    """
    T = _check(W, T)
    if W.strict:
        return W.sqrtA @ T @ W.inv_sqrtA
    Q, r = W.compressor, np.sqrt(W.retained)
    return (r[:, None] * (adjoint(Q) @ T @ Q)) / r[None, :]


def require_strict(W: Weight) -> None:
    if not W.strict:
        raise SingularWeight("operation requires a strictly positive weight")


def a_adjoint(W: Weight, T) -> np.ndarray:
    """A-adjoint ``T# = A^{-1} T* A``, the solution of ``A T# = T* A``."""
    require_strict(W)
    T = _check(W, T)
    return np.linalg.solve(W.A, adjoint(T) @ W.A)


def a_norm(W: Weight, T) -> float:
    """A-operator seminorm ``||T||_A``."""
    return op_norm(congruence(W, T))


def a_min_norm(W: Weight, T) -> float:
    """A-minimum norm ``c_A(T)``."""
    return min_singular_value(congruence(W, T))


def a_numerical_radius(W: Weight, T, cfg: ThetaSweepConfig | None = None) -> float:
    """A-numerical radius ``w_A(T)``."""
    return numerical_radius(congruence(W, T), cfg)


def a_crawford(W: Weight, T, cfg: ThetaSweepConfig | None = None) -> float:
    """A-Crawford number ``m_A(T)``."""
    return crawford(congruence(W, T), cfg)


def re_a(W: Weight, T) -> np.ndarray:
    """``Re_A(T) = (T + T#) / 2``."""
    return (_check(W, T) + a_adjoint(W, T)) / 2


def im_a(W: Weight, T) -> np.ndarray:
    """``Im_A(T) = (T - T#) / 2i``."""
    return (_check(W, T) - a_adjoint(W, T)) / 2j


def a_selfadjoint_residual(W: Weight, T) -> float:
    """``||A T - T* A||_F``; zero exactly for A-self-adjoint `T`."""
    T = _check(W, T)
    return float(np.linalg.norm(W.A @ T - adjoint(T) @ W.A))


def a_inner(W: Weight, x, y) -> complex:
    """``<x, y>_A = <A x, y>`` (linear in `x`)."""
    return complex(np.vdot(np.asarray(y), W.A @ np.asarray(x)))


def a_vector_norm(W: Weight, x) -> float:
    return math.sqrt(max(0.0, a_inner(W, x, x).real))


def polarization(W: Weight, x, y) -> complex:
    """Recover ``<x, y>_A`` from four A-seminorms."""
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    sq = [a_vector_norm(W, x + c * y) ** 2 for c in (1, -1, 1j, -1j)]
    return (sq[0] - sq[1]) / 4 + 1j * (sq[2] - sq[3]) / 4


def a_unitary_residual(W: Weight, U) -> float:
    """How far `U` is from being A-unitary.

    Returns ``max(||C*C - I||, ||D*D - I||)`` with ``C``, ``D`` the congruences
    of ``U`` and ``U#``; both vanish exactly when ``||U x||_A = ||x||_A`` and
    ``||U# x||_A = ||x||_A`` for all ``x``.
    """
    C = congruence(W, U)
    D = congruence(W, a_adjoint(W, U))
    eye = np.eye(C.shape[0])
    return max(op_norm(adjoint(C) @ C - eye), op_norm(adjoint(D) @ D - eye))


def is_a_unitary(W: Weight, U, tol: float = 1e-9) -> bool:
    return a_unitary_residual(W, U) <= tol


def a_radius_by_real_parts(W: Weight, T, cfg: ThetaSweepConfig | None = None) -> float:
    """``sup_theta ||Re_A(e^{i theta} T)||_A``, an independent route to ``w_A(T)``.

    Works from ``Re_A`` and ``Im_A`` (built with the A-adjoint) and measures
    the A-norm through a Cholesky factor ``A = L L*``: for A-self-adjoint
    ``R`` the matrix ``L* R L^{-*}`` is Hermitian and ``||R||_A`` is its
    largest eigenvalue modulus.  No square root of ``A`` is involved.
    """
    require_strict(W)
    T = _check(W, T)
    L = np.linalg.cholesky(W.A)
    Lh = adjoint(L)

    def to_hermitian(R):
        # L* R L^{-*}
        M = np.linalg.solve(L, adjoint(Lh @ R)).conj().T
        return (M + adjoint(M)) / 2

    P = to_hermitian(re_a(W, T))
    Q = to_hermitian(im_a(W, T))

    def fn(thetas):
        c = np.cos(thetas)[:, None, None]
        s = np.sin(thetas)[:, None, None]
        ev = np.linalg.eigvalsh(c * P - s * Q)
        return np.max(np.abs(ev), axis=1)

    value, _ = maximize_over_angle(fn, math.pi, cfg or DEFAULT_SWEEP)
    return value
