"""Dense complex matrix primitives.

Every operator in numrad is a plain two-dimensional ``complex128`` numpy
array.  This module holds the few spectral building blocks the rest of the
package relies on: Hermitian eigendecomposition, functions of positive
semidefinite matrices (square roots, powers, ``|X|``), operator norms, and
the JSON matrix file format.

All spectral functions go through a single LAPACK ``zheevd`` path.  Eigenvalues that
are negative only by roundoff (within ``1e-10 * ||H||_2``) are clamped to
zero before a function is applied.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Callable, NamedTuple

import numpy as np
from scipy.linalg.lapack import zheevd as _heevd

from .errors import DimensionMismatch, DomainError, IndefiniteInput, NotHermitian, NumericalFailure

HERMITIAN_RTOL = 1e-10
CLAMP_RTOL = 1e-10


class HermEig(NamedTuple):
    """Eigendecomposition ``H = V diag(eigenvalues) V*`` with ascending eigenvalues."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_cmatrix(T, square: bool = False) -> np.ndarray:
    """Return `T` as a finite complex128 matrix, raising ValueError otherwise."""
    M = np.asarray(T, dtype=complex)
    if M.ndim != 2 or M.shape[0] == 0 or M.shape[1] == 0:
        raise DimensionMismatch(f"expected a non-empty 2-D matrix, got shape {M.shape}")
    if square and M.shape[0] != M.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {M.shape}")
    if not np.isfinite(M).all():
        raise ValueError("matrix has NaN or infinite entries")
    return M


def adjoint(T) -> np.ndarray:
    """Conjugate transpose."""
    return np.conj(np.asarray(T, dtype=complex)).T


def _fro(M) -> float:
    return math.sqrt(np.vdot(M, M).real)


def _hermitian_part(H) -> np.ndarray:
    H = as_cmatrix(H, square=True)
    Hs = adjoint(H)
    if _fro(H - Hs) > HERMITIAN_RTOL * (1.0 + _fro(H)):
        raise NotHermitian("matrix is not Hermitian within tolerance")
    return (H + Hs) / 2


def herm_eig(H) -> HermEig:
    """Eigendecomposition of a Hermitian matrix.

    The input is symmetrized to ``(H + H*)/2`` before factorization.

    Raises
    ------
    NotHermitian
        If ``||H - H*||_F > 1e-10 (1 + ||H||_F)``.
    NumericalFailure
        If LAPACK does not converge.
    """
    lam, V, info = _heevd(_hermitian_part(H))
    if info != 0:
        raise NumericalFailure(f"Hermitian eigensolver failed (info={info})")
    return HermEig(lam, V)


def _clamped_eig(H) -> HermEig:
    lam, V = herm_eig(H)
    top = np.max(np.abs(lam)) if lam.size else 0.0
    if lam[0] < -CLAMP_RTOL * top:
        raise IndefiniteInput(f"minimum eigenvalue {lam[0]:.3e} is below -{CLAMP_RTOL:g}*||H||")
    return HermEig(np.clip(lam, 0.0, None), V)


def apply_spectral_fn(H, f: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """Return ``V f(diag(lambda)) V*`` for a positive semidefinite `H`.

    `f` receives the (clamped, nonnegative) eigenvalue array and must return an
    array of the same length.
    """
    lam, V = _clamped_eig(H)
    flam = np.asarray(f(lam), dtype=float)
    if flam.shape != lam.shape or not np.isfinite(flam).all():
        raise DomainError("spectral function is not finite on the spectrum")
    return (V * flam) @ adjoint(V)


def psd_power(H, q: float) -> np.ndarray:
    """``H**q`` for positive semidefinite `H` and ``q > 0``."""
    return apply_spectral_fn(H, lambda t: t**q)


def sqrt_psd(H) -> np.ndarray:
    """Positive semidefinite square root."""
    return apply_spectral_fn(H, np.sqrt)


def abs_value(X) -> np.ndarray:
    """``|X| = (X* X)^(1/2)``."""
    X = as_cmatrix(X, square=True)
    return sqrt_psd(adjoint(X) @ X)


class AbsPowers:
    """Powers of ``|X|`` and ``|X*|`` from one SVD ``X = U diag(sigma) V*``.

    ``|X|^q = V diag(sigma^q) V*`` and ``|X*|^q = U diag(sigma^q) U*``.
    """

    def __init__(self, X):
        X = as_cmatrix(X, square=True)
        try:
            self.U, self.sigma, self.Vh = np.linalg.svd(X)
        except np.linalg.LinAlgError as exc:
            raise NumericalFailure(str(exc)) from exc

    def abs(self, q: float = 1.0) -> np.ndarray:
        """``|X|^q`` for ``q > 0``."""
        return (self.Vh.conj().T * self.sigma**q) @ self.Vh

    def abs_adjoint(self, q: float = 1.0) -> np.ndarray:
        """``|X*|^q`` for ``q > 0``."""
        return (self.U * self.sigma**q) @ self.U.conj().T


def singular_values(T) -> np.ndarray:
    """Singular values in descending order."""
    try:
        return np.linalg.svd(np.asarray(T, dtype=complex), compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(str(exc)) from exc


def op_norm(T) -> float:
    """Operator (spectral) norm, the largest singular value."""
    return float(singular_values(T)[0])


def min_singular_value(T) -> float:
    return float(singular_values(T)[-1])


# -- JSON matrix format -------------------------------------------------------
# {"rows": n, "cols": m, "entries": [[re, im], ...]}  (row-major)


def matrix_to_dict(T) -> dict:
    M = as_cmatrix(T)
    return {
        "rows": int(M.shape[0]),
        "cols": int(M.shape[1]),
        "entries": [[float(z.real), float(z.imag)] for z in M.ravel()],
    }


def matrix_from_dict(obj) -> np.ndarray:
    try:
        rows, cols, entries = int(obj["rows"]), int(obj["cols"]), obj["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix object: {exc}") from exc
    if rows < 1 or cols < 1:
        raise ValueError("rows and cols must be positive")
    if len(entries) != rows * cols:
        raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
    vals = []
    for e in entries:
        if isinstance(e, (int, float)):
            vals.append(complex(e))
        elif len(e) == 2:
            vals.append(complex(float(e[0]), float(e[1])))
        else:
            raise ValueError(f"bad entry {e!r}")
    return as_cmatrix(np.array(vals, dtype=complex).reshape(rows, cols))


def load_matrix(path) -> np.ndarray:
    with open(path) as fh:
        return matrix_from_dict(json.load(fh))


def dumps_matrix(T) -> str:
    return json.dumps(matrix_to_dict(T))


def save_matrix(path, T) -> None:
    Path(path).write_text(dumps_matrix(T) + "\n")
