"""Operator matrices and their scalarizations.

An ``n x n`` operator matrix with ``d x d`` blocks is stored as a complex
array of shape ``(n, n, d, d)``; :func:`flatten` turns it into the
``nd x nd`` matrix acting on ``C^d (+) ... (+) C^d``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DimensionMismatch, NegativeEntry
from .kernel import as_cmatrix, matrix_from_dict, matrix_to_dict, op_norm
from .numrange import ThetaSweepConfig, numerical_radius
from .weighted import Weight, a_norm, a_numerical_radius, require_strict


@dataclass(frozen=True, eq=False)
class BlockMatrix:
    """Square grid of equally sized square blocks."""

    blocks: np.ndarray  # shape (n, n, d, d)

    def __post_init__(self):
        b = np.asarray(self.blocks, dtype=complex)
        if b.ndim != 4 or b.shape[0] != b.shape[1] or b.shape[2] != b.shape[3] or 0 in b.shape:
            raise DimensionMismatch(f"blocks must have shape (n, n, d, d), got {b.shape}")
        if not np.all(np.isfinite(b)):
            raise ValueError("block entries must be finite")
        object.__setattr__(self, "blocks", b)

    @property
    def n(self) -> int:
        return self.blocks.shape[0]

    @property
    def block_dim(self) -> int:
        return self.blocks.shape[2]

    def __getitem__(self, ij) -> np.ndarray:
        return self.blocks[ij]

    @classmethod
    def from_grid(cls, grid) -> "BlockMatrix":
        """Build from a nested list ``[[T11, T12, ...], ...]`` of matrices."""
        rows = [[as_cmatrix(B, square=True) for B in row] for row in grid]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("block grid must be square")
        shapes = {B.shape for r in rows for B in r}
        if len(shapes) != 1:
            raise DimensionMismatch(f"blocks have differing shapes {sorted(shapes)}")
        return cls(np.array(rows))


def flatten(T: BlockMatrix) -> np.ndarray:
    """Assemble the ``nd x nd`` matrix with block ``(i, j)`` at rows ``i*d``, cols ``j*d``."""
    n, d = T.n, T.block_dim
    return T.blocks.transpose(0, 2, 1, 3).reshape(n * d, n * d)


def assemble(M, n: int) -> BlockMatrix:
    """Inverse of :func:`flatten`: split an ``nd x nd`` matrix into ``n x n`` blocks."""
    M = as_cmatrix(M, square=True)
    if M.shape[0] % n:
        raise DimensionMismatch(f"order {M.shape[0]} is not divisible by {n}")
    d = M.shape[0] // n
    return BlockMatrix(M.reshape(n, d, n, d).transpose(0, 2, 1, 3).copy())


def offdiag2(X, Y) -> BlockMatrix:
    """``[[O, X], [Y, O]]``."""
    X = as_cmatrix(X, square=True)
    Y = as_cmatrix(Y, square=True)
    if X.shape != Y.shape:
        raise DimensionMismatch(f"{X.shape} vs {Y.shape}")
    Z = np.zeros_like(X)
    return BlockMatrix(np.array([[Z, X], [Y, Z]]))


def offdiag2_matrix(X, Y) -> np.ndarray:
    return flatten(offdiag2(X, Y))


def norm_matrix(T: BlockMatrix, W: Weight | None = None) -> np.ndarray:
    """``(||T_ij||)`` or, with a weight, ``(||T_ij||_A)``."""
    n = T.n
    M = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            M[i, j] = op_norm(T[i, j]) if W is None else a_norm(W, T[i, j])
    return M


def scalarize_fg(T: BlockMatrix, s: float, diagonal_mode: bool = False) -> np.ndarray:
    """Scalar matrix built from ``f(t) = t^s``, ``g(t) = t^(1-s)``.

    Off the diagonal (and on it unless `diagonal_mode`) the entry is
    ``||f^2(|T_ij|)||^(1/2) ||g^2(|T_ij*|)||^(1/2)``; with `diagonal_mode`
    the diagonal entries become ``||f^2(|T_ii|) + g^2(|T_ii*|)|| / 2``.

    Both f and g are increasing, so ``||f^2(|B|)|| = ||B||^(2s)`` and
    ``||g^2(|B*|)|| = ||B||^(2-2s)``.  The diagonal operators come from one
    SVD ``B = U diag(sigma) V*``: ``|B| = V diag(sigma) V*`` and
    ``|B*| = U diag(sigma) U*``.
    """
    if not 0 < s < 1:
        raise ValueError("s must lie in (0, 1)")
    n = T.n
    M = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            B = T[i, j]
            if diagonal_mode and i == j:
                U, sig, Vh = np.linalg.svd(B)
                F = (Vh.conj().T * sig ** (2 * s)) @ Vh
                G = (U * sig ** (2 * (1 - s))) @ U.conj().T
                M[i, j] = op_norm(F + G) / 2
            else:
                top = op_norm(B)
                M[i, j] = math.sqrt(top ** (2 * s)) * math.sqrt(top ** (2 * (1 - s)))
    return M


def b_congruence(T: BlockMatrix, W: Weight) -> np.ndarray:
    """Congruence of `T` for ``B = diag(A, ..., A)``, formed block by block.

    Equals ``congruence(block_weight(W, n), flatten(T))`` because every
    factor of ``B`` is block diagonal.
    """
    if T.block_dim != W.dim:
        raise DimensionMismatch(f"blocks of order {T.block_dim} vs weight of order {W.dim}")
    if W.strict:
        C = np.einsum("ab,ijbc,cd->ijad", W.sqrtA, T.blocks, W.inv_sqrtA)
    else:
        Q, r = W.compressor, np.sqrt(W.retained)
        C = np.einsum("ba,ijbc,cd->ijad", Q.conj(), T.blocks, Q)
        C = C * (r[:, None] / r[None, :])
    return flatten(BlockMatrix(C))


def b_numerical_radius(T: BlockMatrix, W: Weight, cfg: ThetaSweepConfig | None = None) -> float:
    """``w_B(T)`` for ``B = diag(A, ..., A)``."""
    return numerical_radius(b_congruence(T, W), cfg)


def b_norm(T: BlockMatrix, W: Weight) -> float:
    """``||T||_B`` for ``B = diag(A, ..., A)``."""
    return op_norm(b_congruence(T, W))


def scalarize_weighted(T: BlockMatrix, W: Weight, cfg: ThetaSweepConfig | None = None,
                       mode: str = "norm-offdiag", diagonal=None) -> np.ndarray:
    """A-weighted scalar matrix.

    Diagonal entries are ``w_A(T_ii)`` (or the precomputed `diagonal`).  Off
    the diagonal, ``mode`` selects ``||T_ij||_A`` ("norm-offdiag") or
    ``w_C([[O, T_ij], [T_ji, O]])`` with ``C = diag(A, A)`` ("wB-offdiag";
    strictly positive weights only).
    """
    if mode not in ("norm-offdiag", "wB-offdiag"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "wB-offdiag":
        require_strict(W)
    n = T.n
    M = np.empty((n, n))
    for i in range(n):
        M[i, i] = a_numerical_radius(W, T[i, i], cfg) if diagonal is None else diagonal[i]
        for j in range(i + 1, n):
            if mode == "norm-offdiag":
                M[i, j] = a_norm(W, T[i, j])
                M[j, i] = a_norm(W, T[j, i])
            else:
                # symmetric by the swap invariance of w_C
                M[i, j] = M[j, i] = b_numerical_radius(offdiag2(T[i, j], T[j, i]), W, cfg)
    return M


def w_nonneg(M) -> float:
    """Numerical radius of an entrywise nonnegative matrix, ``r(M + M^T) / 2``."""
    M = as_cmatrix(M, square=True)
    if np.any(np.abs(M.imag) > 1e-12) or np.any(M.real < -1e-12):
        raise NegativeEntry("matrix must have real nonnegative entries")
    R = np.clip(M.real, 0.0, None)
    return float(np.max(np.abs(np.linalg.eigvalsh(R + R.T)))) / 2


# -- JSON block format --------------------------------------------------------
# {"blockRows": n, "blockDim": d, "blocks": [[matrix-object, ...], ...]}


def block_to_dict(T: BlockMatrix) -> dict:
    return {
        "blockRows": T.n,
        "blockDim": T.block_dim,
        "blocks": [[matrix_to_dict(T[i, j]) for j in range(T.n)] for i in range(T.n)],
    }


def block_from_dict(obj) -> BlockMatrix:
    try:
        n, d, grid = int(obj["blockRows"]), int(obj["blockDim"]), obj["blocks"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed block matrix object: {exc}") from exc
    if len(grid) != n or any(len(row) != n for row in grid):
        raise ValueError(f"expected a {n} x {n} grid of blocks")
    T = BlockMatrix.from_grid([[matrix_from_dict(B) for B in row] for row in grid])
    if T.block_dim != d:
        raise ValueError(f"blockDim {d} does not match block order {T.block_dim}")
    return T


def load_blocks(path) -> BlockMatrix:
    with open(path) as fh:
        return block_from_dict(json.load(fh))


def save_blocks(path, T: BlockMatrix) -> None:
    Path(path).write_text(json.dumps(block_to_dict(T)) + "\n")
