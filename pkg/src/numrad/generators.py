"""Seeded random instances that satisfy the hypotheses of each inequality.

Random streams come from numpy's Philox4x64-10 counter-based generator.  The
128-bit key is ``(seed, stream)``, so every instance is a pure function of
the seed and a stream label; see :func:`stream_rng`.

Constrained pairs are built by simultaneous diagonalization instead of
rejection sampling (the constraint sets have measure zero).
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass

import numpy as np

from .blocks import BlockMatrix
from .errors import ConstructionFailure
from .kernel import abs_value, adjoint

ENSEMBLES = ("ginibre", "hermitian", "psd", "pd", "unitary")
PD_SHIFT = 0.1
_MASK64 = (1 << 64) - 1


def stream_rng(seed: int, label: str = "", index: int = 0) -> np.random.Generator:
    """Philox generator keyed by ``(seed, crc32(label) << 32 | index)``."""
    if not 0 <= index < (1 << 32):
        raise ValueError("index must fit in 32 bits")
    k1 = (zlib.crc32(label.encode()) << 32) | index
    key = np.array([seed & _MASK64, k1], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


@dataclass(frozen=True)
class GenSpec:
    dim: int
    seed: int = 0
    ensemble: str = "ginibre"
    scale: float = 1.0
    stream: str = ""
    index: int = 0

    def __post_init__(self):
        if not 1 <= self.dim <= 64:
            raise ValueError("dim must be in [1, 64]")
        if self.ensemble not in ENSEMBLES:
            raise ValueError(f"unknown ensemble {self.ensemble!r}")
        if not self.scale > 0:
            raise ValueError("scale must be positive")

    def rng(self) -> np.random.Generator:
        return stream_rng(self.seed, self.stream, self.index)


def _complex_normal(rng, shape):
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def _fix_phases(Q):
    """Make the first nonzero entry of every column real positive."""
    Q = Q.copy()
    for j in range(Q.shape[1]):
        col = Q[:, j]
        k = int(np.argmax(np.abs(col) > 1e-14))
        Q[:, j] *= np.conj(col[k]) / abs(col[k])
    return Q


def gen_matrix(spec: GenSpec, rng: np.random.Generator | None = None) -> np.ndarray:
    """Draw one matrix from ``spec.ensemble``.

    ginibre: iid standard complex normal entries times ``scale``.
    hermitian: ``(G + G*)/2``.  psd: ``G* G`` with ``G`` of shape
    ``ceil(n/2) x n`` (rank deficient for n >= 2).  pd: ``G* G + 0.1 scale I``
    with square ``G``.  unitary: phase-fixed Q factor of a Ginibre matrix.
    """
    rng = rng or spec.rng()
    n, c = spec.dim, spec.scale
    if spec.ensemble == "ginibre":
        return c * _complex_normal(rng, (n, n))
    if spec.ensemble == "hermitian":
        G = c * _complex_normal(rng, (n, n))
        return (G + adjoint(G)) / 2
    if spec.ensemble == "psd":
        G = np.sqrt(c) * _complex_normal(rng, ((n + 1) // 2, n))
        return adjoint(G) @ G
    if spec.ensemble == "pd":
        G = np.sqrt(c) * _complex_normal(rng, (n, n))
        P = adjoint(G) @ G
        return (P + adjoint(P)) / 2 + PD_SHIFT * c * np.eye(n)
    Q, _ = np.linalg.qr(_complex_normal(rng, (n, n)))
    return _fix_phases(Q)


def unit_vector(rng: np.random.Generator, n: int) -> np.ndarray:
    x = _complex_normal(rng, n)
    return x / np.linalg.norm(x)


def intertwining_residual(X, Y) -> float:
    """``|| |X| Y - Y* |X| ||_F``."""
    aX = abs_value(X)
    return float(np.linalg.norm(aX @ Y - adjoint(Y) @ aX))


def commuting_residuals(X, Y) -> tuple[float, float]:
    """``(||XY - YX||_F, || |X^2| Y^2 - (Y^2)* |X^2| ||_F)``."""
    Y2 = Y @ Y
    return float(np.linalg.norm(X @ Y - Y @ X)), intertwining_residual(X @ X, Y2)


def _tol(X, Y) -> float:
    return 1e-10 * max(1.0, np.linalg.norm(X) * np.linalg.norm(Y))


def gen_intertwined_pair(spec: GenSpec, mode: str = "hermitian", rng: np.random.Generator | None = None):
    """Pair ``(X, Y)`` with ``|X| Y = Y* |X|``.

    hermitian: ``X = V D V*``, ``Y = V E V*`` with ``D >= 0``, ``E`` real
    diagonal.  polar: ``X = U V D V*`` for another unitary ``U``, so that
    ``|X| = V D V*`` is unchanged.  nonnormal: ``X = U V D V*`` with ``D``
    bounded away from zero and ``Y = |X|^{-1} K`` for Hermitian ``K``, which
    gives a generally non-normal ``Y`` with ``|X| Y = K = Y* |X|``.
    """
    if mode not in ("hermitian", "polar", "nonnormal"):
        raise ValueError(f"unknown mode {mode!r}")
    rng = rng or spec.rng()
    n, c = spec.dim, spec.scale
    V = gen_matrix(GenSpec(n, ensemble="unitary"), rng)
    if mode == "nonnormal":
        d = c * rng.uniform(0.5, 2.0, n)
    else:
        d = c * rng.uniform(0.0, 2.0, n)
    absX = (V * d) @ adjoint(V)
    if mode == "nonnormal":
        G = c * _complex_normal(rng, (n, n))
        K = (G + adjoint(G)) / 2
        Y = (V / d) @ adjoint(V) @ K
    else:
        Y = (V * (c * rng.standard_normal(n))) @ adjoint(V)
    X = absX
    if mode != "hermitian":
        X = gen_matrix(GenSpec(n, ensemble="unitary"), rng) @ absX
    res = intertwining_residual(X, Y)
    if res > _tol(X, Y):
        raise ConstructionFailure(f"intertwining residual {res:.3e}")
    return X, Y


def gen_commuting_pair(spec: GenSpec, rng: np.random.Generator | None = None):
    """Pair with ``XY = YX`` and ``|X^2| Y^2 = (Y^2)* |X^2|``.

    ``X = V L V*`` is normal (complex diagonal ``L``) and ``Y = V E V*`` is
    Hermitian (real diagonal ``E``).
    """
    rng = rng or spec.rng()
    n, c = spec.dim, spec.scale
    V = gen_matrix(GenSpec(n, ensemble="unitary"), rng)
    lam = c * _complex_normal(rng, n)
    e = c * rng.standard_normal(n)
    X = (V * lam) @ adjoint(V)
    Y = (V * e) @ adjoint(V)
    r1, r2 = commuting_residuals(X, Y)
    if r1 > _tol(X, Y) or r2 > _tol(X @ X, Y @ Y):
        raise ConstructionFailure(f"commutation residuals {r1:.3e}, {r2:.3e}")
    return X, Y


def gen_blocks(spec: GenSpec, n: int, structure: str = "full",
               rng: np.random.Generator | None = None) -> BlockMatrix:
    """``n x n`` operator matrix of independent Ginibre blocks of order ``spec.dim``."""
    if structure not in ("full", "offdiag2"):
        raise ValueError(f"unknown structure {structure!r}")
    if structure == "offdiag2" and n != 2:
        raise ValueError("offdiag2 structure needs n = 2")
    rng = rng or spec.rng()
    d = spec.dim
    blocks = spec.scale * _complex_normal(rng, (n, n, d, d))
    if structure == "offdiag2":
        blocks[0, 0] = 0
        blocks[1, 1] = 0
    return BlockMatrix(blocks)
