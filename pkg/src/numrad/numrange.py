"""Classical numerical range quantities via angle sweeps.

For a square matrix ``T`` write ``H(theta) = Re(e^{i theta} T)``.  The
support function of the numerical range ``W(T)`` in direction ``theta`` is
``lambda_max(H(theta))``, so

* ``w(T) = max_theta lambda_max(H(theta)) = max_theta ||H(theta)||``,
* ``m(T) = max(0, max_theta lambda_min(H(theta)))`` (W(T) is convex).

Both maxima are found by a uniform grid in ``theta`` followed by a
safeguarded Newton refinement of the relevant eigenvalue branch around the
best grid cells.  :func:`maximize_over_angle` offers the same grid search
with derivative-free Brent refinement for arbitrary angle functions.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg.lapack import zheevd as _heevd
from scipy.optimize import minimize_scalar

from .errors import NumericalFailure
from .kernel import adjoint, as_cmatrix

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ThetaSweepConfig:
    """Settings for the angle sweep.

    grid_points counts uniform angles on the full circle ``[0, 2 pi)``; a sweep
    over a shorter period uses the proportional number of points.  Eigenvalue
    sweeps of order ``m`` use at least ``2 m`` points.  Maximizing the largest
    eigenvalue refines every grid peak the support-function bound cannot
    exclude; other sweeps refine the best refine_cells peaks.
    """

    grid_points: int = 32
    refine_tol: float = 1e-12
    max_refine_iters: int = 200
    refine_cells: int = 3

    def __post_init__(self):
        if int(self.grid_points) != self.grid_points or self.grid_points < 16:
            raise ValueError("grid_points must be an integer >= 16")
        if not self.refine_tol > 0:
            raise ValueError("refine_tol must be positive")
        if self.max_refine_iters < 1 or self.refine_cells < 1:
            raise ValueError("max_refine_iters and refine_cells must be positive")


DEFAULT_SWEEP = ThetaSweepConfig()


def _circular_peaks(vals):
    """Mask of grid points no smaller than both cyclic neighbours."""
    prev = np.empty_like(vals)
    prev[0], prev[1:] = vals[-1], vals[:-1]
    nxt = np.empty_like(vals)
    nxt[-1], nxt[:-1] = vals[0], vals[1:]
    return (vals >= prev) & (vals >= nxt)


def maximize_over_angle(fn, period: float, cfg: ThetaSweepConfig | None = None, support: bool = False):
    """Maximize a continuous ``period``-periodic function of an angle.

    Parameters
    ----------
    fn : callable
        Maps a 1-D array of angles to the array of function values.
    period : float
        Period of `fn`.
    cfg : ThetaSweepConfig, optional
    support : bool
        Declare that every local maximum ``p`` at ``t0`` satisfies
        ``fn(t) >= p cos(t - t0)`` nearby, as support functions of a compact
        set do.  Grid maxima that provably cannot beat the best grid value
        are then not refined.

    Returns
    -------
    value, theta : float, float
    """
    cfg = cfg or DEFAULT_SWEEP
    m = max(8, int(round(cfg.grid_points * period / TWO_PI)))
    step = period / m
    thetas = step * np.arange(m)
    vals = np.asarray(fn(thetas), dtype=float)
    if not np.isfinite(vals).all():
        raise NumericalFailure("non-finite value during angle sweep")
    ibest = int(np.argmax(vals))
    best, best_t = float(vals[ibest]), float(thetas[ibest])

    is_peak = _circular_peaks(vals)
    if support and best > 0:
        is_peak &= vals >= best * math.cos(step / 2)
    peaks = np.flatnonzero(is_peak)
    # stable sort keeps the choice deterministic on plateaus
    peaks = peaks[np.argsort(-vals[peaks], kind="stable")][: cfg.refine_cells]

    def neg(t):
        return -float(fn(np.array([t]))[0])

    for i in peaks:
        t0 = thetas[i]
        res = minimize_scalar(
            neg,
            bounds=(t0 - step, t0 + step),
            method="bounded",
            options={"xatol": cfg.refine_tol, "maxiter": cfg.max_refine_iters},
        )
        if -res.fun > best:
            best, best_t = -float(res.fun), float(res.x) % period
    return best, best_t


def real_part_rotated(T, theta: float) -> np.ndarray:
    """``(e^{i theta} T + e^{-i theta} T*) / 2``."""
    T = as_cmatrix(T, square=True)
    z = np.exp(1j * theta)
    return (z * T + np.conj(z) * adjoint(T)) / 2


def _cartesian(T):
    Ts = adjoint(T)
    return (T + Ts) / 2, (T - Ts) / 2j


def _extreme_eigs(R, S, thetas):
    """(lambda_min, lambda_max) of ``cos(t) R - sin(t) S`` for each angle."""
    c = np.cos(thetas)[:, None, None]
    s = np.sin(thetas)[:, None, None]
    try:
        ev = np.linalg.eigvalsh(c * R - s * S)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(str(exc)) from exc
    return ev[:, 0], ev[:, -1]


def _newton_peak(R, S, t0: float, lo: float, hi: float, idx: int, cfg: ThetaSweepConfig):
    """Maximize eigenvalue branch `idx` of ``H(t) = cos(t) R - sin(t) S`` on ``[lo, hi]``.

    Safeguarded Newton on ``lambda'(t) = 0`` started at `t0`
    with analytic derivatives: ``H' = -sin(t) R - cos(t) S``, ``H'' = -H`` and
    ``lambda'' = -lambda + 2 sum_k |<H' v, v_k>|^2 / (lambda - lambda_k)``.
    Returns the best evaluated ``(value, t)``, so the result never exceeds
    the true maximum.
    """
    t, best, best_t = t0, -math.inf, t0
    sign = 1.0 if idx != 0 else -1.0
    for _ in range(cfg.max_refine_iters):
        c, s = math.cos(t), math.sin(t)
        lam, V, info = _heevd(c * R - s * S)
        if info != 0:
            raise NumericalFailure(f"Hermitian eigensolver failed (info={info})")
        val = float(lam[idx])
        if val > best:
            best, best_t = val, t
        # w_k = <H' v, v_k>
        w = ((-s * R - c * S) @ V[:, idx]) @ V.conj()
        coup = (w * w.conj()).real
        d1 = float(w[idx].real)
        coup[idx] = 0.0
        # clamp gaps away from zero: a near-degenerate branch sends d2 to
        # +-huge, which falls back to bisection (upper) or a null step (lower)
        gaps = np.maximum(sign * (val - lam), 1e-14 * (1.0 + abs(val)))
        d2 = 2.0 * sign * float(coup @ (1.0 / gaps)) - val
        delta = -d1 / d2 if d2 < 0 else math.nan
        # stop once the step or its predicted gain is below roundoff
        if abs(delta) <= cfg.refine_tol or 0.5 * d1 * delta <= 1e-16 * max(abs(val), 1e-300):
            break
        if d1 > 0:
            lo = t
        else:
            hi = t
        tn = t + delta
        if not lo < tn < hi:
            tn = (lo + hi) / 2
        if hi - lo <= cfg.refine_tol:
            break
        t = tn
    return best, best_t


def pencil_max(R, S, cfg: ThetaSweepConfig | None = None, lower: bool = False) -> float:
    """Maximize an extreme eigenvalue of ``H(t) = cos(t) R - sin(t) S`` over the circle.

    Returns ``max_t lambda_max(H(t))``, or ``max_t lambda_min(H(t))`` with
    `lower`.  `R` and `S` must be Hermitian.
    """
    cfg = cfg or DEFAULT_SWEEP
    R = np.asarray(R, dtype=complex)
    S = np.asarray(S, dtype=complex)
    # one half-circle grid serves both branches: H(t + pi) = -H(t)
    half = max(cfg.grid_points // 2, R.shape[0])
    step = math.pi / half
    thetas = step * np.arange(half)
    lo, hi = _extreme_eigs(R, S, thetas)
    vals = np.concatenate((lo, -hi)) if lower else np.concatenate((hi, -lo))
    if not np.isfinite(vals).all():
        raise NumericalFailure("non-finite value during angle sweep")
    best = float(vals.max())
    peaks = np.flatnonzero(_circular_peaks(vals))
    if not lower and best > 0:
        # support function: a peak p at t' forces f(t) >= p cos(t - t') at the
        # nearest grid angle, so peaks below best cos(step / 2) cannot win
        peaks = peaks[vals[peaks] >= best * math.cos(step / 2)]
    else:
        peaks = peaks[np.argsort(-vals[peaks], kind="stable")][: cfg.refine_cells]
    idx = 0 if lower else -1
    m = vals.size
    for i in peaks.tolist():
        # start from the vertex of the parabola through the three grid values;
        # the bracket stays the two neighbouring cells, which hold the peak
        # even when it is a kink the parabola misplaces
        a, b, c = vals[i - 1], vals[i], vals[(i + 1) % m]
        curv = a - 2 * b + c
        shift = 0.5 * (a - c) / curv if curv < 0 else 0.0
        t0 = step * (i + min(0.5, max(-0.5, float(shift))))
        best = max(best, _newton_peak(R, S, t0, step * (i - 1), step * (i + 1), idx, cfg)[0])
    return best


def numerical_radius(T, cfg: ThetaSweepConfig | None = None) -> float:
    """Numerical radius ``w(T) = max{|z| : z in W(T)}``.

    Equals ``max_theta lambda_max(Re(e^{i theta} T))`` over the full circle.
    """
    T = as_cmatrix(T, square=True)
    if T.shape[0] == 1:
        return float(abs(T[0, 0]))
    return max(0.0, pencil_max(*_cartesian(T), cfg))


def crawford(T, cfg: ThetaSweepConfig | None = None) -> float:
    """Crawford number ``m(T) = min{|z| : z in W(T)}``.

    Computed as the largest lower support value
    ``max_theta lambda_min(Re(e^{i theta} T))`` of the convex set ``W(T)``,
    clipped at zero when the origin lies in ``W(T)``.
    """
    T = as_cmatrix(T, square=True)
    if T.shape[0] == 1:
        return float(abs(T[0, 0]))
    return max(0.0, pencil_max(*_cartesian(T), cfg, lower=True))


def spectral_radius(T) -> float:
    """Largest eigenvalue modulus."""
    T = as_cmatrix(T, square=True)
    try:
        return float(np.max(np.abs(np.linalg.eigvals(T))))
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(str(exc)) from exc


@dataclass(frozen=True)
class RangeBoundary:
    """Support points of W(T) and the angles that produced them."""

    points: np.ndarray
    thetas: np.ndarray

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["theta", "re", "im"])
        for t, z in zip(self.thetas, self.points):
            w.writerow([repr(float(t)), repr(float(z.real)), repr(float(z.imag))])
        return buf.getvalue()


def range_boundary(T, k: int) -> RangeBoundary:
    """Points ``<T x, x>`` for top eigenvectors ``x`` of ``Re(e^{i theta} T)``.

    Uses `k` equally spaced angles in ``[0, 2 pi)``; the points are the
    vertices of a polygon inscribed in W(T).
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    T = as_cmatrix(T, square=True)
    thetas = TWO_PI * np.arange(k) / k
    z = np.exp(1j * thetas)[:, None, None]
    H = (z * T + np.conj(z) * adjoint(T)) / 2
    try:
        _, V = np.linalg.eigh(H)
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(str(exc)) from exc
    X = V[:, :, -1]
    if np.max(np.abs(np.linalg.norm(X, axis=1) - 1.0)) > 1e-9:
        raise NumericalFailure("eigenvectors are not unit vectors")
    points = np.einsum("ki,ij,kj->k", X.conj(), T, X)
    return RangeBoundary(points=points, thetas=thetas)
