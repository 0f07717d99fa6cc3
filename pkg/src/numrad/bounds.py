"""Evaluators for numerical radius inequalities.

Each ``check_*`` function computes both sides of one or more inequalities on
a concrete instance and returns :class:`BoundReport` objects.  Hypotheses
(intertwining, commutation, unit vectors) are measured, never assumed: a
report whose hypothesis residual is too large is marked invalid instead of
raising.

Bound identifiers
-----------------
Lemma-level (``check_lemmas``)
    young, mccarthy, mixed-schwarz, offdiag-square, square-radius, buzano,
    polarization
Products under ``|X| Y = Y* |X|`` (``check_product_s2``)
    product-offdiag, product-offdiag-norms, product-chain, product-root,
    product-factored
Products of commuting pairs (``check_product_buzano_s2``)
    buzano-product-offdiag, buzano-product-norms, buzano-product-chain,
    buzano-product-root, buzano-product-factored, factor-dominance-x,
    factor-dominance-y
Operator matrices (``check_opmatrix_s3``)
    fg-scalarization, fg-diagonal-scalarization, norm-scalarization,
    refuted-radius-scalarization
Weighted off-diagonal 2 x 2 (``check_offdiag_s4``)
    offdiag-angle-sup, offdiag-lower-sum-diff, offdiag-upper-sum-diff,
    offdiag-fourth-root, offdiag-fourth-root-swapped, offdiag-sqrt,
    offdiag-sqrt-swapped, offdiag-crawford-lower,
    offdiag-crawford-lower-swapped, offdiag-swap, offdiag-phase,
    offdiag-equal-blocks, rotation-unitary
Weighted n x n (``check_full_s4``, ``check_wa_product``)
    weighted-norm-scalarization, weighted-norm-2x2, weighted-norm-closed-form,
    weighted-radius-scalarization, weighted-radius-2x2,
    weighted-radius-closed-form, block-norm, adjoint-product
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .blocks import (
    BlockMatrix,
    b_norm,
    b_numerical_radius,
    flatten,
    norm_matrix,
    offdiag2,
    offdiag2_matrix,
    scalarize_fg,
    scalarize_weighted,
    w_nonneg,
)
from .generators import commuting_residuals, intertwining_residual
from .kernel import AbsPowers, adjoint, as_cmatrix, op_norm, psd_power
from .numrange import ThetaSweepConfig, numerical_radius, pencil_max, spectral_radius
from .weighted import (
    Weight,
    a_adjoint,
    a_crawford,
    a_inner,
    a_norm,
    a_numerical_radius,
    a_unitary_residual,
    a_vector_norm,
    block_weight,
    congruence,
    polarization,
    require_strict,
)

MARGIN_RTOL = 1e-8
RESIDUAL_RTOL = 1e-8
TIGHT_RTOL = 1e-6


@dataclass(frozen=True)
class PowerPair:
    """Exponents for the product bounds.

    ``f(t) = t**s`` and ``g(t) = t**(1 - s)``; ``alpha`` and ``beta`` are
    conjugate exponents and ``p`` the outer power.
    """

    s: float = 0.5
    p: float = 1.0
    alpha: float = 2.0
    beta: float = 2.0

    def __post_init__(self):
        if not 0 < self.s < 1:
            raise ValueError("s must lie in (0, 1)")
        if not self.p >= 1:
            raise ValueError("p must be at least 1")
        if not (self.alpha > 1 and self.beta > 1):
            raise ValueError("alpha and beta must exceed 1")
        if abs(1 / self.alpha + 1 / self.beta - 1) > 1e-12:
            raise ValueError("alpha and beta must be conjugate exponents")
        if self.p * self.alpha < 2 - 1e-12 or self.p * self.beta < 2 - 1e-12:
            raise ValueError("need p*alpha >= 2 and p*beta >= 2")

    @classmethod
    def conjugate(cls, s: float, p: float, alpha: float) -> "PowerPair":
        return cls(s, p, alpha, alpha / (alpha - 1))


# (p, alpha) grid for the product suite
POWER_GRID = ((1.0, 2.0), (2.0, 2.0), (1.5, 4.0 / 3.0))


@dataclass(frozen=True)
class BoundReport:
    """One evaluated inequality.

    relation is "le" (``lhs <= rhs``), "eq" (``lhs == rhs``; the margin is
    ``-|lhs - rhs|``) or "gt" (a refutation, ``lhs > rhs``, margin
    ``lhs - rhs``).
    """

    bound_id: str
    lhs: float
    rhs: float
    margin: float
    hypothesis_residual: float
    holds: bool
    scale: float
    valid: bool
    relation: str = "le"
    details: dict = field(default_factory=dict)

    @property
    def tight(self) -> bool:
        return self.margin < TIGHT_RTOL * self.scale


def make_report(bound_id: str, lhs, rhs, residual: float = 0.0, relation: str = "le",
                scale: float | None = None, gap: float | None = None,
                details: dict | None = None) -> BoundReport:
    """Build a report, deriving margin, scale, holds and valid.

    `gap` overrides ``|lhs - rhs|`` for "eq" relations on complex values.
    """
    lhs, rhs = float(lhs), float(rhs)
    if scale is None:
        scale = max(1.0, abs(lhs), abs(rhs))
    if relation == "le":
        margin = rhs - lhs
        holds = margin >= -MARGIN_RTOL * scale
    elif relation == "eq":
        margin = -abs(lhs - rhs) if gap is None else -abs(gap)
        holds = margin >= -MARGIN_RTOL * scale
    elif relation == "gt":
        margin = lhs - rhs
        holds = margin > MARGIN_RTOL * scale
    else:
        raise ValueError(f"unknown relation {relation!r}")
    residual = float(residual)
    return BoundReport(
        bound_id=bound_id,
        lhs=lhs,
        rhs=rhs,
        margin=float(margin),
        hypothesis_residual=residual,
        holds=bool(holds),
        scale=float(scale),
        valid=bool(residual <= RESIDUAL_RTOL * scale),
        relation=relation,
        details=dict(details or {}),
    )


def _with_residual(reports, residual):
    # re-derive validity once the scale of every report is known
    return [make_report(r.bound_id, r.lhs, r.rhs, residual, r.relation, r.scale,
                        None if r.relation != "eq" else -r.margin, r.details)
            for r in reports]


def _unit_residual(x) -> float:
    return abs(float(np.linalg.norm(x)) - 1.0)


# -- lemma-level checks -------------------------------------------------------


def check_young(a: float, b: float, alpha: float, beta: float) -> BoundReport:
    """``ab <= a^alpha / alpha + b^beta / beta`` for ``a, b >= 0``."""
    residual = max(0.0, -a, -b, abs(1 / alpha + 1 / beta - 1))
    a, b = max(a, 0.0), max(b, 0.0)
    return make_report("young", a * b, a**alpha / alpha + b**beta / beta, residual)


def check_mccarthy(P, x, q: float) -> BoundReport:
    """``<P x, x>^q <= <P^q x, x>`` for positive semidefinite `P`, unit `x`, ``q >= 1``."""
    x = np.asarray(x, dtype=complex)
    Pq = psd_power(P, q)
    base = max(0.0, float(np.vdot(x, P @ x).real))
    return make_report("mccarthy", base**q, float(np.vdot(x, Pq @ x).real), _unit_residual(x),
                       details={"q": q})


def check_mixed_schwarz(X, Y, x, y, s: float) -> BoundReport:
    """``|<X Y x, y>| <= r(Y) || |X|^s x || || |X*|^(1-s) y ||`` when ``|X| Y = Y* |X|``."""
    X = as_cmatrix(X, square=True)
    Y = as_cmatrix(Y, square=True)
    lhs = abs(np.vdot(y, X @ Y @ x))
    ap = AbsPowers(X)
    fx = ap.abs(s) @ x
    gy = ap.abs_adjoint(1 - s) @ y
    rhs = spectral_radius(Y) * np.linalg.norm(fx) * np.linalg.norm(gy)
    return make_report("mixed-schwarz", lhs, rhs, intertwining_residual(X, Y))


def check_offdiag_square(X, Y, cfg: ThetaSweepConfig | None = None) -> BoundReport:
    """``w^2([[O, X], [Y, O]]) <= ||X* X + Y Y*|| / 4 + w(Y X) / 2``."""
    X = as_cmatrix(X, square=True)
    Y = as_cmatrix(Y, square=True)
    lhs = numerical_radius(offdiag2_matrix(X, Y), cfg) ** 2
    rhs = op_norm(adjoint(X) @ X + Y @ adjoint(Y)) / 4 + numerical_radius(Y @ X, cfg) / 2
    return make_report("offdiag-square", lhs, rhs)


def check_square_radius(X, cfg: ThetaSweepConfig | None = None) -> BoundReport:
    """``w^2(X) <= || |X|^2 + |X*|^2 || / 4 + w(X^2) / 2``."""
    X = as_cmatrix(X, square=True)
    lhs = numerical_radius(X, cfg) ** 2
    rhs = op_norm(adjoint(X) @ X + X @ adjoint(X)) / 4 + numerical_radius(X @ X, cfg) / 2
    return make_report("square-radius", lhs, rhs)


def mixed_schwarz_nonnormal_counterexample(eps: float = 0.01):
    """Instance where the two-vector mixed Schwarz bound fails for non-normal `Y`.

    ``X = diag(1, eps)`` and ``Y = X^{-1} [[0, 1], [1, 0]]`` satisfy
    ``|X| Y = Y* |X|`` with ``r(Y) = eps^(-1/2)``.  For ``x = e2``, ``y = e1``
    the left side is 1 and the right side is ``eps^(s - 1/2)``, so the bound
    fails for every ``s > 1/2``.  Returns ``(X, Y, x, y)``.
    """
    X = np.diag([1.0, eps]).astype(complex)
    Y = np.array([[0.0, 1.0], [1.0 / eps, 0.0]], dtype=complex)
    e1, e2 = np.eye(2, dtype=complex)
    return X, Y, e2, e1


def check_buzano(a, b, x) -> BoundReport:
    """``|<a, x><x, b>| <= (||a|| ||b|| + |<a, b>|) ||x||^2 / 2``."""
    a, b, x = (np.asarray(v, dtype=complex) for v in (a, b, x))
    lhs = abs(np.vdot(x, a) * np.vdot(b, x))
    rhs = (np.linalg.norm(a) * np.linalg.norm(b) + abs(np.vdot(b, a))) * np.linalg.norm(x) ** 2 / 2
    return make_report("buzano", lhs, rhs)


def check_polarization(W: Weight, x, y) -> BoundReport:
    """``<x, y>_A`` against its recovery from four A-seminorms."""
    direct = a_inner(W, x, y)
    polar = polarization(W, x, y)
    scale = max(1.0, (a_vector_norm(W, x) + a_vector_norm(W, y)) ** 2)
    return make_report("polarization", abs(direct), abs(polar), relation="eq", scale=scale,
                       gap=abs(direct - polar))


def check_lemmas(X, Y, x, y, W: Weight, pp: PowerPair, cfg: ThetaSweepConfig | None = None) -> list[BoundReport]:
    """Lemma-level checks on one instance.

    `X`, `Y` should satisfy ``|X| Y = Y* |X|`` (measured); `x`, `y` unit
    vectors.  The McCarthy exponent is ``max(p alpha, p beta) / 2``, the
    largest power at which the product bounds use it.
    """
    X = as_cmatrix(X, square=True)
    Y = as_cmatrix(Y, square=True)
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    s = pp.s
    ap = AbsPowers(X)
    a = float(np.linalg.norm(ap.abs(s) @ x))
    b = float(np.linalg.norm(ap.abs_adjoint(1 - s) @ x))
    unit = max(_unit_residual(x), _unit_residual(y))
    young = check_young(a, b, pp.alpha, pp.beta)
    mc = check_mccarthy(ap.abs(), x, max(pp.p * pp.alpha, pp.p * pp.beta) / 2)
    ms = check_mixed_schwarz(X, Y, x, y, s)
    return [
        young,
        mc,
        _with_residual([ms], max(ms.hypothesis_residual, unit))[0],
        check_offdiag_square(X, Y, cfg),
        check_square_radius(X, cfg),
        check_buzano(X @ x, Y @ y, x),
        check_polarization(W, x, y),
    ]


# -- products -----------------------------------------------------------------


def _factor(T) -> float:
    """``|| |T|^2 + |T*|^2 || + 2 ||T^2||``."""
    return op_norm(adjoint(T) @ T + T @ adjoint(T)) + 2 * op_norm(T @ T)


def _chain_terms(ap: AbsPowers, pp: PowerPair, cfg):
    """Offdiagonal radius and its norm estimate for ``F = |T|^(s p alpha)``, ``G = |T*|^((1-s) p beta)``."""
    F = ap.abs(pp.s * pp.p * pp.alpha)
    G = ap.abs_adjoint((1 - pp.s) * pp.p * pp.beta)
    a, b = pp.alpha, pp.beta
    w_off = numerical_radius(offdiag2_matrix(F / a, G / b), cfg)
    est = math.sqrt(op_norm(F @ F / a**2 + G @ G / b**2) + 2 / (a * b) * op_norm(G @ F))
    return w_off, est


def check_product_s2(X, Y, pp: PowerPair, cfg: ThetaSweepConfig | None = None) -> list[BoundReport]:
    """Product bounds for ``w(XY)`` under ``|X| Y = Y* |X|``.

    product-offdiag
        ``w^p(XY) <= 2 r^p(Y) w([[O, F/alpha], [G/beta, O]])``
    product-offdiag-norms
        ``w^p(XY) <= r^p(Y) (||F^2/alpha^2 + G^2/beta^2|| + 2 ||G F|| / (alpha beta))^(1/2)``
    product-chain
        first right-hand side against the second
    product-root
        ``w(XY) <= r(Y) w([[O, |X|^(2s)], [|X*|^(2-2s), O]])``
    product-factored
        ``w(XY) <= factor(X)^(1/2) factor(Y)^(1/2) / 4``

    Here ``F = |X|^(s p alpha)``, ``G = |X*|^((1-s) p beta)`` and
    ``factor(T) = || |T|^2 + |T*|^2 || + 2 ||T^2||``.
    """
    X = as_cmatrix(X, square=True)
    Y = as_cmatrix(Y, square=True)
    residual = intertwining_residual(X, Y)
    ap = AbsPowers(X)
    w_xy = numerical_radius(X @ Y, cfg)
    r_y = spectral_radius(Y)
    p = pp.p
    w_off, est = _chain_terms(ap, pp, cfg)
    rhs1 = 2 * r_y**p * w_off
    rhs2 = r_y**p * est
    root_off = numerical_radius(offdiag2_matrix(ap.abs(2 * pp.s), ap.abs_adjoint(2 * (1 - pp.s))), cfg)
    reports = [
        make_report("product-offdiag", w_xy**p, rhs1),
        make_report("product-offdiag-norms", w_xy**p, rhs2),
        make_report("product-chain", rhs1, rhs2),
        make_report("product-root", w_xy, r_y * root_off),
        make_report("product-factored", w_xy, math.sqrt(_factor(X)) * math.sqrt(_factor(Y)) / 4),
    ]
    return _with_residual(reports, residual)


def check_factor_dominance(T, label: str = "x") -> BoundReport:
    """``factor(T) <= (||T|| + ||T^2||^(1/2))^2``."""
    T = as_cmatrix(T, square=True)
    rhs = (op_norm(T) + math.sqrt(op_norm(T @ T))) ** 2
    return make_report(f"factor-dominance-{label}", _factor(T), rhs)


def check_product_buzano_s2(X, Y, pp: PowerPair, cfg: ThetaSweepConfig | None = None) -> list[BoundReport]:
    """Product bounds for ``w(XY)`` when ``XY = YX`` and ``|X^2| Y^2 = (Y^2)* |X^2|``.

    buzano-product-offdiag
        ``w^(2p)(XY) <= ||XY||^(2p)/2 + r^p(Y^2) w([[O, F/alpha], [G/beta, O]])``
    buzano-product-norms
        same with ``r^p(Y^2) (...)^(1/2) / 2`` as in the norm estimate
    buzano-product-root
        ``w^2(XY) <= ||XY||^2/2 + r(Y^2) w([[O, |X^2|^(2s)], [|X^2*|^(2-2s), O]]) / 2``
    buzano-product-factored
        ``w^2(XY) <= ||XY||^2/2 + factor(X^2)^(1/2) factor(Y^2)^(1/2) / 8``

    with ``F = |X^2|^(s p alpha)`` and ``G = |X^2*|^((1-s) p beta)``.  The
    factor dominance inequality is also reported at ``T = X`` and ``T = Y``.
    """
    X = as_cmatrix(X, square=True)
    Y = as_cmatrix(Y, square=True)
    residual = max(commuting_residuals(X, Y))
    X2, Y2 = X @ X, Y @ Y
    ap = AbsPowers(X2)
    XY = X @ Y
    w_xy = numerical_radius(XY, cfg)
    n_xy = op_norm(XY)
    r_y2 = spectral_radius(Y2)
    p = pp.p
    w_off, est = _chain_terms(ap, pp, cfg)
    head = n_xy ** (2 * p) / 2
    rhs1 = head + r_y2**p * w_off
    rhs2 = head + r_y2**p * est / 2
    root_off = numerical_radius(offdiag2_matrix(ap.abs(2 * pp.s), ap.abs_adjoint(2 * (1 - pp.s))), cfg)
    reports = [
        make_report("buzano-product-offdiag", w_xy ** (2 * p), rhs1),
        make_report("buzano-product-norms", w_xy ** (2 * p), rhs2),
        make_report("buzano-product-chain", rhs1, rhs2),
        make_report("buzano-product-root", w_xy**2, n_xy**2 / 2 + r_y2 * root_off / 2),
        make_report("buzano-product-factored", w_xy**2,
                    n_xy**2 / 2 + math.sqrt(_factor(X2)) * math.sqrt(_factor(Y2)) / 8),
    ]
    return _with_residual(reports, residual) + [
        check_factor_dominance(X, "x"),
        check_factor_dominance(Y, "y"),
    ]


# -- operator matrices --------------------------------------------------------


def check_opmatrix_s3(T: BlockMatrix, s: float = 0.5, cfg: ThetaSweepConfig | None = None) -> list[BoundReport]:
    """``w(T)`` against the numerical radii of three nonnegative scalarizations.

    fg-scalarization uses ``||f^2(|T_ij|)||^(1/2) ||g^2(|T_ij*|)||^(1/2)``
    everywhere, fg-diagonal-scalarization replaces the diagonal entries by
    ``||f^2(|T_ii|) + g^2(|T_ii*|)|| / 2``, and norm-scalarization uses
    ``(||T_ij||)``.
    """
    lhs = numerical_radius(flatten(T), cfg)
    return [
        make_report("fg-scalarization", lhs, w_nonneg(scalarize_fg(T, s))),
        make_report("fg-diagonal-scalarization", lhs, w_nonneg(scalarize_fg(T, s, diagonal_mode=True))),
        make_report("norm-scalarization", lhs, w_nonneg(norm_matrix(T))),
    ]


E12 = np.array([[0, 1], [0, 0]], dtype=complex)
E21 = E12.T.copy()


def counterexample_blocks() -> BlockMatrix:
    """``[[I, E12], [E21, I]]`` with 2 x 2 blocks."""
    eye = np.eye(2, dtype=complex)
    return BlockMatrix.from_grid([[eye, E12], [E21, eye]])


def radius_scalarization(T: BlockMatrix, cfg: ThetaSweepConfig | None = None) -> np.ndarray:
    """``(w(T_ij))``, the scalarization that does not bound ``w(T)``."""
    n = T.n
    return np.array([[numerical_radius(T[i, j], cfg) for j in range(n)] for i in range(n)])


def check_alomari_counterexample(cfg: ThetaSweepConfig | None = None) -> BoundReport:
    """Show that ``w(T) <= w((w(T_ij)))`` fails.

    For ``T = [[I, E12], [E21, I]]`` the left side is 2 and the right side is
    ``w([[1, 1/2], [1/2, 1]]) = 3/2``.  The report has relation "gt" and holds
    when the refutation is reproduced.  The details record the vector pair
    behind it: ``x_j = (0, 1)/sqrt 2``, ``x_i = (1, 0)/sqrt 2`` give
    ``|<E12 x_j, x_i>| = 1/2`` while ``w(E12) ||x_i|| ||x_j|| = 1/4``.
    """
    T = counterexample_blocks()
    lhs = numerical_radius(flatten(T), cfg)
    rhs = w_nonneg(radius_scalarization(T, cfg))
    xj = np.array([0, 1], dtype=complex) / math.sqrt(2)
    xi = np.array([1, 0], dtype=complex) / math.sqrt(2)
    inner = abs(np.vdot(xi, E12 @ xj))
    radius_product = numerical_radius(E12, cfg) * np.linalg.norm(xi) * np.linalg.norm(xj)
    return make_report(
        "refuted-radius-scalarization", lhs, rhs, relation="gt",
        details={"inner_product": float(inner), "radius_product": float(radius_product)},
    )


# -- weighted 2 x 2 off-diagonal ---------------------------------------------


def _dilation(X) -> np.ndarray:
    """Hermitian dilation ``[[O, X], [X*, O]]``; its top eigenvalue is ``||X||``."""
    Z = np.zeros_like(X)
    return np.block([[Z, X], [adjoint(X), Z]])


def offdiag_angle_sup(T12, T21, W: Weight, cfg: ThetaSweepConfig | None = None) -> float:
    """``sup_theta ||e^{i theta} T12 + e^{-i theta} T21#||_A / 2``.

    With ``C``, ``D`` the congruences of ``T12`` and ``T21#`` the operator
    inside the norm is ``cos(theta) (C + D) + i sin(theta) (C - D)``; its norm
    is the top eigenvalue of the Hermitian dilation, a pencil in theta.
    """
    require_strict(W)
    C = congruence(W, T12)
    D = congruence(W, a_adjoint(W, T21))
    return pencil_max(_dilation(C + D), -_dilation(1j * (C - D)), cfg) / 2


def rotation_blocks(d: int) -> np.ndarray:
    """``[[I, -I], [I, I]] / sqrt 2`` of order ``2d``."""
    eye = np.eye(d)
    return np.block([[eye, -eye], [eye, eye]]).astype(complex) / math.sqrt(2)


def _fourth_root_bound(S, P, norm_s, w_p, W, cfg):
    # [||S||_A^2/16 + w_A^2(P)/4 + w_A(P S + S P)/8]^(1/4)
    val = norm_s**2 / 16 + w_p**2 / 4 + a_numerical_radius(W, P @ S + S @ P, cfg) / 8
    return val ** 0.25


def check_offdiag_s4(T12, T21, W: Weight, cfg: ThetaSweepConfig | None = None,
                     phase: float = 1.0) -> list[BoundReport]:
    """Bounds for ``w_B([[O, T12], [T21, O]])`` with ``B = diag(A, A)``, ``A > 0``.

    With ``S = T12# T12 + T21 T21#`` and ``P = T21# T21 + T12 T12#``:

    offdiag-angle-sup (eq)
        ``w_B(T)`` against ``sup_theta ||e^{i theta} T12 + e^{-i theta} T21#||_A / 2``
    offdiag-lower-sum-diff, offdiag-upper-sum-diff
        ``max(w_A(T12 + T21), w_A(T12 - T21)) / 2 <= w_B(T) <= (w_A(T12 + T21) + w_A(T12 - T21)) / 2``
    offdiag-fourth-root, offdiag-fourth-root-swapped
        ``w_B(T)^4 <= ||S||_A^2/16 + w_A^2(T21 T12)/4 + w_A(T21 T12 S + S T21 T12)/8``
        and the same with ``P`` and ``T12 T21``
    offdiag-sqrt, offdiag-sqrt-swapped
        ``w_B(T) <= (||S||_A + 2 w_A(T21 T12))^(1/2) / 2`` and its swap
    offdiag-crawford-lower, offdiag-crawford-lower-swapped
        ``(||S||_A + 2 m_A(T21 T12))^(1/2) / 2 <= w_B(T)`` and its swap
    offdiag-swap, offdiag-phase, offdiag-equal-blocks (eq)
        ``w_B`` is unchanged by exchanging the blocks or by a phase on
        ``T21``, and ``w_B([[O, T12], [T12, O]]) = w_A(T12)``
    rotation-unitary (eq)
        isometry defect of ``[[I, -I], [I, I]] / sqrt 2`` in the B-geometry
    """
    require_strict(W)
    T12 = as_cmatrix(T12, square=True)
    T21 = as_cmatrix(T21, square=True)
    s12, s21 = a_adjoint(W, T12), a_adjoint(W, T21)
    S = s12 @ T12 + T21 @ s21
    P = s21 @ T21 + T12 @ s12
    Q21, Q12 = T21 @ T12, T12 @ T21

    w_b = b_numerical_radius(offdiag2(T12, T21), W, cfg)
    w_sum = a_numerical_radius(W, T12 + T21, cfg)
    w_diff = a_numerical_radius(W, T12 - T21, cfg)
    lower = max(w_sum, w_diff) / 2
    upper = (w_sum + w_diff) / 2
    n_s, n_p = a_norm(W, S), a_norm(W, P)
    w21, w12 = a_numerical_radius(W, Q21, cfg), a_numerical_radius(W, Q12, cfg)

    reports = [
        make_report("offdiag-angle-sup", w_b, offdiag_angle_sup(T12, T21, W, cfg), relation="eq"),
        make_report("offdiag-lower-sum-diff", lower, w_b, details={"upper": upper}),
        make_report("offdiag-upper-sum-diff", w_b, upper, details={"lower": lower}),
        make_report("offdiag-fourth-root", w_b, _fourth_root_bound(S, Q21, n_s, w21, W, cfg)),
        make_report("offdiag-fourth-root-swapped", w_b, _fourth_root_bound(P, Q12, n_p, w12, W, cfg)),
        make_report("offdiag-sqrt", w_b, math.sqrt(n_s + 2 * w21) / 2),
        make_report("offdiag-sqrt-swapped", w_b, math.sqrt(n_p + 2 * w12) / 2),
        make_report("offdiag-crawford-lower", math.sqrt(n_s + 2 * a_crawford(W, Q21, cfg)) / 2, w_b),
        make_report("offdiag-crawford-lower-swapped",
                    math.sqrt(n_p + 2 * a_crawford(W, Q12, cfg)) / 2, w_b),
        make_report("offdiag-swap", w_b, b_numerical_radius(offdiag2(T21, T12), W, cfg), relation="eq"),
        make_report("offdiag-phase", w_b,
                    b_numerical_radius(offdiag2(T12, np.exp(1j * phase) * T21), W, cfg),
                    relation="eq", details={"phase": phase}),
        make_report("offdiag-equal-blocks", b_numerical_radius(offdiag2(T12, T12), W, cfg),
                    a_numerical_radius(W, T12, cfg), relation="eq"),
        make_report("rotation-unitary",
                    a_unitary_residual(block_weight(W, 2), rotation_blocks(W.dim)), 0.0, relation="eq"),
    ]
    return reports


# -- weighted n x n -----------------------------------------------------------


def _closed_form_2x2(a: float, b: float, c: float) -> float:
    """Largest eigenvalue of ``[[a, c/2], [c/2, b]]``: ``(a + b + sqrt((a - b)^2 + c^2)) / 2``."""
    return (a + b + math.sqrt((a - b) ** 2 + c**2)) / 2


def check_full_s4(T: BlockMatrix, W: Weight, cfg: ThetaSweepConfig | None = None) -> list[BoundReport]:
    """Scalarization bounds for ``w_B(T)``, ``B = diag(A, ..., A)``.

    weighted-norm-scalarization
        ``w_B(T) <= w(T')``, ``T'`` with ``w_A(T_ii)`` on the diagonal and
        ``||T_ij||_A`` off it.  Any positive semidefinite weight.
    weighted-radius-scalarization
        ``w_B(T) <= w(T'')`` with ``w_C([[O, T_ij], [T_ji, O]])`` off the
        diagonal, ``C = diag(A, A)``.  Strictly positive weights only; the
        report is omitted otherwise.
    weighted-norm-2x2, weighted-radius-2x2 (2 x 2 only)
        the closed forms of both, with ``*-closed-form`` equality checks
        against the scalar numerical radius
    block-norm
        ``||T||_B <= ||(||T_ij||_A)||``
    """
    w_b = b_numerical_radius(T, W, cfg)
    Tn = scalarize_weighted(T, W, cfg, mode="norm-offdiag")
    w_tn = w_nonneg(Tn)
    reports = [make_report("weighted-norm-scalarization", w_b, w_tn)]
    if T.n == 2:
        cf = _closed_form_2x2(Tn[0, 0], Tn[1, 1], Tn[0, 1] + Tn[1, 0])
        reports += [
            make_report("weighted-norm-2x2", w_b, cf),
            make_report("weighted-norm-closed-form", cf, w_tn, relation="eq"),
        ]
    if W.strict:
        Tr = scalarize_weighted(T, W, cfg, mode="wB-offdiag", diagonal=np.diag(Tn))
        w_tr = w_nonneg(Tr)
        reports.append(make_report("weighted-radius-scalarization", w_b, w_tr))
        if T.n == 2:
            cf = _closed_form_2x2(Tr[0, 0], Tr[1, 1], 2 * Tr[0, 1])
            reports += [
                make_report("weighted-radius-2x2", w_b, cf),
                make_report("weighted-radius-closed-form", cf, w_tr, relation="eq"),
            ]
    reports.append(make_report("block-norm", b_norm(T, W), op_norm(norm_matrix(T, W))))
    return reports


def check_wa_product(X, Y, W: Weight, cfg: ThetaSweepConfig | None = None) -> BoundReport:
    """``w_A(Y# X) <= ||X X# + Y Y#||_A / 4 + w_A(X Y#) / 2`` for ``A > 0``."""
    require_strict(W)
    X = as_cmatrix(X, square=True)
    Y = as_cmatrix(Y, square=True)
    sx, sy = a_adjoint(W, X), a_adjoint(W, Y)
    lhs = a_numerical_radius(W, sy @ X, cfg)
    rhs = a_norm(W, X @ sx + Y @ sy) / 4 + a_numerical_radius(W, X @ sy, cfg) / 2
    return make_report("adjoint-product", lhs, rhs)
