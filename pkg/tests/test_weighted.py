import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from numrad.errors import DimensionMismatch, NegativeWeight, NotHermitian, SingularWeight
from numrad.kernel import adjoint, op_norm
from numrad.numrange import crawford, numerical_radius
from numrad.weighted import (
    BlockWeight,
    a_adjoint,
    a_crawford,
    a_inner,
    a_min_norm,
    a_norm,
    a_numerical_radius,
    a_radius_by_real_parts,
    a_selfadjoint_residual,
    a_unitary_residual,
    a_vector_norm,
    block_weight,
    congruence,
    identity_weight,
    im_a,
    is_a_unitary,
    make_weight,
    polarization,
    re_a,
)

E12 = np.array([[0, 1], [0, 0]], dtype=complex)
E21 = E12.T.copy()
D14 = make_weight(np.diag([1.0, 4.0]))


def random_matrix(seed, n):
    rng = np.random.default_rng(seed)
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def random_pd(seed, n):
    G = random_matrix(seed, n)
    return adjoint(G) @ G + 0.1 * np.eye(n)


def random_psd(seed, n, rank):
    rng = np.random.default_rng(seed)
    G = rng.standard_normal((rank, n)) + 1j * rng.standard_normal((rank, n))
    return adjoint(G) @ G


instances = st.tuples(st.integers(0, 2**31), st.integers(1, 6))


# -- make_weight ----------------------------------------------------------------


def test_make_weight_examples():
    W = make_weight(np.eye(3))
    assert W.strict and W.rank == 3
    assert np.allclose(W.sqrtA, np.eye(3)) and np.allclose(W.inv_sqrtA, np.eye(3))
    assert np.allclose(D14.sqrtA, np.diag([1, 2]))
    assert np.allclose(D14.inv_sqrtA, np.diag([1, 0.5]))
    S = make_weight(np.diag([1.0, 0.0]))
    assert not S.strict and S.rank == 1
    assert np.allclose(np.abs(S.compressor), [[1], [0]])


def test_make_weight_errors():
    with pytest.raises(NotHermitian):
        make_weight(E12)
    with pytest.raises(NegativeWeight):
        make_weight(np.diag([1.0, -1.0]))
    with pytest.raises(NegativeWeight):
        make_weight(-np.eye(2))
    with pytest.raises(SingularWeight):
        make_weight(np.zeros((2, 2)))


def test_strict_only_operations_reject_singular_weights():
    S = make_weight(np.diag([1.0, 0.0]))
    for fn in (a_adjoint, re_a, im_a):
        with pytest.raises(SingularWeight):
            fn(S, E12)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        a_norm(identity_weight(3), E12)


# -- A-adjoint and parts ------------------------------------------------------------


def test_a_adjoint_examples():
    T = random_matrix(1, 3)
    assert np.allclose(a_adjoint(identity_weight(3), T), adjoint(T))
    assert np.allclose(a_adjoint(D14, E12), E21 / 4)
    assert np.allclose(a_adjoint(D14, np.eye(2)), np.eye(2))


@settings(max_examples=40)
@given(instances)
def test_a_adjoint_solves_defining_equation(inst):
    seed, n = inst
    W = make_weight(random_pd(seed, n))
    T = random_matrix(seed + 1, n)
    Ts = a_adjoint(W, T)
    scale = 1 + op_norm(W.A) * op_norm(T)
    assert np.linalg.norm(W.A @ Ts - adjoint(T) @ W.A) <= 1e-9 * scale
    # T## = T for strictly positive A
    assert np.linalg.norm(a_adjoint(W, Ts) - T) <= 1e-7 * (1 + op_norm(T))


@settings(max_examples=40)
@given(instances)
def test_a_adjoint_reverses_products(inst):
    seed, n = inst
    W = make_weight(random_pd(seed, n))
    T, S = random_matrix(seed + 1, n), random_matrix(seed + 2, n)
    lhs = a_adjoint(W, T @ S)
    rhs = a_adjoint(W, S) @ a_adjoint(W, T)
    assert np.linalg.norm(lhs - rhs) <= 1e-7 * (1 + np.linalg.norm(lhs))


def test_real_and_imaginary_parts():
    T = random_matrix(4, 3)
    I3 = identity_weight(3)
    assert np.allclose(re_a(I3, T), (T + adjoint(T)) / 2)
    assert np.allclose(im_a(I3, T), (T - adjoint(T)) / 2j)
    assert np.allclose(re_a(D14, E12), (E12 + E21 / 4) / 2)
    W = make_weight(random_pd(5, 3))
    # H = A^{-1} K with K Hermitian satisfies A H = H* A
    H = np.linalg.solve(W.A, random_pd(6, 3))
    assert a_selfadjoint_residual(W, H) <= 1e-10 * op_norm(W.A @ H)
    assert np.allclose(re_a(W, H), H, atol=1e-9)
    assert np.allclose(im_a(W, H), 0, atol=1e-9)
    assert np.allclose(re_a(W, T) + 1j * im_a(W, T), T)


# -- norms and radii ----------------------------------------------------------------


def test_a_norm_examples():
    assert a_norm(identity_weight(2), E12) == pytest.approx(1)
    assert a_norm(D14, E12) == pytest.approx(0.5)
    assert a_norm(make_weight(random_pd(2, 4)), np.eye(4)) == pytest.approx(1)


def test_a_min_norm_examples():
    assert a_min_norm(identity_weight(2), E12) == pytest.approx(0, abs=1e-15)
    assert a_min_norm(identity_weight(2), np.diag([2, 3])) == pytest.approx(2)
    assert a_min_norm(D14, np.eye(2)) == pytest.approx(1)


def test_a_numerical_radius_examples():
    assert a_numerical_radius(identity_weight(2), E12) == pytest.approx(0.5, abs=1e-12)
    assert a_numerical_radius(D14, E12) == pytest.approx(0.25, abs=1e-12)
    assert a_numerical_radius(make_weight(random_pd(3, 4)), np.eye(4)) == pytest.approx(1, abs=1e-12)


def test_a_crawford_examples():
    assert a_crawford(identity_weight(2), np.eye(2)) == pytest.approx(1, abs=1e-12)
    assert a_crawford(identity_weight(2), np.diag([1, -1])) == 0
    assert a_crawford(D14, np.diag([1, 2])) == pytest.approx(1, abs=1e-12)


@settings(max_examples=30)
@given(instances)
def test_weighted_sandwich(inst):
    seed, n = inst
    W = make_weight(random_pd(seed, n))
    T = random_matrix(seed + 1, n)
    w = a_numerical_radius(W, T)
    nrm = a_norm(W, T)
    tol = 1e-10 * (1 + nrm)
    assert nrm / 2 - tol <= w <= nrm + tol
    assert a_crawford(W, T) <= w + tol
    assert a_min_norm(W, T) <= nrm + tol


@settings(max_examples=25)
@given(instances)
def test_radius_from_real_parts_agrees(inst):
    seed, n = inst
    W = make_weight(random_pd(seed, n))
    T = random_matrix(seed + 1, n)
    assert a_radius_by_real_parts(W, T) == pytest.approx(a_numerical_radius(W, T), rel=1e-8)


@settings(max_examples=30)
@given(instances)
def test_scalar_weight_reduces_to_classical(inst):
    # w_A(T) = w(T) once A is a scalar multiple of I
    seed, n = inst
    T = random_matrix(seed, n)
    W = make_weight(3.5 * np.eye(n))
    assert a_numerical_radius(W, T) == pytest.approx(numerical_radius(T), rel=1e-12)
    assert a_crawford(W, T) == pytest.approx(crawford(T), rel=1e-9, abs=1e-12)


# -- semidefinite weights -------------------------------------------------------


def test_semidefinite_congruence_is_a_compression():
    A = random_psd(7, 4, 2)
    W = make_weight(A)
    assert not W.strict and W.rank == 2
    T = random_matrix(8, 4)
    C = congruence(W, T)
    assert C.shape == (2, 2)
    # on the range of A the compression reproduces the A-seminorm
    Q, r = W.compressor, np.sqrt(W.retained)
    x = Q @ random_matrix(9, 2)[:, 0]
    lhs = a_vector_norm(W, Q @ (adjoint(Q) @ (T @ x)))
    assert lhs == pytest.approx(np.linalg.norm(C @ (r * (adjoint(Q) @ x))), rel=1e-10)


def test_semidefinite_weight_sees_only_its_range():
    W = make_weight(np.diag([1.0, 0.0]))
    assert a_norm(W, np.diag([2.0, 100.0])) == pytest.approx(2)
    assert a_numerical_radius(W, np.diag([2.0, 100.0])) == pytest.approx(2)


# -- inner products ---------------------------------------------------------------


@settings(max_examples=60)
@given(st.integers(0, 2**31), st.integers(1, 6), st.integers(0, 6))
def test_polarization_identity(seed, n, r):
    A = random_psd(seed, n, max(1, min(r, n)))
    W = make_weight(A)
    rng = np.random.default_rng(seed + 1)
    x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    y = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    scale = max(1.0, (a_vector_norm(W, x) + a_vector_norm(W, y)) ** 2)
    assert abs(a_inner(W, x, y) - polarization(W, x, y)) <= 1e-12 * scale


def test_a_inner_is_linear_in_first_argument():
    W = make_weight(random_pd(1, 3))
    x, y = random_matrix(2, 3)[:, 0], random_matrix(3, 3)[:, 0]
    assert a_inner(W, 2j * x, y) == pytest.approx(2j * a_inner(W, x, y))
    assert a_inner(W, x, 2j * y) == pytest.approx(-2j * a_inner(W, x, y))


# -- A-unitaries and block weights -------------------------------------------------


def test_a_unitary_predicate():
    W = make_weight(random_pd(3, 3))
    # U = A^{-1/2} V A^{1/2} with V unitary is A-unitary
    V, _ = np.linalg.qr(random_matrix(4, 3))
    U = W.inv_sqrtA @ V @ W.sqrtA
    assert a_unitary_residual(W, U) <= 1e-9
    assert is_a_unitary(W, U)
    assert not is_a_unitary(W, 2 * U)


def test_block_weight_materializes_kron():
    W = make_weight(random_pd(5, 2))
    B = BlockWeight(W, 3).weight()
    assert np.allclose(B.A, np.kron(np.eye(3), W.A))
    assert np.allclose(B.sqrtA @ B.sqrtA, B.A)
    assert np.allclose(block_weight(W, 3).inv_sqrtA, np.kron(np.eye(3), W.inv_sqrtA))
    with pytest.raises(ValueError):
        BlockWeight(W, 0).weight()
