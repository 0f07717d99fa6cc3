import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from numrad.blocks import (
    BlockMatrix,
    assemble,
    b_congruence,
    b_norm,
    b_numerical_radius,
    block_from_dict,
    block_to_dict,
    flatten,
    load_blocks,
    norm_matrix,
    offdiag2,
    offdiag2_matrix,
    save_blocks,
    scalarize_fg,
    scalarize_weighted,
    w_nonneg,
)
from numrad.errors import DimensionMismatch, NegativeEntry, SingularWeight
from numrad.kernel import adjoint, op_norm
from numrad.numrange import numerical_radius
from numrad.weighted import a_numerical_radius, block_weight, congruence, identity_weight, make_weight

E12 = np.array([[0, 1], [0, 0]], dtype=complex)
E21 = E12.T.copy()
I2 = np.eye(2, dtype=complex)


def random_matrix(seed, n):
    rng = np.random.default_rng(seed)
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def random_blocks(seed, n, d):
    rng = np.random.default_rng(seed)
    return BlockMatrix(rng.standard_normal((n, n, d, d)) + 1j * rng.standard_normal((n, n, d, d)))


def random_pd(seed, n):
    G = random_matrix(seed, n)
    return adjoint(G) @ G + 0.1 * np.eye(n)


def counterexample():
    return BlockMatrix.from_grid([[I2, E12], [E21, I2]])


# -- flatten / assemble -----------------------------------------------------------


def test_flatten_examples():
    M = np.eye(4)
    M[0, 3] = M[3, 0] = 1
    assert np.array_equal(flatten(counterexample()), M)
    T = random_matrix(1, 3)
    assert np.array_equal(flatten(BlockMatrix.from_grid([[T]])), T)
    assert np.array_equal(flatten(BlockMatrix(np.zeros((2, 2, 3, 3)))), np.zeros((6, 6)))


@settings(max_examples=30)
@given(st.integers(0, 2**31), st.integers(1, 4), st.integers(1, 4))
def test_assemble_inverts_flatten(seed, n, d):
    T = random_blocks(seed, n, d)
    assert np.array_equal(assemble(flatten(T), n).blocks, T.blocks)
    M = random_matrix(seed, n * d)
    assert np.array_equal(flatten(assemble(M, n)), M)


def test_block_shape_errors():
    with pytest.raises(DimensionMismatch):
        BlockMatrix(np.zeros((2, 3, 2, 2)))
    with pytest.raises(DimensionMismatch):
        BlockMatrix.from_grid([[I2, np.eye(3)], [I2, I2]])
    with pytest.raises(DimensionMismatch):
        BlockMatrix.from_grid([[I2, I2], [I2]])
    with pytest.raises(DimensionMismatch):
        assemble(np.eye(5), 2)
    with pytest.raises(ValueError):
        BlockMatrix(np.full((1, 1, 1, 1), np.inf))


def test_offdiag2_examples():
    T = random_matrix(2, 2)
    B = offdiag2(T, T)
    assert np.array_equal(B[0, 1], T) and np.array_equal(B[1, 0], T)
    assert np.array_equal(B[0, 0], np.zeros((2, 2)))
    assert op_norm(offdiag2_matrix(I2, np.zeros((2, 2)))) == pytest.approx(1)
    M = offdiag2_matrix(E12, E21)
    expected = np.zeros((4, 4))
    expected[0, 3] = expected[3, 0] = 1
    assert np.array_equal(M, expected)
    with pytest.raises(DimensionMismatch):
        offdiag2(I2, np.eye(3))


# -- scalarizations ---------------------------------------------------------------


def test_scalarize_fg_examples():
    T = counterexample()
    assert np.allclose(scalarize_fg(T, 0.5), np.ones((2, 2)))
    assert np.allclose(scalarize_fg(T, 0.5, diagonal_mode=True), np.ones((2, 2)))
    G = random_matrix(3, 3)
    H = G @ adjoint(G)
    assert np.allclose(scalarize_fg(BlockMatrix.from_grid([[H]]), 0.5), [[op_norm(H)]])
    with pytest.raises(ValueError):
        scalarize_fg(T, 1.0)


@settings(max_examples=20)
@given(st.integers(0, 2**31), st.floats(0.1, 0.9))
def test_fg_diagonal_entries_are_bracketed(seed, s):
    # max(||F||, ||G||) <= ||F + G|| <= ||F|| + ||G|| with ||F|| = ||B||^(2s),
    # ||G|| = ||B||^(2-2s)
    T = random_blocks(seed, 2, 3)
    plain = scalarize_fg(T, s)
    diag = np.diag(scalarize_fg(T, s, diagonal_mode=True))
    nb = np.diag(norm_matrix(T))
    f, g = nb ** (2 * s), nb ** (2 - 2 * s)
    assert np.all(np.maximum(f, g) / 2 <= diag * (1 + 1e-12))
    assert np.all(diag <= (f + g) / 2 * (1 + 1e-12))
    assert np.allclose(plain, norm_matrix(T))


def test_scalarize_weighted_examples():
    T = counterexample()
    W = identity_weight(2)
    assert np.allclose(scalarize_weighted(T, W, mode="norm-offdiag"), np.ones((2, 2)))
    assert np.allclose(scalarize_weighted(T, W, mode="wB-offdiag"), np.ones((2, 2)))
    X = random_matrix(4, 3)
    V = make_weight(random_pd(5, 3))
    single = scalarize_weighted(BlockMatrix.from_grid([[X]]), V)
    assert single[0, 0] == pytest.approx(a_numerical_radius(V, X), rel=1e-12)
    with pytest.raises(ValueError):
        scalarize_weighted(T, W, mode="bogus")
    with pytest.raises(SingularWeight):
        scalarize_weighted(T, make_weight(np.diag([1.0, 0.0])), mode="wB-offdiag")


def test_precomputed_diagonal_is_used():
    T = random_blocks(6, 2, 2)
    W = make_weight(random_pd(7, 2))
    M = scalarize_weighted(T, W, diagonal=[5.0, 6.0])
    assert M[0, 0] == 5.0 and M[1, 1] == 6.0


def test_w_nonneg_examples():
    assert w_nonneg([[0, 1], [0, 0]]) == pytest.approx(0.5)
    assert w_nonneg([[1, 1], [1, 1]]) == pytest.approx(2)
    assert w_nonneg(np.diag([0.3, 2.5])) == pytest.approx(2.5)
    with pytest.raises(NegativeEntry):
        w_nonneg([[1, -1], [0, 1]])
    with pytest.raises(NegativeEntry):
        w_nonneg([[1, 1j], [0, 1]])


@settings(max_examples=50)
@given(st.integers(0, 2**31), st.integers(1, 8))
def test_w_nonneg_matches_angle_sweep(seed, n):
    M = np.random.default_rng(seed).uniform(0, 1, (n, n))
    assert w_nonneg(M) == pytest.approx(numerical_radius(M), rel=1e-9)


# -- block weights ----------------------------------------------------------------


@settings(max_examples=20)
@given(st.integers(0, 2**31), st.integers(1, 3), st.integers(1, 3), st.booleans())
def test_blockwise_congruence_matches_kron_weight(seed, n, d, strict):
    T = random_blocks(seed, n, d)
    if strict:
        A = random_pd(seed + 1, d)
    else:
        G = random_matrix(seed + 1, d)[: max(1, d - 1)]
        A = adjoint(G) @ G
    W = make_weight(A)
    direct = congruence(block_weight(W, n), flatten(T))
    assert np.allclose(b_congruence(T, W), direct, atol=1e-10 * (1 + np.abs(direct).max()))


def test_b_quantities_reduce_for_identity_weight():
    T = random_blocks(8, 2, 3)
    W = identity_weight(3)
    assert b_numerical_radius(T, W) == pytest.approx(numerical_radius(flatten(T)), rel=1e-12)
    assert b_norm(T, W) == pytest.approx(op_norm(flatten(T)), rel=1e-12)
    with pytest.raises(DimensionMismatch):
        b_norm(T, identity_weight(2))


# -- JSON -------------------------------------------------------------------------


def test_block_json_roundtrip(tmp_path):
    T = random_blocks(9, 3, 2)
    path = tmp_path / "b.json"
    save_blocks(path, T)
    assert np.array_equal(load_blocks(path).blocks, T.blocks)
    assert np.array_equal(block_from_dict(json.loads(json.dumps(block_to_dict(T)))).blocks, T.blocks)


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("blocks"),
    lambda d: d.update(blockRows=3),
    lambda d: d.update(blockDim=5),
])
def test_block_json_rejects_malformed(mutate):
    d = block_to_dict(counterexample())
    mutate(d)
    with pytest.raises(ValueError):
        block_from_dict(d)
