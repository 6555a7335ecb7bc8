import numpy as np
import pytest

from ptbound import linalg
from ptbound.errors import NonSymmetricError, SingularMatrixError


def test_eig_symmetric_identity():
    w, v = linalg.eig_symmetric(np.eye(5))
    assert np.allclose(w, 1.0)


def test_eig_symmetric_diagonal_sorted():
    w, _ = linalg.eig_symmetric(np.diag([3.0, 1.0, 2.0]))
    assert np.allclose(w, [1.0, 2.0, 3.0])


def test_eig_symmetric_trace_and_det():
    rng = np.random.default_rng(0)
    a = rng.normal(size=(50, 50))
    a = (a + a.T) / 2.0
    w, v = linalg.eig_symmetric(a)
    assert abs(w.sum() - np.trace(a)) <= 1e-10 * max(abs(np.trace(a)), 1.0)
    det = np.linalg.det(a)
    assert abs(np.prod(w) - det) <= 1e-8 * max(abs(det), 1.0)
    # orthonormality contract
    assert np.abs(v.T @ v - np.eye(50)).max() <= 1e-10


def test_eig_symmetric_rejects_nonsymmetric():
    a = np.array([[1.0, 2.0], [0.0, 1.0]])
    with pytest.raises(NonSymmetricError):
        linalg.eig_symmetric(a)


def test_eig_general_companion():
    # companion of s^3 - 6 s^2 + 11 s - 6 = (s-1)(s-2)(s-3)
    a = np.array([[6.0, -11.0, 6.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])
    w, _ = linalg.eig_general(a)
    assert np.allclose(sorted(w.real), [1.0, 2.0, 3.0])
    assert np.abs(w.imag).max() <= 1e-12


def test_eig_general_rotation():
    w, _ = linalg.eig_general(np.array([[0.0, -1.0], [1.0, 0.0]]))
    assert np.allclose(sorted(w, key=lambda z: z.imag), [-1j, 1j])


def test_eig_general_triangular():
    rng = np.random.default_rng(1)
    a = np.triu(rng.normal(size=(20, 20)))
    w, _ = linalg.eig_general(a)
    assert np.allclose(sorted(w.real), sorted(np.diag(a)))


def test_eig_general_matches_symmetric():
    rng = np.random.default_rng(2)
    a = rng.normal(size=(15, 15))
    a = (a + a.T) / 2.0
    ws, _ = linalg.eig_symmetric(a)
    wg, _ = linalg.eig_general(a)
    assert np.abs(np.sort(wg.real) - ws).max() <= 1e-8


def test_solve_linear_basic():
    assert np.allclose(linalg.solve_linear(np.eye(3), np.arange(3.0)),
                       np.arange(3.0))
    assert np.allclose(
        linalg.solve_linear(np.diag([2.0, 4.0]), np.array([2.0, 4.0])),
        [1.0, 1.0])


def test_solve_linear_vandermonde_stencil():
    d = np.arange(-2.0, 3.0)
    vand = np.vander(d, 5, increasing=True).T
    rhs = np.zeros(5)
    rhs[2] = 2.0  # 2! for the second derivative
    w = linalg.solve_linear(vand, rhs)
    assert np.allclose(w, [-1 / 12, 4 / 3, -5 / 2, 4 / 3, -1 / 12])


def test_solve_linear_singular():
    with pytest.raises(SingularMatrixError):
        linalg.solve_linear(np.zeros((2, 2)), np.ones(2))


def test_matrix_norm():
    a = np.array([[1.0, -2.0], [3.0, 4.0]])
    assert linalg.matrix_norm(a) == 7.0
