"""In-repo eigensolver against independent characteristic-polynomial roots."""

import numpy as np
import pytest

from fermap.jacobi import eigvalsh, jacobi_eigh


def random_symmetric(n, rng):
    a = rng.normal(size=(n, n))
    return a + a.T


def random_hermitian(n, rng):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return a + a.conj().T


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_jacobi_reconstructs_matrix(n):
    rng = np.random.default_rng(n)
    a = random_symmetric(n, rng)
    vals, vecs = jacobi_eigh(a)
    assert np.allclose(vecs @ np.diag(vals) @ vecs.T, a, atol=1e-9)
    assert np.allclose(vecs.T @ vecs, np.eye(n), atol=1e-9)
    assert np.all(np.diff(vals) >= -1e-12)


@pytest.mark.parametrize("n", [2, 4, 8])
def test_eigvalsh_matches_characteristic_polynomial_roots(n):
    # independent oracle: roots of det(A - x I) computed from the
    # characteristic polynomial, no eigen-decomposition involved
    rng = np.random.default_rng(100 + n)
    h = random_hermitian(n, rng)
    vals = eigvalsh(h)
    coeffs = np.poly(h)
    roots = np.sort(np.real(np.roots(coeffs)))
    assert np.allclose(vals, roots, atol=1e-8)


def test_eigvalsh_real_input():
    rng = np.random.default_rng(7)
    a = random_symmetric(6, rng)
    vals = eigvalsh(a)
    roots = np.sort(np.real(np.roots(np.poly(a))))
    assert np.allclose(vals, roots, atol=1e-8)


def test_eigvalsh_rejects_non_hermitian():
    with pytest.raises(ValueError):
        eigvalsh(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_jacobi_diagonal_fast_path():
    vals, vecs = jacobi_eigh(np.diag([3.0, -1.0, 2.0]))
    assert np.allclose(vals, [-1.0, 2.0, 3.0])
    assert np.allclose(np.abs(vecs.sum(axis=0)), [1, 1, 1])
