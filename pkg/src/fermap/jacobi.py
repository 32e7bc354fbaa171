"""Self-contained symmetric/Hermitian eigensolver (cyclic Jacobi).

Matrices in this project are small (a few hundred rows at most), so a plain
cyclic Jacobi sweep with numpy row/column updates is plenty.  Hermitian input
is handled through the standard real embedding
``[[Re A, -Im A], [Im A, Re A]]``, which doubles every eigenvalue's
multiplicity.
"""

from __future__ import annotations

import numpy as np


def jacobi_eigh(a: np.ndarray, tol: float = 1e-12, max_sweeps: int = 60):
    """Eigen-decomposition of a real symmetric matrix.

    Returns (eigenvalues ascending, eigenvectors as columns).  ``tol`` bounds
    the off-diagonal Frobenius norm relative to the matrix norm at convergence.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    if n and not np.allclose(a, a.T, atol=1e-10 * max(1.0, np.abs(a).max())):
        raise ValueError("matrix must be symmetric")
    v = np.eye(n)
    if n < 2:
        return np.diag(a).copy(), v
    scale = max(np.abs(a).max(), 1e-300)
    for _ in range(max_sweeps):
        off = np.sqrt(np.sum(np.tril(a, -1) ** 2) * 2)
        if off <= tol * scale * n:
            break
        thresh = off / n
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 0.1 * thresh * tol:
                    continue
                theta = 0.5 * (a[q, q] - a[p, p]) / apq
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    vals = np.diag(a).copy()
    order = np.argsort(vals)
    return vals[order], v[:, order]


def eigvalsh(h: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Eigenvalues (ascending) of a Hermitian matrix via the real embedding."""
    h = np.asarray(h)
    n = h.shape[0]
    if h.shape != (n, n):
        raise ValueError("matrix must be square")
    if n == 0:
        return np.zeros(0)
    if np.abs(h - h.conj().T).max() > 1e-9 * max(1.0, np.abs(h).max()):
        raise ValueError("matrix must be Hermitian")
    if np.isrealobj(h) or np.abs(h.imag).max() < 1e-300:
        vals, _ = jacobi_eigh(np.real(h), tol=tol)
        return vals
    re, im = np.real(h), np.imag(h)
    embedded = np.block([[re, -im], [im, re]])
    vals, _ = jacobi_eigh(embedded, tol=tol)
    # every eigenvalue appears twice in the embedding
    return vals[::2]
