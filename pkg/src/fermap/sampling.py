"""Random problem generators shared by the verification CLI and the tests."""

from __future__ import annotations

from typing import Tuple

import numpy as np

from .fermion import FermionHamiltonian, from_spatial_integrals


def random_spatial_integrals(
    num_orbitals: int, rng: np.random.Generator, scale: float = 1.0
) -> Tuple[np.ndarray, np.ndarray]:
    """Symmetric one-body matrix and 8-fold-symmetric chemist-ordered ERI
    tensor with entries of order ``scale``."""
    m = num_orbitals
    h1 = rng.uniform(-scale, scale, size=(m, m))
    h1 = 0.5 * (h1 + h1.T)
    eri = rng.uniform(-scale, scale, size=(m, m, m, m))
    acc = np.zeros_like(eri)
    for perm in [
        (0, 1, 2, 3),
        (1, 0, 2, 3),
        (0, 1, 3, 2),
        (1, 0, 3, 2),
        (2, 3, 0, 1),
        (3, 2, 0, 1),
        (2, 3, 1, 0),
        (3, 2, 1, 0),
    ]:
        acc += eri.transpose(perm)
    return h1, acc / 8.0


def random_spatial_hamiltonian(
    num_orbitals: int, seed: int, scale: float = 1.0
) -> FermionHamiltonian:
    rng = np.random.default_rng(seed)
    h1, eri = random_spatial_integrals(num_orbitals, rng, scale)
    constant = float(rng.uniform(-scale, scale))
    return from_spatial_integrals(h1, eri, constant)


def random_connected_graph_edges(
    num_vertices: int, max_extra_edges: int, rng: np.random.Generator
):
    """Edge set of a random connected graph: a random spanning tree plus up
    to ``max_extra_edges`` additional distinct edges."""
    edges = set()
    for v in range(1, num_vertices):
        edges.add((int(rng.integers(0, v)), v))
    extra = int(rng.integers(0, max_extra_edges + 1))
    for _ in range(extra):
        p, q = rng.choice(num_vertices, size=2, replace=False)
        edges.add((int(min(p, q)), int(max(p, q))))
    return edges
