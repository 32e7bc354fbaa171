"""Analytic integrals for Hydrogen chains/lattices with one normalized s-type
Gaussian orbital per atom.

All closed forms are the standard s-Gaussian results (Gaussian product
theorem plus the Boys function F0); energies in Hartree, lengths in Bohr
internally, lattice spacing specified in Angstrom.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import erf

ANGSTROM_TO_BOHR = 1.8897259886


class GeometryError(ValueError):
    """Raised for invalid atomic geometries (e.g. coincident centers)."""


@dataclass(frozen=True)
class LatticeSpec:
    """Rectilinear Hydrogen grid: N^dimension atoms, one s Gaussian each.

    ``exponent`` is the Gaussian width parameter in inverse Bohr^2;
    ``spacing`` is the nearest-neighbor distance in Angstrom.
    """

    dimension: int
    side_length: int
    exponent: float
    spacing: float = 1.0

    def __post_init__(self):
        if self.dimension not in (1, 2, 3):
            raise ValueError("dimension must be 1, 2 or 3")
        if self.side_length < 1:
            raise ValueError("side_length must be at least 1")
        if self.exponent <= 0:
            raise ValueError("exponent must be positive")
        if self.spacing <= 0:
            raise ValueError("spacing must be positive")

    @property
    def num_atoms(self) -> int:
        return self.side_length**self.dimension


@dataclass
class RawIntegrals:
    """Spatial-orbital integrals: overlap, core (T+V), chemist-ordered ERIs
    (ij|kl), and the nuclear repulsion constant."""

    overlap: np.ndarray
    core: np.ndarray
    eri: np.ndarray
    nuclear_repulsion: float

    @property
    def num_orbitals(self) -> int:
        return self.overlap.shape[0]


def build_lattice(spec: LatticeSpec) -> np.ndarray:
    """Atom centers in Bohr, row-major over the grid."""
    n = spec.side_length
    axes = [np.arange(n, dtype=float)] * spec.dimension
    grids = np.meshgrid(*axes, indexing="ij")
    pts = np.stack([g.reshape(-1) for g in grids], axis=1)
    if spec.dimension < 3:
        pts = np.hstack([pts, np.zeros((pts.shape[0], 3 - spec.dimension))])
    return pts * spec.spacing * ANGSTROM_TO_BOHR


def boys_f0(t) -> np.ndarray:
    """F0(t) = integral of exp(-t u^2) over u in [0, 1].

    Closed form sqrt(pi/(4t)) * erf(sqrt(t)) with a series for tiny t;
    accurate to ~1e-14 across [0, 1e4].
    """
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise ValueError("boys_f0 requires t >= 0")
    out = np.empty_like(t)
    small = t < 1e-13
    ts = t[small]
    out[small] = 1.0 - ts / 3.0 + ts * ts / 10.0
    tb = t[~small]
    out[~small] = 0.5 * np.sqrt(np.pi / tb) * erf(np.sqrt(tb))
    return out if out.ndim else float(out)


def compute_integrals(centers: np.ndarray, alpha: float) -> RawIntegrals:
    """Overlap, core Hamiltonian, ERIs and nuclear repulsion for one
    normalized s Gaussian of exponent alpha (Bohr^-2) on each center (Bohr).
    Nuclear charges are all 1 (Hydrogen)."""
    centers = np.asarray(centers, dtype=float)
    m = centers.shape[0]
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    diff = centers[:, None, :] - centers[None, :, :]
    r2 = np.sum(diff * diff, axis=2)
    if m > 1 and np.min(r2[~np.eye(m, dtype=bool)]) < 1e-20:
        raise GeometryError("coincident centers")

    # pairwise Gaussian-product quantities (equal exponents): p = 2*alpha,
    # reduced exponent mu = alpha/2, product center at the midpoint
    p = 2.0 * alpha
    overlap = np.exp(-0.5 * alpha * r2)
    kinetic = 0.5 * alpha * (3.0 - alpha * r2) * overlap
    midpoints = 0.5 * (centers[:, None, :] + centers[None, :, :])

    norm2 = (2.0 * alpha / np.pi) ** 1.5  # squared normalization of the pair
    v_pref = norm2 * (2.0 * np.pi / p) * np.exp(-0.5 * alpha * r2)
    attraction = np.zeros((m, m))
    for c in range(m):
        pc2 = np.sum((midpoints - centers[c]) ** 2, axis=2)
        attraction -= v_pref * boys_f0(p * pc2)
    core = kinetic + attraction

    # (ij|kl) over normalized orbitals; combined exponent pq/(p+q) = alpha
    kab = np.exp(-0.5 * alpha * r2).reshape(-1)
    pairs = midpoints.reshape(-1, 3)
    sq = np.sum(pairs * pairs, axis=1)
    pq2 = np.maximum(sq[:, None] + sq[None, :] - 2.0 * (pairs @ pairs.T), 0.0)
    eri_pref = norm2**2 * 2.0 * np.pi**2.5 / (p * p * np.sqrt(2.0 * p))
    eri = eri_pref * kab[:, None] * kab[None, :] * boys_f0(alpha * pq2)
    eri = eri.reshape(m, m, m, m)

    if m > 1:
        inv_r = np.zeros((m, m))
        off = ~np.eye(m, dtype=bool)
        inv_r[off] = 1.0 / np.sqrt(r2[off])
        nuc = 0.5 * float(np.sum(inv_r))
    else:
        nuc = 0.0
    return RawIntegrals(overlap, core, eri, nuc)


def lattice_integrals(spec: LatticeSpec) -> RawIntegrals:
    return compute_integrals(build_lattice(spec), spec.exponent)
