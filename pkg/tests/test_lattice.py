"""Analytic s-Gaussian integrals against quadrature and an independent
general-exponent implementation."""

import numpy as np
import pytest
from scipy import integrate
from scipy.special import erf

from fermap.lattice import (
    ANGSTROM_TO_BOHR,
    GeometryError,
    LatticeSpec,
    boys_f0,
    build_lattice,
    compute_integrals,
    lattice_integrals,
)

# --- independent reference: general-exponent s-Gaussian integrals -----------
# Textbook closed forms parameterized by distinct exponents; exercised at
# equal exponents to cross-check the equal-exponent specialization.


def ref_norm(a):
    return (2.0 * a / np.pi) ** 0.75


def ref_overlap(a, b, ra, rb):
    ra, rb = np.asarray(ra, float), np.asarray(rb, float)
    p = a + b
    mu = a * b / p
    r2 = float(np.sum((ra - rb) ** 2))
    return ref_norm(a) * ref_norm(b) * (np.pi / p) ** 1.5 * np.exp(-mu * r2)


def ref_kinetic(a, b, ra, rb):
    p = a + b
    mu = a * b / p
    r2 = float(np.sum((np.asarray(ra) - np.asarray(rb)) ** 2))
    s = ref_overlap(a, b, ra, rb)
    return mu * (3.0 - 2.0 * mu * r2) * s


def ref_f0(t):
    if t < 1e-12:
        return 1.0 - t / 3.0
    return 0.5 * np.sqrt(np.pi / t) * erf(np.sqrt(t))


def ref_attraction(a, b, ra, rb, rc):
    # attraction integral for nuclear charge 1 at rc
    ra, rb, rc = (np.asarray(r, float) for r in (ra, rb, rc))
    p = a + b
    mu = a * b / p
    r2 = float(np.sum((ra - rb) ** 2))
    rp = (a * ra + b * rb) / p
    pc2 = float(np.sum((rp - rc) ** 2))
    return (
        -ref_norm(a)
        * ref_norm(b)
        * (2.0 * np.pi / p)
        * np.exp(-mu * r2)
        * ref_f0(p * pc2)
    )


def ref_eri(a, b, c, d, ra, rb, rc, rd):
    ra, rb, rc, rd = (np.asarray(r, float) for r in (ra, rb, rc, rd))
    p = a + b
    q = c + d
    rp = (a * ra + b * rb) / p
    rq = (c * rc + d * rd) / q
    ab2 = float(np.sum((ra - rb) ** 2))
    cd2 = float(np.sum((rc - rd) ** 2))
    pq2 = float(np.sum((rp - rq) ** 2))
    norm = ref_norm(a) * ref_norm(b) * ref_norm(c) * ref_norm(d)
    pref = 2.0 * np.pi**2.5 / (p * q * np.sqrt(p + q))
    return (
        norm
        * pref
        * np.exp(-a * b / p * ab2 - c * d / q * cd2)
        * ref_f0(p * q / (p + q) * pq2)
    )


# --- Boys function ----------------------------------------------------------


@pytest.mark.parametrize("t", [0.0, 1e-15, 1e-8, 0.3, 1.0, 7.5, 40.0, 1e4])
def test_boys_f0_against_quadrature(t):
    val, err = integrate.quad(lambda u: np.exp(-t * u * u), 0.0, 1.0, epsabs=1e-14)
    assert boys_f0(t) == pytest.approx(val, abs=max(1e-13, 10 * err))


def test_boys_f0_vectorized_and_monotone():
    ts = np.linspace(0, 30, 301)
    vals = boys_f0(ts)
    assert vals.shape == ts.shape
    assert np.all(np.diff(vals) <= 0)
    assert vals[0] == pytest.approx(1.0)


def test_boys_f0_rejects_negative():
    with pytest.raises(ValueError):
        boys_f0(-0.5)


# --- lattice geometry -------------------------------------------------------


def test_build_lattice_counts_and_spacing():
    for dim in (1, 2, 3):
        spec = LatticeSpec(dim, 3, 1.0, spacing=1.0)
        pts = build_lattice(spec)
        assert pts.shape == (3**dim, 3)
        dists = np.linalg.norm(pts[None] - pts[:, None], axis=2)
        nn = np.min(dists[dists > 0])
        assert nn == pytest.approx(ANGSTROM_TO_BOHR)


def test_lattice_spec_validation():
    with pytest.raises(ValueError):
        LatticeSpec(4, 2, 1.0)
    with pytest.raises(ValueError):
        LatticeSpec(1, 0, 1.0)
    with pytest.raises(ValueError):
        LatticeSpec(1, 2, -1.0)


def test_coincident_centers_rejected():
    with pytest.raises(GeometryError):
        compute_integrals(np.zeros((2, 3)), 1.0)


# --- integral values --------------------------------------------------------


def test_overlap_against_quadrature():
    alpha, r = 0.8, 1.3
    norm = ref_norm(alpha)

    def axis_integral(shift):
        val, _ = integrate.quad(
            lambda x: np.exp(-alpha * x * x - alpha * (x - shift) ** 2),
            -12,
            12,
            epsabs=1e-13,
        )
        return val

    expected = norm**2 * axis_integral(r) * axis_integral(0.0) ** 2
    raw = compute_integrals(np.array([[0.0, 0, 0], [r, 0, 0]]), alpha)
    assert raw.overlap[0, 1] == pytest.approx(expected, rel=1e-10)
    assert raw.overlap[0, 0] == pytest.approx(1.0)


@pytest.mark.parametrize("alpha", [0.5, 1.0, 3.7])
def test_integrals_match_general_exponent_reference(alpha):
    rng = np.random.default_rng(42)
    centers = rng.uniform(-1.0, 1.0, size=(3, 3))
    centers[1] += 2.0  # keep centers distinct
    centers[2] -= 2.0
    raw = compute_integrals(centers, alpha)
    m = len(centers)
    for i in range(m):
        for j in range(m):
            assert raw.overlap[i, j] == pytest.approx(
                ref_overlap(alpha, alpha, centers[i], centers[j]), abs=1e-12
            )
            kin = ref_kinetic(alpha, alpha, centers[i], centers[j])
            att = sum(
                ref_attraction(alpha, alpha, centers[i], centers[j], centers[c])
                for c in range(m)
            )
            assert raw.core[i, j] == pytest.approx(kin + att, abs=1e-12)
    for i, j, k, l in [(0, 0, 0, 0), (0, 1, 2, 0), (0, 1, 1, 2), (2, 2, 0, 1)]:
        assert raw.eri[i, j, k, l] == pytest.approx(
            ref_eri(alpha, alpha, alpha, alpha, *(centers[x] for x in (i, j, k, l))),
            abs=1e-12,
        )


def test_single_center_known_values():
    alpha = 1.5
    raw = compute_integrals(np.zeros((1, 3)), alpha)
    # <T> = 3*alpha/2, <1/r> = 2*sqrt(2*alpha/pi) for a normalized s Gaussian
    assert raw.core[0, 0] == pytest.approx(1.5 * alpha - 2.0 * np.sqrt(2 * alpha / np.pi))
    # on-site repulsion (ss|ss) = sqrt(2/pi) * 2 * sqrt(alpha) / sqrt(2) * ... check
    # against the general-exponent reference instead of a hand-derived constant
    assert raw.eri[0, 0, 0, 0] == pytest.approx(
        ref_eri(alpha, alpha, alpha, alpha, *([np.zeros(3)] * 4))
    )
    assert raw.nuclear_repulsion == 0.0


def test_eri_eightfold_symmetry():
    raw = lattice_integrals(LatticeSpec(1, 3, 2.0))
    eri = raw.eri
    for perm in [(1, 0, 2, 3), (0, 1, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)]:
        assert np.allclose(eri, eri.transpose(perm), atol=1e-13)


def test_translation_invariance():
    alpha = 1.1
    centers = np.array([[0.0, 0, 0], [1.7, 0, 0], [0.3, 1.1, 0]])
    a = compute_integrals(centers, alpha)
    b = compute_integrals(centers + np.array([2.5, -1.0, 0.7]), alpha)
    assert np.allclose(a.overlap, b.overlap, atol=1e-12)
    assert np.allclose(a.core, b.core, atol=1e-12)
    assert np.allclose(a.eri, b.eri, atol=1e-12)
    assert a.nuclear_repulsion == pytest.approx(b.nuclear_repulsion)


def test_offsite_overlap_decreases_with_exponent():
    centers = np.array([[0.0, 0, 0], [ANGSTROM_TO_BOHR, 0, 0]])
    values = [compute_integrals(centers, a).overlap[0, 1] for a in (1.0, 3.0, 5.0, 8.75)]
    assert all(x > y > 0 for x, y in zip(values, values[1:]))


def test_nuclear_repulsion_pair_sum():
    spec = LatticeSpec(1, 3, 1.0, spacing=1.0)
    raw = lattice_integrals(spec)
    d = ANGSTROM_TO_BOHR
    assert raw.nuclear_repulsion == pytest.approx(1 / d + 1 / d + 1 / (2 * d))
