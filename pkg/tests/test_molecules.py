"""Bundled molecular geometries and minimal-basis qubit bounds."""

import pytest

from fermap.molecules import (
    AE6_NAMES,
    load_geometry,
    minimal_orbitals_per_atom,
    molecule_bounds,
    published_bounds,
)

EXPECTED_FORMULAS = {
    "silane": {"Si": 1, "H": 4},
    "sio": {"Si": 1, "O": 1},
    "s2": {"S": 2},
    "propyne": {"C": 3, "H": 4},
    "glyoxal": {"C": 2, "O": 2, "H": 2},
    "cyclobutane": {"C": 4, "H": 8},
}


@pytest.mark.parametrize("name", AE6_NAMES)
def test_geometry_composition(name):
    geom = load_geometry(name)
    counts = {}
    for s in geom.symbols:
        counts[s] = counts.get(s, 0) + 1
    assert counts == EXPECTED_FORMULAS[name]
    assert len(geom.coordinates) == len(geom.symbols)


def test_minimal_orbital_counts():
    geom = load_geometry("sio")
    assert sorted(minimal_orbitals_per_atom(geom)) == [5, 9]


@pytest.mark.parametrize(
    "name,q_u,q_jw",
    [
        ("silane", 156, 26),
        ("sio", 182, 28),
        ("s2", 306, 36),
        ("propyne", 342, 38),
        ("glyoxal", 462, 44),
        ("cyclobutane", 756, 56),
    ],
)
def test_upper_bound_and_direct_count(name, q_u, q_jw):
    _, got_u, got_jw = molecule_bounds(name)
    assert got_u == q_u
    assert got_jw == q_jw


def test_sio_lower_bound():
    q_l, _, _ = molecule_bounds("sio")
    assert q_l == 92


def test_published_bounds_table_loads():
    rows = {r.molecule: r for r in published_bounds()}
    assert set(rows) == set(AE6_NAMES)
    assert rows["sio"].q_l == 92
    assert rows["cyclobutane"].q_u == 756
