import math

import numpy as np
import pytest

from conftest import SQRT3_2
from ocl.bondgraph import build_edges, euler_characteristics, graph_perimeter
from ocl.canonical import (
    CanonicalSpec,
    ShellDecomposition,
    canonical,
    canonical_coords,
    canonical_energy,
    canonical_perimeter,
    shell_decompose,
)
from ocl.energy import energy
from oracles.brute import component_count

# exact minima for N = 1..7 at the diamond threshold
SMALL_N_ENERGIES = {1: 0, 2: -1, 3: -2, 4: -4, 5: -5, 6: -7, 7: -8}


def test_trivial_families():
    assert canonical(0).n == 0
    assert canonical_energy(0) == 0
    one = canonical(1)
    assert one.n == 1 and build_edges(one, SQRT3_2).m == 0


def test_coords_are_distinct_and_count_n():
    for n in (1, 2, 5, 9, 10, 16, 37, 100, 121, 200):
        coords = canonical_coords(n)
        assert len(coords) == n
        assert len({tuple(c) for c in coords}) == n


def test_family_is_connected_with_vertical_field():
    for n in range(2, 120):
        g = build_edges(canonical(n), SQRT3_2)
        assert component_count(g.n, g.edges) == 1


def test_perimeter_formula_matches_measurement_small_range():
    for n in range(1, 420):
        g = build_edges(canonical(n), SQRT3_2)
        assert canonical_perimeter(n) == graph_perimeter(g).per_gr, n


def test_energy_formula_matches_measurement_small_range():
    for n in range(0, 420):
        assert canonical_energy(n) == energy(canonical(n), SQRT3_2), n


def test_small_n_table():
    for n, e in SMALL_N_ENERGIES.items():
        assert canonical_energy(n) == e


def test_specific_values():
    # squares of side l+1 are full diamonds: perimeter 4l, energy -2n+2l+2
    for l in range(1, 12):
        n = (l + 1) ** 2
        assert canonical_perimeter(n) == 4 * l
        assert canonical_energy(n) == -2 * n + 2 * l + 2
    assert canonical_energy(9) == -12


def test_single_shell_particle_is_a_pendant_wire():
    for l in (1, 2, 3, 5):
        n = (l + 1) ** 2 + 1
        g = build_edges(canonical(n), SQRT3_2)
        deg = np.zeros(n, dtype=int)
        for i, j in g.edges:
            deg[i] += 1
            deg[j] += 1
        assert int((deg == 1).sum()) == 1
        assert canonical_perimeter(n) == 4 * l + 2


def test_canonical_orientation_field_is_vertical():
    c = canonical(30)
    assert np.array_equal(c.ori, np.tile([0.0, 1.0], (30, 1)))
    assert c.lattice is not None and c.lattice.shape == (30, 2)


def test_shell_decompose_reconstruction():
    rng = np.random.default_rng(6)
    for _ in range(300):
        n_prime = int(rng.integers(1, 400))
        n = int(rng.integers(n_prime + 1, n_prime + 1200))
        d = shell_decompose(n, n_prime)
        assert isinstance(d, ShellDecomposition)
        assert (d.n, d.n_prime) == (n, n_prime)
        p = canonical_perimeter(n_prime)

        def filled(k):
            return n_prime + k * (p + 4 * (k + 1))

        assert filled(d.k) + d.delta == n
        assert d.delta >= 0 and filled(d.k) <= n < filled(d.k + 1)
        assert d.r == canonical_perimeter(n) - p - 8 * d.k
        assert d.r in (0, 2, 4, 6, 8)
        if d.delta == 0:
            assert d.r == 0
        if d.k >= 1:
            assert d.r <= 2 * math.ceil(d.delta / 2)


def test_shell_decomposition_validates_its_own_laws():
    with pytest.raises(ValueError):
        ShellDecomposition(n=10, n_prime=4, k=0, delta=0, r=3)
    with pytest.raises(ValueError):
        ShellDecomposition(n=10, n_prime=4, k=1, delta=0, r=2)
    with pytest.raises(ValueError):
        ShellDecomposition(n=10, n_prime=4, k=1, delta=1, r=4)


def test_canonical_spec_consistency():
    for n in (1, 4, 5, 9, 12, 100):
        spec = CanonicalSpec.from_n(n)
        assert spec.n == n
        assert (spec.l + 1) ** 2 + spec.eta == n
        assert 0 <= spec.eta < 2 * spec.l + 3
        assert spec.per_gr == canonical_perimeter(n)
    with pytest.raises(ValueError):
        CanonicalSpec(n=5, l=1, eta=9, per_gr=6)
