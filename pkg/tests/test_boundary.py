import collections
import math

import numpy as np
import pytest

from conftest import SQRT3_2, cd
from ocl.bondgraph import build_edges
from ocl.boundary import (
    MAX_INTERIOR,
    boundary_profile,
    check_increase,
    check_puntidibordo,
    profile_violations,
)
from ocl.canonical import canonical, canonical_perimeter
from ocl.config import Configuration
from ocl.errors import ConnectivityError, ProfileError, TooSmallError
from ocl.sampling import connected_sample


def test_unit_rhombus_profile():
    g = build_edges(canonical(4), SQRT3_2)
    prof = boundary_profile(g)
    assert prof.size == 4
    assert collections.Counter(prof.classes) == {"Y1": 2, "Y2": 2}
    assert math.isclose(prof.gauss_bonnet_sum, 2 * math.pi, abs_tol=1e-9)
    assert profile_violations(g, prof) == []


def test_full_diamond_profile():
    # side-4 diamond: two sharp corners, two flat corners, eight mid-edge
    # vertices with one interior edge each
    g = build_edges(canonical(16), SQRT3_2)
    prof = boundary_profile(g)
    assert collections.Counter(prof.classes) == {"Y1": 2, "Y2": 2, "Y3": 8}
    assert math.isclose(prof.gauss_bonnet_sum, 2 * math.pi, abs_tol=1e-9)
    assert profile_violations(g, prof) == []
    assert all(
        k <= MAX_INTERIOR[cls] for cls, k in zip(prof.classes, prof.interior_counts)
    )


def test_gauss_bonnet_on_random_connected_samples():
    for t in range(25):
        c = connected_sample(t, 42)
        g = build_edges(c, SQRT3_2)
        try:
            prof = boundary_profile(g)
        except ProfileError:
            continue  # exterior wires or nested walks: out of the lemma's scope
        assert math.isclose(prof.gauss_bonnet_sum, 2 * math.pi, abs_tol=1e-6)
        assert profile_violations(g, prof) == []


def test_profile_requires_connected_graph():
    far = Configuration.from_lattice(
        [(0, 0), (0, 1), (-1, 1), (-1, 2), (50, 0), (50, 1), (49, 1), (49, 2)], (0.0, 1.0)
    )
    with pytest.raises(ProfileError):
        boundary_profile(build_edges(far, SQRT3_2))


def test_profile_rejects_exterior_wires():
    # a single shell particle on a full diamond is a pendant wire
    with pytest.raises(ProfileError):
        boundary_profile(build_edges(canonical(5), SQRT3_2))


def test_puntidibordo_diamonds():
    for n in (4, 6, 9, 16, 25, 100, 400, 1000):
        g = build_edges(canonical(n), SQRT3_2)
        bound = check_puntidibordo(g)
        assert bound.ok
        assert bound.per_gr == canonical_perimeter(n)
        assert bound.per_gr >= bound.boundary_count
    # full diamonds have per_gr == boundary point count
    g9 = check_puntidibordo(build_edges(canonical(9), SQRT3_2))
    assert (g9.per_gr, g9.boundary_count, g9.ok) == (8, 8, True)


def test_puntidibordo_random_samples():
    for t in range(25):
        g = build_edges(connected_sample(t, 5), SQRT3_2)
        assert check_puntidibordo(g).ok


def test_increase_on_full_diamond():
    rep = check_increase(canonical(16))
    assert rep.ok
    assert rep.f_outer == 8 and rep.f_inner == 4 and rep.inner_count == 4


def test_increase_on_a_strip():
    # 2 x 9 sites: peeling the boundary leaves nothing
    strip = Configuration.from_lattice(
        [cd(c, d) for c in range(2) for d in range(9)], (0.0, 1.0)
    )
    rep = check_increase(strip)
    assert rep.ok and rep.inner_count == 0 and rep.f_inner == 0
    assert rep.f_outer >= 4


def test_increase_random_samples():
    ok = checked = 0
    for t in range(25):
        c = connected_sample(t, 9, min_n=8, max_n=40)
        try:
            rep = check_increase(c)
        except (TooSmallError, ConnectivityError):
            continue
        checked += 1
        ok += rep.ok
    assert checked > 0 and ok == checked


def test_increase_preconditions():
    with pytest.raises(TooSmallError):
        check_increase(canonical(7))
    far = Configuration.from_lattice(
        [(0, 0), (0, 1), (-1, 1), (-1, 2), (50, 0), (50, 1), (49, 1), (49, 2)], (0.0, 1.0)
    )
    with pytest.raises(ConnectivityError):
        check_increase(far)
