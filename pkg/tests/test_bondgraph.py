import math

import numpy as np
import pytest

from conftest import SQRT3_2, cd
from ocl.bondgraph import (
    BondGraph,
    EDGE_LABELS,
    assert_planar,
    boundary_particles,
    build_edges,
    classify_edges,
    euler_characteristics,
    extract_faces,
    graph_perimeter,
)
from ocl.canonical import canonical
from ocl.config import Configuration, DEFAULT_TOL
from ocl.errors import AdmissibilityError, GammaError, OrientationError, PlanarityError
from ocl.lattice import embed
from ocl.sampling import orientation_field, random_lattice_animal, random_unit_cluster
from oracles.brute import (
    bounded_regions_euler,
    bounded_regions_pixel,
    brute_bonds,
    component_count,
)

GAMMAS = (0.0, 0.3, 0.5, SQRT3_2, 0.9, 1.0)


def _class_counts(graph):
    labels = classify_edges(graph).labels
    return {
        name: int(np.count_nonzero(labels == code))
        for code, name in enumerate(EDGE_LABELS)
    }


def wirehole_config():
    """12-gon hole (4x4 block minus its 2x2 core) plus a pendant particle
    inside the hole whose orientation keeps exactly one bond: the smallest
    admissible face with an interior wire."""
    ring = [cd(c, d) for c in range(4) for d in range(4) if not (c in (1, 2) and d in (1, 2))]
    pts = embed(ring + [cd(1, 1)])
    ori = np.tile([0.0, 1.0], (len(pts), 1))
    ori[-1] = [-0.5, math.sqrt(3) / 2]
    return Configuration(pts, ori, "wirehole")


def annulus_config(with_inner=False):
    """8-cycle of lattice sites around one missing site; optionally a
    bond-free particle (horizontal orientation) on the missing site."""
    ring = [cd(c, d) for c in range(3) for d in range(3) if not (c == 1 and d == 1)]
    coords = ring + ([cd(1, 1)] if with_inner else [])
    pts = embed(coords)
    ori = np.tile([0.0, 1.0], (len(pts), 1))
    if with_inner:
        ori[-1] = [1.0, 0.0]
    return Configuration(pts, ori, "annulus")


# ---------------------------------------------------------------- bonds


def test_edges_match_brute_oracle_off_lattice(rng):
    for trial in range(25):
        n = int(rng.integers(2, 26))
        c = random_unit_cluster(n, rng)
        gamma = GAMMAS[trial % len(GAMMAS)]
        g = build_edges(c, gamma)
        assert [tuple(e) for e in g.edges] == brute_bonds(c.pos, c.ori, gamma)


def test_edges_match_brute_oracle_on_lattice(rng):
    for trial in range(25):
        coords = random_lattice_animal(int(rng.integers(2, 40)), rng)
        ori = orientation_field(coords, rng, mode=("vertical", "random")[trial % 2])
        c = Configuration(embed(coords), ori, lattice=np.asarray(coords))
        gamma = GAMMAS[trial % len(GAMMAS)]
        g = build_edges(c, gamma)
        assert [tuple(e) for e in g.edges] == brute_bonds(c.pos, c.ori, gamma)


def test_lattice_and_generic_paths_agree(rng):
    for trial in range(20):
        coords = random_lattice_animal(int(rng.integers(2, 50)), rng)
        ori = orientation_field(coords, rng, mode="random")
        fast = Configuration(embed(coords), ori, lattice=np.asarray(coords))
        slow = Configuration(embed(coords), ori)
        gamma = GAMMAS[trial % len(GAMMAS)]
        gf, gs = build_edges(fast, gamma), build_edges(slow, gamma)
        assert np.array_equal(gf.edges, gs.edges)
        assert _class_counts(gf) == _class_counts(gs)
        assert tuple(graph_perimeter(gf)) == tuple(graph_perimeter(gs))
        assert euler_characteristics(gf) == euler_characteristics(gs)


def test_edges_are_sorted_unique_pairs():
    g = build_edges(canonical(25), SQRT3_2)
    e = g.edges
    assert e.dtype == np.int64 and e.ndim == 2 and e.shape[1] == 2
    assert (e[:, 0] < e[:, 1]).all()
    assert np.array_equal(np.lexsort((e[:, 1], e[:, 0])), np.arange(len(e)))
    assert len({(int(i), int(j)) for i, j in e}) == g.m


def test_trivial_sizes():
    assert build_edges(Configuration.empty(), SQRT3_2).m == 0
    one = Configuration(np.zeros((1, 2)), np.array([[0.0, 1.0]]))
    assert build_edges(one, SQRT3_2).m == 0


# ---------------------------------------------------------------- gates


def test_gamma_domain():
    c = canonical(4)
    for bad in (-0.2, 1.0001, 2.0):
        with pytest.raises(GammaError):
            build_edges(c, bad)
    # gamma = 1 demands joining vectors exactly parallel to the field;
    # no triangular-lattice step embeds parallel to (0, 1)
    assert build_edges(c, 1.0).m == 0


def test_orientation_gate():
    skew = Configuration(np.array([[0.0, 0.0], [0.0, 5.0]]), np.array([[0.0, 1.0], [0.0, 1.1]]))
    with pytest.raises(OrientationError):
        build_edges(skew, SQRT3_2)


def test_admissibility_gate_generic_and_lattice():
    close = Configuration(np.array([[0.0, 0.0], [0.9, 0.0]]), np.tile([0.0, 1.0], (2, 1)))
    with pytest.raises(AdmissibilityError):
        build_edges(close, SQRT3_2)
    dup = Configuration.from_lattice([(0, 0), (1, 2), (0, 0)], (0.0, 1.0))
    with pytest.raises(AdmissibilityError):
        build_edges(dup, SQRT3_2)


# ---------------------------------------------------------------- fixtures


def test_unit_rhombus_face():
    g = build_edges(canonical(4), SQRT3_2)
    assert g.m == 4
    faces = extract_faces(g)
    assert len(faces.faces) == 1 and len(faces.nsc_regions) == 0
    f = faces.faces[0]
    assert f.per_gr == 4 and f.per_geom == 4 and f.wire_interior_count == 0
    assert f.is_rhombus
    assert np.allclose(f.orientation, (0.0, 1.0), atol=1e-9)
    assert math.isclose(f.area, math.sqrt(3) / 2, abs_tol=1e-9)
    assert tuple(graph_perimeter(g)) == (4, 4)


def test_six_particle_diamond_classification():
    g = build_edges(canonical(6), SQRT3_2)
    assert g.m == 7
    assert _class_counts(g) == {
        "interior": 1,
        "boundary": 6,
        "wire_interior": 0,
        "wire_exterior": 0,
    }
    assert len(extract_faces(g).faces) == 2


def test_rhombus_with_pendant_wire():
    coords = [(0, 0), (0, 1), (-1, 1), (-1, 2), (0, 2)]
    g = build_edges(Configuration.from_lattice(coords, (0.0, 1.0)), SQRT3_2)
    assert g.m == 5
    assert _class_counts(g) == {
        "interior": 0,
        "boundary": 4,
        "wire_interior": 0,
        "wire_exterior": 1,
    }
    assert tuple(graph_perimeter(g)) == (4, 6)


def test_interior_wire_fixture():
    g = build_edges(wirehole_config(), SQRT3_2)
    assert (g.n, g.m) == (13, 13)
    assert _class_counts(g) == {
        "interior": 0,
        "boundary": 12,
        "wire_interior": 1,
        "wire_exterior": 0,
    }
    assert tuple(graph_perimeter(g)) == (12, 12)
    faces = extract_faces(g)
    assert len(faces.faces) == 1
    f = faces.faces[0]
    assert f.per_gr == 14 and f.per_geom == 12 and f.wire_interior_count == 1
    assert math.isclose(f.area, 9 * math.sqrt(3) / 2, abs_tol=1e-9)


def test_annulus_hole_is_a_face():
    g = build_edges(annulus_config(), SQRT3_2)
    assert g.m == 8
    eu = euler_characteristics(g)
    assert (eu.face_count, eu.nsc_count, eu.chi, eu.chi_euler) == (1, 0, 1, 1)
    assert tuple(graph_perimeter(g)) == (8, 8)
    f = extract_faces(g).faces[0]
    assert f.per_gr == 8 and math.isclose(f.area, 2 * math.sqrt(3), abs_tol=1e-9)


def test_annulus_with_enclosed_particle_is_nsc():
    c = annulus_config(with_inner=True)
    g = build_edges(c, SQRT3_2)
    assert g.m == 8  # the enclosed particle bonds to nothing
    eu = euler_characteristics(g)
    assert (eu.face_count, eu.nsc_count) == (0, 1)
    assert (eu.chi, eu.chi_euler, eu.component_count) == (1, 2, 2)
    # the hole boundary bounds no face, so its edges count as exterior wires
    assert _class_counts(g)["wire_exterior"] == 8
    assert tuple(graph_perimeter(g)) == (0, 16)
    fs = extract_faces(g)
    assert len(fs.nsc_regions) == 1 and len(fs.outer_walks) == 1
    assert fs.nsc_regions[0].area > 0


# ------------------------------------------------------- region counting


def test_bounded_regions_match_euler_and_pixel_oracles(rng):
    fixtures = [wirehole_config(), annulus_config(), annulus_config(True), canonical(9)]
    for c in fixtures:
        g = build_edges(c, SQRT3_2)
        eu = euler_characteristics(g)
        bounded = eu.face_count + eu.nsc_count
        assert bounded == bounded_regions_euler(g.n, g.edges)
        assert bounded == bounded_regions_pixel(c.pos, g.edges)
        assert eu.component_count == component_count(g.n, g.edges)
        assert eu.chi_euler == eu.component_count


def test_euler_identities_on_random_samples(rng):
    from ocl.sampling import decomposition_sample

    for t in range(30):
        c = decomposition_sample(t, 7)
        g = build_edges(c, SQRT3_2)
        eu = euler_characteristics(g)
        assert eu.face_count + eu.nsc_count == bounded_regions_euler(g.n, g.edges)
        assert eu.chi_euler == component_count(g.n, g.edges)
        assert eu.chi == eu.chi_euler - eu.nsc_count


def test_perimeter_identity_against_face_walks(rng):
    from ocl.sampling import decomposition_sample

    fixtures = [wirehole_config(), annulus_config(True), canonical(12)]
    fixtures += [decomposition_sample(t, 11) for t in range(20)]
    for c in fixtures:
        g = build_edges(c, SQRT3_2)
        faces = extract_faces(g).faces
        assert graph_perimeter(g).per_gr == 2 * g.m - sum(f.per_gr for f in faces)


# ------------------------------------------------------------- boundary


def test_boundary_particles_of_a_diamond():
    g = build_edges(canonical(9), SQRT3_2)
    b = boundary_particles(g)
    assert len(b) == 8
    # the interior particle is the one nearest the centroid
    centre = g.config.pos.mean(axis=0)
    inner = int(np.argmin(np.hypot(*(g.config.pos - centre).T)))
    assert inner not in set(b.tolist())


def test_isolated_particles_are_boundary():
    g = build_edges(annulus_config(True), SQRT3_2)
    assert 8 in set(boundary_particles(g).tolist())


# ------------------------------------------------------------ planarity


def test_admissible_graphs_are_planar(rng):
    for _ in range(10):
        c = random_unit_cluster(int(rng.integers(3, 20)), rng)
        assert_planar(build_edges(c, 0.0))


def test_assert_planar_catches_corrupt_edges():
    pos = np.array([[0.0, 0.0], [2.0, 0.0], [1.0, -1.0], [1.0, 1.0]])
    ori = np.tile([0.0, 1.0], (4, 1))
    g = BondGraph(
        Configuration(pos, ori),
        SQRT3_2,
        DEFAULT_TOL,
        np.array([[0, 1], [2, 3]], dtype=np.int64),
    )
    with pytest.raises(PlanarityError):
        assert_planar(g)
