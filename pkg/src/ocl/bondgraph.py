"""Threshold bond graphs and their planar anatomy.

Two particles are bonded when their centers are at distance exactly 1
(within tolerance) and the center-to-center direction clears the angular
threshold gamma against *both* orientations, in one of the two senses:
``<x_j - x_i, v_k> >= gamma`` for k in {i, j}, or the same with i and j
swapped. The resulting graph drawn with straight unit segments is planar
for every admissible configuration, which makes faces well defined.

Faces are read off a rotation system: at each vertex the outgoing
half-edges are sorted counterclockwise, and the successor of half-edge
(u -> v) is (v -> w) with w the clockwise-next neighbor after u around v.
Cycles of this successor map trace every bounded face counterclockwise
(positive signed area) and every outer boundary clockwise; dangling trees
are walked twice and enclose zero area. A bounded walk that strictly
contains another connected component is not simply connected ("nsc") and
is excluded from the face list.

Edge taxonomy: an edge with two distinct face sides is ``interior``; with
the same face on both sides ``wire_interior``; with exactly one face side
``boundary``; with no face side ``wire_exterior``. The graph perimeter
counts boundary edges once and exterior wires twice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np
from scipy.spatial import cKDTree

from ._kernels import (
    classify_graph,
    lattice_rotation,
    orbit_cycles_areas,
    union_find_labels,
    unit_step_pairs,
    verify_bonds,
    winding_contains,
)
from .config import Configuration, Tolerances, DEFAULT_TOL
from .errors import AdmissibilityError, GammaError, OrientationError, PlanarityError

ORBIT_OUTER, ORBIT_FACE, ORBIT_NSC = 0, 1, 2

EDGE_INTERIOR, EDGE_BOUNDARY, EDGE_WIRE_INT, EDGE_WIRE_EXT = 0, 1, 2, 3
EDGE_LABELS = ("interior", "boundary", "wire_interior", "wire_exterior")

# any genuine face encloses at least a unit equilateral triangle (~0.433);
# tree walks enclose zero area up to float noise
_AREA_TOL = 1e-6


def _pseudoangle(d: np.ndarray) -> np.ndarray:
    """Monotone proxy for atan2(dy, dx), cheap and branch-free."""
    dx, dy = d[:, 0], d[:, 1]
    p = dx / (np.abs(dx) + np.abs(dy))
    return np.where(dy < 0, p - 1.0, 1.0 - p)


@dataclass
class BondGraph:
    """Bond graph of a configuration at a fixed threshold gamma."""

    config: Configuration
    gamma: float
    tol: Tolerances
    edges: np.ndarray  # (m, 2) int64, each row i < j, rows lexsorted

    _fd: "_FaceData | None" = field(default=None, repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.config.n

    @property
    def m(self) -> int:
        return self.edges.shape[0]

    @property
    def energy(self) -> int:
        return -self.m

    @property
    def degrees(self) -> np.ndarray:
        return np.bincount(self.edges.ravel(), minlength=self.n).astype(np.int64)

    def neighbors(self, v: int) -> np.ndarray:
        e = self.edges
        return np.concatenate([e[e[:, 0] == v, 1], e[e[:, 1] == v, 0]])


def _lattice_candidates(lat: np.ndarray) -> tuple[np.ndarray, np.ndarray] | None:
    """Unit-distance candidate pairs from exact integer lattice coordinates.

    Distinct triangular-lattice points embed at distance >= 1, with equality
    exactly for the six unit steps, so candidate generation reduces to integer
    matching along three directed steps. Returns None when the coordinates are
    too large to pack into a single sort key; raises ``not-admissible`` when
    two particles share a lattice site (distance 0).
    """
    span = int(np.abs(lat).max()) + 2
    if span > 1_000_000_000:
        return None
    base = 2 * span + 1
    key = lat[:, 0] * base + lat[:, 1]
    order = np.argsort(key)
    ci, cj, distinct = unit_step_pairs(key[order], order, base, 1, 1 - base)
    if not distinct:
        raise AdmissibilityError("pairwise distance below 1")
    return ci, cj


def build_edges(
    config: Configuration, gamma: float, tol: Tolerances = DEFAULT_TOL
) -> BondGraph:
    """Bond graph of an admissible configuration.

    Raises ``invalid-gamma`` for gamma outside [0, 1], ``not-admissible``
    when two centers sit closer than 1 - eps_dist, and ``bad-orientation``
    for non-unit orientations.
    """
    if not (0.0 <= gamma <= 1.0) or not np.isfinite(gamma):
        raise GammaError(f"gamma must lie in [0, 1], got {gamma}")
    pos, ori = config.pos, config.ori
    n = config.n
    if n and np.abs(np.einsum("ij,ij->i", ori, ori) - 1.0).max() > 20 * tol.eps_angle:
        raise OrientationError("orientation norms deviate from 1 beyond tolerance")
    if n < 2:
        edges = np.zeros((0, 2), dtype=np.int64)
        return BondGraph(config, float(gamma), tol, edges)

    cand = None
    if config.lattice is not None:
        cand = _lattice_candidates(config.lattice)
    if cand is None:
        pairs = cKDTree(pos).query_pairs(1.0 + tol.eps_dist, output_type="ndarray")
        cand = (
            np.ascontiguousarray(pairs[:, 0], dtype=np.int64),
            np.ascontiguousarray(pairs[:, 1], dtype=np.int64),
        )
    ci, cj = cand
    keep, admissible = verify_bonds(
        pos, ori, ci, cj, float(gamma), tol.eps_dist, tol.eps_angle
    )
    if not admissible:
        raise AdmissibilityError("pairwise distance below 1")
    packed = np.sort(ci[keep] * np.int64(n) + cj[keep])
    edges = np.empty((packed.size, 2), dtype=np.int64)
    edges[:, 0] = packed // n
    edges[:, 1] = packed % n
    return BondGraph(config, float(gamma), tol, edges)


class PerimeterCounts(NamedTuple):
    per: int  # boundary edges, counted once
    per_gr: int  # boundary edges + 2 * exterior wires


class EulerData(NamedTuple):
    chi: int  # n - m + #faces
    chi_euler: int  # chi + #nsc regions (= #connected components)
    face_count: int
    nsc_count: int
    component_count: int


@dataclass(frozen=True)
class Face:
    """One simply connected bounded face, described by its boundary walk."""

    index: int
    vertices: tuple[int, ...]  # walk order; interior wires appear twice
    per_gr: int  # walk length
    per_geom: int  # distinct edges on the walk
    wire_interior_count: int
    area: float
    is_rhombus: bool
    orientation: tuple[float, float] | None


@dataclass(frozen=True)
class Region:
    """A bounded but not simply connected complement region (outer walk only)."""

    vertices: tuple[int, ...]
    area: float


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[Face, ...]
    nsc_regions: tuple[Region, ...]
    outer_walks: tuple[tuple[int, ...], ...]

    @property
    def rhombic(self) -> tuple[Face, ...]:
        return tuple(f for f in self.faces if f.is_rhombus)

    @property
    def bad(self) -> tuple[Face, ...]:
        return tuple(f for f in self.faces if f.per_gr > 4)


@dataclass
class _FaceData:
    """Array-level face pipeline output shared by all graph queries."""

    src: np.ndarray  # (2m,) half-edge sources; he 2e, 2e+1 are e and reversed
    dst: np.ndarray
    orbit: np.ndarray  # (2m,) orbit id per half-edge
    walk: np.ndarray  # (2m,) half-edges grouped by orbit
    orbit_start: np.ndarray  # (k+1,) offsets into walk
    orbit_area: np.ndarray  # (k,)
    orbit_kind: np.ndarray  # (k,) ORBIT_*
    edge_class: np.ndarray  # (m,) EDGE_*
    face_orbits: np.ndarray  # orbit ids with kind FACE, discovery order
    nsc_orbits: np.ndarray
    per_gr_face: np.ndarray  # (#faces,)
    wire_int_face: np.ndarray  # (#faces,)
    component_count: int
    component_labels: np.ndarray  # (n,)
    boundary_mask: np.ndarray  # (n,) True when not in the interior of O(G)


def _component_labels(n: int, edges: np.ndarray) -> tuple[int, np.ndarray]:
    if n == 0:
        return 0, np.zeros(0, dtype=np.int64)
    if edges.size == 0:
        return n, np.arange(n, dtype=np.int64)
    count, labels = union_find_labels(n, edges)
    return int(count), labels


def _face_data(graph: BondGraph) -> _FaceData:
    if graph._fd is not None:
        return graph._fd
    pos = graph.config.pos
    n, m = graph.n, graph.m
    e = graph.edges
    comp_count, comp_labels = _component_labels(n, e)

    if m == 0:
        fd = _FaceData(
            src=np.zeros(0, np.int64),
            dst=np.zeros(0, np.int64),
            orbit=np.zeros(0, np.int64),
            walk=np.zeros(0, np.int64),
            orbit_start=np.zeros(1, np.int64),
            orbit_area=np.zeros(0),
            orbit_kind=np.zeros(0, np.int8),
            edge_class=np.zeros(0, np.int8),
            face_orbits=np.zeros(0, np.int64),
            nsc_orbits=np.zeros(0, np.int64),
            per_gr_face=np.zeros(0, np.int64),
            wire_int_face=np.zeros(0, np.int64),
            component_count=comp_count,
            component_labels=comp_labels,
            boundary_mask=np.ones(n, dtype=bool),
        )
        graph._fd = fd
        return fd

    lat = graph.config.lattice
    if lat is not None:
        # bond directions are exact lattice steps: table-lookup rotation order
        src, dst, succ = lattice_rotation(e, lat, n)
    else:
        src = np.empty(2 * m, dtype=np.int64)
        dst = np.empty(2 * m, dtype=np.int64)
        src[0::2], dst[0::2] = e[:, 0], e[:, 1]
        src[1::2], dst[1::2] = e[:, 1], e[:, 0]

        # rotation system: group out-half-edges by source, ccw within the
        # group. One float key sort: src gets the integer part, pseudoangle
        # in (-2, 2] the fractional part; bond directions at a vertex are
        # >= pi/3 apart so the packed key never loses their order.
        pa = _pseudoangle(pos[dst] - pos[src])
        order = np.argsort(src * 4.0 + (pa + 2.0), kind="stable")
        s_sorted = src[order]
        new_block = np.empty(2 * m, dtype=bool)
        new_block[0] = True
        np.not_equal(s_sorted[1:], s_sorted[:-1], out=new_block[1:])
        starts = np.flatnonzero(new_block)
        block_id = np.cumsum(new_block) - 1
        block_start = starts[block_id]
        block_end = np.append(starts[1:], 2 * m)[block_id]
        rank = np.arange(2 * m) - block_start
        prev_pos = np.where(rank == 0, block_end - 1, np.arange(2 * m) - 1)
        cw_next = np.empty(2 * m, dtype=np.int64)
        cw_next[order] = order[prev_pos]
        succ = cw_next[np.arange(2 * m) ^ 1]

    # signed shoelace areas accumulate along each walk; positions centered
    # to keep the cancellation of twice-walked tree edges below threshold
    ctr = pos.mean(axis=0)
    px, py = pos[:, 0] - ctr[0], pos[:, 1] - ctr[1]
    orbit, walk, orbit_start, orbit_area, k = orbit_cycles_areas(
        succ, src, dst, px, py
    )

    bounded = orbit_area > _AREA_TOL
    if n - m + int(bounded.sum()) != comp_count:
        raise PlanarityError(
            "face count inconsistent with component count; edges must cross"
        )

    orbit_kind = np.zeros(k, dtype=np.int8)
    orbit_kind[bounded] = ORBIT_FACE

    # not-simply-connected regions: a bounded walk strictly containing a
    # vertex of a different component is a region, not a face
    if comp_count > 1 and bounded.any():
        bounded_ids = np.flatnonzero(bounded)
        walk_src = src[walk]
        orbit_comp = comp_labels[walk_src[orbit_start[:-1]]]
        _, rep_idx = np.unique(comp_labels, return_index=True)
        for rep in rep_idx:
            p = pos[rep]
            inner_best, inner_area = -1, np.inf
            for c in bounded_ids:
                if orbit_comp[c] == comp_labels[rep]:
                    continue
                poly = pos[walk_src[orbit_start[c] : orbit_start[c + 1]]]
                if orbit_area[c] < inner_area and winding_contains(poly, p):
                    inner_best, inner_area = c, orbit_area[c]
            if inner_best >= 0:
                orbit_kind[inner_best] = ORBIT_NSC

    nsc_orbits = np.flatnonzero(orbit_kind == ORBIT_NSC).astype(np.int64)

    # the kernel assumes ORBIT_FACE == 1 and the EDGE_* codes 0..3
    edge_class, boundary_mask, face_orbits, per_gr_face, wire_int_face = (
        classify_graph(n, orbit, orbit_start, orbit_kind, src)
    )

    fd = _FaceData(
        src=src,
        dst=dst,
        orbit=orbit,
        walk=walk,
        orbit_start=orbit_start,
        orbit_area=orbit_area,
        orbit_kind=orbit_kind,
        edge_class=edge_class,
        face_orbits=face_orbits,
        nsc_orbits=nsc_orbits,
        per_gr_face=per_gr_face,
        wire_int_face=wire_int_face,
        component_count=comp_count,
        component_labels=comp_labels,
        boundary_mask=boundary_mask,
    )
    graph._fd = fd
    return fd


def connected_components(graph: BondGraph) -> tuple[int, np.ndarray]:
    """(count, labels); isolated particles are their own components."""
    return _component_labels(graph.n, graph.edges)


def graph_perimeter(graph: BondGraph) -> PerimeterCounts:
    fd = _face_data(graph)
    per = int(np.count_nonzero(fd.edge_class == EDGE_BOUNDARY))
    wire_ext = int(np.count_nonzero(fd.edge_class == EDGE_WIRE_EXT))
    return PerimeterCounts(per=per, per_gr=per + 2 * wire_ext)


def euler_characteristics(graph: BondGraph) -> EulerData:
    fd = _face_data(graph)
    nf, nn = len(fd.face_orbits), len(fd.nsc_orbits)
    chi = graph.n - graph.m + nf
    return EulerData(
        chi=chi,
        chi_euler=chi + nn,
        face_count=nf,
        nsc_count=nn,
        component_count=fd.component_count,
    )


def boundary_particles(graph: BondGraph) -> np.ndarray:
    """Sorted ids of particles not in the interior of the occupied region.

    The occupied region is the union of closed faces; a particle is
    boundary when some incident half-edge borders the outer or an nsc
    region, or when it has no bonds at all.
    """
    fd = _face_data(graph)
    return np.flatnonzero(fd.boundary_mask).astype(np.int64)


@dataclass(frozen=True)
class EdgeClassification:
    """Per-edge taxonomy labels aligned with ``graph.edges`` rows."""

    labels: np.ndarray  # (m,) int8, EDGE_* codes

    @property
    def names(self) -> list[str]:
        return [EDGE_LABELS[c] for c in self.labels]

    def count(self, name: str) -> int:
        return int(np.count_nonzero(self.labels == EDGE_LABELS.index(name)))

    @property
    def counts(self) -> dict[str, int]:
        return {name: self.count(name) for name in EDGE_LABELS}


def classify_edges(graph: BondGraph) -> EdgeClassification:
    return EdgeClassification(labels=_face_data(graph).edge_class.copy())


def _rhombus_check(
    pos: np.ndarray, ori: np.ndarray, verts: np.ndarray, tol: float = 1e-7
) -> tuple[bool, tuple[float, float] | None]:
    """Unit rhombus with angles pi/3, 2pi/3 and one shared orientation."""
    if len(np.unique(verts)) != 4:
        return False, None
    p = pos[verts]
    if not np.allclose(p[0] - p[1] + p[2] - p[3], 0.0, atol=tol):
        return False, None
    d1 = np.hypot(*(p[0] - p[2]))
    d2 = np.hypot(*(p[1] - p[3]))
    if abs(min(d1, d2) - 1.0) > tol or abs(max(d1, d2) - np.sqrt(3.0)) > tol:
        return False, None
    o = ori[verts]
    if np.abs(o - o.mean(axis=0)).max() > tol:
        return False, None
    v = o.mean(axis=0)
    v = v / np.hypot(*v)
    return True, (float(v[0]), float(v[1]))


def extract_faces(graph: BondGraph) -> FaceSet:
    """Materialize face, nsc-region, and outer-walk descriptions.

    Prefer the count-level queries (perimeter, Euler data, classification)
    on large graphs; this builds per-face objects.
    """
    fd = _face_data(graph)
    pos, ori = graph.config.pos, graph.config.ori
    walk_src = fd.src[fd.walk] if fd.walk.size else fd.walk
    faces = []
    face_rank = {int(c): i for i, c in enumerate(fd.face_orbits)}
    for c in fd.face_orbits:
        i = face_rank[int(c)]
        verts = walk_src[fd.orbit_start[c] : fd.orbit_start[c + 1]]
        per_gr = int(fd.per_gr_face[i])
        wires = int(fd.wire_int_face[i])
        if per_gr == 4:
            is_rh, v = _rhombus_check(pos, ori, verts)
        else:
            is_rh, v = False, None
        faces.append(
            Face(
                index=i,
                vertices=tuple(int(x) for x in verts),
                per_gr=per_gr,
                per_geom=per_gr - 2 * wires,
                wire_interior_count=wires,
                area=float(fd.orbit_area[c]),
                is_rhombus=is_rh,
                orientation=v,
            )
        )
    nsc = tuple(
        Region(
            vertices=tuple(
                int(x) for x in walk_src[fd.orbit_start[c] : fd.orbit_start[c + 1]]
            ),
            area=float(fd.orbit_area[c]),
        )
        for c in fd.nsc_orbits
    )
    outer = tuple(
        tuple(int(x) for x in walk_src[fd.orbit_start[c] : fd.orbit_start[c + 1]])
        for c in range(len(fd.orbit_kind))
        if fd.orbit_kind[c] == ORBIT_OUTER
    )
    return FaceSet(faces=tuple(faces), nsc_regions=nsc, outer_walks=outer)


def assert_planar(graph: BondGraph) -> None:
    """O(m^2) straight-segment crossing scan; raises ``nonplanar``.

    Debug helper: admissible configurations are always planar, so this only
    fires on corrupted input. Meant for tests and small graphs.
    """
    pos = graph.config.pos
    e = graph.edges
    for a in range(len(e)):
        i, j = e[a]
        for b in range(a + 1, len(e)):
            k, l = e[b]
            if len({int(i), int(j), int(k), int(l)}) < 4:
                continue
            if _segments_cross(pos[i], pos[j], pos[k], pos[l]):
                raise PlanarityError(f"edges {a} and {b} cross")


def _segments_cross(p1, p2, p3, p4) -> bool:
    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    d1, d2 = orient(p3, p4, p1), orient(p3, p4, p2)
    d3, d4 = orient(p1, p2, p3), orient(p1, p2, p4)
    return ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0))
