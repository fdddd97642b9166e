"""Boundary anatomy at the diamond threshold.

For a connected graph with no exterior wires and a non-self-touching outer
boundary, each boundary particle gets its interior opening angle (the ccw
sweep from the ray toward its walk predecessor to the ray toward its walk
successor; outer walks run clockwise so this sweep opens into the occupied
region) and its count of incident interior edges. Admissible angles are
pi/3 and the band [2pi/3, pi] between consecutive bonds, which confines
boundary angles to multiples of pi/3 plus the two open bands (2pi/3, pi)
and (pi, 4pi/3). The class caps the interior-edge count: angles up to
2pi/3 and the first band force 0, pi and the second band allow 1, and
4pi/3 / 5pi/3 allow 2. The discrete Gauss-Bonnet sum of (pi - angle) over
the walk is exactly 2pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bondgraph import (
    BondGraph,
    EDGE_BOUNDARY,
    EDGE_INTERIOR,
    EDGE_WIRE_EXT,
    ORBIT_OUTER,
    _face_data,
    boundary_particles,
    build_edges,
)
from .config import Configuration, Tolerances, DEFAULT_TOL
from .energy import SQRT3_2, _GAMMA_MATCH, decompose
from .errors import (
    ConnectivityError,
    ProfileError,
    TooSmallError,
    UnsupportedGammaError,
)

_ANGLE_TOL = 1e-7

# class -> largest admissible number of incident interior edges
MAX_INTERIOR = {
    "Y1": 0,
    "Y2": 0,
    "Y23": 0,
    "Y3": 1,
    "Y34": 1,
    "Y4": 2,
    "Y5": 2,
}


def _require_diamond_gamma(graph: BondGraph) -> None:
    if abs(graph.gamma - SQRT3_2) > _GAMMA_MATCH:
        raise UnsupportedGammaError(
            f"boundary analysis holds at gamma = sqrt(3)/2, got {graph.gamma}"
        )


def _classify_angle(x: float) -> str:
    for j in range(1, 6):
        if abs(x - j * math.pi / 3.0) <= _ANGLE_TOL:
            return f"Y{j}"
    if 2 * math.pi / 3 < x < math.pi:
        return "Y23"
    if math.pi < x < 4 * math.pi / 3:
        return "Y34"
    raise ProfileError(f"boundary angle {x:.9f} outside the admissible classes")


@dataclass(frozen=True)
class BoundaryProfile:
    """Outer-walk anatomy: one entry per walk position."""

    walk: tuple[int, ...]  # particle ids along the outer walk (clockwise)
    angles: np.ndarray  # interior opening angle at each walk position
    classes: tuple[str, ...]
    interior_counts: np.ndarray  # incident interior edges per walk position
    gauss_bonnet_sum: float  # sum of (pi - angle); exactly 2pi up to float

    @property
    def size(self) -> int:
        return len(self.walk)


def boundary_profile(graph: BondGraph) -> BoundaryProfile:
    """Profile the outer boundary; raises ``profile-hypotheses`` when the
    graph is disconnected, has exterior wires, has no face at all, or the
    outer walk revisits a particle."""
    _require_diamond_gamma(graph)
    fd = _face_data(graph)
    if fd.component_count != 1:
        raise ProfileError("graph must be connected")
    if np.count_nonzero(fd.edge_class == EDGE_WIRE_EXT):
        raise ProfileError("exterior wires present")
    outer = np.flatnonzero(fd.orbit_kind == ORBIT_OUTER)
    if len(outer) != 1:
        raise ProfileError("need exactly one outer walk (got none or several)")
    c = int(outer[0])
    walk_he = fd.walk[fd.orbit_start[c] : fd.orbit_start[c + 1]]
    walk = fd.src[walk_he]
    if len(np.unique(walk)) != len(walk):
        raise ProfileError("outer walk touches itself")

    pos = graph.config.pos
    prev = np.roll(walk, 1)
    nxt = np.roll(walk, -1)
    a_prev = np.arctan2(*(pos[prev] - pos[walk]).T[::-1])
    a_next = np.arctan2(*(pos[nxt] - pos[walk]).T[::-1])
    angles = np.mod(a_next - a_prev, 2 * math.pi)

    interior_per_vertex = np.zeros(graph.n, dtype=np.int64)
    ie = graph.edges[fd.edge_class == EDGE_INTERIOR]
    if ie.size:
        interior_per_vertex = np.bincount(ie.ravel(), minlength=graph.n)
    classes = tuple(_classify_angle(float(x)) for x in angles)
    return BoundaryProfile(
        walk=tuple(int(v) for v in walk),
        angles=angles,
        classes=classes,
        interior_counts=interior_per_vertex[walk],
        gauss_bonnet_sum=float((math.pi - angles).sum()),
    )


def profile_violations(graph: BondGraph, profile: BoundaryProfile) -> list[str]:
    """Empty for every admissible diamond-threshold configuration.

    Checks: interior-edge caps per class, the Gauss-Bonnet sum, and the
    single-interior-edge geometry (at a class-Y3/Y34 vertex with one
    interior edge, that edge makes pi/3 with one of the two boundary edges
    and the orientation is parallel to the bisector of that pi/3 sector).
    """
    out = []
    if abs(profile.gauss_bonnet_sum - 2 * math.pi) > 1e-6:
        out.append(f"gauss-bonnet sum {profile.gauss_bonnet_sum!r} != 2pi")
    pos, ori = graph.config.pos, graph.config.ori
    fd = _face_data(graph)
    walk = np.asarray(profile.walk)
    prev = np.roll(walk, 1)
    nxt = np.roll(walk, -1)
    for t, cls in enumerate(profile.classes):
        k = int(profile.interior_counts[t])
        if k > MAX_INTERIOR[cls]:
            out.append(f"vertex {walk[t]}: class {cls} with {k} interior edges")
        if cls in ("Y3", "Y34") and k == 1:
            x = walk[t]
            e = graph.edges[fd.edge_class == EDGE_INTERIOR]
            row = e[(e[:, 0] == x) | (e[:, 1] == x)][0]
            y = row[1] if row[0] == x else row[0]
            d_int = pos[y] - pos[x]
            hits = []
            for other in (prev[t], nxt[t]):
                d_b = pos[other] - pos[x]
                if abs(float(d_b @ d_int) - 0.5) <= _ANGLE_TOL:  # pi/3 between unit rays
                    hits.append(d_b)
            if not hits:
                out.append(f"vertex {x}: interior edge without a pi/3 boundary mate")
                continue
            bis = hits[0] + d_int
            bis = bis / np.hypot(*bis)
            cross = bis[0] * ori[x][1] - bis[1] * ori[x][0]
            if abs(float(cross)) > _ANGLE_TOL:
                out.append(f"vertex {x}: orientation not parallel to the bisector")
    return out


class PerimeterBound(tuple):
    """(per_gr, boundary_count, ok) with ok = per_gr >= boundary_count."""

    __slots__ = ()

    def __new__(cls, per_gr: int, boundary_count: int):
        return super().__new__(cls, (per_gr, boundary_count, per_gr >= boundary_count))

    per_gr = property(lambda s: s[0])
    boundary_count = property(lambda s: s[1])
    ok = property(lambda s: s[2])


def check_puntidibordo(graph: BondGraph) -> PerimeterBound:
    """Graph perimeter dominates the boundary-particle count (connected
    graphs only; raises ``not-connected`` otherwise)."""
    from .bondgraph import graph_perimeter

    _require_diamond_gamma(graph)
    fd = _face_data(graph)
    if fd.component_count != 1:
        raise ConnectivityError("perimeter bound needs a connected graph")
    per_gr = graph_perimeter(graph).per_gr
    return PerimeterBound(per_gr, len(boundary_particles(graph)))


@dataclass(frozen=True)
class IncreaseReport:
    f_outer: Fraction
    f_inner: Fraction
    inner_count: int
    ok: bool  # f_outer >= f_inner + 4


def check_increase(
    config: Configuration,
    tol: Tolerances = DEFAULT_TOL,
) -> IncreaseReport:
    """Peeling the boundary lowers the surface term by at least 4.

    Requires a connected diamond-threshold graph on at least 8 particles
    (``too-small`` below that, ``not-connected`` when split). The inner
    configuration may be empty or disconnected; its surface term is still
    the exact decomposition value (0 when empty).
    """
    if config.n < 8:
        raise TooSmallError("boundary peeling needs n >= 8")
    graph = build_edges(config, SQRT3_2, tol)
    fd = _face_data(graph)
    if fd.component_count != 1:
        raise ConnectivityError("boundary peeling needs a connected graph")
    f_outer = decompose(graph).f_surface
    keep = np.ones(config.n, dtype=bool)
    keep[boundary_particles(graph)] = False
    inner = Configuration(config.pos[keep], config.ori[keep])
    f_inner = Fraction(0) if inner.n == 0 else decompose(inner, SQRT3_2, tol).f_surface
    return IncreaseReport(
        f_outer=f_outer,
        f_inner=f_inner,
        inner_count=inner.n,
        ok=f_outer >= f_inner + 4,
    )
