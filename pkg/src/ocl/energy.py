"""Energy counts and the exact surface decomposition at the diamond threshold.

The energy of a configuration at threshold gamma is minus the number of
bonds. At gamma = sqrt(3)/2 the energy splits exactly into a bulk and a
surface term:

    E = -2n + F,   F = def/2 + per_gr/2 + 2*chi,

where ``def`` sums (per_gr(f) - 4) over faces with walk length above 4,
``per_gr`` is the graph perimeter (boundary edges once, exterior wires
twice), and ``chi = n - m + #faces``. F is computed as an exact rational
and the identity is asserted; a nonzero residual is a bug, never noise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.spatial import cKDTree

from .bondgraph import (
    BondGraph,
    EDGE_LABELS,
    _face_data,
    build_edges,
    euler_characteristics,
    graph_perimeter,
)
from .config import Configuration, Tolerances, DEFAULT_TOL
from .errors import DecompositionError, GammaError, UnsupportedGammaError

SQRT3_2 = math.sqrt(3.0) / 2.0

_GAMMA_MATCH = 1e-12  # decimal CLI input within this of sqrt(3)/2 counts as exact


def _as_graph(obj, gamma, tol) -> BondGraph:
    if isinstance(obj, BondGraph):
        return obj
    if gamma is None:
        raise GammaError("gamma required when passing a configuration")
    return build_edges(obj, gamma, tol)


def energy(config, gamma: float | None = None, tol: Tolerances = DEFAULT_TOL) -> int:
    """Minus the bond count; accepts a configuration or a built graph."""
    return -_as_graph(config, gamma, tol).m


def hr_energy(config: Configuration, tol: Tolerances = DEFAULT_TOL) -> int:
    """Hard-sphere contact energy: minus the number of unit-distance pairs,
    orientations ignored."""
    if config.n < 2:
        return 0
    pairs = cKDTree(config.pos).query_pairs(1.0 + tol.eps_dist, output_type="ndarray")
    if not pairs.size:
        return 0
    d = config.pos[pairs[:, 1]] - config.pos[pairs[:, 0]]
    dist = np.hypot(d[:, 0], d[:, 1])
    return -int(np.count_nonzero(np.abs(dist - 1.0) <= tol.eps_dist))


def hr_max_contacts(n: int) -> int:
    """Largest possible number of unit-distance contacts among n hard discs:
    floor(3n - sqrt(12n - 3)) for n >= 1."""
    if n < 1:
        return 0
    return int(math.floor(3 * n - math.sqrt(12 * n - 3) + 1e-12))


def n_gamma(gamma: float) -> int:
    """Smallest ring size whose chord-tangent angle clears the threshold:
    ceil(pi / arccos(gamma)), with a 1e-9 slack so exact ratios stay put."""
    if not (0.0 <= gamma < 1.0):
        raise GammaError(f"n_gamma needs gamma in [0, 1), got {gamma}")
    ratio = math.pi / math.acos(gamma)
    return max(3, int(math.ceil(ratio - 1e-9)))


@dataclass(frozen=True)
class EnergyReport:
    """Exact bookkeeping of the decomposition at gamma = sqrt(3)/2."""

    n: int
    gamma: float
    energy: int
    edge_count: int
    edge_counts: dict  # taxonomy name -> count
    per: int
    per_gr: int
    def_gr: int
    chi: int
    chi_euler: int
    face_count: int
    nsc_count: int
    rhombic_count: int  # faces with walk length exactly 4
    component_count: int
    f_surface: Fraction  # def/2 + per_gr/2 + 2*chi
    residual: int  # energy - (-2n + f_surface); always 0


def decompose(
    config, gamma: float | None = None, tol: Tolerances = DEFAULT_TOL
) -> EnergyReport:
    """Evaluate every term of the exact decomposition and assert it.

    Only supported at gamma = sqrt(3)/2 (within 1e-12); other thresholds
    raise ``unsupported-gamma``. A nonzero residual raises
    ``decomposition-violated``.
    """
    graph = _as_graph(config, SQRT3_2 if gamma is None else gamma, tol)
    if abs(graph.gamma - SQRT3_2) > _GAMMA_MATCH:
        raise UnsupportedGammaError(
            f"decomposition holds at gamma = sqrt(3)/2, got {graph.gamma}"
        )
    fd = _face_data(graph)
    per, per_gr = graph_perimeter(graph)
    euler = euler_characteristics(graph)
    big = fd.per_gr_face[fd.per_gr_face > 4]
    def_gr = int((big - 4).sum())
    rhombic = int(np.count_nonzero(fd.per_gr_face == 4))
    f_surface = Fraction(def_gr, 2) + Fraction(per_gr, 2) + 2 * euler.chi
    e = -graph.m
    residual = Fraction(e) - (Fraction(-2 * graph.n) + f_surface)
    if residual != 0:
        raise DecompositionError(
            f"residual {residual} (n={graph.n}, m={graph.m}, per_gr={per_gr}, "
            f"def={def_gr}, chi={euler.chi})"
        )
    counts = {
        name: int(np.count_nonzero(fd.edge_class == code))
        for code, name in enumerate(EDGE_LABELS)
    }
    return EnergyReport(
        n=graph.n,
        gamma=graph.gamma,
        energy=e,
        edge_count=graph.m,
        edge_counts=counts,
        per=per,
        per_gr=per_gr,
        def_gr=def_gr,
        chi=euler.chi,
        chi_euler=euler.chi_euler,
        face_count=euler.face_count,
        nsc_count=euler.nsc_count,
        rhombic_count=rhombic,
        component_count=euler.component_count,
        f_surface=f_surface,
        residual=0,
    )
