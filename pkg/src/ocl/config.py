"""Particle configurations: positions plus unit orientations.

A configuration is n discs of diameter 1; a state is admissible when all
pairwise center distances are >= 1 (within tolerance) and every orientation
is a unit vector. Positions and orientations are stored as (n, 2) float64
arrays; n = 0 is allowed and means the empty configuration.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import OrientationError, RhoError
from .lattice import embed


@dataclass(frozen=True)
class Tolerances:
    """Numerical slack for distance and angular threshold tests.

    Both must be strictly positive and below 1e-3; the defaults are tight
    enough that exact-lattice inputs are classified exactly.
    """

    eps_dist: float = 1e-9
    eps_angle: float = 1e-9

    def __post_init__(self):
        for name in ("eps_dist", "eps_angle"):
            v = getattr(self, name)
            if not (0.0 < v < 1e-3):
                raise ValueError(f"{name} must lie in (0, 1e-3), got {v}")


DEFAULT_TOL = Tolerances()


@dataclass(frozen=True)
class Particle:
    """One disc: center position and unit orientation vector."""

    pos: tuple[float, float]
    ori: tuple[float, float]


@dataclass(frozen=True)
class Configuration:
    """n particles; ``pos`` and ``ori`` are (n, 2) float64 arrays.

    ``lattice`` optionally records the integer triangular-lattice coordinates
    the positions were embedded from. It is a cache, not part of the state:
    constructors that move positions off the exact embedding drop it.
    """

    pos: np.ndarray
    ori: np.ndarray
    label: str = ""
    lattice: np.ndarray | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        pos = np.ascontiguousarray(np.asarray(self.pos, dtype=np.float64))
        ori = np.ascontiguousarray(np.asarray(self.ori, dtype=np.float64))
        pos = pos.reshape(-1, 2)
        ori = ori.reshape(-1, 2)
        if pos.shape != ori.shape:
            raise ValueError("pos and ori must have matching shapes")
        pos.setflags(write=False)
        ori.setflags(write=False)
        object.__setattr__(self, "pos", pos)
        object.__setattr__(self, "ori", ori)
        if self.lattice is not None:
            lat = np.ascontiguousarray(np.asarray(self.lattice, dtype=np.int64))
            lat = lat.reshape(-1, 2)
            if lat.shape != pos.shape:
                raise ValueError("lattice coordinates must match pos shape")
            lat.setflags(write=False)
            object.__setattr__(self, "lattice", lat)

    @property
    def n(self) -> int:
        return self.pos.shape[0]

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> Particle:
        return Particle(tuple(self.pos[i]), tuple(self.ori[i]))

    @classmethod
    def from_particles(cls, particles, label: str = "") -> "Configuration":
        particles = list(particles)
        if not particles:
            return cls.empty(label)
        pos = np.array([p.pos for p in particles], dtype=np.float64)
        ori = np.array([p.ori for p in particles], dtype=np.float64)
        return cls(pos, ori, label)

    @classmethod
    def empty(cls, label: str = "") -> "Configuration":
        z = np.zeros((0, 2))
        return cls(z, z.copy(), label)

    @classmethod
    def from_lattice(cls, coords, ori=(0.0, 1.0), label: str = "") -> "Configuration":
        """Particles at embedded lattice coordinates with a uniform orientation."""
        coords = np.asarray(list(coords) if not isinstance(coords, np.ndarray) else coords)
        if coords.size == 0:
            return cls.empty(label)
        coords = coords.astype(np.int64).reshape(-1, 2)
        pos = embed(coords)
        o = np.tile(np.asarray(ori, dtype=np.float64), (len(coords), 1))
        return cls(pos, o, label, lattice=coords)

    def with_ori(self, ori) -> "Configuration":
        ori = np.asarray(ori, dtype=np.float64)
        if ori.ndim == 1:
            ori = np.tile(ori, (self.n, 1))
        return Configuration(self.pos.copy(), ori, self.label, lattice=self.lattice)


def unit_orientation_defect(config: Configuration) -> float:
    """Largest deviation of an orientation norm from 1 (0.0 when empty)."""
    if config.n == 0:
        return 0.0
    return float(np.abs(np.linalg.norm(config.ori, axis=1) - 1.0).max())


def min_pair_distance(config: Configuration) -> float:
    """Smallest pairwise distance, inf for n < 2."""
    if config.n < 2:
        return float("inf")
    if config.n <= 64:
        d = config.pos[:, None, :] - config.pos[None, :, :]
        dist = np.sqrt((d * d).sum(-1))
        iu = np.triu_indices(config.n, 1)
        return float(dist[iu].min())
    from scipy.spatial import cKDTree

    tree = cKDTree(config.pos)
    d, _ = tree.query(config.pos, k=2)
    return float(d[:, 1].min())


def is_admissible(config: Configuration, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Hard-core check: pairwise distances >= 1 - eps and unit orientations."""
    if unit_orientation_defect(config) > tol.eps_angle * 10:
        return False
    return min_pair_distance(config) >= 1.0 - tol.eps_dist


def require_admissible(config: Configuration, tol: Tolerances = DEFAULT_TOL) -> None:
    from .errors import AdmissibilityError

    if unit_orientation_defect(config) > tol.eps_angle * 10:
        raise OrientationError("orientation norms deviate from 1 beyond tolerance")
    if min_pair_distance(config) < 1.0 - tol.eps_dist:
        raise AdmissibilityError("pairwise distance below 1")


def apply_rigid_motion(
    config: Configuration,
    angle: float = 0.0,
    translation=(0.0, 0.0),
    flip: bool = False,
) -> Configuration:
    """Rotate by ``angle``, optionally reflect across the x-axis first,
    then translate. Orientations transform with the linear part only."""
    c, s = np.cos(angle), np.sin(angle)
    rot = np.array([[c, -s], [s, c]])
    if flip:
        rot = rot @ np.array([[1.0, 0.0], [0.0, -1.0]])
    t = np.asarray(translation, dtype=np.float64)
    return Configuration(config.pos @ rot.T + t, config.ori @ rot.T, config.label)


def stretch_matrix(rho: float) -> np.ndarray:
    """Diagonal map stretching the lattice horizontally while keeping the
    diagonal lattice step at exactly unit length.

    x-factor 1 + rho, y-factor sqrt(3 - rho^2 - 2 rho)/sqrt(3); rho in [0, 1).
    """
    if not (0.0 <= rho < 1.0):
        raise RhoError(f"rho must lie in [0, 1), got {rho}")
    fx = 1.0 + rho
    fy = np.sqrt(3.0 - rho * rho - 2.0 * rho) / np.sqrt(3.0)
    return np.diag([fx, fy])


def rhombic_perturb(config: Configuration, rho: float) -> Configuration:
    """Apply the horizontal stretch to positions (orientations unchanged).

    Intended for configurations sitting on the unit triangular lattice: the
    image of a lattice diagonal step keeps length exactly 1 for every rho,
    while the horizontal step stretches to 1 + rho.
    """
    m = stretch_matrix(rho)
    return Configuration(config.pos @ m.T, config.ori.copy(), config.label)
