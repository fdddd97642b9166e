"""Seeded random configuration generators for the checker suites.

Everything is driven by a numpy Generator, so a fixed seed reproduces the
exact same sample on every run. Lattice growth happens in exact integer
coordinates; orientations are attached afterwards in one of several modes
chosen to stress different parts of the face/decomposition machinery.
"""

from __future__ import annotations

import math

import numpy as np

from .config import Configuration, rhombic_perturb
from .lattice import LatticeCoord, UNIT_STEPS, embed, neighbors

# lattice steps whose embedded direction is diagonal (bond-compatible with
# the vertical orientation at the diamond threshold)
_DIAG_STEPS = ((0, 1), (-1, 1), (0, -1), (1, -1))


def random_lattice_animal(n: int, rng: np.random.Generator) -> list[LatticeCoord]:
    """Connected n-site subset grown by uniform frontier attachment."""
    sites = {(0, 0)}
    frontier = set(neighbors(0, 0))
    while len(sites) < n:
        pick = sorted(frontier)[rng.integers(len(frontier))]
        sites.add(pick)
        frontier.discard(pick)
        for nb in neighbors(*pick):
            if nb not in sites:
                frontier.add(nb)
    return [LatticeCoord(*s) for s in sorted(sites)]


def random_rhombus_animal(cells: int, rng: np.random.Generator) -> list[LatticeCoord]:
    """Vertex set of a connected patch of rhombic cells.

    Cells live on the square lattice spanned by the two diagonal steps
    u = (0,1) and w = (-1,1); a cell (i, j) contributes the four corners
    i*u + j*w + {0, u, w, u+w}. The resulting configuration with vertical
    orientations has exactly those cells as faces, all rhombic.
    """
    patch = {(0, 0)}
    frontier = {(1, 0), (-1, 0), (0, 1), (0, -1)}
    while len(patch) < cells:
        pick = sorted(frontier)[rng.integers(len(frontier))]
        patch.add(pick)
        frontier.discard(pick)
        for di, dj in ((1, 0), (-1, 0), (0, 1), (0, -1)):
            nb = (pick[0] + di, pick[1] + dj)
            if nb not in patch:
                frontier.add(nb)
    verts = set()
    for i, j in patch:
        for du, dw in ((0, 0), (1, 0), (0, 1), (1, 1)):
            ii, jj = i + du, j + dw
            verts.add((0 * ii - 1 * jj, ii + jj))  # ii*u + jj*w in (a, b) coords
    return [LatticeCoord(*v) for v in sorted(verts)]


def attach_wires(
    coords: list[LatticeCoord], rng: np.random.Generator, count: int, length: int = 2
) -> list[LatticeCoord]:
    """Grow dangling antenna paths off the set along diagonal steps.

    Each antenna point touches exactly one existing point, so with the
    vertical orientation the new edges are exterior wires.
    """
    sites = {tuple(c) for c in coords}
    out = list(coords)
    for _ in range(count):
        base = out[rng.integers(len(out))]
        tip = tuple(base)
        for _ in range(length):
            options = []
            for da, db in _DIAG_STEPS:
                cand = (tip[0] + da, tip[1] + db)
                if cand in sites:
                    continue
                touching = sum(1 for nb in neighbors(*cand) if nb in sites)
                if touching == 1:
                    options.append(cand)
            if not options:
                break
            tip = sorted(options)[rng.integers(len(options))]
            sites.add(tip)
            out.append(LatticeCoord(*tip))
    return out


def orientation_field(
    coords: list[LatticeCoord], rng: np.random.Generator, mode: str
) -> np.ndarray:
    n = len(coords)
    if mode == "vertical":
        return np.tile((0.0, 1.0), (n, 1))
    if mode == "common":
        a = rng.uniform(0.0, 2.0 * math.pi)
        return np.tile((math.cos(a), math.sin(a)), (n, 1))
    if mode == "random":
        a = rng.uniform(0.0, 2.0 * math.pi, n)
        return np.column_stack([np.cos(a), np.sin(a)])
    if mode == "noisy-vertical":
        a = math.pi / 2 + rng.normal(0.0, 0.2, n)
        return np.column_stack([np.cos(a), np.sin(a)])
    if mode == "patchwork":
        # vertical on the left half, rotated by pi/3 on the right: bonds
        # survive inside each patch but mostly break across the seam
        xs = embed(np.asarray(coords))[:, 0]
        a = np.where(xs <= np.median(xs), math.pi / 2, math.pi / 2 + math.pi / 3)
        return np.column_stack([np.cos(a), np.sin(a)])
    raise ValueError(f"unknown orientation mode {mode!r}")


def random_unit_cluster(n: int, rng: np.random.Generator) -> Configuration:
    """Off-lattice cluster grown by unit-distance attachment.

    Particles attach at a uniform random angle at distance exactly 1 from
    a random existing particle, rejecting hard-core violations. Rich in
    unit pairs at generic angles; orientations are uniform random.
    """
    pos = np.zeros((n, 2))
    placed = 1
    while placed < n:
        base = int(rng.integers(placed))
        ang = rng.uniform(0.0, 2.0 * math.pi)
        cand = pos[base] + (math.cos(ang), math.sin(ang))
        d = np.hypot(*(pos[:placed] - cand).T)
        if d.min() >= 1.0 - 1e-12:
            pos[placed] = cand
            placed += 1
    a = rng.uniform(0.0, 2.0 * math.pi, n)
    ori = np.column_stack([np.cos(a), np.sin(a)])
    return Configuration(pos, ori, label="cluster")


_DECOMP_MODES = (
    ("animal", "vertical", False),
    ("animal", "patchwork", False),
    ("animal", "noisy-vertical", False),
    ("animal", "random", False),
    ("rhombus", "vertical", False),
    ("rhombus", "vertical", True),  # wire-decorated
    ("rhombus", "perturbed", False),
    ("animal", "common", True),
)


def decomposition_sample(index: int, seed: int) -> Configuration:
    """Deterministic mixed-mode sample for the decomposition suite."""
    rng = np.random.default_rng(np.random.SeedSequence((seed, index)))
    kind, mode, wires = _DECOMP_MODES[index % len(_DECOMP_MODES)]
    size = int(rng.integers(2, 45))
    if kind == "animal":
        coords = random_lattice_animal(size, rng)
    else:
        coords = random_rhombus_animal(max(1, size // 3), rng)
    if wires:
        coords = attach_wires(coords, rng, count=int(rng.integers(1, 4)))
    if mode == "perturbed":
        cfg = Configuration.from_lattice(coords, (0.0, 1.0))
        # the stretched (+-1, -+2) second-neighbor distance is
        # sqrt(3 - rho^2 - 2 rho), which stays >= 1 only for
        # rho <= sqrt(3) - 1; cap below that to keep samples admissible
        return rhombic_perturb(cfg, float(rng.uniform(0.0, 0.7)))
    ori = orientation_field(coords, rng, mode)
    return Configuration(embed(np.asarray(coords)), ori, label=f"sample{index}")


def connected_sample(
    index: int, seed: int, min_n: int = 8, max_n: int = 60
) -> Configuration:
    """Bond-connected sample at the diamond threshold (vertical field on a
    rhombus-cell patch, occasionally wire-decorated)."""
    rng = np.random.default_rng(np.random.SeedSequence((seed, index, 7)))
    cells = int(rng.integers(max(1, min_n // 2), max(2, max_n // 2)))
    coords = random_rhombus_animal(cells, rng)
    if index % 3 == 0:
        coords = attach_wires(coords, rng, count=int(rng.integers(0, 3)))
    return Configuration.from_lattice(coords, (0.0, 1.0), label=f"conn{index}")
