"""Unit triangular lattice: integer coordinates, embedding, and symmetries.

A lattice point is an integer pair ``(a, b)`` standing for ``a*e1 + b*e2``
with ``e1 = (1, 0)`` and ``e2 = (1/2, sqrt(3)/2)``. The squared Euclidean
norm of ``(a, b)`` is the integer quadratic form ``a*a + a*b + b*b``, so
unit bonds are exactly the six neighbors with ``a*a + a*b + b*b == 1``.
All enumeration work stays in integers; floats appear only at embedding.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import RegionError

SQRT3 = float(np.sqrt(3.0))
HALF_SQRT3 = SQRT3 / 2.0

# the six unit steps, counterclockwise from (1, 0)
UNIT_STEPS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))


class LatticeCoord(NamedTuple):
    a: int
    b: int


def squared_norm(a: int, b: int) -> int:
    """Exact squared length of the lattice vector (a, b)."""
    return a * a + a * b + b * b


def embed(coords) -> np.ndarray:
    """Map integer lattice coordinates to plane points, shape (n, 2).

    Accepts an (n, 2) array-like of integers or a single pair.
    """
    arr = np.asarray(coords, dtype=np.float64)
    single = arr.ndim == 1
    arr = np.atleast_2d(arr)
    out = np.empty_like(arr)
    out[:, 0] = arr[:, 0] + 0.5 * arr[:, 1]
    out[:, 1] = HALF_SQRT3 * arr[:, 1]
    return out[0] if single else out


def unembed(points) -> np.ndarray:
    """Inverse of :func:`embed`; returns float lattice coordinates."""
    pts = np.atleast_2d(np.asarray(points, dtype=np.float64))
    b = pts[:, 1] / HALF_SQRT3
    a = pts[:, 0] - 0.5 * b
    return np.column_stack([a, b])


def nearest_lattice_point(point) -> LatticeCoord:
    """Closest lattice point to a plane point (ties broken deterministically).

    Rounds the fractional coordinates and checks the four surrounding
    candidates in the embedded metric.
    """
    ab = unembed(point)[0]
    a0, b0 = np.floor(ab).astype(int)
    best = None
    p = np.asarray(point, dtype=np.float64)
    for da in (0, 1):
        for db in (0, 1):
            cand = (a0 + da, b0 + db)
            d = float(np.hypot(*(embed(cand) - p)))
            key = (d, cand)
            if best is None or key < best:
                best = key
    return LatticeCoord(*best[1])


def lattice_patch(vertices) -> list[LatticeCoord]:
    """All lattice points inside the closed convex hull of ``vertices``.

    ``vertices`` is an (k, 2) array-like of plane points, k >= 3 and not all
    collinear. Output is sorted by (b, a). Raises ``unbounded-region`` for
    degenerate input; a region containing no lattice point gives [].
    """
    verts = np.atleast_2d(np.asarray(vertices, dtype=np.float64))
    if len(verts) < 3 or not np.all(np.isfinite(verts)):
        raise RegionError("region needs >= 3 finite vertices")
    from scipy.spatial import ConvexHull, QhullError

    try:
        hull = ConvexHull(verts)
    except QhullError as exc:
        raise RegionError(f"degenerate region: {exc}") from None

    # half-plane representation: eq . (x, y, 1) <= 0 inside
    eqs = hull.equations
    lo = np.floor(unembed(verts).min(axis=0)).astype(int) - 1
    hi = np.ceil(unembed(verts).max(axis=0)).astype(int) + 1
    aa, bb = np.meshgrid(
        np.arange(lo[0], hi[0] + 1), np.arange(lo[1], hi[1] + 1), indexing="ij"
    )
    ab = np.column_stack([aa.ravel(), bb.ravel()])
    pts = embed(ab)
    ok = np.all(pts @ eqs[:, :2].T + eqs[:, 2] <= 1e-9, axis=1)
    sel = ab[ok]
    order = np.lexsort((sel[:, 0], sel[:, 1]))
    return [LatticeCoord(int(a), int(b)) for a, b in sel[order]]


def _rot60(a: int, b: int) -> tuple[int, int]:
    return (-b, a + b)


def _mirror(a: int, b: int) -> tuple[int, int]:
    # reflection across the x-axis in embedded coordinates
    return (a + b, -b)


def symmetry_images(coords: list[tuple[int, int]]) -> list[list[tuple[int, int]]]:
    """The 12 point-group images (6 rotations x optional mirror)."""
    out = []
    for mirror in (False, True):
        cur = [_mirror(a, b) for a, b in coords] if mirror else list(coords)
        for _ in range(6):
            out.append(cur)
            cur = [_rot60(a, b) for a, b in cur]
    return out


def canonical_form(coords) -> tuple[tuple[int, int], ...]:
    """Translation- and symmetry-invariant key for a finite lattice set."""
    best = None
    for img in symmetry_images(list(coords)):
        amin = min(a for a, _ in img)
        bmin = min(b for _, b in img)
        key = tuple(sorted((a - amin, b - bmin) for a, b in img))
        if best is None or key < best:
            best = key
    return best


def neighbors(a: int, b: int) -> list[tuple[int, int]]:
    """The six unit-distance lattice neighbors."""
    return [(a + da, b + db) for da, db in UNIT_STEPS]
