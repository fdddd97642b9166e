"""Compactness diagnostics on the 1/sqrt(n) rescaling.

The empirical measures of interest put mass 1/n at each rescaled particle
(tagged by its orientation) and mass 1/n at each rhombic face center
(tagged by the face orientation). A particle sitting on 4 rhombic faces
contributes exactly the average of its faces, so the total-variation
distance between the two measures is controlled by the count of particles
with fewer than 4 rhombic faces:

    mass_residual = (1/n) sum_x |v(x) - (1/4) sum_{rhombic f at x} v(f)|
                  <= z_count / n.

The rhombic region area scales like #rhombi * (sqrt(3)/2) / n and its
free boundary length like #one-sided edges / sqrt(n).
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass

import numpy as np

from .bondgraph import ORBIT_FACE, _face_data, build_edges, extract_faces
from .config import Configuration, Tolerances, DEFAULT_TOL
from .energy import SQRT3_2

_RHOMBUS_AREA = math.sqrt(3.0) / 2.0


@dataclass(frozen=True)
class MeasureDiagnostics:
    n: int
    energy: int
    scaled_energy: float  # (E + 2n)/sqrt(n)
    z_count: int  # particles not surrounded by 4 rhombic faces
    z_over_sqrt_n: float
    mass_residual: float
    rhombic_face_count: int
    rhombic_area: float  # #rhombi * sqrt(3)/2 / n
    rhombic_perimeter: float  # edges with exactly one rhombic side, / sqrt(n)


def diagnose(
    config: Configuration,
    gamma: float = SQRT3_2,
    tol: Tolerances = DEFAULT_TOL,
) -> MeasureDiagnostics:
    graph = build_edges(config, gamma, tol)
    n = graph.n
    if n == 0:
        return MeasureDiagnostics(0, 0, 0.0, 0, 0.0, 0.0, 0, 0.0, 0.0)
    faces = extract_faces(graph)
    fd = _face_data(graph)

    rh_count_at = np.zeros(n, dtype=np.int64)
    v_sum = np.zeros((n, 2))
    is_rh = np.zeros(len(faces.faces), dtype=bool)
    for f in faces.faces:
        if not f.is_rhombus:
            continue
        is_rh[f.index] = True
        for v in set(f.vertices):
            rh_count_at[v] += 1
            v_sum[v] += f.orientation
    z = int(np.count_nonzero(rh_count_at != 4))
    resid = float(np.linalg.norm(config.ori - v_sum / 4.0, axis=1).sum() / n)

    # edges with exactly one rhombic face side bound the rhombic region
    rh_of_orbit = np.zeros(len(fd.orbit_kind), dtype=bool)
    if len(fd.face_orbits):
        rh_of_orbit[fd.face_orbits] = is_rh
    if graph.m:
        s1 = rh_of_orbit[fd.orbit[0::2]]
        s2 = rh_of_orbit[fd.orbit[1::2]]
        one_sided = int(np.count_nonzero(s1 ^ s2))
    else:
        one_sided = 0

    sq = math.sqrt(n)
    e = graph.energy
    return MeasureDiagnostics(
        n=n,
        energy=e,
        scaled_energy=(e + 2 * n) / sq,
        z_count=z,
        z_over_sqrt_n=z / sq,
        mass_residual=resid,
        rhombic_face_count=int(is_rh.sum()),
        rhombic_area=int(is_rh.sum()) * _RHOMBUS_AREA / n,
        rhombic_perimeter=one_sided / sq,
    )


@dataclass(frozen=True)
class DensityField:
    """Raster of the rhombic-region orientation field in 1/sqrt(n) coords.

    ``values[iy, ix]`` is the face orientation covering the cell center,
    or (0, 0) outside the rhombic region."""

    x0: float
    y0: float
    step: float
    values: np.ndarray  # (H, W, 2)
    n: int

    @property
    def coverage(self) -> float:
        """Area covered by rhombic faces, cell-counting estimate."""
        hit = np.any(self.values != 0.0, axis=2)
        return float(hit.sum()) * self.step * self.step


def density_profile(
    config: Configuration,
    gamma: float = SQRT3_2,
    step: float = 0.02,
    tol: Tolerances = DEFAULT_TOL,
) -> DensityField:
    graph = build_edges(config, gamma, tol)
    n = graph.n
    if n == 0:
        return DensityField(0.0, 0.0, step, np.zeros((1, 1, 2)), 0)
    scale = 1.0 / math.sqrt(n)
    pos = config.pos * scale
    x0, y0 = pos.min(axis=0) - step
    x1, y1 = pos.max(axis=0) + step
    w = max(1, int(math.ceil((x1 - x0) / step)))
    h = max(1, int(math.ceil((y1 - y0) / step)))
    values = np.zeros((h, w, 2))

    faces = extract_faces(graph)
    for f in faces.faces:
        if not f.is_rhombus:
            continue
        quad = pos[np.asarray(f.vertices[:4], dtype=np.int64)]  # ccw walk order
        ix0 = max(0, int((quad[:, 0].min() - x0) / step) - 1)
        ix1 = min(w - 1, int((quad[:, 0].max() - x0) / step) + 1)
        iy0 = max(0, int((quad[:, 1].min() - y0) / step) - 1)
        iy1 = min(h - 1, int((quad[:, 1].max() - y0) / step) + 1)
        if ix1 < ix0 or iy1 < iy0:
            continue
        xs = x0 + (np.arange(ix0, ix1 + 1) + 0.5) * step
        ys = y0 + (np.arange(iy0, iy1 + 1) + 0.5) * step
        gx, gy = np.meshgrid(xs, ys)
        inside = np.ones(gx.shape, dtype=bool)
        for k in range(4):
            ax, ay = quad[k]
            bx, by = quad[(k + 1) % 4]
            cross = (bx - ax) * (gy - ay) - (by - ay) * (gx - ax)
            inside &= cross >= 0.0
        iy, ix = np.nonzero(inside)
        values[iy0 + iy, ix0 + ix, 0] = f.orientation[0]
        values[iy0 + iy, ix0 + ix, 1] = f.orientation[1]
    return DensityField(float(x0), float(y0), step, values, n)


def export_density_csv(field: DensityField) -> str:
    """x,y,vx,vy rows for every grid cell (deterministic formatting)."""
    buf = io.StringIO()
    buf.write("x,y,vx,vy\n")
    h, w, _ = field.values.shape
    for iy in range(h):
        y = field.y0 + (iy + 0.5) * field.step
        for ix in range(w):
            x = field.x0 + (ix + 0.5) * field.step
            vx, vy = (float(v) for v in field.values[iy, ix])
            buf.write(f"{x:.6f},{y:.6f},{vx!r},{vy!r}\n")
    return buf.getvalue()


def diagnostics_csv(rows: list[MeasureDiagnostics]) -> str:
    cols = (
        "n",
        "energy",
        "scaled_energy",
        "z_count",
        "z_over_sqrt_n",
        "mass_residual",
        "rhombic_face_count",
        "rhombic_area",
        "rhombic_perimeter",
    )
    buf = io.StringIO()
    buf.write(",".join(cols) + "\n")
    for r in rows:
        buf.write(",".join(repr(getattr(r, c)) for c in cols) + "\n")
    return buf.getvalue()
