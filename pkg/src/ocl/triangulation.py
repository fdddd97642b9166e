"""Triangulation of face walks by deterministic ear clipping.

A face is described by its closed boundary walk (interior wires traversed
twice). Clipping works on the walk, so the count identities hold with the
walk length per_gr(f) rather than the distinct-edge count:

    diagonals added = per_gr(f) - 3,   triangles = per_gr(f) - 2.

A diagonal is valid when its open segment crosses no walk edge, contains
no walk vertex, and has its midpoint strictly inside the remaining region.
Ears are tried first in walk order; if none clips (possible only for
degenerate walks), all chords are tried; if nothing is valid the walk is
not triangulable and ``triangulation-failed`` is raised.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import winding_contains
from .bondgraph import BondGraph, Face
from .errors import TriangulationError

_EPS = 1e-9


@dataclass(frozen=True)
class TriangulationResult:
    face_index: int
    added_edges: tuple[tuple[int, int], ...]  # particle-id pairs, creation order
    triangles: tuple[tuple[int, int, int], ...]
    triangle_count: int


def _point_on_open_segment(p, a, b) -> bool:
    ab = b - a
    ap = p - a
    L2 = ab @ ab
    t = (ap @ ab) / L2
    if t <= _EPS or t >= 1.0 - _EPS:
        return False
    d = ap - t * ab
    return (d @ d) < _EPS * _EPS * max(L2, 1.0)


def _orient(a, b, c) -> float:
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _proper_cross(p1, p2, p3, p4) -> bool:
    """Interiors of the two segments intersect (exact sign test; shared
    endpoints and touches land in the other validity checks)."""
    d1, d2 = _orient(p3, p4, p1), _orient(p3, p4, p2)
    d3, d4 = _orient(p1, p2, p3), _orient(p1, p2, p4)
    return d1 * d2 < 0.0 and d3 * d4 < 0.0


def _strictly_inside_triangle(p, a, b, c) -> bool:
    d1, d2, d3 = _orient(a, b, p), _orient(b, c, p), _orient(c, a, p)
    return (d1 > 0.0 and d2 > 0.0 and d3 > 0.0) or (
        d1 < 0.0 and d2 < 0.0 and d3 < 0.0
    )


def _diagonal_valid(walk_ids, poly, i, j) -> bool:
    """Chord between walk slots i < j of the current walk polygon."""
    k = len(walk_ids)
    if walk_ids[i] == walk_ids[j]:
        return False
    a, b = poly[i], poly[j]
    for t in range(k):
        u = (t + 1) % k
        if _proper_cross(a, b, poly[t], poly[u]):
            return False
    for t in range(k):
        if walk_ids[t] in (walk_ids[i], walk_ids[j]):
            continue
        if _point_on_open_segment(poly[t], a, b):
            return False
    mid = 0.5 * (a + b)
    for t in range(k):
        u = (t + 1) % k
        if _point_on_open_segment(mid, poly[t], poly[u]):
            return False
    return bool(winding_contains(poly, mid))


def _clip(walk_ids: list, poly: np.ndarray, out_edges: list, out_tris: list) -> None:
    k = len(walk_ids)
    if k < 3:
        raise TriangulationError("walk shrank below a triangle")
    if k == 3:
        if len(set(walk_ids)) < 3:
            raise TriangulationError(f"degenerate triangle in walk {walk_ids}")
        out_tris.append(tuple(walk_ids))
        return
    for i in range(k):
        a, b = (i - 1) % k, (i + 1) % k
        if not _diagonal_valid(walk_ids, poly, *sorted((a, b))):
            continue
        # a wire tip (or any revisited vertex) strictly inside the candidate
        # ear never crosses the chord, so it needs its own rejection test
        corners = (walk_ids[a], walk_ids[i], walk_ids[b])
        if any(
            walk_ids[t] not in corners
            and _strictly_inside_triangle(poly[t], poly[a], poly[i], poly[b])
            for t in range(k)
        ):
            continue
        out_edges.append(
            (min(walk_ids[a], walk_ids[b]), max(walk_ids[a], walk_ids[b]))
        )
        out_tris.append((walk_ids[a], walk_ids[i], walk_ids[b]))
        del walk_ids[i]
        _clip(walk_ids, np.delete(poly, i, axis=0), out_edges, out_tris)
        return
    # no ear: split on the first valid chord and recurse on both halves
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            if _diagonal_valid(walk_ids, poly, i, j):
                out_edges.append(
                    (min(walk_ids[i], walk_ids[j]), max(walk_ids[i], walk_ids[j]))
                )
                ids1, poly1 = walk_ids[i : j + 1], poly[i : j + 1]
                ids2 = walk_ids[j:] + walk_ids[: i + 1]
                poly2 = np.vstack([poly[j:], poly[: i + 1]])
                _clip(list(ids1), poly1, out_edges, out_tris)
                _clip(list(ids2), poly2, out_edges, out_tris)
                return
    raise TriangulationError(f"no valid diagonal in walk {walk_ids}")


def triangulate_face(graph: BondGraph, face: Face) -> TriangulationResult:
    """Triangulate one face walk; see the module docstring for the counts."""
    ids = list(face.vertices)
    poly = graph.config.pos[np.asarray(ids, dtype=np.int64)].copy()
    edges: list[tuple[int, int]] = []
    tris: list[tuple[int, int, int]] = []
    _clip(ids, poly, edges, tris)
    expected = face.per_gr - 2
    if len(tris) != expected or len(edges) != face.per_gr - 3:
        raise TriangulationError(
            f"count mismatch: {len(tris)} triangles, {len(edges)} diagonals "
            f"for walk length {face.per_gr}"
        )
    return TriangulationResult(
        face_index=face.index,
        added_edges=tuple(edges),
        triangles=tuple(tris),
        triangle_count=len(tris),
    )
