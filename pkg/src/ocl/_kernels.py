"""Hot loops, jitted when numba is available.

Each kernel is written as numba-compatible plain Python so the same code
runs (slower) if numba is missing. Keep these free of Python objects.
"""

from __future__ import annotations

import math

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dep, but stay usable
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(f):
            return f

        return wrap


@njit(cache=True)
def unit_step_pairs(ks, order, d0, d1, d2):
    """Index pairs whose packed integer keys differ by one of three deltas.

    ``ks`` is the sorted key array and ``order`` the argsort that produced
    it; each delta is scanned with a two-pointer merge, so the whole search
    is linear. Pairs come back as two id arrays with i < j. The flag goes
    False when two entries share a key (coincident lattice sites).
    """
    n = ks.shape[0]
    for t in range(n - 1):
        if ks[t] == ks[t + 1]:
            return np.empty(0, np.int64), np.empty(0, np.int64), False
    deltas = np.empty(3, np.int64)
    deltas[0], deltas[1], deltas[2] = d0, d1, d2
    out_i = np.empty(3 * n, np.int64)
    out_j = np.empty(3 * n, np.int64)
    c = 0
    for dd in range(3):
        delta = deltas[dd]
        u = 0
        for t in range(n):
            tgt = ks[t] + delta
            while u < n and ks[u] < tgt:
                u += 1
            if u == n:
                break
            if ks[u] == tgt:
                a = order[t]
                b = order[u]
                if a > b:
                    a, b = b, a
                out_i[c] = a
                out_j[c] = b
                c += 1
    return out_i[:c].copy(), out_j[:c].copy(), True


@njit(cache=True)
def verify_bonds(pos, ori, ci, cj, gamma, eps_d, eps_a):
    """Distance and two-sided angular threshold tests on candidate pairs.

    Returns (keep mask, admissible flag); the flag goes False when any
    candidate pair sits below distance 1 - eps_d. A pair is kept when its
    distance is within eps_d of 1 and the unit direction clears gamma
    against both orientations in a common sense.
    """
    m = ci.shape[0]
    keep = np.zeros(m, np.bool_)
    ok = True
    thr = gamma - eps_a
    for t in range(m):
        i = ci[t]
        j = cj[t]
        dx = pos[j, 0] - pos[i, 0]
        dy = pos[j, 1] - pos[i, 1]
        dist = math.hypot(dx, dy)
        if dist < 1.0 - eps_d:
            ok = False
        if abs(dist - 1.0) <= eps_d:
            ux = dx / dist
            uy = dy / dist
            ai = ux * ori[i, 0] + uy * ori[i, 1]
            aj = ux * ori[j, 0] + uy * ori[j, 1]
            if (ai >= thr and aj >= thr) or (-ai >= thr and -aj >= thr):
                keep[t] = True
    return keep, ok


@njit(cache=True)
def lattice_rotation(edges, lat, n):
    """Half-edge arrays and the cw-successor map from exact lattice steps.

    Bond directions on the triangular lattice are the six unit steps, so the
    ccw rotation order at a vertex is a table lookup instead of an angular
    sort. Half-edges 2e and 2e+1 are edge e and its reverse; the successor
    of h continues the face walk: the cw-next out-half-edge after reversed h.
    """
    m = edges.shape[0]
    m2 = 2 * m
    src = np.empty(m2, np.int64)
    dst = np.empty(m2, np.int64)
    rank = np.empty(m2, np.int64)
    slot = np.full(6 * n, -1, np.int64)
    # ccw rank by embedded angle: (1,0)=0deg, (0,1)=60, (-1,1)=120,
    # (-1,0)=180, (0,-1)=240, (1,-1)=300; indexed by (da+1)*3 + db+1
    table = np.full(9, -1, np.int64)
    table[7] = 0
    table[5] = 1
    table[2] = 2
    table[1] = 3
    table[3] = 4
    table[6] = 5
    for e in range(m):
        i = edges[e, 0]
        j = edges[e, 1]
        da = lat[j, 0] - lat[i, 0]
        db = lat[j, 1] - lat[i, 1]
        r = table[(da + 1) * 3 + db + 1]
        h = 2 * e
        src[h] = i
        dst[h] = j
        rank[h] = r
        src[h + 1] = j
        dst[h + 1] = i
        rank[h + 1] = (r + 3) % 6
        slot[i * 6 + r] = h
        slot[j * 6 + (r + 3) % 6] = h + 1
    succ = np.empty(m2, np.int64)
    for h in range(m2):
        g = h ^ 1
        v = src[g]
        r = rank[g]
        for t in range(1, 7):
            h2 = slot[v * 6 + (r - t + 6) % 6]
            if h2 >= 0:
                succ[h] = h2
                break
    return src, dst, succ


@njit(cache=True)
def orbit_cycles_areas(succ, src, dst, px, py):
    """Cycles of the half-edge successor permutation plus signed areas.

    Returns (orbit id per half-edge, half-edges grouped by orbit in
    discovery order, group offsets, signed shoelace area per orbit, orbit
    count). Orbit ids follow discovery order, so ids are nondecreasing
    along the grouped array.
    """
    m2 = succ.shape[0]
    orbit = np.full(m2, -1, np.int64)
    walk = np.empty(m2, np.int64)
    starts = np.empty(m2 + 1, np.int64)
    areas = np.empty(m2, np.float64)
    k = 0
    p = 0
    for h0 in range(m2):
        if orbit[h0] >= 0:
            continue
        starts[k] = p
        acc = 0.0
        h = h0
        while orbit[h] < 0:
            orbit[h] = k
            walk[p] = h
            p += 1
            acc += px[src[h]] * py[dst[h]] - py[src[h]] * px[dst[h]]
            h = succ[h]
        areas[k] = 0.5 * acc
        k += 1
    starts[k] = p
    return orbit, walk, starts[: k + 1].copy(), areas[:k].copy(), k


@njit(cache=True)
def classify_graph(n, orbit, starts, kind, src):
    """Edge classes, boundary mask, and per-face walk stats from orbit kinds.

    ``kind`` holds one entry per orbit; faces are the entries equal to 1.
    Edge e sides on orbits of half-edges 2e and 2e+1: two distinct face
    sides = interior (0), same face twice = interior wire (2), one face
    side = boundary (1), none = exterior wire (3). A vertex is boundary
    when some incident half-edge lies on a non-face orbit, or when it has
    no incident edges at all.
    """
    m2 = orbit.shape[0]
    m = m2 // 2
    k = kind.shape[0]
    face_of_orbit = np.full(k, -1, np.int64)
    nf = 0
    for c in range(k):
        if kind[c] == 1:
            face_of_orbit[c] = nf
            nf += 1
    face_orbits = np.empty(nf, np.int64)
    per_gr_face = np.empty(nf, np.int64)
    for c in range(k):
        f = face_of_orbit[c]
        if f >= 0:
            face_orbits[f] = c
            per_gr_face[f] = starts[c + 1] - starts[c]
    edge_class = np.empty(m, np.int8)
    wire_int_face = np.zeros(nf, np.int64)
    for e in range(m):
        o1 = orbit[2 * e]
        o2 = orbit[2 * e + 1]
        f1 = kind[o1] == 1
        f2 = kind[o2] == 1
        if f1 and f2:
            if o1 != o2:
                edge_class[e] = 0
            else:
                edge_class[e] = 2
                wire_int_face[face_of_orbit[o1]] += 1
        elif f1 or f2:
            edge_class[e] = 1
        else:
            edge_class[e] = 3
    boundary_mask = np.zeros(n, np.bool_)
    seen = np.zeros(n, np.bool_)
    for h in range(m2):
        v = src[h]
        seen[v] = True
        if kind[orbit[h]] != 1:
            boundary_mask[v] = True
    for v in range(n):
        if not seen[v]:
            boundary_mask[v] = True
    return edge_class, boundary_mask, face_orbits, per_gr_face, wire_int_face


@njit(cache=True)
def union_find_labels(n, edges):
    """Connected-component count and labels in first-vertex order."""
    parent = np.arange(n)
    for e in range(edges.shape[0]):
        a = edges[e, 0]
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        b = edges[e, 1]
        while parent[b] != b:
            parent[b] = parent[parent[b]]
            b = parent[b]
        if a < b:
            parent[b] = a
        elif b < a:
            parent[a] = b
    labels = np.full(n, -1, np.int64)
    count = 0
    for v in range(n):
        r = v
        while parent[r] != r:
            r = parent[r]
        if labels[r] < 0:
            labels[r] = count
            count += 1
        labels[v] = labels[r]
    return count, labels


@njit(cache=True)
def winding_contains(poly, pt):
    """Crossing-number point-in-polygon test on a closed walk.

    ``poly`` is (k, 2); the walk closes implicitly. Segments traversed twice
    in opposite directions (wire spikes) cancel, so weakly simple walks are
    handled. Points on the boundary give an unspecified parity; callers must
    keep test points off the walk.
    """
    k = poly.shape[0]
    x, y = pt[0], pt[1]
    inside = False
    for i in range(k):
        x1, y1 = poly[i, 0], poly[i, 1]
        j = i + 1
        if j == k:
            j = 0
        x2, y2 = poly[j, 0], poly[j, 1]
        if (y1 > y) != (y2 > y):
            xc = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if xc > x:
                inside = not inside
    return inside
