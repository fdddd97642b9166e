"""Simulated-annealing kernel. numba-jitted when available; the same code
runs as plain Python otherwise (slow but identical random stream)."""

from __future__ import annotations

import numpy as np

from ._kernels import njit

SQRT3_2 = np.sqrt(3.0) / 2.0


@njit(cache=True)
def _local_count(i, x, y, vx_i, vy_i, pos, vx, vy, thr, eps_d, n):
    """Bond count of a trial particle i at (x, y) against everyone else.

    Returns -1 when the trial position violates the hard-core constraint.
    """
    cnt = 0
    lo = (1.0 - eps_d) * (1.0 - eps_d)
    for j in range(n):
        if j == i:
            continue
        dx = pos[j, 0] - x
        dy = pos[j, 1] - y
        d2 = dx * dx + dy * dy
        if d2 < lo:
            return -1
        if d2 > 1.1025:  # (1 + 0.05)^2, cheap reject far beyond tolerance
            continue
        dist = np.sqrt(d2)
        if abs(dist - 1.0) > eps_d:
            continue
        ux = dx / dist
        uy = dy / dist
        ai = ux * vx_i + uy * vy_i
        aj = ux * vx[j] + uy * vy[j]
        if (ai >= thr and aj >= thr) or (-ai >= thr and -aj >= thr):
            cnt += 1
    return cnt


@njit(cache=True)
def _snap(x, y):
    """Nearest unit-triangular-lattice point (rows at sqrt(3)/2 spacing)."""
    b = y / SQRT3_2
    a = x - 0.5 * b
    best_x, best_y, best_d = 0.0, 0.0, 1e300
    for da in range(2):
        for db in range(2):
            aa = np.floor(a) + da
            bb = np.floor(b) + db
            px = aa + 0.5 * bb
            py = SQRT3_2 * bb
            d = (px - x) ** 2 + (py - y) ** 2
            if d < best_d:
                best_x, best_y, best_d = px, py, d
    return best_x, best_y


@njit(cache=True)
def anneal_run(
    n,
    gamma,
    eps_d,
    eps_a,
    iters,
    seed,
    sigma,
    sigma_th,
    t0,
    cooling,
    w_disp,
    w_rot,
    w_snap,
    init_mode,
):
    """One annealing chain; returns (best_E, best_pos, best_theta,
    trace_iters, trace_energies, trace_len, final_E).

    init_mode 0/1: random sequential insertion. 2: straight unit chain.
    3: regular unit-side polygon with tangent orientations (random below
    n = 3). Structured starts are ordinary multi-start practice here; an
    infeasible start simply melts (a too-small polygon has no bonds at
    all), so they bias nothing beyond the initial state.
    """
    np.random.seed(seed)
    two_pi = 2.0 * np.pi
    thr = gamma - eps_a

    pos = np.empty((n, 2))
    th = np.empty(n)
    if init_mode == 2:
        for j in range(n):
            pos[j, 0] = float(j)
            pos[j, 1] = 0.0
            th[j] = 0.0
    elif init_mode == 3 and n >= 3:
        r = 0.5 / np.sin(np.pi / n)
        for j in range(n):
            phi = two_pi * j / n
            pos[j, 0] = r * np.cos(phi)
            pos[j, 1] = r * np.sin(phi)
            th[j] = (phi + 0.5 * np.pi) % two_pi
    else:
        box = max(2.0, 1.3 * np.sqrt(n))
        placed = 0
        attempts = 0
        while placed < n:
            x = np.random.uniform(0.0, box)
            y = np.random.uniform(0.0, box)
            ok = True
            for j in range(placed):
                dx = x - pos[j, 0]
                dy = y - pos[j, 1]
                if dx * dx + dy * dy < 1.000001:
                    ok = False
                    break
            if ok:
                pos[placed, 0] = x
                pos[placed, 1] = y
                th[placed] = np.random.uniform(0.0, two_pi)
                placed += 1
            else:
                attempts += 1
                if attempts > 200 * (n + 1):
                    box *= 1.25
                    attempts = 0

    vx = np.cos(th)
    vy = np.sin(th)
    e = 0
    for i in range(n):
        c = _local_count(i, pos[i, 0], pos[i, 1], vx[i], vy[i], pos, vx, vy, thr, eps_d, n)
        e -= c
    e //= 2

    best_e = e
    best_pos = pos.copy()
    best_th = th.copy()
    cap = 4 * n + 64
    trace_it = np.zeros(cap, np.int64)
    trace_en = np.zeros(cap, np.int64)
    trace_it[0] = 0
    trace_en[0] = e
    tlen = 1

    t = t0
    pi_6 = np.pi / 6.0
    nbr = np.empty(n, np.int64)
    for it in range(iters):
        t *= cooling
        i = np.random.randint(0, n)
        u = np.random.random()
        nx, ny, nth = pos[i, 0], pos[i, 1], th[i]
        if u < w_disp:
            nx += sigma * np.random.standard_normal()
            ny += sigma * np.random.standard_normal()
        elif u < w_disp + w_rot:
            # The threshold energy is flat in the orientation except at the
            # bond thresholds themselves, so mix diffusive rotations with
            # two constructive proposals: the exact bisector of a pair of
            # unit-distance neighbours (optimal for a vertex bonded on both
            # sides of its orientation) and the pi/6 grid (every lattice
            # bond direction or sector bisector).
            u2 = np.random.random()
            if u2 < 0.5:
                nth = (nth + sigma_th * np.random.standard_normal()) % two_pi
            elif u2 < 0.75:
                k = 0
                for j in range(n):
                    if j == i:
                        continue
                    dx = pos[j, 0] - nx
                    dy = pos[j, 1] - ny
                    if abs(np.sqrt(dx * dx + dy * dy) - 1.0) <= eps_d:
                        nbr[k] = j
                        k += 1
                if k >= 2:
                    a = np.random.randint(0, k)
                    b = np.random.randint(0, k - 1)
                    if b >= a:
                        b += 1
                    ja, jb = nbr[a], nbr[b]
                    d1x = pos[ja, 0] - nx
                    d1y = pos[ja, 1] - ny
                    d2x = pos[jb, 0] - nx
                    d2y = pos[jb, 1] - ny
                    if d1x * d2x + d1y * d2y < 0.0:
                        d2x = -d2x
                        d2y = -d2y
                    nth = np.arctan2(d1y + d2y, d1x + d2x) % two_pi
                elif k == 1:
                    nth = np.arctan2(pos[nbr[0], 1] - ny, pos[nbr[0], 0] - nx) % two_pi
                else:
                    nth = (np.round(nth / pi_6) * pi_6) % two_pi
            else:
                nth = (np.round(nth / pi_6) * pi_6) % two_pi
        elif u < w_disp + w_rot + w_snap:
            nx, ny = _snap(nx, ny)
            nth = (np.round(nth / pi_6) * pi_6) % two_pi
        else:
            if n < 2:
                continue
            # Relocate to a unit-distance site: either on the intersection
            # of the unit circles around two nearby particles (exact double
            # contact, the only way closed off-lattice polygons can form)
            # or uniformly on the unit circle around one particle.
            j = np.random.randint(0, n - 1)
            if j >= i:
                j += 1
            done = False
            u2 = np.random.random()
            if u2 < 0.3:
                k = 0
                for l in range(n):
                    if l == i or l == j:
                        continue
                    dx = pos[l, 0] - pos[j, 0]
                    dy = pos[l, 1] - pos[j, 1]
                    d2 = dx * dx + dy * dy
                    if 1e-6 < d2 < 3.9999:
                        nbr[k] = l
                        k += 1
                if k > 0:
                    l = nbr[np.random.randint(0, k)]
                    dx = pos[l, 0] - pos[j, 0]
                    dy = pos[l, 1] - pos[j, 1]
                    d = np.sqrt(dx * dx + dy * dy)
                    h = np.sqrt(max(0.0, 1.0 - 0.25 * d * d))
                    if np.random.random() < 0.5:
                        h = -h
                    nx = pos[j, 0] + 0.5 * dx - h * dy / d
                    ny = pos[j, 1] + 0.5 * dy + h * dx / d
                    done = True
            elif u2 < 0.6:
                # Extend a degree-1 end of an exact-unit chain inside the
                # feasible turning cone |turn| < 2 arccos(gamma), so chains
                # can curl toward closed polygons instead of growing straight.
                k = 0
                bx, by = 0.0, 0.0
                for l in range(n):
                    if l == i or l == j:
                        continue
                    dx = pos[l, 0] - pos[j, 0]
                    dy = pos[l, 1] - pos[j, 1]
                    if abs(np.sqrt(dx * dx + dy * dy) - 1.0) <= eps_d:
                        k += 1
                        bx, by = dx, dy
                if k == 1:
                    alpha = np.arccos(min(1.0, max(-1.0, gamma)))
                    delta = np.random.uniform(-1.0, 1.0) * min(
                        1.8 * alpha, np.pi / 3.0
                    )
                    base = np.arctan2(-by, -bx)
                    nx = pos[j, 0] + np.cos(base + delta)
                    ny = pos[j, 1] + np.sin(base + delta)
                    done = True
            if not done:
                phi = np.random.uniform(0.0, two_pi)
                nx = pos[j, 0] + np.cos(phi)
                ny = pos[j, 1] + np.sin(phi)

        nvx, nvy = np.cos(nth), np.sin(nth)
        old = _local_count(i, pos[i, 0], pos[i, 1], vx[i], vy[i], pos, vx, vy, thr, eps_d, n)
        new = _local_count(i, nx, ny, nvx, nvy, pos, vx, vy, thr, eps_d, n)
        if new < 0:
            continue
        de = old - new
        if de > 0 and np.random.random() >= np.exp(-de / t):
            continue
        pos[i, 0], pos[i, 1] = nx, ny
        th[i] = nth
        vx[i], vy[i] = nvx, nvy
        e += de
        if e < best_e:
            best_e = e
            best_pos[:] = pos
            best_th[:] = th
            if tlen < cap:
                trace_it[tlen] = it + 1
                trace_en[tlen] = e
                tlen += 1

    return best_e, best_pos, best_th, trace_it, trace_en, tlen, e
