"""Deterministic SVG pictures of configurations and their bond graphs.

Byte-identical output for identical inputs: fixed float formatting, no
timestamps, elements emitted in index order. Discs are light unit circles,
orientations short arrows, bonds solid segments; rhombic faces are shaded
and larger faces hatched.
"""

from __future__ import annotations

import io

from .bondgraph import build_edges, extract_faces
from .config import Configuration, Tolerances, DEFAULT_TOL


def _f(v: float) -> str:
    s = f"{v:.4f}"
    return "0.0000" if s == "-0.0000" else s


def render_svg(
    config: Configuration, gamma: float, tol: Tolerances = DEFAULT_TOL
) -> str:
    graph = build_edges(config, gamma, tol)
    faces = extract_faces(graph)
    pos = config.pos
    out = io.StringIO()

    if config.n:
        x0, y0 = pos.min(axis=0) - 1.0
        x1, y1 = pos.max(axis=0) + 1.0
    else:
        x0, y0, x1, y1 = -1.0, -1.0, 1.0, 1.0
    # svg y grows downward; emit flipped y
    vb = f"{_f(x0)} {_f(-y1)} {_f(x1 - x0)} {_f(y1 - y0)}"
    out.write(
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vb}" '
        f'width="640" height="640">\n'
    )
    out.write(
        '<defs><pattern id="hatch" width="0.2" height="0.2" '
        'patternTransform="rotate(45)" patternUnits="userSpaceOnUse">'
        '<line x1="0" y1="0" x2="0" y2="0.2" stroke="#d08770" '
        'stroke-width="0.05"/></pattern></defs>\n'
    )

    for f in faces.faces:
        pts = " ".join(f"{_f(pos[v][0])},{_f(-pos[v][1])}" for v in f.vertices)
        fill = "#cfe3f7" if f.is_rhombus else "url(#hatch)"
        out.write(f'<polygon points="{pts}" fill="{fill}" stroke="none"/>\n')

    for i, j in graph.edges:
        out.write(
            f'<line x1="{_f(pos[i][0])}" y1="{_f(-pos[i][1])}" '
            f'x2="{_f(pos[j][0])}" y2="{_f(-pos[j][1])}" '
            'stroke="#3b4252" stroke-width="0.05"/>\n'
        )

    for i in range(config.n):
        out.write(
            f'<circle cx="{_f(pos[i][0])}" cy="{_f(-pos[i][1])}" r="0.5" '
            'fill="none" stroke="#c8ccd4" stroke-width="0.02"/>\n'
        )

    for i in range(config.n):
        x, y = pos[i]
        vx, vy = config.ori[i]
        tx, ty = x + 0.4 * vx, y + 0.4 * vy
        # arrowhead: two short barbs at the tip
        bx, by = -0.08 * vx, -0.08 * vy
        nx, ny = -0.05 * vy, 0.05 * vx
        out.write(
            f'<line x1="{_f(x)}" y1="{_f(-y)}" x2="{_f(tx)}" y2="{_f(-ty)}" '
            'stroke="#bf616a" stroke-width="0.04"/>\n'
        )
        out.write(
            f'<polyline points="{_f(tx + bx + nx)},{_f(-(ty + by + ny))} '
            f'{_f(tx)},{_f(-ty)} {_f(tx + bx - nx)},{_f(-(ty + by - ny))}" '
            'fill="none" stroke="#bf616a" stroke-width="0.04"/>\n'
        )

    out.write("</svg>\n")
    return out.getvalue()
