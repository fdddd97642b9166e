"""Plain-text configuration files (format id "ocl v1").

One particle per line, four whitespace-separated floats ``x y vx vy``;
``#`` starts a comment, blank lines are ignored. Orientation must be unit
length within tolerance. The threshold gamma is never stored: it is an
evaluation parameter, not part of the state. Writing uses shortest
round-trip float formatting, so read(write(c)) reproduces c exactly.
"""

from __future__ import annotations

import io
from pathlib import Path

import numpy as np

from .config import Configuration, Tolerances, DEFAULT_TOL
from .errors import OrientationError, ParseError

HEADER = "# ocl v1: x y vx vy (one particle per line)"


def loads_config(text: str, tol: Tolerances = DEFAULT_TOL, label: str = "") -> Configuration:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 4:
            raise ParseError(f"line {lineno}: expected 4 fields, got {len(fields)}")
        try:
            vals = [float(f) for f in fields]
        except ValueError:
            raise ParseError(f"line {lineno}: malformed float") from None
        if not all(np.isfinite(vals)):
            raise ParseError(f"line {lineno}: non-finite value")
        rows.append(vals)
    if not rows:
        return Configuration.empty(label)
    arr = np.asarray(rows, dtype=np.float64)
    config = Configuration(arr[:, :2], arr[:, 2:], label)
    bad = np.abs(np.linalg.norm(config.ori, axis=1) - 1.0) > 10 * tol.eps_angle
    if bad.any():
        i = int(np.flatnonzero(bad)[0])
        raise OrientationError(f"particle {i}: orientation is not unit length")
    return config


def dumps_config(config: Configuration) -> str:
    buf = io.StringIO()
    buf.write(HEADER + "\n")
    for i in range(config.n):
        x, y = (float(v) for v in config.pos[i])
        vx, vy = (float(v) for v in config.ori[i])
        buf.write(f"{x!r} {y!r} {vx!r} {vy!r}\n")
    return buf.getvalue()


def read_config(path, tol: Tolerances = DEFAULT_TOL) -> Configuration:
    p = Path(path)
    return loads_config(p.read_text(encoding="utf-8"), tol, label=p.stem)


def write_config(path, config: Configuration) -> None:
    Path(path).write_text(dumps_config(config), encoding="utf-8")
