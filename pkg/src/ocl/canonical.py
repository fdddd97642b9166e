"""Canonical diamond configurations and their shell arithmetic.

The n-particle diamond grows a rhombus of side l (vertex count (l+1)^2,
angles pi/3 and 2pi/3, long diagonal vertical) and then fills the next
shell counterclockwise, starting at the rightmost new site. All vertices
carry the vertical orientation (0, 1). Writing n = (l+1)^2 + eta with
0 <= eta < 2l+3, the graph perimeter is closed-form:

    per_gr = 4l        if eta == 0
             4l + 2    if 1 <= eta <= l+1
             4l + 4    if l+2 <= eta <= 2l+2

and the energy is E = -2n + per_gr/2 + 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import Configuration
from .lattice import LatticeCoord


def _split_n(n: int) -> tuple[int, int]:
    l = math.isqrt(n) - 1
    return l, n - (l + 1) ** 2


def _canonical_array(n: int) -> np.ndarray:
    """(n, 2) integer lattice coordinates of the n-particle diamond."""
    if n == 0:
        return np.empty((0, 2), dtype=np.int64)
    l, eta = _split_n(n)
    bs = np.arange(2 * l + 1)
    width = np.where(bs <= l, bs + 1, 2 * l + 1 - bs)
    lo = np.where(bs <= l, -bs, -l)
    total = (l + 1) ** 2
    slot = np.arange(total) - np.repeat(np.cumsum(width) - width, width)
    a = np.repeat(lo, width) + slot
    b = np.repeat(bs, width)
    if eta:
        ts = np.arange(eta)
        rising = ts <= l + 1
        sa = np.where(rising, -ts, -(l + 1))
        sb = np.where(rising, l + 1 + ts, 3 * l + 3 - ts)
        a = np.concatenate([a, sa])
        b = np.concatenate([b, sb])
    return np.column_stack([a, b])


@dataclass(frozen=True)
class CanonicalSpec:
    """Shape parameters of the n-particle diamond."""

    n: int
    l: int  # completed rhombus side
    eta: int  # particles in the partial shell, 0 <= eta < 2l+3
    per_gr: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if self.n and not (0 <= self.eta < 2 * self.l + 3):
            raise ValueError("eta out of range")

    @classmethod
    def from_n(cls, n: int) -> "CanonicalSpec":
        if n == 0:
            return cls(0, 0, 0, 0)
        l, eta = _split_n(n)
        return cls(n, l, eta, canonical_perimeter(n))


def canonical_coords(n: int) -> list[LatticeCoord]:
    """Integer lattice coordinates of the n-particle diamond."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return [LatticeCoord(int(a), int(b)) for a, b in _canonical_array(n)]


def canonical(n: int) -> Configuration:
    """The n-particle diamond with vertical orientations."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return Configuration.from_lattice(_canonical_array(n), (0.0, 1.0), label=f"Y{n}")


def canonical_perimeter(n: int) -> int:
    """Closed-form graph perimeter of the n-particle diamond."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return 0
    l, eta = _split_n(n)
    if eta == 0:
        return 4 * l
    if eta <= l + 1:
        return 4 * l + 2
    return 4 * l + 4


def canonical_energy(n: int) -> int:
    """E = -2n + per_gr/2 + 2 for n >= 1; the empty configuration has 0."""
    if n == 0:
        return 0
    per = canonical_perimeter(n)
    return -2 * n + per // 2 + 2


@dataclass(frozen=True)
class ShellDecomposition:
    """n = n' + k full shells on top of the n'-diamond, plus delta extras.

    With P the perimeter of the n'-diamond and f(k) = n' + k*(P + 4(k+1)),
    k is the largest value with f(k) <= n and delta = n - f(k). The
    perimeter excess r = per(n) - P - 8k is one of {0, 2, 4, 6, 8}; it is 0
    when delta = 0, and at most 2*ceil(delta/2) once k >= 1.
    """

    n: int
    n_prime: int
    k: int
    delta: int
    r: int

    def __post_init__(self):
        if self.r not in (0, 2, 4, 6, 8):
            raise ValueError(f"perimeter excess r={self.r} outside {{0,2,4,6,8}}")
        if self.delta == 0 and self.r != 0:
            raise ValueError("delta = 0 must give r = 0")
        if self.k >= 1 and self.r > 2 * math.ceil(self.delta / 2):
            raise ValueError("r exceeds 2*ceil(delta/2) with k >= 1")


def shell_decompose(n: int, n_prime: int) -> ShellDecomposition:
    """Shell count, remainder, and perimeter excess for growing the
    n'-diamond into the n-diamond. Requires n > n' >= 0."""
    if not (n > n_prime >= 0):
        raise ValueError("need n > n_prime >= 0")
    p = canonical_perimeter(n_prime)

    def f(k: int) -> int:
        return n_prime + k * (p + 4 * (k + 1))

    k = 0
    while f(k + 1) <= n:
        k += 1
    delta = n - f(k)
    r = canonical_perimeter(n) - p - 8 * k
    return ShellDecomposition(n=n, n_prime=n_prime, k=k, delta=delta, r=r)
