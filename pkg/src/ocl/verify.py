"""Executable checker suites for the quantitative structure results.

Each suite draws seeded random configurations, evaluates one family of
facts, and reports failures as human-readable strings. An empty failure
tuple is the expected outcome for every suite at any seed; a nonempty one
is either a bug or a counterexample to the mathematics, and both deserve
attention.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .boundary import boundary_profile, check_increase, check_puntidibordo, profile_violations
from .bondgraph import build_edges, connected_components, extract_faces
from .canonical import canonical, canonical_perimeter, shell_decompose
from .config import Configuration
from .energy import SQRT3_2, decompose
from .errors import OclError
from .bondgraph import graph_perimeter
from .sampling import (
    connected_sample,
    decomposition_sample,
    random_unit_cluster,
)

_ANGLE_TOL = 1e-7


@dataclass(frozen=True)
class VerifySuiteReport:
    suite: str
    trials: int
    checked: int  # individual facts evaluated
    failures: tuple[str, ...]
    elapsed: float

    @property
    def ok(self) -> bool:
        return not self.failures


def _fold_angle(a: float) -> float:
    a = abs(a) % (2.0 * math.pi)
    return min(a, 2.0 * math.pi - a)


def _suite_angles(trials: int, seed: int):
    """Bond-pair angles at the diamond threshold: every pair at a vertex
    opens pi/3 or lands in [2pi/3, pi]; consecutive gaps never repeat; a
    pi/3 gap has the orientation along its bisector, a 2pi/3 gap across."""
    failures, checked = [], 0
    for t in range(trials):
        cfg = decomposition_sample(t, seed)
        graph = build_edges(cfg, SQRT3_2)
        pos, ori = cfg.pos, cfg.ori
        adj = [[] for _ in range(graph.n)]
        for i, j in graph.edges:
            d = pos[j] - pos[i]
            adj[i].append(math.atan2(d[1], d[0]))
            adj[j].append(math.atan2(-d[1], -d[0]))
        for v, angs in enumerate(adj):
            if len(angs) < 2:
                continue
            angs = sorted(angs)
            for a in range(len(angs)):
                for b in range(a + 1, len(angs)):
                    gap = _fold_angle(angs[b] - angs[a])
                    checked += 1
                    ok = (
                        abs(gap - math.pi / 3) <= _ANGLE_TOL
                        or 2 * math.pi / 3 - _ANGLE_TOL <= gap <= math.pi + _ANGLE_TOL
                    )
                    if not ok:
                        failures.append(f"trial {t}: vertex {v} pair gap {gap:.9f}")
            gaps = [angs[k + 1] - angs[k] for k in range(len(angs) - 1)]
            for k in range(len(gaps) - 1):
                checked += 1
                if abs(gaps[k] - gaps[k + 1]) <= _ANGLE_TOL:
                    failures.append(
                        f"trial {t}: vertex {v} equal adjacent gaps {gaps[k]:.9f}"
                    )
            for k in range(len(gaps)):
                gap = gaps[k]
                d1 = np.array([math.cos(angs[k]), math.sin(angs[k])])
                d2 = np.array([math.cos(angs[k + 1]), math.sin(angs[k + 1])])
                bis = d1 + d2
                bis /= np.hypot(*bis)
                if abs(gap - math.pi / 3) <= _ANGLE_TOL:
                    checked += 1
                    cross = bis[0] * ori[v][1] - bis[1] * ori[v][0]
                    if abs(float(cross)) > 1e-6:
                        failures.append(f"trial {t}: vertex {v} pi/3 bisector")
                elif abs(gap - 2 * math.pi / 3) <= _ANGLE_TOL:
                    checked += 1
                    if abs(float(bis @ ori[v])) > 1e-6:
                        failures.append(f"trial {t}: vertex {v} 2pi/3 normal")
    return failures, checked


def _suite_notriangles(trials: int, seed: int):
    """No face is a triangle (walk length and distinct edges both >= 4),
    and every walk-length-4 face is a unit rhombus with a single shared
    orientation."""
    failures, checked = [], 0
    for t in range(trials):
        cfg = decomposition_sample(t, seed)
        faces = extract_faces(build_edges(cfg, SQRT3_2))
        for f in faces.faces:
            checked += 1
            if f.per_gr < 4 or f.per_geom < 4:
                failures.append(f"trial {t}: face walk {f.vertices} too short")
            if f.per_gr == 4 and not f.is_rhombus:
                failures.append(f"trial {t}: 4-walk face {f.vertices} not rhombic")
    return failures, checked


def _suite_decomposition(trials: int, seed: int):
    """Exact residual-zero decomposition on mixed random configurations."""
    failures, checked = [], 0
    for t in range(trials):
        cfg = decomposition_sample(t, seed)
        checked += 1
        try:
            decompose(cfg, SQRT3_2)
        except OclError as exc:
            failures.append(f"trial {t}: {exc.code}: {exc}")
    return failures, checked


def _suite_percan(trials: int, seed: int):
    """Closed-form diamond perimeter against the measured graph perimeter."""
    failures, checked = [], 0
    rng = np.random.default_rng(np.random.SeedSequence((seed, 11)))
    ns = list(range(0, 64)) + [int(rng.integers(64, 4000)) for _ in range(trials)]
    for n in ns:
        checked += 1
        measured = graph_perimeter(build_edges(canonical(n), SQRT3_2)).per_gr
        if measured != canonical_perimeter(n):
            failures.append(
                f"n={n}: measured {measured} != formula {canonical_perimeter(n)}"
            )
    return failures, checked


def _suite_shell(trials: int, seed: int):
    """Shell-count decomposition constraints for random diamond pairs."""
    failures, checked = [], 0
    rng = np.random.default_rng(np.random.SeedSequence((seed, 13)))
    for t in range(trials):
        n_prime = int(rng.integers(0, 1500))
        n = n_prime + int(rng.integers(1, 900))
        checked += 1
        try:
            sd = shell_decompose(n, n_prime)
        except ValueError as exc:
            failures.append(f"pair ({n}, {n_prime}): {exc}")
            continue
        p = canonical_perimeter(n_prime)
        back = n_prime + sd.k * (p + 4 * (sd.k + 1)) + sd.delta
        if back != n or sd.delta < 0 or sd.delta >= p + 8 * (sd.k + 1):
            failures.append(f"pair ({n}, {n_prime}): bad (k, delta) = {sd.k, sd.delta}")
    return failures, checked


def _suite_boundary(trials: int, seed: int):
    """Graph perimeter dominates the boundary-particle count."""
    failures, checked = [], 0
    for t in range(trials):
        cfg = connected_sample(t, seed)
        checked += 1
        res = check_puntidibordo(build_edges(cfg, SQRT3_2))
        if not res.ok:
            failures.append(
                f"trial {t}: per_gr {res.per_gr} < boundary {res.boundary_count}"
            )
    return failures, checked


def _suite_increase(trials: int, seed: int):
    """Peeling the boundary drops the surface term by >= 4 (n >= 8)."""
    failures, checked = [], 0
    t = 0
    produced = 0
    while produced < trials and t < 20 * trials + 100:
        cfg = connected_sample(t, seed, min_n=10, max_n=80)
        t += 1
        if cfg.n < 8:
            continue
        produced += 1
        checked += 1
        rep = check_increase(cfg)
        if not rep.ok:
            failures.append(
                f"sample {t - 1}: F {rep.f_outer} < inner {rep.f_inner} + 4"
            )
    return failures, checked


def _suite_gaussbonnet(trials: int, seed: int):
    """Discrete Gauss-Bonnet plus the boundary class caps and the
    single-interior-edge geometry, on simple-boundary samples."""
    failures, checked = [], 0
    produced = 0
    t = 0
    while produced < trials and t < 40 * trials + 200:
        cfg = connected_sample(t, seed)
        t += 1
        graph = build_edges(cfg, SQRT3_2)
        try:
            prof = boundary_profile(graph)
        except OclError:
            continue  # wires or self-touching boundary: hypotheses not met
        produced += 1
        checked += 1 + prof.size
        if abs(prof.gauss_bonnet_sum - 2 * math.pi) > 1e-6:
            failures.append(f"sample {t - 1}: gauss-bonnet {prof.gauss_bonnet_sum!r}")
        failures.extend(f"sample {t - 1}: {v}" for v in profile_violations(graph, prof))
    return failures, checked


def _suite_degree(trials: int, seed: int):
    """Degree caps: <= 4 on (1/2, sqrt(3)/2], <= 2 on (sqrt(3)/2, 1]."""
    failures, checked = [], 0
    rng = np.random.default_rng(np.random.SeedSequence((seed, 17)))
    for t in range(trials):
        cfg = random_unit_cluster(int(rng.integers(4, 26)), rng)
        if t % 2 == 0:
            gamma = float(rng.uniform(0.5 + 1e-9, SQRT3_2))
            cap = 4
        else:
            gamma = float(rng.uniform(SQRT3_2 + 1e-9, 1.0))
            cap = 2
        degs = build_edges(cfg, gamma).degrees
        checked += 1
        if degs.size and degs.max() > cap:
            failures.append(f"trial {t}: degree {degs.max()} > {cap} at {gamma:.6f}")
    # the canonical family must saturate the rhombic cap
    checked += 1
    if build_edges(canonical(25), SQRT3_2).degrees.max() != 4:
        failures.append("canonical 25 does not reach degree 4")
    return failures, checked


SUITES = {
    "angles": _suite_angles,
    "notriangles": _suite_notriangles,
    "decomposition": _suite_decomposition,
    "percan": _suite_percan,
    "shell": _suite_shell,
    "boundary": _suite_boundary,
    "increase": _suite_increase,
    "gaussbonnet": _suite_gaussbonnet,
    "degree": _suite_degree,
}


def run_suite(name: str, trials: int = 100, seed: int = 0) -> VerifySuiteReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; have {sorted(SUITES)}")
    start = time.perf_counter()
    failures, checked = SUITES[name](trials, seed)
    return VerifySuiteReport(
        suite=name,
        trials=trials,
        checked=checked,
        failures=tuple(failures),
        elapsed=time.perf_counter() - start,
    )


def run_all(trials: int = 100, seed: int = 0) -> list[VerifySuiteReport]:
    return [run_suite(name, trials, seed) for name in SUITES]
