"""End-to-end acceptance gate.

Ten criteria, one test each, in a fixed order. Every test prints a single
``ACCEPTANCE k: PASS/FAIL`` line (run pytest with ``-s`` to see them live)
and enforces the stated exact tolerances and wall-clock budgets.
"""

import math
import time

import numpy as np

from conftest import SQRT3_2
from ocl.bondgraph import build_edges, graph_perimeter
from ocl.canonical import canonical, canonical_energy, canonical_perimeter, shell_decompose
from ocl.config import Configuration
from ocl.energy import decompose, energy, hr_energy, n_gamma
from ocl.lattice import embed
from ocl.measures import diagnose, diagnostics_csv
from ocl.sampling import decomposition_sample, orientation_field
from ocl.search import (
    ORACLE_MAX_N,
    SearchConfig,
    anneal,
    check_asymptotic_bounds,
    enumerate_lattice_oracle,
    reference_minimizer,
)
from ocl.verify import run_suite
from oracles.brute import brute_unit_pairs
from test_cli import run_cli


def _line(k: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {k}: {'PASS' if ok else 'FAIL'} — {detail}")


def test_acceptance_01_small_n_exact_minima():
    t0 = time.perf_counter()
    want = {1: 0, 2: -1, 3: -2, 4: -4, 5: -5, 6: -7, 7: -8}
    got = {}
    for n in want:
        candidates = [canonical_energy(n)]
        if n <= ORACLE_MAX_N:
            candidates.append(enumerate_lattice_oracle(n, SQRT3_2).energy)
        candidates.append(
            anneal(SearchConfig(n=n, gamma=SQRT3_2, iters=200_000, seeds=16, seed=0)).best_energy
        )
        got[n] = min(candidates)
    elapsed = time.perf_counter() - t0
    ok = got == want and elapsed < 120.0
    _line(1, ok, f"minima {sorted(got.values(), reverse=True)} in {elapsed:.1f}s")
    assert got == want
    assert elapsed < 120.0


def test_acceptance_02_canonical_perimeter_law():
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 10_001):
        g = build_edges(canonical(n), SQRT3_2)
        if graph_perimeter(g).per_gr != canonical_perimeter(n):
            bad.append(n)
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 30.0
    _line(2, ok, f"n<=10000 zero mismatches ({len(bad)} bad) in {elapsed:.1f}s")
    assert bad == []
    assert elapsed < 30.0


def test_acceptance_03_decomposition_identity():
    t0 = time.perf_counter()
    failures = 0
    for index in range(1000):
        if decompose(decomposition_sample(index, 2024)).residual != 0:
            failures += 1
    elapsed = time.perf_counter() - t0
    ok = failures == 0 and elapsed < 60.0
    _line(3, ok, f"1000 samples, {failures} nonzero residuals, {elapsed:.1f}s")
    assert failures == 0
    assert elapsed < 60.0


def test_acceptance_04_shell_recursion():
    rng = np.random.default_rng(0)
    checked = 0
    for _ in range(500):
        n_prime = int(rng.integers(1, 2001))
        n = int(rng.integers(n_prime + 1, n_prime + 2500))
        d = shell_decompose(n, n_prime)
        assert d.r in (0, 2, 4, 6, 8)
        if d.delta == 0:
            assert d.r == 0
        if d.k >= 1:
            assert d.r <= 2 * math.ceil(d.delta / 2)
        checked += 1
    _line(4, True, f"{checked} random pairs satisfy the shell constraints")
    assert checked == 500


def test_acceptance_05_anneal_never_beats_canonical():
    t0 = time.perf_counter()
    results = {}
    for n in range(8, 13):
        r = anneal(SearchConfig(n=n, gamma=SQRT3_2, iters=200_000, seeds=64, seed=0))
        results[n] = (r.best_energy, canonical_energy(n))
    elapsed = time.perf_counter() - t0
    ok = all(best >= target for best, target in results.values()) and elapsed < 600.0
    _line(5, ok, f"64-seed anneal vs canonical for n=8..12: {results}, {elapsed:.0f}s")
    for n, (best, target) in results.items():
        assert best >= target, f"anneal beat the canonical minimizer at n={n}"
    assert elapsed < 600.0


def test_acceptance_06_regime_catalogue():
    # gamma = 1: rows; best = -n + 1
    for n in range(2, 13):
        ref = energy(reference_minimizer(n, 1.0), 1.0)
        best = min(
            ref,
            anneal(SearchConfig(n=n, gamma=1.0, iters=40_000, seeds=8, seed=0)).best_energy,
        )
        assert best == -n + 1
    # gamma = 0.95: rows below the critical ring size, rings from there on
    assert n_gamma(0.95) == 10
    for n in range(2, 15):
        ref = energy(reference_minimizer(n, 0.95), 0.95)
        best = min(
            ref,
            anneal(SearchConfig(n=n, gamma=0.95, iters=40_000, seeds=8, seed=0)).best_energy,
        )
        assert best == (-n if n >= 10 else -n + 1)
    # gamma = 0: any common orientation reproduces the hard-disc contact count
    rng = np.random.default_rng(7)
    block = [(a, b) for a in range(7) for b in range(7)]
    for _ in range(100):
        size = int(rng.integers(2, 22))
        pick = rng.choice(len(block), size=size, replace=False)
        coords = [block[i] for i in sorted(pick)]
        c = Configuration(embed(coords), orientation_field(coords, rng, "common"))
        e = energy(c, 0.0)
        assert e == hr_energy(c) == -len(brute_unit_pairs(c.pos))
    _line(6, True, "rows at gamma=1, ring onset at N_gamma=10, hard-disc match at gamma=0")


def test_acceptance_07_asymptotic_bounds():
    rep = check_asymptotic_bounds(3721)
    ok = rep.ok and rep.lower_ok and rep.envelope_max <= 8.0
    _line(7, ok, f"canonical family to n=3721, envelope max {rep.envelope_max:.3f} <= 8")
    assert rep.lower_ok
    assert rep.envelope_max <= 8.0
    assert rep.ok


def test_acceptance_08_lemma_suites():
    t0 = time.perf_counter()
    names = ("angles", "notriangles", "degree", "boundary", "increase", "gaussbonnet")
    reports = [run_suite(name, trials=100, seed=0) for name in names]
    elapsed = time.perf_counter() - t0
    total = sum(r.checked for r in reports)
    fails = [f for r in reports for f in r.failures]
    ok = not fails and total >= 500 and all(r.ok for r in reports) and elapsed < 300.0
    _line(8, ok, f"6 suites, {total} checks, {len(fails)} failures, {elapsed:.1f}s")
    assert fails == []
    assert total >= 500
    assert all(r.ok for r in reports)
    assert elapsed < 300.0


def test_acceptance_09_compactness_diagnostics():
    rows = [diagnose(canonical((l + 1) ** 2)) for l in range(5, 31)]
    for row in rows:
        assert row.mass_residual <= row.z_count / row.n
    constant = max(row.z_over_sqrt_n for row in rows)
    csv_text = diagnostics_csv(rows)
    assert f"{constant}" in csv_text
    ok = constant < 8.0
    _line(9, ok, f"l=5..30: mass_residual <= z/n everywhere, z/sqrt(n) <= {constant:.4f}")
    assert ok


def test_acceptance_10_byte_determinism(tmp_path):
    src = tmp_path / "y9.txt"
    code, out, _ = run_cli(["gen-canonical", "--n", "9"])
    assert code == 0
    src.write_text(out)

    json_runs, svg_runs, csv_runs = [], [], []
    for run in range(2):
        code, out, _ = run_cli(["energy", "--in", str(src), "--gamma", "sqrt3/2", "--json"])
        assert code == 0
        json_runs.append(out)
        svg_path = tmp_path / f"r{run}.svg"
        assert run_cli(["render", "--in", str(src), "--gamma", "sqrt3/2", "--out", str(svg_path)])[0] == 0
        svg_runs.append(svg_path.read_bytes())
        code, out, _ = run_cli(["diagnose", "--n-list", "4,9,25,100"])
        assert code == 0
        csv_runs.append(out)

    ok = json_runs[0] == json_runs[1] and svg_runs[0] == svg_runs[1] and csv_runs[0] == csv_runs[1]
    _line(10, ok, "energy JSON, render SVG, diagnose CSV byte-identical across reruns")
    assert json_runs[0] == json_runs[1]
    assert svg_runs[0] == svg_runs[1]
    assert csv_runs[0] == csv_runs[1]
