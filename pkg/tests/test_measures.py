import csv
import io
import math

import numpy as np
import pytest

from conftest import SQRT3_2
from ocl.canonical import canonical
from ocl.energy import energy
from ocl.measures import (
    DensityField,
    density_profile,
    diagnostics_csv,
    diagnose,
    export_density_csv,
)


def test_diagnose_full_diamond():
    d = diagnose(canonical(36))
    assert d.n == 36 and d.energy == energy(canonical(36), SQRT3_2)
    assert math.isclose(d.scaled_energy, (d.energy + 2 * d.n) / math.sqrt(d.n), abs_tol=1e-12)
    assert d.rhombic_face_count == 25  # side-6 diamond = 5x5 cells
    assert d.z_count == 20
    assert math.isclose(d.z_over_sqrt_n, d.z_count / math.sqrt(d.n), abs_tol=1e-12)
    assert 0 <= d.mass_residual <= d.z_count / d.n
    assert math.isclose(
        d.rhombic_area, 25 * (math.sqrt(3) / 2) / 36, abs_tol=1e-12
    )


def test_diagnose_residual_bound_across_family():
    for l in range(2, 12):
        n = (l + 1) ** 2
        d = diagnose(canonical(n))
        assert d.mass_residual <= d.z_count / n
        assert d.rhombic_face_count == l * l


def test_density_profile_covers_the_rhombic_region():
    n = 64
    field = density_profile(canonical(n), step=0.05)
    assert isinstance(field, DensityField)
    assert field.n == n and field.values.ndim == 3 and field.values.shape[2] == 2
    want = diagnose(canonical(n)).rhombic_area
    assert abs(field.coverage - want) < 0.12 * max(want, 0.1)
    # covered cells carry the vertical orientation
    hit = np.any(field.values != 0.0, axis=2)
    assert np.allclose(field.values[hit][:, 1], 1.0, atol=1e-9)


def test_density_profile_empty():
    field = density_profile(canonical(0))
    assert field.n == 0 and field.coverage == 0.0


def test_export_density_csv_shape_and_determinism():
    field = density_profile(canonical(16), step=0.1)
    text = export_density_csv(field)
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["x", "y", "vx", "vy"]
    h, w, _ = field.values.shape
    assert len(rows) == 1 + h * w
    assert text == export_density_csv(field)


def test_diagnostics_csv_deterministic():
    diags = [diagnose(canonical(n)) for n in (4, 9, 16)]
    text = diagnostics_csv(diags)
    assert text == diagnostics_csv(diags)
    rows = list(csv.DictReader(io.StringIO(text)))
    assert [int(r["n"]) for r in rows] == [4, 9, 16]
    d9 = diags[1]
    assert int(rows[1]["energy"]) == d9.energy
    assert math.isclose(float(rows[1]["mass_residual"]), d9.mass_residual, abs_tol=1e-12)
    assert math.isclose(float(rows[1]["z_over_sqrt_n"]), d9.z_over_sqrt_n, abs_tol=1e-12)
